"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Machine-readable report emission: profile CSV and JSON documents."""

import json

from bhlab.bhdim.dimension import DimEstimate, PsiProfile
from bhlab.bhutils.utils.exceptions import InvalidParameterType, ReportWriteError
from bhlab.bhutils.utils.filesystemreader import FileSystemReaderWriter
from bhlab.bhutils.utils.parameterargs import ReportFormat, to_enum


def render_profile_csv(profile):
    """
    `n,psi,exact` header and one row per n.
    """
    return profile.to_resultset().csv()


def render_json(payload):
    document = payload.to_dict() if hasattr(payload, "to_dict") else payload
    return json.dumps(document, indent=2) + "\n"


def render_report(payload, fmt):
    fmt = to_enum(ReportFormat, fmt)
    if fmt is ReportFormat.CSV:
        if isinstance(payload, DimEstimate):
            payload = payload.profile
        if not isinstance(payload, PsiProfile):
            raise InvalidParameterType("Only psi profiles can be written as csv.")
        return render_profile_csv(payload)
    return render_json(payload)


def write_report(payload, fmt, destination):
    """
    Write a profile, estimate or verification report to `destination` in the given format.
    """
    text = render_report(payload, fmt)
    try:
        FileSystemReaderWriter(destination).overwrite_with_line(text)
    except OSError as e:
        raise ReportWriteError(destination, e.strerror or str(e))
    return text
