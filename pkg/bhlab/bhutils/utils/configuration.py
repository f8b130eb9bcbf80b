"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Configuration management for BHLab."""

import json
import os

from bhlab.bhutils.utils.filesystemreader import FileSystemReaderWriter
from bhlab.bhutils.utils.constants import HOME_PATH, CONFIG_FILE, THREADS_ENV
from bhlab.bhutils.utils.exceptions import InvalidParameterType

PATH = os.path.join(HOME_PATH, CONFIG_FILE)


def load_conf(path, fsrw_class=None):
    """
    Creates a dictionary of configuration by reading from the configuration file.
    """
    if fsrw_class is None:
        fsrw_class = FileSystemReaderWriter

    config_file = fsrw_class(path)
    line = config_file.read_text().strip()

    if line == u"":
        conf_details = {}
    else:
        try:
            conf_details = json.loads(line)
        except ValueError as error:
            raise InvalidParameterType("Configuration file %s is not valid JSON: %s" % (path, error))
    return conf_details


def conf_info(section, path=None):
    """
    Returns the dictionary stored under `section` in the configuration file.
    """
    conf_details = load_conf(path or PATH)
    config_dict = {}

    if section in conf_details:
        config_dict = conf_details[section]

    return config_dict


def conf_value(section, key, default, path=None):
    """
    Look up one configured value, falling back to the built-in default.
    """
    value = conf_info(section, path).get(key, default)
    if default is not None and not isinstance(value, type(default)):
        try:
            value = type(default)(value)
        except (TypeError, ValueError):
            raise InvalidParameterType("Configuration %s.%s=%r is not a %s"
                                       % (section, key, value, type(default).__name__))
    return value


def thread_cap():
    """
    Number of worker threads allowed by BHLAB_THREADS (default 1).
    """
    raw = os.environ.get(THREADS_ENV, "")
    if raw.strip() == "":
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise InvalidParameterType("%s must be a positive integer, got %r" % (THREADS_ENV, raw))
    if threads < 1:
        raise InvalidParameterType("%s must be a positive integer, got %r" % (THREADS_ENV, raw))
    return threads
