"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

# -*- coding: UTF-8 -*-

"""The %bhlab line magic: the command line subcommands inside a notebook."""

import shlex
import sys

from IPython.core.magic import Magics, magics_class, line_magic

from bhlab.bhcli.main import dispatch, parse_args
from bhlab.bhutils import wrap_exceptions
from bhlab.bhutils.utils.exceptions import InvalidParameterType
from bhlab.bhutils.utils.utils import thread_limit

try:
    from traitlets.config.configurable import Configurable
    from traitlets import Int

except ImportError:
    from IPython.config.configurable import Configurable
    from IPython.utils.traitlets import Int


@magics_class
class BHMagics(Magics, Configurable):
    """Runs bhlab subcommands and returns their result objects.
    """
    threads = Int(0, config=True, help="Worker threads for trials, restarts and profile points "
                                       "(0 keeps BHLAB_THREADS)")
    displaylimit = Int(100, config=True, help="Automatically limit the number of rows displayed")

    def __init__(self, shell):
        Configurable.__init__(self, config=shell.config)
        Magics.__init__(self, shell=shell)
        # Add ourself to the list of module configurable via %config
        self.shell.configurables.append(self)

    @line_magic
    @wrap_exceptions
    def bhlab(self, line=''):
        """Run a bhlab subcommand.

        Example:
            %bhlab gen --family triangle --R 2 --out t.idx
            estimate = %bhlab dim --input t.idx --n 1,4,9
        """
        try:
            args = parse_args(shlex.split(line))
        except SystemExit as e:
            if e.code == 0:
                return None
            raise InvalidParameterType("Invalid %%bhlab arguments: %s" % line)
        if self.threads > 0:
            with thread_limit(self.threads):
                _, result = dispatch(args, sys.stdout)
        else:
            _, result = dispatch(args, sys.stdout)
        if hasattr(result, "to_resultset"):
            return result.to_resultset(displaylimit=self.displaylimit)
        return result


def load_ipython_extension(ipython):
    ipython.register_magics(BHMagics)
