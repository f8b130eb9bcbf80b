"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Enables Logging for BHLab."""

import getpass
import logging
import os

from bhlab.bhutils.utils.constants import HOME_PATH, LOG_LEVEL

LOG_DIR = os.path.join(os.path.expanduser(HOME_PATH), "logs")


def _configure_root_():
    """
    Configure the root logger once, falling back to stderr when the log
    directory is not writable.
    """
    if logging.getLogger().handlers:
        return
    try:
        user = getpass.getuser()
    except Exception:
        user = "unknown"
    log_format = '%(asctime)-4s %(levelname)-4s %(name)-4s {} %(message)s'.format(user)
    try:
        os.makedirs(LOG_DIR, exist_ok=True)
        logging.basicConfig(
            filename=os.path.join(LOG_DIR, "bhlab.log"),
            level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
            format=log_format,
            datefmt='%m-%d %H:%M:%S'
        )
    except OSError:
        logging.basicConfig(level=logging.WARNING, format=log_format, datefmt='%m-%d %H:%M:%S')


class Log:
    """
    Custom Logging for BHLab.
    """

    def __init__(self, logger_name, module=''):
        self.logger_name = logger_name
        self._module = module
        _configure_root_()
        self.logger = logging.getLogger(self.logger_name)

    def debug(self, message):
        self.logger.debug(self._format_message_(message))

    def info(self, message):
        self.logger.info(self._format_message_(message))

    def warning(self, message):
        self.logger.warning(self._format_message_(message))

    def error(self, message):
        self.logger.error(self._format_message_(message))

    def exception(self, message):
        """
        Log a message together with the active traceback.
        """
        self.logger.exception(self._format_message_(message))

    def _format_message_(self, message):
        if not self._module:
            return message
        return '{} {}'.format(self._module, message)
