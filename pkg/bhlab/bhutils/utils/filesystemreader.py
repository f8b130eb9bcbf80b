"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Reading and writing BHLab files (configuration, .idx, .poly, reports)."""

import os


class FileSystemReaderWriter:
    """
    Credits: Thanks to 'SPARKMAGIC' for FileSystemReader.
    """

    def __init__(self, path):
        assert path is not None
        self.path = os.path.expanduser(path)

    def ensure_parent_exists(self):
        """
        Ensure the directory holding the file exists.
        """
        parent = os.path.dirname(self.path)
        if parent:
            FileSystemReaderWriter._ensure_path_exists(parent)

    def exists(self):
        return os.path.isfile(self.path)

    def read_lines(self):
        """
        Read the file, or return an empty list when it does not exist.
        """
        if os.path.isfile(self.path):
            with open(self.path, "r", encoding="utf-8") as file_handler:
                return file_handler.readlines()
        else:
            return []

    def read_text(self):
        return u"".join(self.read_lines())

    def overwrite_with_line(self, line):
        """
        Replace the file contents.
        """
        self.ensure_parent_exists()
        with open(self.path, "w", encoding="utf-8", newline="") as file_handler:
            file_handler.writelines(line)

    @staticmethod
    def _ensure_path_exists(path):
        try:
            os.makedirs(path)
        except OSError:
            if not os.path.isdir(path):
                raise
