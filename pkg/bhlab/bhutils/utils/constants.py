"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""BHLab Constants."""

import os

HOME_PATH = os.environ.get("BHLAB_CONF_DIR", "~/.bhlab")
CONFIG_FILE = os.environ.get("BHLAB_CONF_FILE", "config.json")
LOG_LEVEL = os.environ.get("BHLAB_LOG_LEVEL", "INFO")
THREADS_ENV = "BHLAB_THREADS"

MASK64 = (1 << 64) - 1
MAX_INDEX = MASK64

DEFAULT_SEED = 0
DEFAULT_TRIALS = 20
DEFAULT_RESTARTS = 32
DEFAULT_MAX_ITERATIONS = 500
DEFAULT_STEP_SIZE = 0.5
DEFAULT_TOLERANCE = 1e-10
DEFAULT_GRID_RESOLUTION = 64
DEFAULT_GRID_MAX_DIM = 4
GRID_CHUNK = 4096

DEFAULT_PSI_BUDGET = 200000
DEFAULT_PSI_RESTARTS = 8

SOFT_SLACK = 0.05
HARD_SLACK = 1e-9
