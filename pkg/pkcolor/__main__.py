"""Allow ``python -m pkcolor``."""

import sys

from .cli import run

sys.exit(run())
