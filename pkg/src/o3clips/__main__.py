"""Allow running the CLI as ``python -m o3clips``."""

import sys

from .cli import main

sys.exit(main())
