"""Entry point for running the transference-lab command line from a checkout."""

from __future__ import annotations

import sys

from transference_lab.cli import main

if __name__ == "__main__":
    sys.exit(main())
