import sys

from transference_lab.cli import main

sys.exit(main())
