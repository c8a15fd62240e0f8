"""Allow `python -m src` to run the command line"""

import sys

from .cli import main

sys.exit(main())
