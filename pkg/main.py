#!/usr/bin/env python3
"""
G2(2) MULTIPLET ENGINE - UNIFIED ENTRY POINT
Redirects to the command line in src/cli.py
"""

import sys
from pathlib import Path


def main(argv=None):
    """Run the CLI with the repository root on the import path"""
    current_dir = Path(__file__).parent
    if str(current_dir) not in sys.path:
        sys.path.insert(0, str(current_dir))

    from src.cli import main as cli_main
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
