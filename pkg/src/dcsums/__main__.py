"""Module entry point: ``python -m dcsums`` behaves like the ``dcsums`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
