"""Entry point: python main.py --problem hd --n 2048 --m 1024"""

import sys

from src.bench.cli import main

if __name__ == "__main__":
    sys.exit(main())
