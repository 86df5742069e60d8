import sys

from witt12.cli import main

sys.exit(main())
