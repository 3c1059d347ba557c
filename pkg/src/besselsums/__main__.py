import sys

from besselsums.cli import main

sys.exit(main())
