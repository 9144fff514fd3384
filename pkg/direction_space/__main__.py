import sys

from direction_space.cli import main

sys.exit(main())
