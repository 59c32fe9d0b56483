import sys

from pframe.cli import main

sys.exit(main())
