import sys

from singlecross.cli import main

sys.exit(main())
