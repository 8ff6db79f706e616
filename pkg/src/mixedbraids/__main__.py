import sys

from mixedbraids.cli import main

sys.exit(main())
