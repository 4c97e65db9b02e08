import sys

from thsolve.cli import main

sys.exit(main())
