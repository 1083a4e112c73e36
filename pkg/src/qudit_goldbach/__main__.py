import sys

from qudit_goldbach.cli import main

sys.exit(main())
