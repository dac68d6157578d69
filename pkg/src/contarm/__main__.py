import sys

from contarm.cli import main

sys.exit(main())
