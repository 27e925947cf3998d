import sys

from pirideals.cli import main

sys.exit(main())
