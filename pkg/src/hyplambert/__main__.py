import sys

from hyplambert.cli import main

sys.exit(main())
