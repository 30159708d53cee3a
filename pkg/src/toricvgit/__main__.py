import sys

from toricvgit.cli import main

sys.exit(main())
