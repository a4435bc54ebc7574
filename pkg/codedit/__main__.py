import sys

from codedit.cli import main

sys.exit(main())
