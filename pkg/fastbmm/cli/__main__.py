import sys

from fastbmm.cli.main import main

sys.exit(main())
