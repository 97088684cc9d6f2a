"""Run the command line with python -m jetblack_matterwave"""

import sys

from .cli import main

sys.exit(main())
