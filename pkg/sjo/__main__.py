#
#   Run the command line interface with python -m sjo
#   Copyright EAVISE
#

import sys
from .cli import main

sys.exit(main())
