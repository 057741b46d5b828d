import sys

from reward_route.cli import main

sys.exit(main())
