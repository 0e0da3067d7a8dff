import sys

from greedykit.main import main

sys.exit(main())
