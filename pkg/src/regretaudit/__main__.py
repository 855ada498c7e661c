import sys

from regretaudit.cli import main

sys.exit(main())
