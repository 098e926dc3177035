import sys

from qske.cli import main

sys.exit(main())
