from hyperarr.cli import main
import sys

sys.exit(main())
