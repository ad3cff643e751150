import sys

from .cli import Main

sys.exit(Main())
