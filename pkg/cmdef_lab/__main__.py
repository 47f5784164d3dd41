"""Run the cmdef_lab command line interface"""

from .cli import main

if __name__ == "__main__":
    main()
