#!/usr/bin/env python3
"""
Entry point script for the hypergroup synthesis command line.

Available commands:
- verify
- conv
- fourier
- check-eq
- degree
- synth
"""

import sys

# Import the main function from the cli module; it registers every command
from hypergroup_synthesis.cli import main

if __name__ == "__main__":
    sys.exit(main())
