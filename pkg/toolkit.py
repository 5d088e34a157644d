#!/usr/bin/env python3
"""
toolkit.py - Command line launcher for the tensor Kleene algebra toolkit

Usage: python toolkit.py COMMAND [options] ...
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.interfaces.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
