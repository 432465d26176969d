#!/usr/bin/env python3
"""
Simple run script for trlearn
"""

import sys

from trlearn.main import main

if __name__ == "__main__":
    sys.exit(main())
