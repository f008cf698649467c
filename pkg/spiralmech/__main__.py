#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Allow `python -m spiralmech`."""

import sys

from .cli import main

sys.exit(main())
