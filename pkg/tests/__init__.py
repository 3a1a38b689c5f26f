#!/usr/bin/env python3
"""Test package for lefschetz-mci"""