"""
Test suite for the varfrac toolkit.
"""
