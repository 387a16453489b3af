"""
Test suite for the CLC tally engine
"""
