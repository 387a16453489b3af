"""Configuration package for the CLC tally engine"""
