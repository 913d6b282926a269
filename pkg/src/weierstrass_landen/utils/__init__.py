"""
Configuration, error handling and formatting helpers.
"""
