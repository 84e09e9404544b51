"""
Command-line jobs and JSON serialization.
"""
