"""
Weyl group enumeration and action.
"""
