"""
Root systems, invariant forms and weights.
"""
