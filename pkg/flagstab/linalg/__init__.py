"""
Exact rational linear algebra and polyhedral cones.
"""
