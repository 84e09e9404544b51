"""
flagstab: exact GIT data for the maximal torus action on a flag variety G/B.
"""
__version__ = "1.0.0"
