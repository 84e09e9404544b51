"""
Semistable Weyl elements, GIT cones and the unstable locus.
"""
