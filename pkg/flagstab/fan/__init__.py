"""
GIT fan of the Weyl chamber.
"""
