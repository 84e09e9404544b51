"""
Picard rank of the torus quotient.
"""
