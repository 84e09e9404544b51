"""
Saturated root subsystems and highest-root paths.
"""
