"""
torsion-lab: pointwise verification of Einstein connections for G = g + F.
"""

__version__ = "0.1.0"
