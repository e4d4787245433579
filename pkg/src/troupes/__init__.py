"""Exact combinatorics of colored binary plane trees and their cumulants.

The package computes, with exact rational (or rational-polynomial)
arithmetic: tree/branch/partition enumerations, insertion factorization,
weighted troupes, the branch-to-tree generating function transform, the
moment/cumulant conversions of classical, free, and Boolean probability, and
the bijections and plot decompositions tying them together.
"""

__version__ = "0.1.0"
