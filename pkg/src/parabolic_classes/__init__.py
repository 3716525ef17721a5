"""Exact counts of P_{n,d}(q)-conjugacy classes in GL_n(q).

The main entry point is :func:`parabolic_classes.kcount.k_poly`; the
brute-force cross-checks live in :mod:`parabolic_classes.oracle`.
"""

from .kcount import KReport, check_association_invariance, k_eval, k_poly
from .poly import RationalPoly

__all__ = ["KReport", "RationalPoly", "check_association_invariance", "k_eval", "k_poly"]
