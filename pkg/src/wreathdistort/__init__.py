"""Exact computations with Z wr Z and two of its embeddings.

Modules:

- :mod:`wreath`    Z wr Z: counters and cursor, normal forms, word length, geodesics.
- :mod:`thompson`  Thompson's group F as reduced tree pair diagrams.
- :mod:`embedding` phi: Z wr Z -> F, caret counts and the distortion report.
- :mod:`laurent`   Laurent polynomials with (1 + x) inverted.
- :mod:`baumslag`  Baumslag's metabelian group as affine maps, s-conjugation.
- :mod:`oracle`    Breadth-first Cayley balls used as ground truth.
"""
from . import baumslag, embedding, laurent, oracle, thompson, wreath

__all__ = ["baumslag", "embedding", "laurent", "oracle", "thompson", "wreath"]
