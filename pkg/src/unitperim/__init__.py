"""Unit-perimeter triangle constructions and equal-perimeter lattice census.

Modules
-------
numeric_core            exact integer helpers: squarefree parts, d(n), r2, r3, Heron
incidence_construction  rational point/line configurations and their normalization
conic_maps              z -> z^2 and z -> z/(1+|z|), parabola/ellipse data, triangle counts
construction            the end-to-end pipeline and the 51-point / 95-triangle search
grid_triangles          [n] x [n] census, Heronian enumeration, lattice embedding
render                  SVG output
"""
from .numeric_core import (
    PerimeterKey,
    divisor_count,
    heron_16A2,
    nicolas_robin_check,
    perimeter_key,
    squarefree_decompose,
    three_squares_count,
    two_squares_count,
)

__version__ = "0.1.0"
