"""
Heronian triangles and a quadratic lower bound
==============================================

With s = (2k-1)^2 and s = x^2 + y^2 + z^2, the sides s - x^2, s - y^2,
s - z^2 form a Heronian triangle of perimeter 2s. Each one sits in the
lattice, and its translates fill an n x n grid.
"""

from unitperim.grid_triangles import (
    bounding_box,
    embed_heronian,
    heronian_enumerate,
    heronian_from_three_squares,
    lower_bound_generate,
)
from unitperim.numeric_core import three_squares_count

print("perimeter 12:", heronian_enumerate(12))

for k in range(1, 8):
    s = (2 * k - 1) ** 2
    print(f"k={k}: r3({s}) = {three_squares_count(s)} >= {6 * (2 * k - 1)}, "
          f"{len(heronian_from_three_squares(k))} triangles of perimeter {2 * s}")

for t in heronian_from_three_squares(5):
    t = embed_heronian(t)
    print(t.sides, "area", t.area, "at", t.embedding, "box", bounding_box(t.embedding))

r = lower_bound_generate(10000)
print(r.as_dict(), "translations per class:", r.translations)
