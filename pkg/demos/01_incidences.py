"""
Point-line incidences with exact rationals
==========================================

Build the grid-and-lines configuration with k^4 incidences, then slide it
off the origin so the conic maps can be applied.
"""

from fractions import Fraction

from unitperim.incidence_construction import (
    build_elekes_config,
    build_grid_family_config,
    count_incidences,
    line_foot,
    normalize_translation,
)

# points (i, j) with i < k, j < 2k^2 and lines y = a x + b with a < k, b < k^2
for k in range(1, 5):
    cfg = build_elekes_config(k)
    print(f"k={k}: {len(cfg.points)} points, {len(cfg.lines)} lines, "
          f"{count_incidences(cfg)} incidences (k^4 = {k ** 4})")

# a 5 x 5 grid with five slope families; None stands for vertical lines
slopes = [Fraction(0), None, Fraction(1), Fraction(-2), Fraction(1, 2)]
grid = build_grid_family_config(5, slopes, scale=Fraction(3, 2))
print("grid family:", len(grid.points), "points,", len(grid.lines), "lines,",
      len(grid.incidences), "incidences")

# translation keeps every distance but moves all points above the x-axis
moved = normalize_translation(grid)
print("lowest point after translation:", min(p.y for p in moved.points))

# the foot of the perpendicular from the origin drives everything downstream
foot, r2 = line_foot(moved.lines[0])
print("first line", moved.lines[0], "has foot", foot, "at squared distance", r2)
