"""
Equal-perimeter triangles in a small grid
=========================================

Every lattice triangle's perimeter is a sum of square roots, which we key
exactly by its squarefree parts. Classes with equal keys have exactly equal
perimeters; the audit checks how those classes are built.
"""

from unitperim.grid_triangles import congruence_case_audit, grid_census
from unitperim.numeric_core import perimeter_key

# sqrt(8) + sqrt(18) + sqrt(50) = 10 sqrt(2) exactly
print(perimeter_key(8, 18, 50).to_text())

for n in (4, 6, 8, 10):
    census = grid_census(n)
    key, count = census.max_class()
    print(f"n={n}: {census.total} triangles, {len(census.classes)} perimeters, "
          f"largest class {key.to_text()} with {count}")

# the three shapes of a class: all roots distinct, one root repeated, one root only
report = congruence_case_audit(grid_census(8))
print("cases:", report.cases, "violations:", report.violations)
