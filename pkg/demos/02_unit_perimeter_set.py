"""
From lines to ellipses tangent to the unit circle
=================================================

Square every point (lines become parabolas with focus 0), then squash the
plane by z / (1 + |z|) (parabolas become ellipses tangent to the unit
circle). Each ellipse point together with both foci is a perimeter-2
triangle.
"""

import sys
from pathlib import Path

from unitperim.conic_maps import ellipse_of_line, parabola_of_line
from unitperim.construction import construct_elekes, find_figure1
from unitperim.incidence_construction import RationalLine
from unitperim.render import render_svg

# the line x = 1 goes to a parabola with directrix x = 2 ...
line = RationalLine(1, 0, 1)
print("directrix:", parabola_of_line(line).directrix)

# ... and then to an ellipse with foci 0 and -1/2, major axis 3/2
e = ellipse_of_line(line)
print("second focus:", e.focus2, "axis sum:", e.axis_sum, "tangency:", e.axis_sum + abs(e.focus2))

# whole pipeline on the k^4 construction
r = construct_elekes(3)
print(r.summary())

# the 51-point picture: search grid spacing and slope sets for (51, 95)
fig = find_figure1()
print("figure search found scale", fig.scale, "slopes", fig.summary()["slopes"])
print(len(fig.ups.points), "points,", fig.triangles_bruteforce, "perimeter-2 triangles")

out = Path(sys.argv[1] if len(sys.argv) > 1 else "out")
out.mkdir(exist_ok=True)
render_svg(fig.ups, out / "figure1.svg")
print("wrote", out / "figure1.svg")
