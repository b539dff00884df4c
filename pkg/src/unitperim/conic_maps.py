"""Push a point/line configuration through z -> z^2 and z -> z/(1+|z|).

Lines become parabolas with focus 0 under the first map, and those become
ellipses with one focus at 0 that touch the unit circle under the second.
Any point on such an ellipse forms a perimeter-2 triangle with the two foci.

Everything up to and including z -> z^2 is exact (``Fraction``); the second
map takes a square root, so mapped points are floats. Each ellipse keeps its
exact ``(foot, r2)`` provenance, and its second focus and axis sum are
rational functions of those.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .incidence_construction import (
    IncidenceConfig,
    RationalLine,
    RationalPoint,
    line_foot,
    translation_ok,
)

PERIMETER_TOL = 1e-9
AREA_TOL = 1e-12
DEDUP_QUANTUM = 1e-12


class FloatPoint(NamedTuple):
    x: float
    y: float

    def __abs__(self):
        return math.hypot(self.x, self.y)


def _as_float_point(p: Union[FloatPoint, RationalPoint, Sequence[float]]) -> FloatPoint:
    if isinstance(p, RationalPoint):
        return FloatPoint(float(p.x), float(p.y))
    return FloatPoint(float(p[0]), float(p[1]))


def apply_f1(p: RationalPoint) -> RationalPoint:
    """Complex square, exactly."""
    return RationalPoint(p.x * p.x - p.y * p.y, 2 * p.x * p.y)


def apply_f2(p) -> FloatPoint:
    """z / (1 + |z|); lands strictly inside the unit disk."""
    if isinstance(p, RationalPoint):
        # |z| from the exact squared modulus keeps one rounding step
        s = 1.0 + math.sqrt(p.x * p.x + p.y * p.y)
        return FloatPoint(float(p.x) / s, float(p.y) / s)
    p = _as_float_point(p)
    s = 1.0 + abs(p)
    return FloatPoint(p.x / s, p.y / s)


@dataclass(frozen=True)
class ParabolaRec:
    """Image of ``source_line`` under z -> z^2: focus at 0 and ``directrix``."""

    source_line: RationalLine
    foot: RationalPoint
    r2: Fraction
    directrix: RationalLine

    def gamma(self, t) -> RationalPoint:
        """Point of the parabola at parameter ``t`` (image of foot*(1+it))."""
        t = Fraction(t)
        fx, fy = self.foot.x, self.foot.y
        return apply_f1(RationalPoint(fx - t * fy, fy + t * fx))

    def distance2_to_directrix(self, p: RationalPoint) -> Fraction:
        d = self.directrix
        return (d.A * p.x + d.B * p.y - d.C) ** 2 / (d.A ** 2 + d.B ** 2)


def parabola_of_line(line: RationalLine) -> ParabolaRec:
    """The directrix passes through 2*foot^2, perpendicular to foot^2."""
    foot, r2 = line_foot(line)
    sq = apply_f1(foot)
    px, py = 2 * sq.x, 2 * sq.y
    directrix = RationalLine(px, py, px * px + py * py)
    return ParabolaRec(line, foot, r2, directrix)


@dataclass(frozen=True)
class EllipseRec:
    """Ellipse with foci 0 and ``focus2`` and focal-distance sum ``axis_sum``."""

    foot: RationalPoint
    r2: Fraction
    focus2_exact: RationalPoint
    axis_sum_exact: Fraction

    @property
    def focus2(self) -> FloatPoint:
        return _as_float_point(self.focus2_exact)

    @property
    def axis_sum(self) -> float:
        return float(self.axis_sum_exact)

    def focal_sum(self, p) -> float:
        p = _as_float_point(p)
        q = self.focus2
        return math.hypot(p.x, p.y) + math.hypot(p.x - q.x, p.y - q.y)

    def to_json_obj(self) -> dict:
        return {
            "foot": [_frac_str(self.foot.x), _frac_str(self.foot.y)],
            "r2": _frac_str(self.r2),
            "focus2": [_float_str(v) for v in self.focus2],
            "axis_sum": _float_str(self.axis_sum),
        }


def ellipse_of_parabola(par: ParabolaRec) -> EllipseRec:
    """Second focus -foot^2 / (r^2 (1 + r^2)), axis sum (1 + 2r^2)/(1 + r^2)."""
    sq = apply_f1(par.foot)
    scale = -1 / (par.r2 * (1 + par.r2))
    focus2 = RationalPoint(sq.x * scale, sq.y * scale)
    axis_sum = (1 + 2 * par.r2) / (1 + par.r2)
    return EllipseRec(par.foot, par.r2, focus2, axis_sum)


def ellipse_of_line(line: RationalLine) -> EllipseRec:
    return ellipse_of_parabola(parabola_of_line(line))


def verify_point_on_ellipse(e: EllipseRec, p, tol: float = PERIMETER_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(e.focal_sum(p) - e.axis_sum) <= tol


def line_point(line: RationalLine, t) -> RationalPoint:
    """foot * (1 + i t): the line parametrized from its closest point to 0."""
    foot, _ = line_foot(line)
    t = Fraction(t)
    return RationalPoint(foot.x - t * foot.y, foot.y + t * foot.x)


@dataclass
class UnitPerimeterSet:
    points: List[FloatPoint] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)
    ellipses: List[EllipseRec] = field(default_factory=list)
    # (point index, ellipse index)
    incidences: List[Tuple[int, int]] = field(default_factory=list)
    # exact z^2 for mapped points, None for foci and the origin
    squared: List[Optional[RationalPoint]] = field(default_factory=list)
    focus_indices: List[int] = field(default_factory=list)
    source_points: int = 0

    @property
    def origin_index(self) -> int:
        return self.tags.index("origin")

    def to_json_obj(self) -> dict:
        return {
            "points": [
                {"tag": tag, "x": _float_str(p.x), "y": _float_str(p.y)}
                for p, tag in zip(self.points, self.tags)
            ],
            "ellipses": [e.to_json_obj() for e in self.ellipses],
            "incidences": [list(pair) for pair in self.incidences],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _float_str(v: float) -> str:
    return format(v, ".17g")


def _quantize(p: FloatPoint) -> Tuple[int, int]:
    return (round(p.x / DEDUP_QUANTUM), round(p.y / DEDUP_QUANTUM))


def assemble_unit_perimeter_set(config: IncidenceConfig,
                                tol: float = PERIMETER_TOL) -> UnitPerimeterSet:
    """Mapped points, every second focus, and the origin, deduplicated."""
    if not translation_ok(config):
        raise ValueError("configuration is not normalized; run normalize_translation first")
    ups = UnitPerimeterSet(source_points=len(config.points))
    seen = {}

    def add(p: FloatPoint, tag: str, sq: Optional[RationalPoint]) -> int:
        key = _quantize(p)
        if key in seen:
            return seen[key]
        seen[key] = len(ups.points)
        ups.points.append(p)
        ups.tags.append(tag)
        ups.squared.append(sq)
        return seen[key]

    point_index = []
    for p in config.points:
        sq = apply_f1(p)
        point_index.append(add(apply_f2(sq), "mapped-point", sq))
    ups.ellipses = [ellipse_of_line(l) for l in config.lines]
    ups.focus_indices = [add(e.focus2, "focus2", None) for e in ups.ellipses]
    add(FloatPoint(0.0, 0.0), "origin", None)

    ups.incidences = sorted({(point_index[i], j) for i, j in config.incidences})
    for i, j in ups.incidences:
        if not verify_point_on_ellipse(ups.ellipses[j], ups.points[i], tol):
            dev = abs(ups.ellipses[j].focal_sum(ups.points[i]) - ups.ellipses[j].axis_sum)
            raise ArithmeticError(
                f"incidence (point {i}, ellipse {j}) off by {dev:.3e} > tol {tol:g}")
    return ups


def _twice_area(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def triangle_perimeter(a, b, c) -> float:
    return math.dist(a, b) + math.dist(b, c) + math.dist(c, a)


def _incidence_triples(ups: UnitPerimeterSet):
    origin = ups.origin_index
    triples = {}
    for i, j in ups.incidences:
        e = ups.ellipses[j]
        f = ups.focus_indices[j]
        sq = ups.squared[i]
        if sq is not None:
            # p sits on the focal axis iff z^2 is a real multiple of foot^2
            fsq = apply_f1(e.foot)
            degenerate = sq.x * fsq.y - sq.y * fsq.x == 0
        else:
            degenerate = abs(_twice_area(ups.points[origin], ups.points[f], ups.points[i])) <= AREA_TOL
        if degenerate or len({origin, f, i}) < 3:
            continue
        triples[tuple(sorted((origin, f, i)))] = j
    return triples


def incidence_triangle_count(ups: UnitPerimeterSet) -> int:
    """Distinct nondegenerate {origin, second focus, point on ellipse} triples."""
    return len(_incidence_triples(ups))


def incidence_perimeter_deviation(ups: UnitPerimeterSet, target: float = 2.0) -> float:
    """Largest |perimeter - target| over the incidence triangles."""
    worst = 0.0
    for tri in _incidence_triples(ups):
        a, b, c = (ups.points[v] for v in tri)
        worst = max(worst, abs(triangle_perimeter(a, b, c) - target))
    return worst


def _count_from(i: int, P: np.ndarray, D: np.ndarray, target: float,
                tol: float, tol_area: float) -> int:
    rest = D[i, i + 1:]
    S = rest[:, None] + rest[None, :] + D[i + 1:, i + 1:]
    js, ks = np.nonzero(np.triu(np.abs(S - target) <= tol, 1))
    if js.size == 0:
        return 0
    js = js + i + 1
    ks = ks + i + 1
    u = P[js] - P[i]
    v = P[ks] - P[i]
    cross = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    return int(np.count_nonzero(np.abs(cross) > tol_area))


def count_triangles_with_perimeter(points: Sequence, target: float, tol: float = PERIMETER_TOL,
                                   tol_area: float = AREA_TOL, threads: int = 1) -> int:
    """Brute-force count of nondegenerate triples with perimeter target +- tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    P = np.asarray([tuple(p) for p in points], dtype=float).reshape(-1, 2)
    n = len(P)
    if n < 3:
        return 0
    D = np.sqrt(((P[:, None, :] - P[None, :, :]) ** 2).sum(axis=-1))
    firsts = range(n - 2)
    if threads <= 1:
        return sum(_count_from(i, P, D, target, tol, tol_area) for i in firsts)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda i: _count_from(i, P, D, target, tol, tol_area), firsts))


def sample_parabola_focal_sums(line: RationalLine, ts: Sequence) -> List[float]:
    e = ellipse_of_line(line)
    return [e.focal_sum(apply_f2(apply_f1(line_point(line, t)))) for t in ts]


def sqrt_map_hyperbola_check(line: RationalLine, samples: int = 12,
                             tol: float = 1e-9) -> bool:
    """Principal sqrt of a line lies on a conic with zero-trace quadratic part.

    Fits ``a x^2 + b xy + c y^2 + d x + e y + f = 0`` through the first five
    sample images and checks the rest against it.
    """
    if samples < 5:
        raise ValueError("need at least 5 samples to determine a conic")
    foot, r2 = line_foot(line)
    base = complex(float(foot.x), float(foot.y))
    span = 1.0 + math.sqrt(float(r2))
    ts = np.linspace(-2.0, 2.0, samples) * span / math.sqrt(float(r2))
    w = np.sqrt(base * (1 + 1j * ts))
    x, y = w.real, w.imag
    M = np.column_stack([x * x, x * y, y * y, x, y, np.ones_like(x)])
    _, sing, vt = np.linalg.svd(M[:5])
    if sing[-1] < 1e-12 * sing[0]:
        raise ValueError("degenerate sample set")
    coef = vt[-1]
    coef = coef / np.max(np.abs(coef))
    residual = np.max(np.abs(M @ coef)) if samples > 5 else 0.0
    return bool(residual <= tol and abs(coef[0] + coef[2]) <= tol)
