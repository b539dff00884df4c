"""End-to-end unit-perimeter construction: build, normalize, map, count."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .conic_maps import (
    PERIMETER_TOL,
    FloatPoint,
    UnitPerimeterSet,
    assemble_unit_perimeter_set,
    count_triangles_with_perimeter,
    incidence_perimeter_deviation,
    incidence_triangle_count,
)
from .incidence_construction import (
    IncidenceConfig,
    build_elekes_config,
    build_grid_family_config,
    normalize_translation,
)

ELEKES_MAX_K = 8
GRID_FAMILY_MAX_K = 12

# slope pool for the 51-point search; None is vertical
FIGURE1_SLOPES: Tuple[Optional[Fraction], ...] = (
    Fraction(0), None, Fraction(1), Fraction(-1),
    Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2),
)
# grid spacings by increasing height max(num, den): 1, 1/2, 2, 1/3, 2/3, 3/2, 3, ...
FIGURE1_SCALES = tuple(sorted(
    {Fraction(a, b) for a in range(1, 5) for b in range(1, 5)},
    key=lambda q: (max(q.numerator, q.denominator), q)))
FIGURE1_TARGET = (51, 95)
DEFAULT_GRID_SLOPES = (Fraction(0), None, Fraction(1), Fraction(2), Fraction(1, 2))


@dataclass
class ConstructionResult:
    kind: str
    size: int
    config: IncidenceConfig
    ups: UnitPerimeterSet
    triangles_incidence: int
    triangles_bruteforce: int
    triangles_bruteforce_unit: int
    max_perimeter_deviation: float
    slopes: Optional[Sequence[Optional[Fraction]]] = None
    scale: Optional[Fraction] = None

    def summary(self) -> dict:
        out = {
            "schema": 1,
            "kind": self.kind,
            "size": self.size,
            "n_source_points": len(self.config.points),
            "n_points": len(self.ups.points),
            "n_ellipses": len(self.ups.ellipses),
            "n_incidences": len(self.ups.incidences),
            "triangles_incidence": self.triangles_incidence,
            "triangles_bruteforce": self.triangles_bruteforce,
            "triangles_bruteforce_unit": self.triangles_bruteforce_unit,
            "max_perimeter_deviation": self.max_perimeter_deviation,
        }
        if self.slopes is not None:
            out["slopes"] = [slope_text(s) for s in self.slopes]
            out["scale"] = str(self.scale)
        return out


def slope_text(slope: Optional[Fraction]) -> str:
    return "vertical" if slope is None else str(slope)


def parse_slope(text: str) -> Optional[Fraction]:
    return None if text.strip().lower() in ("vertical", "inf", "v") else Fraction(text)


def run_pipeline(config: IncidenceConfig, kind: str, size: int, tol: float = PERIMETER_TOL,
                 threads: int = 1, slopes=None, scale=None) -> ConstructionResult:
    normalized = normalize_translation(config)
    ups = assemble_unit_perimeter_set(normalized, tol)
    half = [FloatPoint(p.x / 2, p.y / 2) for p in ups.points]
    return ConstructionResult(
        kind=kind,
        size=size,
        config=normalized,
        ups=ups,
        triangles_incidence=incidence_triangle_count(ups),
        triangles_bruteforce=count_triangles_with_perimeter(ups.points, 2.0, tol, threads=threads),
        triangles_bruteforce_unit=count_triangles_with_perimeter(half, 1.0, tol / 2, threads=threads),
        max_perimeter_deviation=incidence_perimeter_deviation(ups),
        slopes=slopes,
        scale=scale,
    )


def construct_elekes(k: int, tol: float = PERIMETER_TOL, threads: int = 1) -> ConstructionResult:
    if not 1 <= k <= ELEKES_MAX_K:
        raise ValueError(f"elekes size must lie in [1, {ELEKES_MAX_K}]")
    return run_pipeline(build_elekes_config(k), "elekes", k, tol, threads)


def construct_grid_family(k: int, slopes=DEFAULT_GRID_SLOPES, scale=1,
                          tol: float = PERIMETER_TOL, threads: int = 1) -> ConstructionResult:
    if not 2 <= k <= GRID_FAMILY_MAX_K:
        raise ValueError(f"grid-family size must lie in [2, {GRID_FAMILY_MAX_K}]")
    config = build_grid_family_config(k, slopes, scale)
    return run_pipeline(config, "grid-family", k, tol, threads, list(slopes), Fraction(scale))


def figure1_candidates() -> List[Tuple[Fraction, Tuple[Optional[Fraction], ...]]]:
    return [(scale, combo) for scale in FIGURE1_SCALES
            for combo in itertools.combinations(FIGURE1_SLOPES, 5)]


def find_figure1(tol: float = PERIMETER_TOL, threads: int = 1) -> ConstructionResult:
    """First 5x5 grid with five slope families giving 51 points and 95 triangles.

    A candidate must hit the target with both counters: the incidence
    triangles and the brute-force perimeter-2 triples. Cheap checks run first.
    """
    n_points, n_triangles = FIGURE1_TARGET
    for scale, combo in figure1_candidates():
        config = build_grid_family_config(5, combo, scale)
        if len(config.incidences) != n_triangles:
            continue
        ups = assemble_unit_perimeter_set(normalize_translation(config), tol)
        if len(ups.points) != n_points or incidence_triangle_count(ups) != n_triangles:
            continue
        if count_triangles_with_perimeter(ups.points, 2.0, tol, threads=threads) != n_triangles:
            continue
        result = run_pipeline(config, "figure1", 5, tol, threads, list(combo), scale)
        return result
    raise LookupError(f"no candidate reproduces {FIGURE1_TARGET} in the search space")
