"""Invariant suites behind ``unitperim verify``.

Each suite returns a list of ``Check`` records; a suite passes when every
check does. Sizes are kept small enough to finish in seconds.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Dict, List

from . import conic_maps as cm
from . import grid_triangles as gt
from . import incidence_construction as ic
from . import numeric_core as nc


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def deterministic_lines(count: int = 20) -> List[ic.RationalLine]:
    """A fixed spread of lines missing the origin, vertical ones included."""
    lines = []
    coeffs = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, -3), (3, 2), (1, Fraction(1, 2)),
              (0, 3), (5, -2)]
    for i in range(count):
        A, B = coeffs[i % len(coeffs)]
        C = Fraction(i // len(coeffs) + 1, 1 + i % 3)
        if i % 2:
            C = -C
        lines.append(ic.RationalLine(A, B, C))
    return lines


def suite_numeric() -> List[Check]:
    checks = []
    bad = [N for N in range(1, 20001)
           if (lambda a, d: a * a * d != N or not nc.is_squarefree(d))(*nc.squarefree_decompose(N))]
    checks.append(Check("squarefree round trip N<=20000", not bad, f"failures={bad[:5]}"))

    rng = random.Random(2024)
    bad = []
    for _ in range(500):
        m, n = rng.randint(1, 10**4), rng.randint(1, 10**4)
        if math.gcd(m, n) == 1 and nc.divisor_count(m * n) != nc.divisor_count(m) * nc.divisor_count(n):
            bad.append((m, n))
    checks.append(Check("divisor_count multiplicative", not bad, f"failures={bad[:5]}"))

    bad = [N for N in range(1, 2001) if nc.two_squares_count(N) != _r2_scan(N)]
    checks.append(Check("r2 formula == scan N<=2000", not bad, f"failures={bad[:5]}"))
    bad = [N for N in range(1, 10001) if nc.two_squares_count(N) > 4 * nc.divisor_count(N)]
    checks.append(Check("r2(N) <= 4 d(N) N<=10000", not bad, f"failures={bad[:5]}"))

    bad = []
    for a in range(1, 12):
        for b in range(1, 12):
            for c in range(1, 12):
                vals = {nc.heron_16A2(*perm) for perm in permutations((a, b, c))}
                degenerate = 2 * max(a, b, c) == a + b + c
                if len(vals) != 1 or (vals.pop() == 0) != degenerate:
                    bad.append((a, b, c))
    checks.append(Check("heron_16A2 symmetric, zero iff flat", not bad, f"failures={bad[:5]}"))
    return checks


def _r2_scan(N: int) -> int:
    r = math.isqrt(N)
    return sum(1 for x in range(-r, r + 1) for y in range(-r, r + 1) if x * x + y * y == N)


def suite_conic() -> List[Check]:
    checks = []
    for k in range(1, 5):
        cfg = ic.build_elekes_config(k)
        checks.append(Check(f"elekes k={k} incidences == k^4",
                            ic.count_incidences(cfg) == k ** 4 == len(cfg.incidences)))
    for k in range(2, 5):
        cfg = ic.normalize_translation(ic.build_elekes_config(k))
        ups = cm.assemble_unit_perimeter_set(cfg)
        dev = cm.incidence_perimeter_deviation(ups)
        checks.append(Check(f"elekes k={k} perimeter within 1e-9", dev <= 1e-9, f"max_dev={dev:.3e}"))
        squares = [cm.apply_f1(p) for p in cfg.points]
        checks.append(Check(f"elekes k={k} z^2 injective", len(set(squares)) == len(squares)))
        directrices = [cm.parabola_of_line(l).directrix for l in cfg.lines]
        checks.append(Check(f"elekes k={k} directrices distinct",
                            len(set(directrices)) == len(directrices)))
        checks.append(Check(f"elekes k={k} point budget",
                            len(ups.points) <= 2 * len(cfg.points) + 1))
        brute = cm.count_triangles_with_perimeter(ups.points, 2.0)
        checks.append(Check(f"elekes k={k} incidence count <= brute force",
                            cm.incidence_triangle_count(ups) <= brute))

    ts = [Fraction(i - 50, 10) for i in range(100)]
    worst_eq = worst_spread = worst_tan = 0.0
    exact = True
    for line in deterministic_lines():
        par = cm.parabola_of_line(line)
        for t in ts:
            g = par.gamma(t)
            exact &= g.x ** 2 + g.y ** 2 == par.distance2_to_directrix(g)
            worst_eq = max(worst_eq, abs(math.hypot(float(g.x), float(g.y))
                                         - math.sqrt(float(par.distance2_to_directrix(g)))))
        sums = cm.sample_parabola_focal_sums(line, ts)
        worst_spread = max(worst_spread, max(sums) - min(sums))
        e = cm.ellipse_of_parabola(par)
        worst_tan = max(worst_tan, abs(e.axis_sum + abs(e.focus2) - 2))
    checks.append(Check("parabola equidistance (exact and float <= 1e-12)",
                        exact and worst_eq <= 1e-12, f"max_dev={worst_eq:.3e}"))
    checks.append(Check("ellipse focal-sum spread <= 1e-9", worst_spread <= 1e-9,
                        f"max_spread={worst_spread:.3e}"))
    checks.append(Check("tangency axis_sum + |q| == 2 within 1e-12", worst_tan <= 1e-12,
                        f"max_dev={worst_tan:.3e}"))
    checks.append(Check("sqrt image is a rectangular hyperbola",
                        all(cm.sqrt_map_hyperbola_check(l, 12) for l in deterministic_lines(10))))
    return checks


def suite_grid() -> List[Check]:
    checks = []
    for n in range(2, 7):
        census = gt.grid_census(n)
        m = n * n
        checks.append(Check(f"census n={n} totality",
                            census.total + census.collinear == m * (m - 1) * (m - 2) // 6))
        report = gt.congruence_case_audit(census)
        checks.append(Check(f"census n={n} congruence audit", report.ok, "; ".join(report.violations[:3])))
    for k in range(2, 7):
        p = 2 * (2 * k - 1) ** 2
        made = set(t.sides for t in gt.heronian_from_three_squares(k))
        listed = set(t.sides for t in gt.heronian_enumerate(p))
        checks.append(Check(f"three-squares k={k} subset of H({p})", made <= listed))
    bad = []
    for k in range(1, 21):
        s = (2 * k - 1) ** 2
        bound = (nc.three_squares_count(s) - 3 * nc.two_squares_count(s)) / 48
        if len(gt.heronian_from_three_squares(k)) < bound:
            bad.append(k)
    checks.append(Check("sphere count chain k<=20", not bad, f"failures={bad}"))
    failures = []
    for p in range(3, 61):
        for t in gt.heronian_enumerate(p):
            try:
                gt.embed_heronian(t)
            except ArithmeticError:
                failures.append(t.sides)
    checks.append(Check("lattice embedding for perimeter <= 60", not failures, f"failures={failures}"))
    rng = random.Random(7)
    bad = []
    for _ in range(30):
        inst = gt.DiophantineInstance(rng.randint(1, 10**4), rng.randint(1, 100))
        if gt.diophantine_count(inst) > inst.divisor_bound():
            bad.append(inst)
    checks.append(Check("diophantine divisor bound", not bad, f"failures={bad[:3]}"))
    return checks


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "numeric": suite_numeric,
    "conic": suite_conic,
    "grid": suite_grid,
}


def run_suites(names: List[str]) -> dict:
    report = {"schema": 1, "suites": {}, "ok": True}
    for name in names:
        start = time.perf_counter()
        checks = SUITES[name]()
        ok = all(c.ok for c in checks)
        report["suites"][name] = {
            "ok": ok,
            "seconds": round(time.perf_counter() - start, 3),
            "checks": [asdict(c) for c in checks],
        }
        report["ok"] &= ok
    return report
