"""Equal-perimeter triangles in the grid [n] x [n] and Heronian triangles.

All arithmetic here is integer (or ``Fraction``); collinearity is an exact
integer cross product test.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .numeric_core import (
    PerimeterKey,
    divisor_count_of_product,
    heron_16A2,
    is_square,
    perimeter_key,
    squarefree_decompose,
)

CENSUS_MAX_N = 20

Vertex = Tuple[int, int]
SideTriple = Tuple[int, int, int]


def twice_area(a: Vertex, b: Vertex, c: Vertex) -> int:
    """Signed integer cross product (b - a) x (c - a)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def dist2(a: Vertex, b: Vertex) -> int:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


@dataclass(frozen=True, order=True)
class LatticeTriangle:
    vertices: Tuple[Vertex, Vertex, Vertex]

    def __post_init__(self):
        verts = tuple(sorted(tuple(int(c) for c in v) for v in self.vertices))
        if twice_area(*verts) == 0:
            raise ValueError(f"degenerate triangle {verts}")
        object.__setattr__(self, "vertices", verts)

    @property
    def squared_sides(self) -> SideTriple:
        a, b, c = self.vertices
        return tuple(sorted((dist2(b, c), dist2(a, c), dist2(a, b))))

    @property
    def key(self) -> PerimeterKey:
        return perimeter_key(*self.squared_sides)


@dataclass
class PerimeterClass:
    count: int = 0
    # sorted squared-side triple -> number of triangles with those sides
    side_multisets: Dict[SideTriple, int] = field(default_factory=dict)

    @property
    def num_side_multisets(self) -> int:
        return len(self.side_multisets)


@dataclass
class PerimeterCensus:
    n: int
    classes: Dict[PerimeterKey, PerimeterClass]
    # |cross product| for each side triple (congruent triangles share it)
    twice_areas: Dict[SideTriple, int]
    collinear: int

    @property
    def total(self) -> int:
        return sum(c.count for c in self.classes.values())

    def max_class(self) -> Tuple[PerimeterKey, int]:
        """Most populous class; ties go to the smaller key."""
        key, cls = min(self.classes.items(), key=lambda kv: (-kv[1].count, kv[0]))
        return key, cls.count

    def csv_rows(self) -> List[Tuple[str, int, int]]:
        return [(k.to_text(), c.count, c.num_side_multisets) for k, c in self.classes.items()]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "collinear": self.collinear,
            "classes": [
                {
                    "key": key.to_text(),
                    "count": cls.count,
                    "side_multisets": [
                        {"squared_sides": list(t), "count": cnt, "twice_area": self.twice_areas[t]}
                        for t, cnt in sorted(cls.side_multisets.items())
                    ],
                }
                for key, cls in self.classes.items()
            ],
        }


def _check_census_n(n: int) -> None:
    if not 2 <= n <= CENSUS_MAX_N:
        raise ValueError(f"n must lie in [2, {CENSUS_MAX_N}] for the exhaustive census, got {n}")


def _census_from(i: int, P: np.ndarray, base: int):
    """Side-triple codes and |cross| for all triangles whose first vertex is i."""
    Q = P[i + 1:]
    d_i = ((Q - P[i]) ** 2).sum(axis=1)
    diff = Q[:, None, :] - Q[None, :, :]
    d_jk = (diff ** 2).sum(axis=-1)
    u = Q - P[i]
    cross = u[:, None, 0] * u[None, :, 1] - u[:, None, 1] * u[None, :, 0]
    js, ks = np.nonzero(np.triu(cross != 0, 1))
    sides = np.sort(np.stack([d_i[js], d_i[ks], d_jk[js, ks]], axis=1), axis=1)
    codes = (sides[:, 0] * base + sides[:, 1]) * base + sides[:, 2]
    uniq, idx, counts = np.unique(codes, return_index=True, return_counts=True)
    areas = np.abs(cross[js[idx], ks[idx]])
    return uniq, counts, areas


def grid_census(n: int, threads: int = 1) -> PerimeterCensus:
    """Every nondegenerate triangle of [n] x [n], grouped by exact perimeter."""
    _check_census_n(n)
    P = np.array([(x, y) for x in range(n) for y in range(n)], dtype=np.int64)
    base = 2 * n * n
    firsts = range(len(P) - 2)
    if threads <= 1:
        parts = [_census_from(i, P, base) for i in firsts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda i: _census_from(i, P, base), firsts))

    triple_counts: Counter = Counter()
    areas: Dict[SideTriple, int] = {}
    for uniq, counts, ar in parts:
        for code, cnt, area in zip(uniq.tolist(), counts.tolist(), ar.tolist()):
            s3 = code % base
            s2 = (code // base) % base
            s1 = code // (base * base)
            triple = (s1, s2, s3)
            triple_counts[triple] += cnt
            areas[triple] = area

    classes: Dict[PerimeterKey, PerimeterClass] = {}
    for triple in sorted(triple_counts):
        key = perimeter_key(*triple)
        cls = classes.setdefault(key, PerimeterClass())
        cls.count += triple_counts[triple]
        cls.side_multisets[triple] = triple_counts[triple]
    m = n * n
    total = sum(triple_counts.values())
    return PerimeterCensus(
        n=n,
        classes=dict(sorted(classes.items())),
        twice_areas=dict(sorted(areas.items())),
        collinear=m * (m - 1) * (m - 2) // 6 - total,
    )


def max_equal_perimeter(n: int, threads: int = 1) -> Tuple[PerimeterKey, int]:
    return grid_census(n, threads=threads).max_class()


# -- Heronian triangles ---------------------------------------------------


@dataclass(frozen=True, order=True)
class HeronianTriangle:
    a: int
    b: int
    c: int
    area: int
    embedding: Optional[Tuple[Vertex, Vertex, Vertex]] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 < self.a <= self.b <= self.c:
            raise ValueError("sides must satisfy 0 < a <= b <= c")
        if self.a + self.b <= self.c:
            raise ValueError("degenerate side triple")
        if heron_16A2(self.a, self.b, self.c) != 16 * self.area ** 2:
            raise ValueError("area does not match Heron's formula")
        if self.embedding is not None and not embedding_matches(self, self.embedding):
            raise ValueError("embedding does not realize the side lengths and area")

    @classmethod
    def from_sides(cls, a: int, b: int, c: int) -> Optional["HeronianTriangle"]:
        a, b, c = sorted((a, b, c))
        if a < 1 or a + b <= c:
            return None
        h = heron_16A2(a, b, c)
        r = math.isqrt(h)
        if r * r != h or r % 4:
            return None
        return cls(a, b, c, r // 4)

    @property
    def sides(self) -> SideTriple:
        return (self.a, self.b, self.c)

    @property
    def perimeter(self) -> int:
        return self.a + self.b + self.c


def embedding_matches(t: HeronianTriangle, verts) -> bool:
    A, B, C = verts
    d = sorted((dist2(A, B), dist2(B, C), dist2(C, A)))
    return d == [t.a ** 2, t.b ** 2, t.c ** 2] and abs(twice_area(A, B, C)) == 2 * t.area


def heronian_enumerate(p: int) -> List[HeronianTriangle]:
    """All non-congruent Heronian triangles with perimeter p, sorted."""
    if p < 3:
        raise ValueError("perimeter must be at least 3")
    out = []
    for a in range(1, p // 3 + 1):
        # b ranges over a <= b <= c = p - a - b with a + b > c
        lo = max(a, (p - 2 * a) // 2 + 1)
        hi = (p - a) // 2
        if lo > hi:
            continue
        b = np.arange(lo, hi + 1, dtype=np.int64)
        c = p - a - b
        h = p * (p - 2 * a) * (p - 2 * b) * (p - 2 * c)
        r = np.rint(np.sqrt(h.astype(np.float64))).astype(np.int64)
        # float sqrt is only a hint; confirm exactly in Python ints below
        for bi in b[np.abs(r * r - h) <= 2 * r + 1].tolist():
            t = HeronianTriangle.from_sides(a, bi, p - a - bi)
            if t is not None:
                out.append(t)
    return sorted(out)


def positive_three_square_reps(s: int) -> Iterator[Tuple[int, int, int]]:
    for x in range(1, math.isqrt(s) + 1):
        for y in range(1, math.isqrt(s - x * x) + 1):
            rest = s - x * x - y * y
            if rest > 0 and is_square(rest):
                yield x, y, math.isqrt(rest)


def heronian_from_three_squares(k: int) -> List[HeronianTriangle]:
    """Heronian triangles (s - x^2, s - y^2, s - z^2) with s = (2k - 1)^2."""
    if k < 1:
        raise ValueError("k must be positive")
    s = (2 * k - 1) ** 2
    found = {}
    for x, y, z in positive_three_square_reps(s):
        sides = tuple(sorted((s - x * x, s - y * y, s - z * z)))
        if sides not in found:
            # area^2 = s (s-a)(s-b)(s-c) = s x^2 y^2 z^2
            found[sides] = HeronianTriangle(*sides, area=(2 * k - 1) * x * y * z)
    return sorted(found.values())


def circle_points(r2: int) -> List[Vertex]:
    """All integer (u, v) with u^2 + v^2 = r2."""
    pts = []
    for u in range(-math.isqrt(r2), math.isqrt(r2) + 1):
        rest = r2 - u * u
        if is_square(rest):
            v = math.isqrt(rest)
            pts.extend({(u, v), (u, -v)})
    return sorted(pts)


_SYMMETRIES = [
    lambda x, y: (x, y), lambda x, y: (-x, y), lambda x, y: (x, -y), lambda x, y: (-x, -y),
    lambda x, y: (y, x), lambda x, y: (-y, x), lambda x, y: (y, -x), lambda x, y: (-y, -x),
]


def _canonical(verts) -> Tuple[tuple, Tuple[Vertex, Vertex, Vertex]]:
    best = None
    for sym in _SYMMETRIES:
        moved = [sym(*v) for v in verts]
        mx = min(v[0] for v in moved)
        my = min(v[1] for v in moved)
        moved = sorted(((x - mx, y - my) for x, y in moved), key=lambda v: (v[1], v[0]))
        w = max(v[0] for v in moved)
        h = max(v[1] for v in moved)
        rank = (max(w, h), w * h, [(y, x) for x, y in moved])
        if best is None or rank < best[0]:
            best = (rank, tuple(moved))
    return best


def lattice_embeddings(t: HeronianTriangle) -> Iterator[Tuple[Vertex, Vertex, Vertex]]:
    """Every integral placement with A = 0 and |AB| = c (up to nothing else)."""
    a2, b2, c2 = t.a ** 2, t.b ** 2, t.c ** 2
    dot = Fraction(b2 + c2 - a2, 2)
    for u, v in circle_points(c2):
        for sigma in (1, -1):
            cr = sigma * 2 * t.area
            cx = (dot * u - cr * v) / c2
            cy = (dot * v + cr * u) / c2
            if cx.denominator == 1 and cy.denominator == 1:
                yield (0, 0), (u, v), (int(cx), int(cy))


def embed_heronian(t: HeronianTriangle) -> HeronianTriangle:
    """Attach the smallest-bounding-box lattice realization of ``t``.

    The base side is every lattice vector of length c; the apex is solved
    exactly from the other two distances and kept only if integral.
    """
    best = None
    for verts in lattice_embeddings(t):
        cand = _canonical(verts)
        if best is None or cand[0] < best[0]:
            best = cand
    if best is None:
        raise ArithmeticError(f"no lattice embedding found for sides {t.sides}")
    return HeronianTriangle(t.a, t.b, t.c, t.area, embedding=best[1])


def bounding_box(verts) -> Tuple[int, int]:
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    return max(xs) - min(xs), max(ys) - min(ys)


@dataclass
class LowerBoundResult:
    n: int
    k: int
    p: int
    triangles: List[HeronianTriangle]
    translations: List[int]

    @property
    def classes(self) -> int:
        return len(self.triangles)

    @property
    def total(self) -> int:
        return sum(self.translations)

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "p": self.p, "classes": self.classes, "total": self.total}

    def sample_triangles(self, per_class: int = 5) -> Iterator[LatticeTriangle]:
        """A deterministic spread of translates of each embedded class."""
        for t in self.triangles:
            w, h = bounding_box(t.embedding)
            spots = sorted({(0, 0), (self.n - 1 - w, self.n - 1 - h), (0, self.n - 1 - h),
                            (self.n - 1 - w, 0), ((self.n - 1 - w) // 2, (self.n - 1 - h) // 2)})
            for dx, dy in spots[:per_class]:
                yield LatticeTriangle(tuple((x + dx, y + dy) for x, y in t.embedding))


def lower_bound_generate(n: int) -> LowerBoundResult:
    """Count translates of embedded three-squares Heronian triangles in [n] x [n].

    Grid coordinates run over 0..n-1, so a class with bounding box (w, h)
    fits in (n - w)(n - h) positions.
    """
    if n < 400:
        raise ValueError("the construction needs n >= 400")
    k = math.isqrt(n) // 20
    p = 2 * (2 * k - 1) ** 2
    triangles = [embed_heronian(t) for t in heronian_from_three_squares(k)]
    translations = []
    for t in triangles:
        w, h = bounding_box(t.embedding)
        translations.append(max(n - w, 0) * max(n - h, 0))
    return LowerBoundResult(n, k, p, triangles, translations)


# -- the congruence-class analysis ----------------------------------------


@dataclass(frozen=True)
class DiophantineInstance:
    """k^2 + c x^2 = c b1^2."""

    c: int
    b1: int

    def __post_init__(self):
        if self.c < 1 or self.b1 < 1:
            raise ValueError("c and b1 must be positive")

    @classmethod
    def from_triangle(cls, d1: int, m: int, b1: int) -> "DiophantineInstance":
        """c = d1^2 m (m - 2 b1) / 4 for sides b_i sqrt(d1) summing to m."""
        if (d1 * m) % 2:
            raise ValueError("d1 * m must be even")
        if not 0 < 2 * b1 < m:
            raise ValueError("need 0 < b1 < m/2")
        return cls(d1 * d1 * m * (m - 2 * b1) // 4, b1)

    def solutions(self) -> List[Tuple[int, int]]:
        sols = []
        for x in range(-self.b1, self.b1 + 1):
            rest = self.c * (self.b1 * self.b1 - x * x)
            if is_square(rest):
                k = math.isqrt(rest)
                sols.extend([(k, x), (-k, x)] if k else [(0, x)])
        return sols

    def divisor_bound(self) -> int:
        return 24 * divisor_count_of_product([(2, 6), (self.b1, 2), (self.c, 2)])


def diophantine_count(inst: DiophantineInstance) -> int:
    return len(inst.solutions())


@dataclass
class AuditReport:
    cases: Dict[str, int] = field(default_factory=lambda: {"A": 0, "B": 0, "C": 0})
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self) -> dict:
        return {"cases": dict(self.cases), "violations": list(self.violations)}


def _decomposed(triple: SideTriple):
    return [squarefree_decompose(s) for s in triple]


def congruence_case_audit(census: PerimeterCensus) -> AuditReport:
    """Check each perimeter class against the three-case congruence analysis."""
    report = AuditReport()
    for key, cls in census.classes.items():
        support = key.support
        tag = key.to_text()
        triples = sorted(cls.side_multisets)
        if len(support) == 3:
            report.cases["A"] += 1
            if len(triples) != 1:
                report.violations.append(f"{tag}: case A with {len(triples)} side multisets")
        elif len(support) == 2:
            report.cases["B"] += 1
            _audit_case_b(tag, triples, report)
        else:
            report.cases["C"] += 1
            _audit_case_c(tag, support[0], triples, census.twice_areas, report)
    return report


def _audit_case_b(tag, triples, report):
    lone_terms, pair_sums = set(), set()
    for triple in triples:
        parts = _decomposed(triple)
        ds = Counter(d for _, d in parts)
        if sorted(ds.values()) != [1, 2]:
            report.violations.append(f"{tag}: sides {triple} do not repeat exactly one root")
            continue
        lone = next(d for d, c in ds.items() if c == 1)
        lone_terms.add((lone, sum(a for a, d in parts if d == lone)))
        pair_sums.add(sum(a for a, d in parts if d != lone))
    if len(lone_terms) > 1:
        report.violations.append(f"{tag}: lone side varies {sorted(lone_terms)}")
    if len(pair_sums) > 1:
        report.violations.append(f"{tag}: paired coefficient sum varies {sorted(pair_sums)}")


def _audit_case_c(tag, d1, triples, twice_areas, report):
    per_b1: Dict[Tuple[int, int], set] = {}
    for triple in triples:
        coeffs = sorted(a for a, _ in _decomposed(triple))
        m = sum(coeffs)
        k = twice_areas[triple]
        lhs = d1 * d1 * m * (m - 2 * coeffs[0]) * (m - 2 * coeffs[1]) * (m - 2 * coeffs[2])
        if lhs != 4 * k * k:
            report.violations.append(f"{tag}: Heron identity fails for sides {triple}")
            continue
        if (d1 * m) % 2:
            report.violations.append(f"{tag}: d1*m odd for sides {triple}")
            continue
        for i in range(3):
            b1 = coeffs[i]
            b2, b3 = (coeffs[j] for j in range(3) if j != i)
            inst = DiophantineInstance.from_triangle(d1, m, b1)
            x = b2 - b3
            if k * k + inst.c * x * x != inst.c * b1 * b1:
                report.violations.append(f"{tag}: ({k}, {x}) does not solve the b1={b1} equation")
            per_b1.setdefault((inst.c, b1), set()).add(abs(x))
    for (c, b1), xs in per_b1.items():
        # each multiset sharing b1 needs its own solution (k, x)
        if len(xs) > diophantine_count(DiophantineInstance(c, b1)):
            report.violations.append(f"{tag}: more triangles than solutions for b1={b1}")
