"""Exact rational point/line configurations with many incidences."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

Rational = Fraction


@dataclass(frozen=True, order=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def translate(self, u, v) -> "RationalPoint":
        return RationalPoint(self.x + u, self.y + v)


@dataclass(frozen=True, order=True)
class RationalLine:
    """The line ``A x + B y = C``, scaled so the first nonzero of A, B is 1."""

    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        A, B, C = Fraction(self.A), Fraction(self.B), Fraction(self.C)
        if A == 0 and B == 0:
            raise ValueError("A and B cannot both be zero")
        s = A if A != 0 else B
        object.__setattr__(self, "A", A / s)
        object.__setattr__(self, "B", B / s)
        object.__setattr__(self, "C", C / s)

    @classmethod
    def through(cls, p: RationalPoint, slope: Optional[Fraction]) -> "RationalLine":
        """Line through ``p`` with the given slope (``None`` = vertical)."""
        if slope is None:
            return cls(1, 0, p.x)
        slope = Fraction(slope)
        return cls(-slope, 1, p.y - slope * p.x)

    def contains(self, p: RationalPoint) -> bool:
        return self.A * p.x + self.B * p.y == self.C

    def translate(self, u, v) -> "RationalLine":
        return RationalLine(self.A, self.B, self.C + self.A * u + self.B * v)

    def reflected(self) -> "RationalLine":
        """Image under z -> -z."""
        return RationalLine(self.A, self.B, -self.C)

    @property
    def passes_through_origin(self) -> bool:
        return self.C == 0


@dataclass
class IncidenceConfig:
    points: List[RationalPoint] = field(default_factory=list)
    lines: List[RationalLine] = field(default_factory=list)
    incidences: List[Tuple[int, int]] = field(default_factory=list)

    @classmethod
    def from_points_lines(cls, points: Sequence[RationalPoint],
                          lines: Sequence[RationalLine]) -> "IncidenceConfig":
        points, lines = list(points), list(lines)
        return cls(points, lines, scan_incidences(points, lines))

    def to_json_obj(self) -> dict:
        return {
            "points": [[_frac_str(p.x), _frac_str(p.y)] for p in self.points],
            "lines": [[_frac_str(l.A), _frac_str(l.B), _frac_str(l.C)] for l in self.lines],
            "incidences": [list(pair) for pair in self.incidences],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IncidenceConfig":
        points = [RationalPoint(Fraction(x), Fraction(y)) for x, y in obj["points"]]
        lines = [RationalLine(*map(Fraction, abc)) for abc in obj["lines"]]
        incidences = [tuple(pair) for pair in obj["incidences"]]
        return cls(points, lines, incidences)

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "IncidenceConfig":
        return cls.from_json_obj(json.loads(text))


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def scan_incidences(points: Sequence[RationalPoint],
                    lines: Sequence[RationalLine]) -> List[Tuple[int, int]]:
    """All (point index, line index) pairs with exact incidence."""
    # clear denominators once per line so the inner test is integer arithmetic
    int_lines = []
    for l in lines:
        den = l.A.denominator * l.B.denominator * l.C.denominator
        int_lines.append((int(l.A * den), int(l.B * den), int(l.C * den)))
    out = []
    for i, p in enumerate(points):
        pden = p.x.denominator * p.y.denominator
        px, py = int(p.x * pden), int(p.y * pden)
        for j, (A, B, C) in enumerate(int_lines):
            if A * px + B * py == C * pden:
                out.append((i, j))
    return out


def count_incidences(config: IncidenceConfig) -> int:
    """Exact recount of point-line incidences (ignores the stored list)."""
    return len(scan_incidences(config.points, config.lines))


def _check_slopes(slopes: Sequence[Optional[Fraction]]) -> List[Optional[Fraction]]:
    normalized = [None if s is None else Fraction(s) for s in slopes]
    if len(set(normalized)) != len(normalized):
        raise ValueError("slopes must be distinct")
    return normalized


def build_grid_family_config(k: int, slopes: Sequence[Optional[Fraction]],
                             scale=1) -> IncidenceConfig:
    """k x k grid plus, per slope, the k lines meeting the most grid points.

    Grid points are ``scale * (i, j)`` for ``0 <= i, j < k``. Ties between
    equally good lines are broken by the smaller intercept ``C``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    slopes = _check_slopes(slopes)
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    points = [RationalPoint(scale * i, scale * j) for i in range(k) for j in range(k)]
    lines = []
    for slope in slopes:
        hits = {}
        for p in points:
            line = RationalLine.through(p, slope)
            hits[line] = hits.get(line, 0) + 1
        ranked = sorted(hits.items(), key=lambda item: (-item[1], item[0].C))
        lines.extend(line for line, _ in ranked[:k])
    return IncidenceConfig.from_points_lines(points, lines)


def build_elekes_config(k: int) -> IncidenceConfig:
    """Points [k] x [2k^2] and lines y = a x + b, a in [k], b in [k^2]."""
    if k < 1:
        raise ValueError("k must be at least 1")
    points = [RationalPoint(i, j) for i in range(1, k + 1) for j in range(1, 2 * k * k + 1)]
    lines = [RationalLine(-a, 1, b) for a in range(1, k + 1) for b in range(1, k * k + 1)]
    # line y = a x + b meets x = 1..k at y = a x + b; index arithmetic avoids a full scan
    incidences = []
    height = 2 * k * k
    for li, (a, b) in enumerate((a, b) for a in range(1, k + 1) for b in range(1, k * k + 1)):
        for x in range(1, k + 1):
            incidences.append(((x - 1) * height + (a * x + b) - 1, li))
    incidences.sort()
    return IncidenceConfig(points, lines, incidences)


def _primes() -> Iterable[int]:
    found = []
    for n in itertools.count(2):
        if all(n % p for p in found if p * p <= n):
            found.append(n)
            yield n


def translation_candidates(config: IncidenceConfig, limit: int = 40):
    """Deterministic offsets (1/q, N + 1/q') with N = 1 + max |y|."""
    N = 1 + max((abs(p.y) for p in config.points), default=Fraction(0))
    primes = list(itertools.islice(_primes(), limit))
    # walk anti-diagonals so small denominators come first in both axes
    for total in range(2 * limit - 1):
        for i in range(max(0, total - limit + 1), min(total, limit - 1) + 1):
            yield Fraction(1, primes[i]), N + Fraction(1, primes[total - i])


def translation_ok(config: IncidenceConfig) -> bool:
    """Upper half-plane points, no line through 0, no line pair reflected through 0."""
    if any(p.y <= 0 for p in config.points):
        return False
    lines = set(config.lines)
    for l in config.lines:
        if l.passes_through_origin or l.reflected() in lines:
            return False
    return True


def translate_config(config: IncidenceConfig, u, v) -> IncidenceConfig:
    return IncidenceConfig(
        [p.translate(u, v) for p in config.points],
        [l.translate(u, v) for l in config.lines],
        list(config.incidences),
    )


def normalize_translation(config: IncidenceConfig) -> IncidenceConfig:
    """Translate so the configuration can be pushed through z -> z^2 safely."""
    for u, v in translation_candidates(config):
        moved = translate_config(config, u, v)
        if translation_ok(moved):
            return moved
    raise RuntimeError("no admissible translation found in the candidate sequence")


def line_foot(line: RationalLine) -> Tuple[RationalPoint, Fraction]:
    """Closest point of ``line`` to the origin, and its squared distance."""
    if line.passes_through_origin:
        raise ValueError("line passes through the origin")
    norm2 = line.A ** 2 + line.B ** 2
    foot = RationalPoint(line.A * line.C / norm2, line.B * line.C / norm2)
    return foot, line.C ** 2 / norm2
