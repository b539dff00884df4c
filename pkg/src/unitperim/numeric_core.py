"""Exact integer arithmetic used by the lattice and Heronian machinery.

Everything here works on Python ints (and ``fractions.Fraction`` where a
rational is needed); nothing is rounded except the logarithms inside
:func:`nicolas_robin_check`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, NamedTuple, Tuple


class SquarefreeDecomp(NamedTuple):
    a: int
    d: int


def _require_positive(N: int, name: str = "N") -> None:
    if N < 1:
        raise ValueError(f"{name} must be a positive integer, got {N}")


def factorize(N: int) -> Dict[int, int]:
    """Prime factorization of N by trial division, as {prime: exponent}."""
    _require_positive(N)
    factors: Dict[int, int] = {}
    while N % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        N //= 2
    p = 3
    while p * p <= N:
        while N % p == 0:
            factors[p] = factors.get(p, 0) + 1
            N //= p
        p += 2
    if N > 1:
        factors[N] = factors.get(N, 0) + 1
    return factors


@lru_cache(maxsize=1 << 16)
def squarefree_decompose(N: int) -> SquarefreeDecomp:
    """Write ``N = a**2 * d`` with ``d`` squarefree.

    >>> squarefree_decompose(360)
    SquarefreeDecomp(a=6, d=10)
    """
    _require_positive(N)
    a = d = 1
    for p, e in factorize(N).items():
        a *= p ** (e // 2)
        if e % 2:
            d *= p
    return SquarefreeDecomp(a, d)


def is_squarefree(N: int) -> bool:
    return all(e == 1 for e in factorize(N).values())


def divisor_count(N: int) -> int:
    """Number of positive divisors d(N)."""
    _require_positive(N)
    count = 1
    for e in factorize(N).values():
        count *= e + 1
    return count


def divisor_count_of_product(parts: Iterable[Tuple[int, int]]) -> int:
    """d(prod base**exp) without forming the product.

    Useful when the product is far too large for trial division but its
    factors are small, e.g. ``64 * b1**2 * c**2``.
    """
    exps: Dict[int, int] = {}
    for base, exp in parts:
        for p, e in factorize(base).items():
            exps[p] = exps.get(p, 0) + e * exp
    count = 1
    for e in exps.values():
        count *= e + 1
    return count


def divisors(N: int) -> list:
    _require_positive(N)
    divs = [1]
    for p, e in factorize(N).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def two_squares_count(N: int) -> int:
    """r2(N) from Jacobi's formula 4 * (d_{1 mod 4}(N) - d_{3 mod 4}(N))."""
    _require_positive(N)
    diff = 0
    for d in divisors(N):
        if d % 4 == 1:
            diff += 1
        elif d % 4 == 3:
            diff -= 1
    return 4 * diff


def _r1(m: int) -> int:
    # representations of m as a single square (with sign)
    if m < 0:
        return 0
    if m == 0:
        return 1
    r = math.isqrt(m)
    return 2 if r * r == m else 0


def three_squares_count(N: int) -> int:
    """r3(N) by direct scan over |x|, |y| <= isqrt(N)."""
    _require_positive(N)
    bound = math.isqrt(N)
    total = 0
    for x in range(0, bound + 1):
        wx = 1 if x == 0 else 2
        rest = N - x * x
        for y in range(0, math.isqrt(rest) + 1):
            wy = 1 if y == 0 else 2
            total += wx * wy * _r1(rest - y * y)
    return total


def heron_16A2(a: int, b: int, c: int) -> int:
    """16 * area**2 of the triangle with sides a, b, c (may be <= 0)."""
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def nicolas_robin_check(N: int) -> bool:
    """Whether log d(N) <= 2 log N / log log N holds for this N."""
    if N < 3:
        raise ValueError("need N >= 3 so that log log N > 0")
    return math.log(divisor_count(N)) <= 2 * math.log(N) / math.log(math.log(N))


@dataclass(frozen=True, order=True)
class PerimeterKey:
    """Exact perimeter ``sum a * sqrt(d)`` over distinct squarefree ``d``.

    Terms are kept as a tuple of ``(d, a)`` pairs sorted by ``d``. Square
    roots of distinct squarefree integers are linearly independent over the
    rationals, so two keys are equal exactly when the perimeters are.
    """

    terms: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        ds = [d for d, _ in self.terms]
        if ds != sorted(set(ds)):
            raise ValueError("terms must be sorted by distinct squarefree part")
        for d, a in self.terms:
            if a <= 0 or not is_squarefree(d):
                raise ValueError(f"bad term {a}*sqrt({d})")

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> "PerimeterKey":
        return cls(tuple(sorted((d, a) for d, a in mapping.items() if a)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def value(self) -> float:
        return sum(a * math.sqrt(d) for d, a in self.terms)

    def to_text(self) -> str:
        return "+".join(f"{a}*sqrt({d})" for d, a in self.terms)

    @classmethod
    def from_text(cls, text: str) -> "PerimeterKey":
        mapping = {}
        for term in text.split("+"):
            a, rest = term.split("*sqrt(")
            mapping[int(rest.rstrip(")"))] = int(a)
        return cls.from_mapping(mapping)

    def __str__(self):
        return self.to_text()


def perimeter_key(sq1: int, sq2: int, sq3: int) -> PerimeterKey:
    """Key of the triangle whose squared side lengths are sq1, sq2, sq3."""
    mapping: Dict[int, int] = {}
    for sq in (sq1, sq2, sq3):
        if sq < 1:
            raise ValueError("squared side lengths must be positive")
        a, d = squarefree_decompose(sq)
        mapping[d] = mapping.get(d, 0) + a
    return PerimeterKey.from_mapping(mapping)
