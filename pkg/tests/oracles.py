"""Brute-force reference implementations used only by the tests.

Nothing here imports from ``unitperim``; each routine is written from the
definitions with sympy/mpmath/itertools so it can check the library
independently.
"""
import itertools
import math
from collections import Counter, defaultdict

import sympy


def divisors_brute(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def r2_scan(n):
    r = math.isqrt(n)
    return sum(1 for x in range(-r, r + 1) for y in range(-r, r + 1) if x * x + y * y == n)


def r3_scan(n):
    r = math.isqrt(n)
    rng = range(-r, r + 1)
    return sum(1 for x in rng for y in rng for z in rng if x * x + y * y + z * z == n)


def squarefree_part(n):
    a, d = 1, 1
    for p, e in sympy.factorint(n).items():
        a *= p ** (e // 2)
        d *= p ** (e % 2)
    return a, d


def perimeter_signature(squares):
    """Exact perimeter as a frozenset of (squarefree part, coefficient)."""
    acc = defaultdict(int)
    for sq in squares:
        a, d = squarefree_part(sq)
        acc[d] += a
    return frozenset(acc.items())


def grid_census_brute(n):
    """signature -> (count, Counter of sorted squared-side triples), plus collinear count."""
    pts = [(x, y) for x in range(n) for y in range(n)]
    classes = defaultdict(Counter)
    collinear = 0
    cache = {}
    for p, q, r in itertools.combinations(pts, 3):
        cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        if cross == 0:
            collinear += 1
            continue
        sides = tuple(sorted(((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2,
                              (q[0] - r[0]) ** 2 + (q[1] - r[1]) ** 2,
                              (r[0] - p[0]) ** 2 + (r[1] - p[1]) ** 2)))
        if sides not in cache:
            cache[sides] = perimeter_signature(sides)
        classes[cache[sides]][sides] += 1
    return classes, collinear


def heronian_brute(p):
    out = []
    for a in range(1, p):
        for b in range(a, p):
            c = p - a - b
            if c < b or a + b <= c:
                continue
            s16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
            r = math.isqrt(s16)
            if r * r == s16 and r % 4 == 0:
                out.append((a, b, c, r // 4))
    return out
