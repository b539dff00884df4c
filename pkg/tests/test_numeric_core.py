import itertools
import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitperim.numeric_core import (
    PerimeterKey,
    divisor_count,
    divisor_count_of_product,
    heron_16A2,
    is_squarefree,
    nicolas_robin_check,
    perimeter_key,
    squarefree_decompose,
    three_squares_count,
    two_squares_count,
)

from oracles import divisors_brute, r2_scan, r3_scan, squarefree_part


@pytest.mark.parametrize("N, expected", [(12, (2, 3)), (49, (7, 1)), (360, (6, 10)), (1, (1, 1))])
def test_squarefree_examples(N, expected):
    assert squarefree_decompose(N) == expected


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_squarefree_round_trip_to_1e5():
    for N in range(1, 10**5 + 1):
        a, d = squarefree_decompose(N)
        assert a * a * d == N
        assert all(d % (p * p) for p in range(2, math.isqrt(d) + 1))


@given(st.integers(1, 10**7))
def test_squarefree_matches_sympy(N):
    assert squarefree_decompose(N) == squarefree_part(N)


def test_perfect_square_iff_d_is_one():
    for N in range(1, 3000):
        assert (squarefree_decompose(N).d == 1) == (math.isqrt(N) ** 2 == N)


@pytest.mark.parametrize("N, expected", [(1, 1), (12, 6), (64 * 9 * 25, 63)])
def test_divisor_count_examples(N, expected):
    assert divisor_count(N) == expected
    assert divisor_count(N) == len(divisors_brute(N))


def test_divisor_count_rejects_zero():
    with pytest.raises(ValueError):
        divisor_count(0)


def test_divisor_count_multiplicative():
    rng = random.Random(11)
    checked = 0
    while checked < 500:
        m, n = rng.randint(1, 10**4), rng.randint(1, 10**4)
        if math.gcd(m, n) != 1:
            continue
        assert divisor_count(m * n) == divisor_count(m) * divisor_count(n)
        checked += 1


def test_divisor_count_of_product():
    assert divisor_count_of_product([(2, 6), (15, 2), (7, 2)]) == divisor_count(64 * 225 * 49)


@pytest.mark.parametrize("N, expected", [(1, 4), (9, 4), (25, 12), (3, 0), (65, 16)])
def test_two_squares_examples(N, expected):
    assert two_squares_count(N) == expected == r2_scan(N)


@pytest.mark.parametrize("N, expected", [(1, 6), (9, 30), (81, 102), (7, 0)])
def test_three_squares_examples(N, expected):
    assert three_squares_count(N) == expected == r3_scan(N)


def test_three_squares_81_meets_hurwitz():
    assert three_squares_count(81) >= 6 * 9


@settings(max_examples=40)
@given(st.integers(1, 400))
def test_three_squares_orbit_structure(N):
    # each representation's sign/permutation orbit is counted in full
    count = three_squares_count(N)
    reps = set()
    r = math.isqrt(N)
    for x in range(r + 1):
        for y in range(x, r + 1):
            rest = N - x * x - y * y
            z = math.isqrt(max(rest, 0))
            if rest >= 0 and z >= y and z * z == rest:
                reps.add((x, y, z))
    total = 0
    for x, y, z in reps:
        perms = len(set(itertools.permutations((x, y, z))))
        signs = 2 ** sum(1 for v in (x, y, z) if v)
        total += perms * signs
    assert total == count


@pytest.mark.parametrize("sides, expected", [((3, 4, 5), 576), ((5, 5, 8), 2304), ((1, 2, 3), 0)])
def test_heron_examples(sides, expected):
    assert heron_16A2(*sides) == expected


@given(st.integers(1, 200), st.integers(1, 200), st.integers(1, 200))
def test_heron_symmetric_and_sign(a, b, c):
    vals = {heron_16A2(a, b, c), heron_16A2(b, c, a), heron_16A2(c, b, a), heron_16A2(a, c, b)}
    assert len(vals) == 1
    v = vals.pop()
    longest = max(a, b, c)
    if 2 * longest == a + b + c:
        assert v == 0
    elif 2 * longest > a + b + c:
        assert v < 0
    else:
        assert v > 0


@pytest.mark.parametrize("N", [100, 720720, 101])
def test_nicolas_robin_examples(N):
    assert nicolas_robin_check(N)


def test_nicolas_robin_rejects_small():
    with pytest.raises(ValueError):
        nicolas_robin_check(2)


def test_nicolas_robin_range():
    assert all(nicolas_robin_check(N) for N in range(3, 20000))


def test_perimeter_key_examples():
    assert perimeter_key(9, 16, 25).as_dict() == {1: 12}
    assert perimeter_key(2, 2, 4).as_dict() == {1: 2, 2: 2}
    assert perimeter_key(8, 18, 50).as_dict() == {2: 10}
    assert perimeter_key(2, 32, 72).as_dict() == {2: 11}
    assert perimeter_key(8, 18, 50) != perimeter_key(2, 32, 72)
    with mpmath.workprec(128):
        lhs = sum(mpmath.sqrt(v) for v in (8, 18, 50))
        rhs = sum(mpmath.sqrt(v) for v in (2, 32, 72))
        assert abs(lhs - rhs) > mpmath.mpf(1)


def test_perimeter_key_rejects_zero():
    with pytest.raises(ValueError):
        perimeter_key(0, 1, 1)


def test_perimeter_key_text_round_trip():
    key = perimeter_key(2, 5, 9)
    assert key.to_text() == "3*sqrt(1)+1*sqrt(2)+1*sqrt(5)"
    assert PerimeterKey.from_text(key.to_text()) == key
    assert perimeter_key(9, 16, 25).to_text() == "12*sqrt(1)"


def test_perimeter_key_invariants():
    with pytest.raises(ValueError):
        PerimeterKey(((4, 1),))
    with pytest.raises(ValueError):
        PerimeterKey(((3, 1), (2, 1)))
    assert is_squarefree(30) and not is_squarefree(12)


@settings(max_examples=300)
@given(st.lists(st.integers(1, 2000), min_size=6, max_size=6))
def test_perimeter_key_equality_matches_high_precision(sq):
    k1, k2 = perimeter_key(*sq[:3]), perimeter_key(*sq[3:])
    with mpmath.workprec(128):
        v1 = sum(mpmath.sqrt(v) for v in sq[:3])
        v2 = sum(mpmath.sqrt(v) for v in sq[3:])
        assert (k1 == k2) == (abs(v1 - v2) < mpmath.mpf(2) ** -100)
