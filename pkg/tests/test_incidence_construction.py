import itertools
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitperim.incidence_construction import (
    IncidenceConfig,
    RationalLine,
    RationalPoint,
    build_elekes_config,
    build_grid_family_config,
    count_incidences,
    line_foot,
    normalize_translation,
    translation_ok,
)

V = None  # vertical slope


def test_line_canonical_scaling():
    assert RationalLine(2, 4, 6) == RationalLine(1, 2, 3)
    assert RationalLine(0, -3, 6) == RationalLine(0, 1, -2)
    with pytest.raises(ValueError):
        RationalLine(0, 0, 1)


def test_grid_family_small():
    cfg = build_grid_family_config(2, [0, V])
    assert (len(cfg.points), len(cfg.lines), len(cfg.incidences)) == (4, 4, 8)
    cfg = build_grid_family_config(3, [0])
    assert (len(cfg.points), len(cfg.lines), len(cfg.incidences)) == (9, 3, 9)


def test_grid_family_k5_five_slopes():
    cfg = build_grid_family_config(5, [0, V, 1, -1, 2])
    assert (len(cfg.points), len(cfg.lines)) == (25, 25)
    # rows 25 + columns 25 + diagonals 5+4+4+3+3 twice + slope 2: 3+3+3+2+2
    assert len(cfg.incidences) == 25 + 25 + 19 + 19 + 13
    assert count_incidences(cfg) == len(cfg.incidences)


def test_grid_family_rejects_bad_input():
    with pytest.raises(ValueError):
        build_grid_family_config(1, [0])
    with pytest.raises(ValueError):
        build_grid_family_config(3, [1, F(2, 2)])


@pytest.mark.parametrize("k, shape", [(1, (2, 1, 1)), (2, (16, 8, 16)), (4, (128, 64, 256))])
def test_elekes_examples(k, shape):
    cfg = build_elekes_config(k)
    assert (len(cfg.points), len(cfg.lines), len(cfg.incidences)) == shape


@pytest.mark.parametrize("k", range(1, 7))
def test_elekes_incidences_exact(k):
    cfg = build_elekes_config(k)
    assert count_incidences(cfg) == k ** 4
    assert all(cfg.lines[j].contains(cfg.points[i]) for i, j in cfg.incidences)


def test_count_incidences_examples():
    assert count_incidences(build_elekes_config(3)) == 81
    assert count_incidences(IncidenceConfig()) == 0
    assert count_incidences(build_grid_family_config(5, [0, V])) == 50


def _pairwise_d2(points):
    return sorted((p.x - q.x) ** 2 + (p.y - q.y) ** 2 for p, q in itertools.combinations(points, 2))


def test_normalize_single_line_through_origin():
    cfg = IncidenceConfig.from_points_lines([RationalPoint(0, 0)], [RationalLine(0, 1, 0)])
    out = normalize_translation(cfg)
    assert out.points[0].y > 0 and out.lines[0].C != 0
    assert out.incidences == [(0, 0)]


def test_normalize_reflected_pair():
    lines = [RationalLine(0, 1, 1), RationalLine(0, 1, -1)]
    pts = [RationalPoint(0, 1), RationalPoint(0, -1)]
    cfg = IncidenceConfig.from_points_lines(pts, lines)
    assert not translation_ok(cfg)
    out = normalize_translation(cfg)
    assert translation_ok(out)
    assert out.lines[0].reflected() != out.lines[1]


@pytest.mark.parametrize("k", [2, 3])
def test_normalize_elekes(k):
    cfg = build_elekes_config(k)
    out = normalize_translation(cfg)
    assert translation_ok(out)
    assert min(p.y for p in out.points) > 0
    assert all(l.C != 0 for l in out.lines)
    line_set = set(out.lines)
    assert not any(l.reflected() in line_set for l in out.lines)
    assert count_incidences(out) == count_incidences(cfg)
    assert _pairwise_d2(out.points) == _pairwise_d2(cfg.points)


def test_normalize_is_deterministic():
    cfg = build_grid_family_config(4, [0, V, 1, -1])
    assert normalize_translation(cfg).dumps() == normalize_translation(cfg).dumps()


@pytest.mark.parametrize("line, foot, r2", [
    (RationalLine(1, 0, 1), (1, 0), 1),
    (RationalLine(0, 1, 2), (0, 2), 4),
    (RationalLine(1, 1, 2), (1, 1), 2),
])
def test_line_foot_examples(line, foot, r2):
    got, got_r2 = line_foot(line)
    assert (got.x, got.y) == foot and got_r2 == r2


def test_line_foot_rejects_origin():
    with pytest.raises(ValueError):
        line_foot(RationalLine(1, 1, 0))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@settings(max_examples=200)
@given(rationals, rationals, rationals)
def test_line_foot_on_line_and_perpendicular(A, B, C):
    if (A == 0 and B == 0) or C == 0:
        return
    line = RationalLine(A, B, C)
    foot, r2 = line_foot(line)
    assert line.contains(foot)
    # direction of the line is (-B, A); the foot vector must be orthogonal to it
    assert -line.B * foot.x + line.A * foot.y == 0
    assert foot.x ** 2 + foot.y ** 2 == r2


def test_config_json_round_trip():
    cfg = normalize_translation(build_grid_family_config(3, [0, V, F(1, 2)]))
    text = cfg.dumps()
    back = IncidenceConfig.loads(text)
    assert back.points == cfg.points and back.lines == cfg.lines
    assert back.incidences == cfg.incidences
    obj = json.loads(text)
    assert all("/" in v for pair in obj["points"] for v in pair)
    assert all(len(abc) == 3 for abc in obj["lines"])
