import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from dp1.errors import BadArity, HypothesisViolated, NotUnique, ParseError
from dp1.exactnum import field_make
from dp1.picard import exceptional_classes, partner
from dp1.plane import (
    BlownUpPoint,
    Configuration,
    PlaneCurve,
    PlanePoint,
    all_points,
    concurrency_count,
    curve_from_determinant,
    det_L,
    exceptional_curve,
    general_position,
    interpolate,
    line_through,
    matrix_L,
    monomials,
    parse_point,
    points_of_line,
    second_intersection_conic_line,
    singular_cubic_exists,
    solution_dimension,
    unique_singular_cubic,
)

GP_FIELDS = ["q:101", "gf:7:x^2+6x+3", "gf:2:x^5+x^2+1", "QQ"]


def random_point(F, rng):
    while True:
        c = tuple(F.random(rng) for _ in range(3))
        if any(not F.is_zero(x) for x in c):
            return PlanePoint(F, c)


def random_gp_config(F, rng, tries=500):
    for _ in range(tries):
        cfg = Configuration(F, tuple(random_point(F, rng) for _ in range(8)))
        if general_position(cfg).ok:
            return cfg
    raise AssertionError("no general-position sample")


configs = st.tuples(st.sampled_from(GP_FIELDS), st.integers(0, 2**32)).map(
    lambda t: random_gp_config(field_make(t[0]), random.Random(t[1]))
)


def test_monomial_counts():
    assert [len(monomials(d)) for d in range(6)] == [1, 3, 6, 10, 15, 21]
    assert monomials(2)[0] == (2, 0, 0) and monomials(2)[-1] == (0, 0, 2)


def test_point_normalisation_and_parse():
    F = field_make("q:7")
    assert PlanePoint(F, (2, 4, 6)) == PlanePoint(F, (1, 2, 3))
    assert parse_point(F, "(2:4:6)") == parse_point(F, ["1", "2", "3"])
    with pytest.raises(ValueError):
        PlanePoint(F, (0, 0, 0))
    with pytest.raises(BadArity):
        PlanePoint(F, (1, 2))
    with pytest.raises(ParseError):
        parse_point(F, "1:2")


def test_curve_parse_and_json_roundtrip():
    F = field_make("gf:3:x^3+2x+1")
    c = PlaneCurve.parse(F, "x^2 + a^7*x*y + y^2 + 2*z^2")
    assert PlaneCurve.from_json(F, c.to_json()) == c
    assert c.same_curve(PlaneCurve(F, 2, tuple(F.mul(F.parse("a^5"), x) for x in c.coeffs)))


@given(st.sampled_from(GP_FIELDS), st.integers(0, 2**32), st.integers(1, 4))
@settings(max_examples=40)
def test_interpolated_curve_has_requested_multiplicities(desc, seed, d):
    F = field_make(desc)
    rng = random.Random(seed)
    mults = [rng.randint(1, 2) for _ in range(rng.randint(1, 4))]
    pts = [random_point(F, rng) for _ in mults]
    assume(len(set(pts)) == len(pts))
    cons = list(zip(pts, mults))
    try:
        curve = interpolate(F, d, cons)
    except NotUnique:
        assert solution_dimension(F, d, cons) > 1
        return
    except Exception:
        return
    for p, m in cons:
        assert curve.multiplicity_at(p) >= m


def test_multiplicity_in_char_two():
    F = field_make("gf:2:x^5+x^2+1")
    # x^2 + y^2 = (x + y)^2 is double along its line in char 2
    c = PlaneCurve.parse(F, "x^2 + y^2")
    assert c.multiplicity_at(PlanePoint(F, (1, 1, 0))) == 2
    assert c.multiplicity_at(PlanePoint(F, (0, 0, 1))) == 2


@given(configs)
@settings(max_examples=15)
def test_dual_routes_for_singular_cubics_agree(cfg):
    F = cfg.field
    for i, p in enumerate(cfg.points):
        by_rank = singular_cubic_exists(F, cfg.points, i, method="rank")[0]
        if not F.is_zero(p.coords[1]):
            assert singular_cubic_exists(F, cfg.points, i, method="L")[0] == by_rank


def test_singular_cubic_routes_on_degenerate_configuration():
    # a nodal cubic through 8 of its points, singular at the first
    F = field_make("q:101")
    cubic = PlaneCurve.parse(F, "y^2*z - x^3 - x^2*z")  # node at (0:0:1)
    pts = [p for p in all_points(F) if cubic.contains(p)]
    node = PlanePoint(F, (0, 0, 1))
    others = [p for p in pts if p != node][:7]
    tilted = [PlanePoint(F, (p.coords[0], p.coords[2], p.coords[1])) for p in [node] + others]
    assert singular_cubic_exists(F, tilted, 0, method="rank")[0]
    assert singular_cubic_exists(F, tilted, 0, method="L")[0]


def test_L_route_refuses_y_zero():
    F = field_make("q:101")
    pts = [PlanePoint(F, (1, 0, k)) for k in range(8)]
    with pytest.raises(HypothesisViolated):
        singular_cubic_exists(F, pts, 0, method="L")


@given(configs)
@settings(max_examples=12)
def test_every_exceptional_class_has_a_unique_curve(cfg):
    for c in exceptional_classes():
        curve = exceptional_curve(cfg, c)
        if c.a == 0:
            assert isinstance(curve, BlownUpPoint)
            continue
        assert curve.degree == c.a
        for p, m in zip(cfg.points, c.b):
            assert curve.multiplicity_at(p, max_m=m + 1) == m


@given(configs)
@settings(max_examples=10)
def test_laplace_expansion_equals_interpolated_cubic(cfg):
    F = cfg.field
    pts = list(cfg.points)
    p8 = pts[7]
    assume(not F.is_zero(p8.coords[1]))
    # rows of L without the first point give the cubic through pts[1:7], singular at p8
    rows = matrix_L(F, [PlanePoint(F, (1, 0, 0))] + pts[1:])
    lap = curve_from_determinant(F, 3, rows)
    direct = interpolate(F, 3, [(p, 1) for p in pts[1:7]] + [(p8, 2)])
    assert lap.same_curve(direct)
    assert F.is_zero(det_L(F, pts)) == direct.contains(pts[0])


@given(configs, st.integers(0, 2**32))
@settings(max_examples=10)
def test_concurrency_count_bounded(cfg, seed):
    F = cfg.field
    P = random_point(F, random.Random(seed))
    assume(P not in cfg.points)
    rep = concurrency_count(cfg, P)
    assert rep.count <= 16
    # ramified exactly when the set contains a partner pair
    got = set(rep.classes)
    assert rep.on_ramification == any(partner(c) in got for c in got)


def test_lines_and_second_intersections():
    F = field_make("q:13")
    p, q = PlanePoint(F, (0, 0, 1)), PlanePoint(F, (1, 2, 3))
    L = line_through(p, q)
    pts = points_of_line(L)
    assert len(pts) == 14 and len(set(pts)) == 14 and all(L.contains(x) for x in pts)
    conic = PlaneCurve.parse(F, "x*y - z^2 + x*z")
    on = [x for x in all_points(F) if conic.contains(x)]
    a, b = on[0], on[1]
    r = second_intersection_conic_line(conic, a, PlanePoint(F, tuple(F.add(x, y) for x, y in zip(a.coords, b.coords))))
    assert conic.contains(r)


def test_unique_singular_cubic_hypotheses():
    F = field_make("q:101")
    rng = random.Random(3)
    cfg = random_gp_config(F, rng)
    c = unique_singular_cubic(list(cfg.points[:7]))
    assert c.multiplicity_at(cfg.points[0]) == 2
    with pytest.raises(BadArity):
        unique_singular_cubic(list(cfg.points[:6]))


def test_configuration_json_roundtrip():
    cfg = random_gp_config(field_make("gf:7:x^2+6x+3"), random.Random(5))
    assert Configuration.from_json(cfg.to_json()) == cfg


def test_general_position_violations():
    F = field_make("q:101")
    pts = [PlanePoint(F, (1, k, k)) for k in range(3)] + [PlanePoint(F, (k, 1, k * k + 3)) for k in range(5)]
    rep = general_position(Configuration(F, tuple(pts)))
    assert not rep.ok and rep.violation.kind == "collinear"
    on_conic = [PlanePoint(F, (1, k, k * k)) for k in range(1, 7)]  # y^2 = x z
    rng = random.Random(0)
    while True:
        extra = [random_point(F, rng), random_point(F, rng)]
        rep = general_position(Configuration(F, tuple(on_conic + extra)))
        if rep.violation.kind != "collinear" and rep.violation.kind != "repeated":
            break
    assert rep.violation.kind == "conic" and rep.violation.indices == (0, 1, 2, 3, 4, 5)
