from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ncdegen.incidence import (
    BlownPlane, DelPezzo, DistinguishedLine, ECurve, Plane, RCurve, TriplePoint, apply_s6, component_intersection,
    components_of_curve, curves_on_component, enumerate_components, enumerate_curves,
    enumerate_distinguished_lines, enumerate_triple_points, incidence_scheme, points_on_component,
    points_on_curve, segre_components_through, segre_intersections, triple_intersection,
)

perms6 = st.permutations(range(1, 7))


def test_component_counts_and_order():
    comps = enumerate_components()
    assert len(comps) == 21
    assert comps[0] == DelPezzo(1) and comps[6] == BlownPlane((1, 2))
    assert sum(isinstance(c, BlownPlane) for c in comps) == 15
    assert comps == sorted(comps)


def test_strata_counts():
    curves = enumerate_curves()
    assert len(curves) == 105
    assert sum(isinstance(c, RCurve) for c in curves) == 60
    assert len(enumerate_triple_points()) == 90
    assert len(enumerate_distinguished_lines()) == 45


def test_intersection_examples():
    assert component_intersection(DelPezzo(1), DelPezzo(2)) is None
    assert component_intersection(BlownPlane((1, 2)), BlownPlane((3, 4))) == ECurve((1, 2), (3, 4))
    assert component_intersection(DelPezzo(1), BlownPlane((1, 2))) is None
    assert component_intersection(BlownPlane((2, 3)), DelPezzo(1)) == RCurve(1, (2, 3))
    with pytest.raises(ValueError):
        component_intersection(DelPezzo(3), DelPezzo(3))


def test_brute_force_pairs_in_kneser_language():
    # a component is a 2-subset of {1..7} (D(i) = {i,7}); two meet iff disjoint, except D-D never
    lab = {s: ({s.m, 7} if isinstance(s, DelPezzo) else set(s.pair)) for s in enumerate_components()}
    meets = [(a, b) for a, b in combinations(lab, 2) if not lab[a] & lab[b]]
    assert len(meets) == 105
    assert sorted(component_intersection(a, b) for a, b in meets) == sorted(enumerate_curves())


def test_curves_on_components():
    assert len(curves_on_component(DelPezzo(1))) == 10
    b = curves_on_component(BlownPlane((1, 2)))
    assert sum(isinstance(c, RCurve) for c in b) == 4 and sum(isinstance(c, ECurve) for c in b) == 6
    for c in enumerate_curves():
        assert sum(c in curves_on_component(s) for s in enumerate_components()) == 2
        a, s = components_of_curve(c)
        assert a < s and component_intersection(a, s) == c


def test_points_on_curves():
    assert len(points_on_curve(RCurve(1, (2, 3)))) == 3
    assert points_on_curve(ECurve((1, 2), (3, 4))) == [TriplePoint(5, (1, 2), (3, 4)), TriplePoint(6, (1, 2), (3, 4))]
    counts = [len(points_on_curve(c)) for c in enumerate_curves()]
    assert sum(counts) == 270 == 60 * 3 + 45 * 2


def test_triple_points_on_three_things():
    comps = enumerate_components()
    for t in enumerate_triple_points():
        assert sum(t in points_on_component(s) for s in comps) == 3
        assert sum(t in points_on_curve(c) for c in enumerate_curves()) == 3
    assert triple_intersection(DelPezzo(5), BlownPlane((1, 2)), BlownPlane((3, 4))) == TriplePoint(5, (1, 2), (3, 4))
    assert triple_intersection(DelPezzo(1), DelPezzo(2), BlownPlane((3, 4))) is None


def test_no_four_components_meet():
    on = {s: set(points_on_component(s)) for s in enumerate_components()}
    assert not any(set.intersection(*(on[s] for s in q)) for q in combinations(on, 4))


def test_triangle_count_in_kneser_language():
    # pairwise disjoint triples of 2-subsets of {1..7} containing a {i,7}
    subs = list(combinations(range(1, 8), 2))
    tri = [t for t in combinations(subs, 3)
           if all(not set(a) & set(b) for a, b in combinations(t, 2)) and any(7 in x for x in t)]
    assert len(tri) == 45 * 2 == 90


def test_validation():
    with pytest.raises(ValueError):
        RCurve(1, (1, 2))
    with pytest.raises(ValueError):
        ECurve((1, 2), (2, 3))
    with pytest.raises(ValueError):
        TriplePoint(1, (1, 2), (3, 4))
    with pytest.raises(ValueError):
        DelPezzo(7)
    assert ECurve((3, 4), (2, 1)) == ECurve((1, 2), (3, 4))


def test_segre():
    r = segre_intersections(DelPezzo(5), DelPezzo(6))
    assert r.kind == "points"
    assert [str(x) for x in r.points] == ["L(12|34)", "L(13|24)", "L(14|23)"]
    assert segre_intersections(Plane((1, 2)), Plane((1, 3))).kind == "empty"
    assert segre_intersections(Plane((1, 2)), Plane((3, 4))).points == (DistinguishedLine((1, 2), (3, 4)),)
    assert segre_intersections(DelPezzo(1), Plane((1, 2))).kind == "empty"
    c = segre_intersections(Plane((2, 3)), DelPezzo(1))
    assert c.kind == "curve" and c.curve == RCurve(1, (2, 3)) and len(c.points) == 3
    with pytest.raises(TypeError):
        segre_intersections(BlownPlane((1, 2)), DelPezzo(1))


def test_each_distinguished_point_on_two_d_two_p():
    comps = [DelPezzo(m) for m in range(1, 7)] + [Plane(p) for p in combinations(range(1, 7), 2)]
    for x in enumerate_distinguished_lines():
        on = [s for s in comps
              if any(x in segre_intersections(s, t).points for t in comps if t != s)]
        assert sorted(on) == sorted(segre_components_through(x))
        assert sum(isinstance(s, DelPezzo) for s in on) == 2


def test_apply_s6_examples():
    t = (2, 1, 3, 4, 5, 6)
    assert apply_s6(t, DelPezzo(1)) == DelPezzo(2)
    assert apply_s6(t, BlownPlane((1, 2))) == BlownPlane((1, 2))
    e = (1, 2, 3, 4, 5, 6)
    for x in enumerate_components() + enumerate_curves() + enumerate_triple_points():
        assert apply_s6(e, x) == x
    with pytest.raises(ValueError):
        apply_s6((1, 1, 3, 4, 5, 6), DelPezzo(1))


@settings(max_examples=30, deadline=None)
@given(perms6)
def test_intersections_equivariant(p):
    comps = enumerate_components()
    for a, b in combinations(comps, 2):
        assert apply_s6(p, component_intersection(a, b)) == component_intersection(apply_s6(p, a), apply_s6(p, b))


@settings(max_examples=30, deadline=None)
@given(perms6)
def test_points_on_curve_equivariant(p):
    for c in enumerate_curves():
        assert sorted(apply_s6(p, t) for t in points_on_curve(c)) == points_on_curve(apply_s6(p, c))


def test_scheme_json_shape():
    d = incidence_scheme()
    assert [len(d[k]) for k in ("components", "curves", "triple_points", "distinguished_lines")] == [21, 105, 90, 45]
    assert d["curves"][0] == {"id": "R(1;2,3)", "components": ["D(1)", "B(2,3)"],
                              "points": ["N(1;23|45)", "N(1;23|46)", "N(1;23|56)"]}
    assert d == incidence_scheme()
