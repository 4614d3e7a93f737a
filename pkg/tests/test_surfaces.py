from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ncdegen import m05
from ncdegen.incidence import (
    BlownPlane, DelPezzo, ECurve, RCurve, apply_s6, components_of_curve, curves_on_component,
    enumerate_components, enumerate_curves, points_on_curve,
)
from ncdegen.surfaces import (
    basis_class, curve_class, intersection_number, picard_lattice, restriction_matrix, self_intersection,
    surfaces_table,
)


def test_ranks_and_signature():
    for s in enumerate_components():
        lat = picard_lattice(s)
        assert lat.rank == (5 if isinstance(s, DelPezzo) else 7)
        assert lat.signature() == (1, lat.rank - 1)
        assert lat.gram[0, 0] == 1 and lat.gram[1, 1] == -1


def test_self_intersections():
    assert self_intersection(DelPezzo(1), RCurve(1, (2, 3))) == -1
    assert self_intersection(BlownPlane((2, 3)), RCurve(1, (2, 3))) == -2
    assert self_intersection(BlownPlane((1, 2)), ECurve((1, 2), (3, 4))) == -1
    assert self_intersection(BlownPlane((3, 4)), ECurve((1, 2), (3, 4))) == -1


def test_triple_point_formula_everywhere():
    for c in enumerate_curves():
        a, b = components_of_curve(c)
        assert self_intersection(a, c) + self_intersection(b, c) + len(points_on_curve(c)) == 0


def test_meeting_curves_meet_once():
    # curves on a component meet iff they share a triple point, transversally
    for s in enumerate_components():
        cs = curves_on_component(s)
        for x, y in combinations(cs, 2):
            shared = set(points_on_curve(x)) & set(points_on_curve(y))
            assert intersection_number(s, curve_class(s, x), curve_class(s, y)) == len(shared) <= 1


def test_del_pezzo_is_petersen():
    for x, y in combinations(m05.LINES, 2):
        assert m05.intersect(m05.delta_class(m05.delta_label(x)), m05.delta_class(m05.delta_label(y))) \
            == int(m05.lines_meet(x, y))
    assert all(m05.line_of_delta(m05.delta_label(x)) == x for x in m05.LINES)


def test_literal_dictionary_is_not_petersen():
    # the assignment S(ij) <-> Delta_{k,l} with {k,l} the complement in 1..4 breaks the adjacency
    def lit(line):
        if len(line) == 3:
            return m05.delta_label(line)
        return tuple(x for x in m05.FOUR if x not in line)
    cls = {x: m05.delta_class(m05.delta_label(x)) for x in m05.LINES}  # geometric classes
    bad = [(x, y) for x, y in combinations(m05.LINES, 2)
           if m05.intersect(cls[x], cls[y]) != int(not set(lit(x)) & set(lit(y)))]
    assert bad


def test_blown_plane_incidence():
    b = BlownPlane((1, 2))
    e = [c for c in curves_on_component(b) if isinstance(c, ECurve)]
    r = [c for c in curves_on_component(b) if isinstance(c, RCurve)]
    for x in r:
        assert sum(intersection_number(b, curve_class(b, x), curve_class(b, y)) for y in e) == 3
    for x, y in combinations(e, 2):
        assert intersection_number(b, curve_class(b, x), curve_class(b, y)) == 0
    for x, y in combinations(r, 2):
        assert intersection_number(b, curve_class(b, x), curve_class(b, y)) == 0


def test_errors():
    with pytest.raises(ValueError):
        curve_class(DelPezzo(1), RCurve(2, (1, 3)))
    with pytest.raises(ValueError):
        intersection_number(DelPezzo(1), basis_class(DelPezzo(1), 0), basis_class(DelPezzo(2), 0))


def test_restriction_shapes_and_example():
    assert restriction_matrix(DelPezzo(1)).rows == 10 and restriction_matrix(DelPezzo(1)).cols == 5
    r = restriction_matrix(BlownPlane((1, 2)))
    assert (r.rows, r.cols) == (10, 7)
    # h restricts with degree 1 to the line classes, 0 to exceptional curves
    cs = curves_on_component(BlownPlane((1, 2)))
    assert [int(r[i, 0]) for i in range(10)] == [1 if isinstance(c, RCurve) else 0 for c in cs]


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(1, 7)))
def test_intersection_form_s6_invariant(p):
    for s in enumerate_components():
        t = apply_s6(p, s)
        for x, y in combinations(curves_on_component(s), 2):
            assert intersection_number(s, curve_class(s, x), curve_class(s, y)) == \
                intersection_number(t, curve_class(t, apply_s6(p, x)), curve_class(t, apply_s6(p, y)))


def test_table_json():
    t = surfaces_table()
    assert len(t) == 21 and t[0]["component"] == "D(1)" and len(t[6]["curves"]) == 10
