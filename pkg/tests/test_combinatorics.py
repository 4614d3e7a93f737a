import json
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from ncdegen.combinatorics import (
    GroupPresentation, HomologyGroup, SimplicialComplex2, abelianization, betti_numbers_q, commutator,
    integral_homology, kneser_graph, kneser_label, m05_presentation, pi1_presentation, t3_skeleton_homology,
    tietze_simplify,
)
from ncdegen.incidence import DelPezzo

from oracles import int_rows, sympy_rank

TRIANGLE = SimplicialComplex2.from_labels("abc", ["ab", "bc", "ac"], ["abc"])
CIRCLE = SimplicialComplex2.from_labels("abc", ["ab", "bc", "ac"])


@pytest.mark.parametrize("m,n,v,e,k", [(5, 2, 10, 15, 3), (4, 2, 6, 3, 1), (6, 2, 15, 45, 6), (7, 2, 21, 105, 10)])
def test_kneser_counts(m, n, v, e, k):
    g = kneser_graph(m, n)
    assert len(g.vertices) == v and len(g.edges) == e and g.is_regular(k)


def test_kneser_42_brute_force():
    vs = list(combinations(range(1, 5), 2))
    pairs = {frozenset((a, b)) for a in vs for b in vs if a != b and not set(a) & set(b)}
    assert kneser_graph(4, 2).edges == pairs


def test_kneser_rejects():
    with pytest.raises(ValueError):
        kneser_graph(3, 2)


@pytest.mark.parametrize("m,n", [(5, 2), (6, 2), (6, 3)])
def test_kneser_vertex_transitive(m, n):
    g = kneser_graph(m, n)
    for p in list(permutations(range(1, m + 1)))[::37]:
        f = lambda v: tuple(sorted(p[i - 1] for i in v))
        assert g.isomorphic_via(g, f)


def test_betti_small():
    assert betti_numbers_q(TRIANGLE) == (1, 0, 0)
    assert betti_numbers_q(CIRCLE) == (1, 1, 0)
    pet = kneser_graph(5, 2)
    c = SimplicialComplex2.from_labels(pet.vertices, [tuple(e) for e in pet.edges])
    assert betti_numbers_q(c) == (1, 15 - 10 + 1, 0)


def test_complex_validation():
    with pytest.raises(ValueError):
        SimplicialComplex2.from_labels("abc", ["ab", "bc"], ["abc"])
    with pytest.raises(ValueError):
        SimplicialComplex2.from_labels("ab", ["ab", "ba"])


def test_dual_complex(dual_complex):
    lam = dual_complex
    assert lam.f_vector() == (21, 105, 90)
    assert lam.one_skeleton().isomorphic_via(kneser_graph(7, 2), kneser_label)
    assert all(sum(isinstance(lam.vertices[i], DelPezzo) for i in t) == 1 for t in lam.triangles)
    assert betti_numbers_q(lam) == (1, 5, 10)
    assert lam.euler_characteristic() == 6 == 1 - 5 + 10


def test_dual_complex_betti_sympy(dual_complex):
    r1 = sympy_rank(int_rows(dual_complex.boundary(1)))
    r2 = sympy_rank(int_rows(dual_complex.boundary(2)))
    assert (21 - r1, 105 - r1 - r2, 90 - r2) == (1, 5, 10)


def test_boundary_squares_to_zero(dual_complex):
    assert (dual_complex.boundary(1) @ dual_complex.boundary(2)).is_zero()


def test_integral_homology(dual_complex):
    assert integral_homology(dual_complex, 1) == HomologyGroup(5)
    assert integral_homology(dual_complex, 2) == HomologyGroup(10)
    assert integral_homology(dual_complex, 0) == HomologyGroup(1)
    assert integral_homology(CIRCLE, 1) == HomologyGroup(1)


def test_rp2_torsion():
    # 6-vertex triangulation of the projective plane
    tris = ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]
    edges = sorted({"".join(sorted(e)) for t in tris for e in combinations(t, 2)})
    rp2 = SimplicialComplex2.from_labels("123456", edges, tris)
    assert integral_homology(rp2, 1) == HomologyGroup(0, (2,))
    assert integral_homology(rp2, 2) == HomologyGroup(0)
    assert abelianization(pi1_presentation(rp2)) == HomologyGroup(0, (2,))


def test_pi1_presentations(dual_complex):
    p = pi1_presentation(dual_complex)
    assert len(p.generators) == 85 and len(p.relators) == 90
    assert abelianization(p) == HomologyGroup(5)
    assert abelianization(pi1_presentation(TRIANGLE)) == HomologyGroup(0)
    c = pi1_presentation(CIRCLE)
    assert len(c.generators) == 1 and c.relators == ()
    with pytest.raises(ValueError):
        pi1_presentation(SimplicialComplex2.from_labels("ab", []))


def test_abelianization_free():
    assert abelianization(GroupPresentation(("x", "y", "z"), ())) == HomologyGroup(3)


def test_m05():
    p = m05_presentation()
    assert p.generators == ("sigma12", "sigma13", "sigma14", "sigma23", "sigma24", "sigma34")
    assert abelianization(p) == HomologyGroup(5)
    s12, s13, s23 = 1, 2, 4
    # loop around the exceptional line over S(123) commutes with S(12), among others
    assert commutator((s12,), (s12, s13, s23)) in p.relators
    assert commutator((6,), (s12, s13, s23)) not in p.relators
    assert p.relators[0] == (1, 2, 4, 3, 5, 6)
    # 15 meeting pairs among the ten lines (Petersen edges) plus the product relation
    assert len(p.relators) == 16


def test_t3_skeleton():
    assert t3_skeleton_homology() == [HomologyGroup(1), HomologyGroup(3), HomologyGroup(3), HomologyGroup(0)]


def test_tietze_lambda(dual_complex):
    r = tietze_simplify(pi1_presentation(dual_complex))
    assert r.status == "success" and r.free_abelian_rank == 5


def test_tietze_small():
    z2 = GroupPresentation(("a", "b"), (commutator((1,), (2,)),))
    assert tietze_simplify(z2).status == "success"
    assert tietze_simplify(GroupPresentation(("a", "b"), ())).status == "inconclusive"
    # pi1(M_{0,5}) is not abelian; the pass must not claim otherwise
    assert tietze_simplify(m05_presentation()).status == "inconclusive"


def test_json_round_trip(dual_complex):
    d = dual_complex.to_json()
    assert json.loads(json.dumps(d)) == d
    back = SimplicialComplex2.from_json(d)
    assert back.f_vector() == dual_complex.f_vector()
    assert betti_numbers_q(back) == (1, 5, 10)
    p = m05_presentation()
    assert GroupPresentation.from_json(json.loads(json.dumps(p.to_json()))) == p


@st.composite
def connected_complexes(draw):
    n = draw(st.integers(2, 7))
    verts = list(range(n))
    tris = draw(st.lists(st.sampled_from(list(combinations(verts, 3)) or [(0, 1, 2)]), max_size=8, unique=True)) \
        if n >= 3 else []
    extra = draw(st.lists(st.sampled_from(list(combinations(verts, 2))), max_size=8, unique=True))
    shuffled = draw(st.permutations(verts))
    path = [tuple(sorted(shuffled[i:i + 2])) for i in range(n - 1)]
    edges = set(path) | set(extra) | {e for t in tris for e in combinations(t, 2)}
    return SimplicialComplex2(tuple(verts), tuple(sorted(edges)), tuple(tris))


@settings(max_examples=80, deadline=None)
@given(connected_complexes())
def test_abelianized_pi1_is_h1(c):
    assert abelianization(pi1_presentation(c)) == integral_homology(c, 1)


@settings(max_examples=80, deadline=None)
@given(connected_complexes())
def test_euler_matches_betti(c):
    b = betti_numbers_q(c)
    assert c.euler_characteristic() == b[0] - b[1] + b[2]
    assert b[0] == 1
    assert (c.boundary(1) @ c.boundary(2)).is_zero() if c.triangles else True
