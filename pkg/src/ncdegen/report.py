"""Verification suites: each check pairs an expected value with a computed one."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations

from . import combinatorics as cx
from . import incidence as inc
from . import spectral as sp
from . import surfaces as sf
from . import symmetry as sy
from .linalg import rank_q

CITED = "paper-cited"
DERIVED = "derived"


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    expected: object
    computed: object
    provenance: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {"id": self.id, "description": self.description, "expected": self.expected,
                "computed": self.computed, "provenance": self.provenance, "passed": self.passed}


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check]
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        # timing is left out so that repeated runs serialize identically
        return {"suite": self.suite, "passed": self.passed,
                "n_checks": len(self.checks), "n_failed": sum(not c.passed for c in self.checks),
                "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render(self) -> str:
        lines = [f"suite {self.suite}: {len(self.checks)} checks"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.id}: {c.description}")
            if not c.passed:
                lines.append(f"         expected {c.expected!r}, computed {c.computed!r}")
        n_fail = sum(not c.passed for c in self.checks)
        verdict = "PASS" if self.passed else f"FAIL ({n_fail} failed)"
        lines.append(f"overall: {verdict}  [{self.elapsed_seconds:.2f}s]")
        return "\n".join(lines)


def _h(g: cx.HomologyGroup) -> list:
    return [g.rank, list(g.torsion)]


# -- incidence ---------------------------------------------------------------------------

def incidence_checks() -> list[Check]:
    comps = inc.enumerate_components()
    curves = inc.enumerate_curves()
    points = inc.enumerate_triple_points()
    lines = inc.enumerate_distinguished_lines()
    out = [
        Check("incidence.components", "central fibre has 21 components", 21, len(comps), CITED),
        Check("incidence.del_pezzo", "6 del Pezzo components", 6,
              sum(isinstance(s, inc.DelPezzo) for s in comps), CITED),
        Check("incidence.blown_planes", "15 blown-up plane components", 15,
              sum(isinstance(s, inc.BlownPlane) for s in comps), CITED),
        Check("incidence.double_curves", "105 double curves (60 R + 45 E)", [60, 45, 105],
              [sum(isinstance(c, inc.RCurve) for c in curves),
               sum(isinstance(c, inc.ECurve) for c in curves), len(curves)], DERIVED),
        Check("incidence.triple_points", "90 triple points", 90, len(points), DERIVED),
        Check("incidence.distinguished_lines", "45 distinguished lines on the Segre primal", 45,
              len(lines), CITED),
    ]
    pairwise = {}
    for a, b in combinations(comps, 2):
        c = inc.component_intersection(a, b)
        if c is not None:
            pairwise.setdefault(c, []).append((a, b))
    out.append(Check("incidence.pairwise_rule",
                     "pairwise intersections give each double curve exactly once, on its two sides",
                     True,
                     sorted(pairwise) == sorted(curves)
                     and all(v == [inc.components_of_curve(c)] for c, v in pairwise.items()),
                     CITED))
    dd = all(inc.component_intersection(a, b) is None
             for a, b in combinations([s for s in comps if isinstance(s, inc.DelPezzo)], 2))
    db = all((inc.component_intersection(inc.DelPezzo(m), inc.BlownPlane(p)) is None) == (m in p)
             for m in inc.LABELS for p in inc.PAIRS)
    bb = all((inc.component_intersection(inc.BlownPlane(p), inc.BlownPlane(q)) is None) == bool(set(p) & set(q))
             for p, q in combinations(inc.PAIRS, 2))
    out.append(Check("incidence.rule_cases", "D&D empty; D(m)&B(j,k) iff m not in {j,k}; B&B iff disjoint",
                     [True, True, True], [dd, db, bb], CITED))
    triples = [t for t in (inc.triple_intersection(a, b, c) for a, b, c in combinations(comps, 3)) if t]
    out.append(Check("incidence.triple_rule", "triple intersections are exactly the points N(m;ij|kl)",
                     True, sorted(triples) == points, CITED))
    on_pt = {s: set(inc.points_on_component(s)) for s in comps}
    quads = sum(1 for q in combinations(comps, 4) if set.intersection(*(on_pt[s] for s in q)))
    out.append(Check("incidence.no_quadruple_points", "no four components share a point", 0, quads, CITED))
    out.append(Check("incidence.double_counting", "sum of points over curves = 3*90 = 60*3 + 45*2",
                     [270, 270], [sum(len(inc.points_on_curve(c)) for c in curves), 3 * len(points)], DERIVED))
    sides = {c: sum(c in inc.curves_on_component(s) for s in comps) for c in curves}
    out.append(Check("incidence.curve_sides", "every double curve lies on exactly two components",
                     True, set(sides.values()) == {2}, DERIVED))
    out.append(Check("incidence.curves_per_component", "10 double curves on every component",
                     [10], sorted({len(inc.curves_on_component(s)) for s in comps}), DERIVED))
    # before resolution
    segre = inc.segre_intersections(inc.DelPezzo(5), inc.DelPezzo(6))
    out.append(Check("incidence.segre_dd", "D(5) & D(6) = {L(12|34), L(13|24), L(14|23)}",
                     ["L(12|34)", "L(13|24)", "L(14|23)"], [str(x) for x in segre.points], CITED))
    through = {}
    segre_comps = [inc.DelPezzo(m) for m in inc.LABELS] + inc.enumerate_planes()
    for a, b in combinations(segre_comps, 2):
        r = inc.segre_intersections(a, b)
        for x in r.points:
            through.setdefault(x, set()).update((a, b))
    pts_ok = sorted(through) == lines and all(
        sorted(through[x]) == sorted(inc.segre_components_through(x)) for x in lines)
    out.append(Check("incidence.segre_points", "each distinguished point lies on exactly 2 D's and 2 P's",
                     True, pts_ok, CITED))
    pp = all((inc.segre_intersections(inc.Plane(p), inc.Plane(q)).kind == "empty") == bool(set(p) & set(q))
             for p, q in combinations(inc.PAIRS, 2))
    out.append(Check("incidence.segre_pp", "P(j,k) & P(l,m) empty iff the pairs share a label", True, pp, CITED))
    gens = sy.symmetric_group(6).generators()
    equi = all(inc.apply_s6(g, inc.component_intersection(a, b))
               == inc.component_intersection(inc.apply_s6(g, a), inc.apply_s6(g, b))
               for g in gens for a, b in combinations(comps, 2))
    out.append(Check("incidence.s6_equivariance", "intersections commute with relabeling by S6 generators",
                     True, equi, DERIVED))
    return out


# -- dual complex ---------------------------------------------------------------------------

def complex_checks() -> list[Check]:
    lam = cx.build_dual_complex()
    petersen = cx.kneser_graph(5, 2)
    kg62 = cx.kneser_graph(6, 2)
    verts = lam.vertices
    one_d = all(sum(isinstance(verts[i], inc.DelPezzo) for i in t) == 1 for t in lam.triangles)
    pres = cx.pi1_presentation(lam)
    tz = cx.tietze_simplify(pres)
    b_only = cx.SimplicialComplex2.from_labels(
        [v for v in verts if isinstance(v, inc.BlownPlane)],
        [(verts[a], verts[b]) for a, b in lam.edges
         if isinstance(verts[a], inc.BlownPlane) and isinstance(verts[b], inc.BlownPlane)])
    return [
        Check("complex.petersen", "KG(5,2): 10 vertices, 15 edges, 3-regular", [10, 15, True],
              [len(petersen.vertices), len(petersen.edges), petersen.is_regular(3)], CITED),
        Check("complex.b_graph", "graph of the B components is KG(6,2)", True,
              b_only.one_skeleton().isomorphic_via(kg62, lambda s: s.pair), CITED),
        Check("complex.f_vector", "Lambda has 21 vertices, 105 edges, 90 triangles", [21, 105, 90],
              list(lam.f_vector()), DERIVED),
        Check("complex.kneser_iso", "1-skeleton of Lambda is KG(7,2) under D(i)->{i,7}, B(j,k)->{j,k}",
              True, lam.one_skeleton().isomorphic_via(cx.kneser_graph(7, 2), cx.kneser_label), CITED),
        Check("complex.one_d_per_triangle", "every triangle has exactly one D vertex", True, one_d, CITED),
        Check("complex.betti", "Betti numbers of Lambda over Q", [1, 5, 10], list(cx.betti_numbers_q(lam)), CITED),
        Check("complex.h1_integral", "H1(Lambda; Z) = Z^5, torsion-free", [5, []],
              _h(cx.integral_homology(lam, 1)), CITED),
        Check("complex.h2_integral", "H2(Lambda; Z) = Z^10", [10, []], _h(cx.integral_homology(lam, 2)), CITED),
        Check("complex.euler", "chi(Lambda) = 21 - 105 + 90 = 1 - 5 + 10", [6, 6],
              [lam.euler_characteristic(), sum((-1) ** k * b for k, b in enumerate(cx.betti_numbers_q(lam)))],
              DERIVED),
        Check("complex.pi1_counts", "spanning-tree presentation: 85 generators, 90 relators", [85, 90],
              [len(pres.generators), len(pres.relators)], DERIVED),
        Check("complex.pi1_abelianization", "abelianized pi1(Lambda) = Z^5", [5, []],
              _h(cx.abelianization(pres)), CITED),
        Check("complex.pi1_tietze", "pi1(Lambda) is free abelian of rank 5 (Tietze + commutation closure)",
              ["success", 5], [tz.status, tz.free_abelian_rank], CITED),
    ]


# -- spectral sequence ----------------------------------------------------------------------------

def spectral_checks() -> list[Check]:
    e1 = sp.build_e1_page()
    e2 = sp.compute_e2_page()
    d = {(p, q): sp.differential_d1(p, q) for p in sp.P_RANGE for q in sp.Q_RANGE}
    lam = cx.build_dual_complex()
    e1_expected = {"0,0": 21, "1,0": 105, "2,0": 90, "0,2": 135, "1,2": 105, "2,2": 0, "0,4": 21, "1,4": 0}
    odd = sum(e1.dim(p, q) for p in sp.P_RANGE for q in (1, 3))
    out = [
        Check("spectral.e1_dims", "E1 dimensions", e1_expected,
              {k: e1.dim(*map(int, k.split(","))) for k in e1_expected}, DERIVED),
        Check("spectral.e1_odd_rows", "odd rows of E1 vanish (rational components)", 0, odd, CITED),
        Check("spectral.d1_squared", "d1 o d1 = 0 on the weight-0 row", True, (d[1, 0] @ d[0, 0]).is_zero(),
              DERIVED),
        Check("spectral.rank_d1_02", "rank of d1^{0,2} (105 x 135)", 100, rank_q(d[0, 2]), DERIVED),
        Check("spectral.weight0_row", "E2^{p,0} equals the Betti numbers of Lambda (separate code path)",
              list(cx.betti_numbers_q(lam)), [e2.dim(p, 0) for p in range(3)], DERIVED),
        Check("spectral.weight0_values", "E2^{p,0} = (1, 5, 10)", [1, 5, 10], [e2.dim(p, 0) for p in range(3)],
              CITED),
        Check("spectral.dim_e2_12", "dim E2^{1,2} = dim H^3(F0) = 5", 5, e2.dim(1, 2), CITED),
        Check("spectral.h_central", "h^0..h^4 of the central fibre", [1, 5, 45, 5, 21],
              list(e2.cohomology_dims()), DERIVED),
    ]
    square = all(sp.component_block(s) == sp.inclusion_matrix(s) @ sf.restriction_matrix(s)
                 for s in inc.enumerate_components())
    out.append(Check("spectral.commuting_square", "d1^{0,2} on each component = signed inclusion o restriction",
                     True, square, DERIVED))
    embeds = [sp.embed_relative_h3(s) for s in inc.enumerate_components()]
    for e in embeds:
        want = 5 if isinstance(e.component, inc.DelPezzo) else 3
        what = "isomorphism onto" if want == 5 else "inclusion into"
        out.append(Check(f"spectral.embed_rank.{e.component}",
                         f"H^3({e.component}, C) -> E2^{{1,2}} is an {what} (rank {want})",
                         want, e.rank, CITED))
    stacked = embeds[0].matrix
    for e in embeds[1:]:
        stacked = stacked.hstack(e.matrix)
    out.append(Check("spectral.images_generate", "all 21 images together span E2^{1,2}", 5, rank_q(stacked),
                     DERIVED))
    return out


# -- representations ----------------------------------------------------------------------------

def reps_checks() -> list[Check]:
    out = []
    for n in (4, 5, 6):
        try:
            sy.check_orthogonality(sy.symmetric_group(n))
            ok = True
        except AssertionError:
            ok = False
        out.append(Check(f"reps.table_s{n}", f"character table of S{n} is orthonormal", True, ok, DERIVED))
    g5 = sy.symmetric_group(5)
    pair = sy.permutation_character(g5, sy.delta_action(g5))
    taut = sy.permutation_character(g5, sy.GroupAction(g5, tuple(range(1, 6)), lambda p, x: p[x - 1]))
    dec = sy.decompose_character(g5, pair)
    kernel = sy.boundary_kernel_character(6)
    kernels_all = {str(inc.DelPezzo(m)): list(sy.boundary_kernel_character(m).as_ints()) for m in inc.LABELS}
    w = [5, 1, 1, -1, 1, -1, 0]
    out += [
        Check("reps.pair_character", "S5 on the ten Delta_{i,j}", [10, 4, 2, 1, 1, 0, 0],
              list(pair.as_ints()), DERIVED),
        Check("reps.pair_decomposition", "B = trivial + standard + chi_(3,2)",
              {"5": 1, "4,1": 1, "3,2": 1},
              {",".join(map(str, p)): m for p, m in dec.items() if m}, CITED),
        Check("reps.pair_norm", "<B, B> = 3", 3, int(sy.inner_product(pair, pair)), DERIVED),
        Check("reps.sym2", "Sym^2 T = T + B (so B = Sym^2 V)", list((taut + pair).as_ints()),
              list(sy.symmetric_square(taut).as_ints()), CITED),
        Check("reps.kernel_character", "S5 on ker(B -> Pic dP5) = H^1(M_{0,5})", w,
              list(kernel.as_ints()), CITED),
        Check("reps.kernel_irreducible", "the kernel character has norm 1", 1,
              int(sy.inner_product(kernel, kernel)), CITED),
        Check("reps.kernel_all_del_pezzo", "same kernel character on every D(m)",
              {k: w for k in kernels_all}, kernels_all, DERIVED),
        Check("reps.s4_line_sum", "S4 on ker(Q^4 -> Q) is the standard representation", [3, 1, -1, 0, -1],
              list(sy.line_sum_character().as_ints()), CITED),
        Check("reps.s4_blown_plane", "S4 on H^3(B(1,2), C) is the standard representation", [3, 1, -1, 0, -1],
              list(sy.blown_plane_relative_character((1, 2)).as_ints()), CITED),
        Check("reps.s6_preserves_lambda", "S6 generators map simplices of Lambda to simplices", True,
              sy.s6_preserves_dual_complex(), DERIVED),
    ]
    return out


# -- Euler characteristics -------------------------------------------------------------------------

def euler_checks() -> list[Check]:
    e = sp.euler_characteristics()
    per = sorted({(type(s).__name__, sp.open_stratum_chi(s)) for s in inc.enumerate_components()})
    return [
        Check("euler.central_e1", "chi(F0) from the E1 page", 57, e.chi_central_e1, DERIVED),
        Check("euler.central_e2", "chi(F0) from the E2 page", 57, e.chi_central_e2, DERIVED),
        Check("euler.central_strata", "chi(F0) by inclusion-exclusion over strata", 57, e.chi_central_strata,
              DERIVED),
        Check("euler.open_strata", "chi of open components: D -> 2, B -> 1",
              [["BlownPlane", 1], ["DelPezzo", 2]], [list(x) for x in per], DERIVED),
        Check("euler.smooth", "chi(F_t) from the open strata", 27, e.chi_smooth, DERIVED),
        Check("euler.b2", "b2(F) = 27 - 2 + b1 + b3 with b1 = b3 = 10", 45, e.b2, DERIVED),
    ]


# -- arrangements and presentations -------------------------------------------------------------------

def arrangements_checks() -> list[Check]:
    out = []
    for s in inc.enumerate_components():
        r = sp.relative_h3(s)
        want = [5, []] if isinstance(s, inc.DelPezzo) else [3, []]
        out.append(Check(f"arrangements.relative_h3.{s}", f"H_1 of {s} minus its double curves over Z",
                         want, [r.rank, list(r.torsion)], CITED))
    bad = []
    for c in inc.enumerate_curves():
        a, b = inc.components_of_curve(c)
        total = sf.self_intersection(a, c) + sf.self_intersection(b, c) + len(inc.points_on_curve(c))
        if total != 0:
            bad.append(str(c))
    out.append(Check("arrangements.triple_point_formula",
                     "normal degrees plus triple points vanish on all 105 double curves", [], bad, DERIVED))
    pet = cx.kneser_graph(5, 2)
    dp_ok = []
    for m in inc.LABELS:
        s = inc.DelPezzo(m)
        cs = inc.curves_on_component(s)
        g = cx.Graph.from_pairs(cs, [(a, b) for a, b in combinations(cs, 2)
                                     if sf.intersection_number(s, sf.curve_class(s, a), sf.curve_class(s, b)) == 1])
        f = {x: i + 1 for i, x in enumerate(y for y in inc.LABELS if y != m)}
        dp_ok.append(g.isomorphic_via(pet, lambda c: tuple(sorted(f[i] for i in c.pair))))
    out.append(Check("arrangements.del_pezzo_petersen", "curve classes on each D(m) meet along the Petersen graph",
                     [True] * 6, dp_ok, CITED))
    bp_ok = True
    for s in inc.enumerate_components():
        if not isinstance(s, inc.BlownPlane):
            continue
        cs = inc.curves_on_component(s)
        for a, b in combinations(cs, 2):
            n = sf.intersection_number(s, sf.curve_class(s, a), sf.curve_class(s, b))
            meet = int(bool(set(inc.points_on_curve(a)) & set(inc.points_on_curve(b))))
            bp_ok &= n == meet
    out.append(Check("arrangements.blown_plane_incidence",
                     "on each B(i,j), curve classes meet exactly where triple points are shared", True, bp_ok,
                     DERIVED))
    m05p = cx.m05_presentation()
    t3 = cx.t3_skeleton_homology()
    out += [
        Check("arrangements.m05_generators", "Picard presentation has six generators sigma_ij", 6,
              len(m05p.generators), CITED),
        Check("arrangements.m05_abelianization", "H_1(M_{0,5}; Z) = Z^5", [5, []], _h(cx.abelianization(m05p)),
              CITED),
        Check("arrangements.t3_skeleton", "2-skeleton of T^3: H_0..H_3 = Z, Z^3, Z^3, 0",
              [[1, []], [3, []], [3, []], [0, []]], [_h(h) for h in t3], CITED),
    ]
    return out


SUITES = {
    "incidence": incidence_checks,
    "complex": complex_checks,
    "spectral": spectral_checks,
    "reps": reps_checks,
    "euler": euler_checks,
    "arrangements": arrangements_checks,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str) -> VerificationReport:
    if name not in SUITE_NAMES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    t0 = time.perf_counter()
    if name == "all":
        checks, seen = [], set()
        for fn in SUITES.values():
            for c in fn():
                if c.id not in seen:
                    seen.add(c.id)
                    checks.append(c)
    else:
        checks = SUITES[name]()
    return VerificationReport(name, checks, time.perf_counter() - t0)
