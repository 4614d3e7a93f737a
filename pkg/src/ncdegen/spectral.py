"""Mayer-Vietoris spectral sequence of the central fibre.

``E1^{p,q} = H^q`` of the disjoint union of ``(p+1)``-fold intersections:
components (p=0), double curves (p=1), triple points (p=2).  All
components and curves are rational, so only even ``q`` contributes.

Matrices act on column vectors: ``d1(p, q)`` has one row per basis element
of ``E1^{p+1,q}`` and one column per basis element of ``E1^{p,q}``.

Sign rule: for ``I = {i_0 < ... < i_{p+1}}`` in canonical component order,
``(d a)(X_I) = sum_j (-1)^j a(X_{I - i_j})|X_I``.  For a curve ``C = S_a & S_b``
with ``S_a < S_b`` this is ``a(S_b)|C - a(S_a)|C``.  Restriction of a
divisor class to a curve is its intersection number with the curve.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .incidence import (
    BlownPlane, ComponentId, DelPezzo, components_of_curve, components_through_point,
    curves_on_component, curves_through_point, enumerate_components, enumerate_curves,
    enumerate_triple_points, points_on_component,
)
from .linalg import (
    RatMatrix, complement_basis, integer_cokernel, kernel_basis_q, left_kernel_basis_q, rank_q, rref,
)
from .surfaces import picard_lattice, restriction_matrix

P_RANGE = (0, 1, 2)
Q_RANGE = (0, 1, 2, 3, 4)


@dataclass(frozen=True)
class E1Page:
    bases: dict  # (p, q) -> tuple of labels

    def dim(self, p: int, q: int) -> int:
        return len(self.bases.get((p, q), ()))

    def dims(self) -> dict:
        return {pq: len(b) for pq, b in sorted(self.bases.items())}


@lru_cache(maxsize=None)
def build_e1_page() -> E1Page:
    comps = enumerate_components()
    curves = enumerate_curves()
    points = enumerate_triple_points()
    pic = tuple((s, b) for s in comps for b in picard_lattice(s).basis)
    bases = {(p, q): () for p in P_RANGE for q in Q_RANGE}
    bases.update({
        (0, 0): tuple(comps), (1, 0): tuple(curves), (2, 0): tuple(points),
        (0, 2): pic, (1, 2): tuple(curves),
        (0, 4): tuple(comps),
    })
    return E1Page(bases)


def _block_offsets() -> dict:
    off, out = 0, {}
    for s in enumerate_components():
        out[s] = off
        off += picard_lattice(s).rank
    return out


@lru_cache(maxsize=None)
def differential_d1(p: int, q: int) -> RatMatrix:
    if p not in P_RANGE or q not in Q_RANGE:
        raise ValueError(f"d1^({p},{q}) out of range")
    page = build_e1_page()
    src, tgt = page.dim(p, q), page.dim(p + 1, q) if p < 2 else 0
    if not src or not tgt:
        return RatMatrix.zeros(tgt, src)
    rows = [[0] * src for _ in range(tgt)]
    if q == 0 and p == 0:
        cidx = {s: i for i, s in enumerate(page.bases[(0, 0)])}
        for r, c in enumerate(page.bases[(1, 0)]):
            a, b = components_of_curve(c)
            rows[r][cidx[a]] -= 1
            rows[r][cidx[b]] += 1
    elif q == 0 and p == 1:
        kidx = {c: i for i, c in enumerate(page.bases[(1, 0)])}
        for r, t in enumerate(page.bases[(2, 0)]):
            a, b, c = sorted(components_through_point(t))
            by_sides = {frozenset(components_of_curve(k)): k for k in curves_through_point(t)}
            for j, face in enumerate(((b, c), (a, c), (a, b))):
                rows[r][kidx[by_sides[frozenset(face)]]] += (-1) ** j
    elif q == 2 and p == 0:
        off = _block_offsets()
        kidx = {c: i for i, c in enumerate(page.bases[(1, 2)])}
        for s in enumerate_components():
            res = restriction_matrix(s)
            for i, c in enumerate(curves_on_component(s)):
                sign = epsilon(s, c)
                for j in range(res.cols):
                    rows[kidx[c]][off[s] + j] += sign * int(res[i, j])
    else:
        raise AssertionError(f"unexpected nonzero block ({p},{q})")
    return RatMatrix.from_rows(rows, cols=src)


def epsilon(s: ComponentId, c) -> int:
    """+1 when ``s`` is the later side of ``c`` in canonical order, else -1."""
    a, b = components_of_curve(c)
    if s == b:
        return 1
    if s == a:
        return -1
    raise ValueError(f"{c} does not lie on {s}")


@dataclass(frozen=True)
class E2Page:
    dims: dict  # (p, q) -> int
    bases: dict  # (p, q) -> list of representative vectors in E1 coordinates

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    def cohomology_dims(self) -> tuple[int, ...]:
        """h^0..h^4 of the central fibre (degeneration at E2)."""
        return tuple(sum(d for (p, q), d in self.dims.items() if p + q == m) for m in range(5))


def _quotient_basis(kernel: list, image: RatMatrix) -> list:
    """Kernel vectors completing the column span of ``image`` to span(image, kernel)."""
    if not kernel:
        return []
    n = image.rows
    stack = image.hstack(RatMatrix.from_columns(kernel, rows=n)) if image.cols else \
        RatMatrix.from_columns(kernel, rows=n)
    _, piv = rref(stack)
    return [kernel[c - image.cols] for c in piv if c >= image.cols]


@lru_cache(maxsize=None)
def compute_e2_page() -> E2Page:
    page = build_e1_page()
    dims, bases = {}, {}
    for p in P_RANGE:
        for q in Q_RANGE:
            n = page.dim(p, q)
            d_out = differential_d1(p, q)
            d_in = differential_d1(p - 1, q) if p > 0 else RatMatrix.zeros(n, 0)
            kernel = kernel_basis_q(d_out) if d_out.rows else \
                [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
            reps = _quotient_basis(kernel, d_in)
            dims[(p, q)] = len(reps)
            bases[(p, q)] = reps
    return E2Page(dims, bases)


@lru_cache(maxsize=None)
def e2_quotient_map() -> RatMatrix:
    """Rows span the left kernel of d1^{0,2}: a coordinate map E1^{1,2} -> E2^{1,2}."""
    d = differential_d1(0, 2)
    return RatMatrix.from_rows(left_kernel_basis_q(d), cols=d.rows)


# -- relative cohomology of components -------------------------------------------------

@dataclass(frozen=True)
class RelativeH3:
    """H^3(S, C) = coker(H^2(S) -> H^2(C)), which is H_1 of the complement."""

    component: ComponentId | None
    rank: int
    torsion: tuple[int, ...]
    representatives: tuple[int, ...]  # indices of curves on S whose classes span the cokernel


def relative_h3_from_restriction(component, res: RatMatrix) -> RelativeH3:
    if not res.rows:
        return RelativeH3(component, 0, (), ())
    free, tors = integer_cokernel(res)
    reps = tuple(complement_basis(res))
    assert len(reps) == res.rows - rank_q(res)
    return RelativeH3(component, len(reps), tors, reps)


def relative_h3(c: ComponentId) -> RelativeH3:
    return relative_h3_from_restriction(c, restriction_matrix(c))


@dataclass(frozen=True)
class Embedding:
    component: ComponentId
    matrix: RatMatrix  # E2^{1,2} coordinates x H^3(S,C) representatives
    rank: int


def inclusion_matrix(s: ComponentId) -> RatMatrix:
    """E1^{1,2} <- H^2(C_S): curves on S placed with sign epsilon(S, C)."""
    curves = build_e1_page().bases[(1, 2)]
    kidx = {c: i for i, c in enumerate(curves)}
    cs = curves_on_component(s)
    rows = [[0] * len(cs) for _ in curves]
    for j, c in enumerate(cs):
        rows[kidx[c]][j] = epsilon(s, c)
    return RatMatrix.from_rows(rows, cols=len(cs))


def component_block(s: ComponentId) -> RatMatrix:
    """Columns of d1^{0,2} belonging to the Picard basis of ``s``."""
    off = _block_offsets()[s]
    return differential_d1(0, 2).submatrix(cols=range(off, off + picard_lattice(s).rank))


def embed_relative_h3(s: ComponentId) -> Embedding:
    rel = relative_h3(s)
    n = len(curves_on_component(s))
    reps = RatMatrix.from_columns(
        [tuple(Fraction(int(i == r)) for i in range(n)) for r in rel.representatives], rows=n)
    m = e2_quotient_map() @ inclusion_matrix(s) @ reps if rel.rank else RatMatrix.zeros(e2_quotient_map().rows, 0)
    return Embedding(s, m, rank_q(m) if m.cols else 0)


# -- Euler characteristics ----------------------------------------------------------------

@dataclass(frozen=True)
class EulerData:
    chi_central_e1: int
    chi_central_e2: int
    chi_central_strata: int
    chi_smooth: int
    b1: int
    b3: int
    b2: int


def _chi_surface(s: ComponentId) -> int:
    # rational surface: b0 = b4 = 1, b2 = Picard rank
    return 2 + picard_lattice(s).rank


def open_stratum_chi(s: ComponentId) -> int:
    """chi(S - C_S): chi(S) minus chi of a nodal union of P^1's."""
    return _chi_surface(s) - (2 * len(curves_on_component(s)) - len(points_on_component(s)))


def euler_characteristics(b1: int = 10, b3: int = 10) -> EulerData:
    e1 = build_e1_page()
    chi1 = sum((-1) ** (p + q) * len(b) for (p, q), b in e1.bases.items())
    chi2 = sum((-1) ** m * h for m, h in enumerate(compute_e2_page().cohomology_dims()))
    comps = enumerate_components()
    strata = (sum(_chi_surface(s) for s in comps) - 2 * len(enumerate_curves())
              + len(enumerate_triple_points()))
    # circle and torus fibres over curves and triple points contribute nothing
    smooth = sum(open_stratum_chi(s) for s in comps)
    return EulerData(chi1, chi2, strata, smooth, b1, b3, smooth - 2 + b1 + b3)


# -- dumps ----------------------------------------------------------------------------------

def dump_matrices(directory: str) -> list[str]:
    """Write every nonzero d1 block and each component's restriction matrix as CSV."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for p in P_RANGE:
        for q in Q_RANGE:
            m = differential_d1(p, q)
            if m.rows and m.cols:
                path = os.path.join(directory, f"d1_{p}_{q}.csv")
                with open(path, "w") as fh:
                    fh.write(m.to_csv())
                written.append(path)
    for s in enumerate_components():
        tag = f"D{s.m}" if isinstance(s, DelPezzo) else f"B{s.pair[0]}{s.pair[1]}"
        path = os.path.join(directory, f"restriction_{tag}.csv")
        with open(path, "w") as fh:
            fh.write(restriction_matrix(s).to_csv())
        written.append(path)
    return written
