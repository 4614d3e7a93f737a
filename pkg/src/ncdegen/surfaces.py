"""Picard lattices of the central-fibre components and the classes of their double curves.

``D(m)`` is identified with the quintic del Pezzo surface by relabeling
``{1..6} - {m}`` onto ``{1..5}`` in increasing order; ``R(m;j,k)`` is then a
boundary divisor and its class comes from the dictionary in :mod:`ncdegen.m05`.

``B(i,j)`` is the plane blown up at the six points ``L(ij|kl)``, one per pair
``{k,l}`` in the four remaining labels; ``E(ij|kl)`` is the exceptional
curve over ``L(ij|kl)`` and ``R(m;i,j)`` is the proper transform of the line
through the three points with ``m`` not in ``{k,l}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import m05
from .incidence import (
    BlownPlane, ComponentId, CurveId, DelPezzo, ECurve, LABELS, RCurve, curves_on_component,
)
from .linalg import RatMatrix


@dataclass(frozen=True)
class PicardLattice:
    component: ComponentId
    basis: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def gram(self) -> RatMatrix:
        n = self.rank
        return RatMatrix.from_rows([[(1 if i == 0 else -1) if i == j else 0 for j in range(n)]
                                    for i in range(n)], cols=n)

    def signature(self) -> tuple[int, int]:
        return (1, self.rank - 1)


@dataclass(frozen=True)
class DivisorClass:
    component: ComponentId
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != picard_lattice(self.component).rank:
            raise ValueError(f"class of length {len(self.coefficients)} on {self.component}")


def _del_pezzo_relabel(m: int) -> dict[int, int]:
    return {x: i + 1 for i, x in enumerate(x for x in LABELS if x != m)}


def _blown_points(s: BlownPlane) -> list[tuple[int, int]]:
    rest = [x for x in LABELS if x not in s.pair]
    return list(combinations(rest, 2))


def picard_lattice(c: ComponentId) -> PicardLattice:
    if isinstance(c, DelPezzo):
        return PicardLattice(c, m05.BASIS)
    if isinstance(c, BlownPlane):
        return PicardLattice(c, ("h",) + tuple(f"e{k}{l}" for k, l in _blown_points(c)))
    raise TypeError(f"not a component: {c!r}")


def basis_class(c: ComponentId, i: int) -> DivisorClass:
    n = picard_lattice(c).rank
    return DivisorClass(c, tuple(int(j == i) for j in range(n)))


def curve_class(s: ComponentId, c: CurveId) -> DivisorClass:
    if c not in curves_on_component(s):
        raise ValueError(f"{c} does not lie on {s}")
    if isinstance(s, DelPezzo):
        f = _del_pezzo_relabel(s.m)
        return DivisorClass(s, m05.delta_class((f[c.pair[0]], f[c.pair[1]])))
    pts = _blown_points(s)
    v = [0] * (1 + len(pts))
    if isinstance(c, ECurve):
        other = c.second if c.first == s.pair else c.first
        v[1 + pts.index(other)] = 1
    else:
        v[0] = 1
        for i, q in enumerate(pts):
            if c.m not in q:
                v[1 + i] = -1
    return DivisorClass(s, tuple(v))


def intersection_number(s: ComponentId, a: DivisorClass, b: DivisorClass) -> int:
    if a.component != s or b.component != s:
        raise ValueError(f"classes live on {a.component} and {b.component}, not {s}")
    u, v = a.coefficients, b.coefficients
    return u[0] * v[0] - sum(x * y for x, y in zip(u[1:], v[1:]))


def self_intersection(s: ComponentId, c: CurveId) -> int:
    k = curve_class(s, c)
    return intersection_number(s, k, k)


def restriction_matrix(s: ComponentId) -> RatMatrix:
    """H^2(S) -> H^2(C_S): one row per double curve on S, one column per Picard basis class.

    Entry = degree of the basis class on the curve.
    """
    n = picard_lattice(s).rank
    basis = [basis_class(s, i) for i in range(n)]
    return RatMatrix.from_rows(
        [[intersection_number(s, b, curve_class(s, c)) for b in basis] for c in curves_on_component(s)],
        cols=n,
    )


def surfaces_table() -> list[dict]:
    """JSON-ready Gram matrices and double-curve classes for every component."""
    from .incidence import enumerate_components

    out = []
    for s in enumerate_components():
        lat = picard_lattice(s)
        out.append({
            "component": str(s),
            "basis": list(lat.basis),
            "gram": [[int(x) for x in lat.gram.row(i)] for i in range(lat.rank)],
            "curves": [{"curve": str(c), "class": list(curve_class(s, c).coefficients),
                        "self_intersection": self_intersection(s, c)}
                       for c in curves_on_component(s)],
        })
    return out
