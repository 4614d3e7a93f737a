"""Combinatorial model of the Segre Fano surface and of its semistable central fibre.

Everything is indexed by the labels 1..6.  Entities are small frozen value
types whose index sets are normalized (pairs sorted, pairs of pairs sorted),
so equality is structural and hashing is free.

Central fibre strata:

* components  ``D(m)`` (del Pezzo) and ``B(i,j)`` (blown-up plane);
* double curves ``R(m;j,k) = D(m) & B(j,k)`` for ``m`` not in ``{j,k}`` and
  ``E(ij|kl) = B(i,j) & B(k,l)`` for disjoint pairs;
* triple points ``N(m;ij|kl) = D(m) & B(i,j) & B(k,l)`` with ``m`` outside
  both pairs.

Before the 45 small resolutions the planes are ``P(i,j)`` and the 45
distinguished points are ``L(ij|kl) = P(i,j) & P(k,l)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Mapping, Sequence, Union

LABELS = tuple(range(1, 7))
Pair = tuple[int, int]


def _pair(p: Sequence[int]) -> Pair:
    a, b = sorted(p)
    if a == b or not (1 <= a <= 6 and 1 <= b <= 6):
        raise ValueError(f"invalid pair {p!r}")
    return (a, b)


def _disjoint(p: Pair, q: Pair) -> bool:
    return not set(p) & set(q)


def _pp(p: Pair) -> str:
    return f"{p[0]}{p[1]}"


class _Label:
    """Shared ordering: every entity sorts by ``(rank, key)``."""

    _rank = 0

    def key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other):
        if not isinstance(other, _Label):
            return NotImplemented
        return (self._rank, self.key()) < (other._rank, other.key())

    def __le__(self, other):
        return self == other or self < other

    def relabel(self, f: Mapping[int, int]):
        raise NotImplementedError


def _check_label(m: int):
    if m not in LABELS:
        raise ValueError(f"label {m!r} not in 1..6")


@dataclass(frozen=True, eq=True)
class DelPezzo(_Label):
    m: int
    _rank = 0

    def __post_init__(self):
        _check_label(self.m)

    def key(self):
        return (self.m,)

    def relabel(self, f):
        return DelPezzo(f[self.m])

    def __str__(self):
        return f"D({self.m})"


@dataclass(frozen=True, eq=True)
class BlownPlane(_Label):
    pair: Pair
    _rank = 1

    def __post_init__(self):
        object.__setattr__(self, "pair", _pair(self.pair))

    def key(self):
        return self.pair

    def relabel(self, f):
        return BlownPlane((f[self.pair[0]], f[self.pair[1]]))

    def __str__(self):
        return f"B({self.pair[0]},{self.pair[1]})"


@dataclass(frozen=True, eq=True)
class Plane(_Label):
    """A plane component P(i,j) of the Fano surface before resolution."""

    pair: Pair
    _rank = 2

    def __post_init__(self):
        object.__setattr__(self, "pair", _pair(self.pair))

    def key(self):
        return self.pair

    def relabel(self, f):
        return Plane((f[self.pair[0]], f[self.pair[1]]))

    def __str__(self):
        return f"P({self.pair[0]},{self.pair[1]})"


ComponentId = Union[DelPezzo, BlownPlane]


@dataclass(frozen=True, eq=True)
class RCurve(_Label):
    m: int
    pair: Pair
    _rank = 10

    def __post_init__(self):
        _check_label(self.m)
        object.__setattr__(self, "pair", _pair(self.pair))
        if self.m in self.pair:
            raise ValueError(f"R({self.m};{self.pair}) is empty")

    def key(self):
        return (self.m, self.pair)

    def relabel(self, f):
        return RCurve(f[self.m], (f[self.pair[0]], f[self.pair[1]]))

    def __str__(self):
        return f"R({self.m};{self.pair[0]},{self.pair[1]})"


def _pair_of_pairs(p, q) -> tuple[Pair, Pair]:
    p, q = _pair(p), _pair(q)
    if not _disjoint(p, q):
        raise ValueError(f"pairs {p} and {q} are not disjoint")
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True, eq=True)
class ECurve(_Label):
    first: Pair
    second: Pair
    _rank = 11

    def __post_init__(self):
        p, q = _pair_of_pairs(self.first, self.second)
        object.__setattr__(self, "first", p)
        object.__setattr__(self, "second", q)

    def key(self):
        return (self.first, self.second)

    def relabel(self, f):
        return ECurve(*[(f[a], f[b]) for a, b in (self.first, self.second)])

    def __str__(self):
        return f"E({_pp(self.first)}|{_pp(self.second)})"


CurveId = Union[RCurve, ECurve]


@dataclass(frozen=True, eq=True)
class TriplePoint(_Label):
    m: int
    first: Pair
    second: Pair
    _rank = 20

    def __post_init__(self):
        _check_label(self.m)
        p, q = _pair_of_pairs(self.first, self.second)
        if self.m in p + q:
            raise ValueError(f"N({self.m};{p}|{q}) is empty")
        object.__setattr__(self, "first", p)
        object.__setattr__(self, "second", q)

    def key(self):
        return (self.m, self.first, self.second)

    def relabel(self, f):
        return TriplePoint(f[self.m], *[(f[a], f[b]) for a, b in (self.first, self.second)])

    def __str__(self):
        return f"N({self.m};{_pp(self.first)}|{_pp(self.second)})"


@dataclass(frozen=True, eq=True)
class DistinguishedLine(_Label):
    """L(ij|kl): a line of the Segre primal through two nodes, i.e. a point of F(S)."""

    first: Pair
    second: Pair
    _rank = 30

    def __post_init__(self):
        p, q = _pair_of_pairs(self.first, self.second)
        object.__setattr__(self, "first", p)
        object.__setattr__(self, "second", q)

    def key(self):
        return (self.first, self.second)

    def relabel(self, f):
        return DistinguishedLine(*[(f[a], f[b]) for a, b in (self.first, self.second)])

    def complement(self) -> Pair:
        return _pair(set(LABELS) - set(self.first + self.second))

    def __str__(self):
        return f"L({_pp(self.first)}|{_pp(self.second)})"


PAIRS: tuple[Pair, ...] = tuple(combinations(LABELS, 2))


def _disjoint_pair_pairs() -> list[tuple[Pair, Pair]]:
    return [(p, q) for p, q in combinations(PAIRS, 2) if _disjoint(p, q)]


# -- enumeration ---------------------------------------------------------------

def enumerate_components() -> list[ComponentId]:
    """D(1)..D(6) followed by the fifteen B(i,j) in lexicographic order."""
    return [DelPezzo(m) for m in LABELS] + [BlownPlane(p) for p in PAIRS]


def enumerate_curves() -> list[CurveId]:
    rs = [RCurve(m, p) for m in LABELS for p in PAIRS if m not in p]
    es = [ECurve(p, q) for p, q in _disjoint_pair_pairs()]
    return rs + es


def enumerate_triple_points() -> list[TriplePoint]:
    return [TriplePoint(m, p, q) for m in LABELS for p, q in _disjoint_pair_pairs()
            if m not in p + q]


def enumerate_distinguished_lines() -> list[DistinguishedLine]:
    return [DistinguishedLine(p, q) for p, q in _disjoint_pair_pairs()]


def enumerate_planes() -> list[Plane]:
    return [Plane(p) for p in PAIRS]


# -- central fibre incidences ------------------------------------------------------

def component_intersection(a: ComponentId, b: ComponentId) -> CurveId | None:
    """The double curve ``a & b``, or None when the components are disjoint."""
    if a == b:
        raise ValueError(f"self-intersection of {a} requested")
    if isinstance(a, BlownPlane) and isinstance(b, DelPezzo):
        a, b = b, a
    if isinstance(a, DelPezzo) and isinstance(b, DelPezzo):
        return None
    if isinstance(a, DelPezzo) and isinstance(b, BlownPlane):
        return None if a.m in b.pair else RCurve(a.m, b.pair)
    if isinstance(a, BlownPlane) and isinstance(b, BlownPlane):
        return ECurve(a.pair, b.pair) if _disjoint(a.pair, b.pair) else None
    raise TypeError(f"not central fibre components: {a!r}, {b!r}")


def components_of_curve(c: CurveId) -> tuple[ComponentId, ComponentId]:
    """The two sides of a double curve, in canonical order."""
    if isinstance(c, RCurve):
        return (DelPezzo(c.m), BlownPlane(c.pair))
    return (BlownPlane(c.first), BlownPlane(c.second))


def curves_on_component(s: ComponentId) -> list[CurveId]:
    if isinstance(s, DelPezzo):
        return [RCurve(s.m, p) for p in PAIRS if s.m not in p]
    rest = [x for x in LABELS if x not in s.pair]
    rs = [RCurve(m, s.pair) for m in rest]
    es = sorted(ECurve(s.pair, q) for q in combinations(rest, 2))
    return rs + es


def points_on_curve(c: CurveId) -> list[TriplePoint]:
    if isinstance(c, RCurve):
        rest = [x for x in LABELS if x != c.m and x not in c.pair]
        return sorted(TriplePoint(c.m, c.pair, q) for q in combinations(rest, 2))
    rest = [x for x in LABELS if x not in c.first + c.second]
    return [TriplePoint(m, c.first, c.second) for m in rest]


def components_through_point(t: TriplePoint) -> tuple[ComponentId, ComponentId, ComponentId]:
    return (DelPezzo(t.m), BlownPlane(t.first), BlownPlane(t.second))


def curves_through_point(t: TriplePoint) -> tuple[CurveId, CurveId, CurveId]:
    return (RCurve(t.m, t.first), RCurve(t.m, t.second), ECurve(t.first, t.second))


def points_on_component(s: ComponentId) -> list[TriplePoint]:
    return sorted({t for c in curves_on_component(s) for t in points_on_curve(c)})


def triple_intersection(a: ComponentId, b: ComponentId, c: ComponentId) -> TriplePoint | None:
    common = set(points_on_component(a)) & set(points_on_component(b)) & set(points_on_component(c))
    if len({a, b, c}) != 3:
        raise ValueError("components must be distinct")
    assert len(common) <= 1
    return common.pop() if common else None


# -- before the small resolution ---------------------------------------------------

SegreComponent = Union[DelPezzo, Plane]


@dataclass(frozen=True)
class SegreIntersection:
    """How two components of F(S) meet.

    ``kind`` is ``"empty"``, ``"points"`` or ``"curve"``.  For a curve,
    ``points`` lists the distinguished points lying on it.
    """

    kind: str
    curve: RCurve | None
    points: tuple[DistinguishedLine, ...]


def segre_intersections(a: SegreComponent, b: SegreComponent) -> SegreIntersection:
    for x in (a, b):
        if not isinstance(x, (DelPezzo, Plane)):
            raise TypeError(f"{x!r} is not a component of F(S)")
    if a == b:
        raise ValueError(f"self-intersection of {a} requested")
    if isinstance(a, Plane) and isinstance(b, DelPezzo):
        a, b = b, a
    if isinstance(a, DelPezzo) and isinstance(b, DelPezzo):
        rest = [x for x in LABELS if x not in (a.m, b.m)]
        i = rest[0]
        pts = sorted(DistinguishedLine((i, j), tuple(x for x in rest if x not in (i, j)))
                     for j in rest[1:])
        return SegreIntersection("points", None, tuple(pts))
    if isinstance(a, Plane) and isinstance(b, Plane):
        if not _disjoint(a.pair, b.pair):
            return SegreIntersection("empty", None, ())
        return SegreIntersection("points", None, (DistinguishedLine(a.pair, b.pair),))
    if a.m in b.pair:
        return SegreIntersection("empty", None, ())
    # L(jk|in) lies on R(m;j,k) iff {i,n} avoids {m,j,k}
    rest = [x for x in LABELS if x != a.m and x not in b.pair]
    pts = sorted(DistinguishedLine(b.pair, q) for q in combinations(rest, 2))
    return SegreIntersection("curve", RCurve(a.m, b.pair), tuple(pts))


def segre_components_through(x: DistinguishedLine) -> tuple[SegreComponent, ...]:
    """The four components of F(S) through a distinguished point: two D's, two P's."""
    m, n = x.complement()
    return (DelPezzo(m), DelPezzo(n), Plane(x.first), Plane(x.second))


# -- S6 action ----------------------------------------------------------------------

Permutation = Union[Sequence[int], Mapping[int, int]]


def as_mapping(perm: Permutation) -> dict[int, int]:
    """Normalize a permutation of 1..6: either images ``perm[i-1]`` of ``i`` or a dict."""
    f = dict(perm) if isinstance(perm, Mapping) else {i + 1: int(v) for i, v in enumerate(perm)}
    if sorted(f) != list(LABELS) or sorted(f.values()) != list(LABELS):
        raise ValueError(f"not a permutation of 1..6: {perm!r}")
    return f


def apply_s6(perm: Permutation, x):
    f = as_mapping(perm)
    if x is None:
        return None
    if isinstance(x, _Label):
        return x.relabel(f)
    if isinstance(x, (tuple, list, frozenset, set)):
        return type(x)(apply_s6(f, y) for y in x)
    raise TypeError(f"cannot relabel {x!r}")


def all_s6() -> list[tuple[int, ...]]:
    return list(permutations(LABELS))


# -- export --------------------------------------------------------------------------

def incidence_scheme() -> dict:
    """JSON-ready description of the central fibre and of F(S)."""
    comps = enumerate_components()
    curves = enumerate_curves()
    points = enumerate_triple_points()
    return {
        "components": [
            {"id": str(s), "type": "del_pezzo" if isinstance(s, DelPezzo) else "blown_plane",
             "curves": [str(c) for c in curves_on_component(s)]}
            for s in comps
        ],
        "curves": [
            {"id": str(c), "components": [str(s) for s in components_of_curve(c)],
             "points": [str(t) for t in points_on_curve(c)]}
            for c in curves
        ],
        "triple_points": [
            {"id": str(t), "components": [str(s) for s in components_through_point(t)],
             "curves": [str(c) for c in curves_through_point(t)]}
            for t in points
        ],
        "distinguished_lines": [
            {"id": str(x), "components": [str(s) for s in segre_components_through(x)]}
            for x in enumerate_distinguished_lines()
        ],
    }
