"""Graphs, 2-dimensional simplicial complexes, and finitely presented groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Sequence

from . import m05
from .linalg import RatMatrix, rank_q, smith_normal_form


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset  # of 2-element frozensets

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("repeated vertex")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"bad edge {set(e)}")
            if not e <= vs:
                raise ValueError(f"edge {set(e)} has undeclared endpoint")

    @classmethod
    def from_pairs(cls, vertices: Iterable, pairs: Iterable[tuple]) -> Graph:
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict:
        return {v: self.degree(v) for v in self.vertices}

    def is_regular(self, k: int | None = None) -> bool:
        ds = set(self.degrees().values())
        return len(ds) <= 1 and (k is None or ds <= {k})

    def relabel(self, f) -> Graph:
        return Graph.from_pairs([f(v) for v in self.vertices], [tuple(f(v) for v in e) for e in self.edges])

    def isomorphic_via(self, other: Graph, f) -> bool:
        """True when ``f`` is a bijection of vertex sets carrying edges exactly onto edges."""
        image = [f(v) for v in self.vertices]
        if sorted(map(repr, image)) != sorted(map(repr, other.vertices)) or len(set(image)) != len(image):
            return False
        return frozenset(frozenset(f(v) for v in e) for e in self.edges) == other.edges


def kneser_graph(m: int, n: int) -> Graph:
    if n < 1 or m < 2 * n:
        raise ValueError(f"KG({m},{n}) needs m >= 2n >= 2")
    vs = tuple(combinations(range(1, m + 1), n))
    g = Graph.from_pairs(vs, [(a, b) for a, b in combinations(vs, 2) if not set(a) & set(b)])
    assert len(vs) == comb(m, n) and g.is_regular(comb(m - n, n))
    return g


# -- simplicial complexes ---------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex2:
    """A complex of dimension <= 2.

    Vertex order is the order of ``vertices``; edges and triangles are stored
    as index tuples sorted by that order and are oriented by it.
    """

    vertices: tuple
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[tuple[int, int, int], ...]
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        if len(self._index) != len(self.vertices):
            raise ValueError("repeated vertex")
        n = len(self.vertices)
        edges = tuple(sorted({tuple(sorted(e)) for e in self.edges}))
        tris = tuple(sorted({tuple(sorted(t)) for t in self.triangles}))
        if len(edges) != len(self.edges) or len(tris) != len(self.triangles):
            raise ValueError("duplicate simplex")
        for s in edges + tris:
            if len(set(s)) != len(s) or not all(0 <= i < n for i in s):
                raise ValueError(f"bad simplex {s}")
        es = set(edges)
        for t in tris:
            for f in combinations(t, 2):
                if f not in es:
                    raise ValueError(f"face {f} of triangle {t} missing")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "triangles", tris)
        d1, d2 = self.boundary(1), self.boundary(2)
        if d1.cols and d2.cols:
            assert (d1 @ d2).is_zero()

    @classmethod
    def from_labels(cls, vertices: Sequence, edges: Iterable[Sequence], triangles: Iterable[Sequence] = ()):
        idx = {v: i for i, v in enumerate(vertices)}
        return cls(tuple(vertices),
                   tuple(tuple(idx[v] for v in e) for e in edges),
                   tuple(tuple(idx[v] for v in t) for t in triangles))

    def index(self, v) -> int:
        return self._index[v]

    def f_vector(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.triangles))

    def euler_characteristic(self) -> int:
        v, e, t = self.f_vector()
        return v - e + t

    def one_skeleton(self) -> Graph:
        return Graph.from_pairs(self.vertices, [(self.vertices[a], self.vertices[b]) for a, b in self.edges])

    def boundary(self, k: int) -> RatMatrix:
        """Boundary matrix C_k -> C_{k-1} in the sorted-vertex orientation."""
        if k == 0:
            return RatMatrix.zeros(0, len(self.vertices))
        if k == 1:
            rows = [[0] * len(self.edges) for _ in self.vertices]
            for j, (a, b) in enumerate(self.edges):
                rows[a][j] -= 1
                rows[b][j] += 1
            return RatMatrix.from_rows(rows, cols=len(self.edges))
        if k == 2:
            eidx = {e: i for i, e in enumerate(self.edges)}
            rows = [[0] * len(self.triangles) for _ in self.edges]
            for j, (a, b, c) in enumerate(self.triangles):
                rows[eidx[(b, c)]][j] += 1
                rows[eidx[(a, c)]][j] -= 1
                rows[eidx[(a, b)]][j] += 1
            return RatMatrix.from_rows(rows, cols=len(self.triangles))
        if k == 3:
            return RatMatrix.zeros(len(self.triangles), 0)
        raise ValueError(f"no boundary in degree {k}")

    def components(self) -> list[list[int]]:
        adj = {i: [] for i in range(len(self.vertices))}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen, out = set(), []
        for s in range(len(self.vertices)):
            if s in seen:
                continue
            comp, queue = [], deque([s])
            seen.add(s)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in sorted(adj[v]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            out.append(comp)
        return out

    def to_json(self) -> dict:
        lab = [str(v) for v in self.vertices]
        return {
            "vertices": lab,
            "edges": [[lab[a], lab[b]] for a, b in self.edges],
            "triangles": [[lab[a], lab[b], lab[c]] for a, b, c in self.triangles],
        }

    @classmethod
    def from_json(cls, d: dict) -> SimplicialComplex2:
        return cls.from_labels(d["vertices"], d["edges"], d["triangles"])


def betti_numbers_q(c: SimplicialComplex2) -> tuple[int, int, int]:
    v, e, t = c.f_vector()
    r1 = rank_q(c.boundary(1)) if e else 0
    r2 = rank_q(c.boundary(2)) if t else 0
    return (v - r1, e - r1 - r2, t - r2)


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = ([f"Z^{self.rank}"] if self.rank else []) + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def chain_homology(dims: Sequence[int], boundaries: dict[int, RatMatrix]) -> list[HomologyGroup]:
    """Integral homology of ``C_top -> ... -> C_0``.

    ``boundaries[k]`` is the integer matrix of ``C_k -> C_{k-1}`` (shape
    ``dims[k-1] x dims[k]``); missing entries are zero maps.
    """
    def snf(k):
        m = boundaries.get(k)
        if m is None or not m.rows or not m.cols:
            return 0, ()
        s = smith_normal_form(m)
        return s.rank, s.torsion

    out = []
    for k, n in enumerate(dims):
        rk, _ = snf(k) if k > 0 else (0, ())
        rk1, tors = snf(k + 1)
        out.append(HomologyGroup(n - rk - rk1, tors))
    return out


def integral_homology(c: SimplicialComplex2, degree: int) -> HomologyGroup:
    if degree not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    bds = {k: c.boundary(k) for k in (1, 2)}
    return chain_homology(c.f_vector(), bds)[degree]


# -- group presentations ------------------------------------------------------------

Word = tuple[int, ...]


@dataclass(frozen=True)
class GroupPresentation:
    """Generators plus relators; letter ``+k``/``-k`` is generator ``k-1`` or its inverse."""

    generators: tuple
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"letter {x} out of range for {n} generators")

    def exponent_matrix(self) -> RatMatrix:
        n = len(self.generators)
        rows = []
        for r in self.relators:
            row = [0] * n
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return RatMatrix.from_rows(rows, cols=n) if rows else RatMatrix.zeros(0, n)

    def to_json(self) -> dict:
        return {"generators": [str(g) for g in self.generators],
                "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, d: dict) -> GroupPresentation:
        return cls(tuple(d["generators"]), tuple(tuple(r) for r in d["relators"]))


def abelianization(p: GroupPresentation) -> HomologyGroup:
    m = p.exponent_matrix()
    if not m.rows:
        return HomologyGroup(len(p.generators))
    snf = smith_normal_form(m)
    free, tors = snf.cokernel()
    return HomologyGroup(free, tors)


def spanning_tree(c: SimplicialComplex2, root: int = 0) -> set[tuple[int, int]]:
    """BFS tree from ``root``; neighbours visited in vertex order."""
    adj = {i: [] for i in range(len(c.vertices))}
    for a, b in c.edges:
        adj[a].append(b)
        adj[b].append(a)
    tree, seen, queue = set(), {root}, deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                tree.add((min(v, w), max(v, w)))
                queue.append(w)
    return tree


def pi1_presentation(c: SimplicialComplex2) -> GroupPresentation:
    """Edge-path presentation: non-tree edges generate, triangles relate.

    The root is the smallest vertex in the complex's own order.
    """
    if not c.vertices or len(c.components()) != 1:
        raise ValueError("pi1_presentation needs a connected, nonempty complex")
    tree = spanning_tree(c)
    gens = [e for e in c.edges if e not in tree]
    gidx = {e: i + 1 for i, e in enumerate(gens)}
    rels = []
    for a, b, t in c.triangles:
        word = []
        for e, sign in (((a, b), 1), ((b, t), 1), ((a, t), -1)):
            if e in gidx:
                word.append(sign * gidx[e])
        rels.append(tuple(word))
    lab = c.vertices
    return GroupPresentation(tuple(f"{lab[a]}-{lab[b]}" for a, b in gens), tuple(rels))


def _sigma_index(pair) -> int:
    return list(combinations(m05.FOUR, 2)).index(tuple(sorted(pair))) + 1


def _line_word(line) -> Word:
    if len(line) == 2:
        return (_sigma_index(line),)
    i, j, k = line
    return (_sigma_index((i, j)), _sigma_index((i, k)), _sigma_index((j, k)))


def _inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def commutator(u: Word, v: Word) -> Word:
    return u + v + _inverse(u) + _inverse(v)


def m05_presentation() -> GroupPresentation:
    """Picard's presentation of pi_1(M_{0,5}) on the six loops sigma_ij."""
    gens = tuple(f"sigma{i}{j}" for i, j in combinations(m05.FOUR, 2))
    product = tuple(_sigma_index(p) for p in [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)])
    rels = [product]
    for a, b in combinations(m05.LINES, 2):
        if m05.lines_meet(a, b):
            rels.append(commutator(_line_word(a), _line_word(b)))
    return GroupPresentation(gens, tuple(rels))


def t3_skeleton_homology() -> list[HomologyGroup]:
    """H_0..H_3 of the 2-skeleton of the 3-torus (one 0-cell, three 1- and 2-cells)."""
    dims = (1, 3, 3, 0)
    bds = {1: RatMatrix.zeros(1, 3), 2: RatMatrix.zeros(3, 3)}
    return chain_homology(dims, bds)


# -- Tietze simplification -------------------------------------------------------------

def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = list(free_reduce(w))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _cyclic_normal(w: Word) -> Word:
    if not w:
        return w
    cands = []
    for u in (w, _inverse(w)):
        cands += [u[i:] + u[:i] for i in range(len(u))]
    return min(cands)


@dataclass(frozen=True)
class TietzeResult:
    status: str  # "success" or "inconclusive"
    presentation: GroupPresentation
    free_abelian_rank: int | None = None


def _substitute(w: Word, g: int, replacement: Word) -> Word:
    out: list[int] = []
    for x in w:
        if abs(x) == g:
            out.extend(replacement if x > 0 else _inverse(replacement))
        else:
            out.append(x)
    return cyclic_reduce(out)


def tietze_simplify(p: GroupPresentation, max_length: int = 20000) -> TietzeResult:
    """Eliminate generators that occur once in some relator, then test for Z^k.

    Success means the remaining relators are all commutators of generator
    pairs (every pair present) plus words with zero exponent sum, which
    presents a free abelian group.  Anything else is reported inconclusive.
    """
    gens = list(range(1, len(p.generators) + 1))
    rels = {_cyclic_normal(cyclic_reduce(r)) for r in p.relators} - {()}
    while True:
        best = None
        for r in sorted(rels, key=lambda r: (len(r), r)):
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = [g for g, n in sorted(counts.items()) if n == 1]
            if once:
                best = (r, once[0])
                break
        if best is None:
            break
        r, g = best
        i = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[i:] + r[:i]
        # rot = g^e * tail = 1  =>  g = tail^{-e}
        tail = rot[1:]
        replacement = _inverse(tail) if rot[0] > 0 else tail
        rels.discard(r)
        rels = {_cyclic_normal(_substitute(w, g, replacement)) for w in rels} - {()}
        gens.remove(g)
        if sum(map(len, rels)) > max_length:
            break
    # renumber
    ren = {g: i + 1 for i, g in enumerate(gens)}
    new_rels = tuple(sorted(tuple((1 if x > 0 else -1) * ren[abs(x)] for x in r) for r in rels))
    names = tuple(p.generators[g - 1] for g in gens)
    k = len(gens)
    commuting = _commutation_closure(new_rels)
    everything = {frozenset(q) for q in combinations(range(1, k + 1), 2)}
    q = GroupPresentation(names, new_rels)
    # abelian, and every relator dies under abelianization: the group is Z^k
    if commuting >= everything and q.exponent_matrix().is_zero():
        return TietzeResult("success", q, k)
    return TietzeResult("inconclusive", q)


def _is_commutator(w: Word) -> bool:
    return len(w) == 4 and abs(w[0]) != abs(w[1]) and w[2] == -w[0] and w[3] == -w[1]


def _pc_reduce(w: Word, commuting: set) -> Word:
    """Cancel x ... x^-1 whenever every letter in between commutes with x (cyclically)."""
    w = list(cyclic_reduce(w))
    changed = True
    while changed and w:
        changed = False
        n = len(w)
        for shift in range(n):
            u = w[shift:] + w[:shift]
            for i, x in enumerate(u):
                for j in range(i + 1, len(u)):
                    y = u[j]
                    if y == -x:
                        w = list(cyclic_reduce(u[:i] + u[i + 1:j] + u[j + 1:]))
                        changed = True
                        break
                    if abs(y) != abs(x) and frozenset((abs(x), abs(y))) not in commuting:
                        break
                if changed:
                    break
            if changed:
                break
    return tuple(w)


def _commutation_closure(rels: Sequence[Word], rounds: int = 50) -> set:
    """Generator pairs provably commuting, found by reducing relators modulo known commutations."""
    commuting: set = set()
    for _ in range(rounds):
        grew = False
        for r in rels:
            w = _pc_reduce(r, commuting)
            n = len(w)
            for shift in range(max(n, 1)):
                u = w[shift:] + w[:shift]
                if _is_commutator(u):
                    pair = frozenset((abs(u[0]), abs(u[1])))
                    if pair not in commuting:
                        commuting.add(pair)
                        grew = True
                    break
        if not grew:
            break
    return commuting


# -- the dual complex of the central fibre ----------------------------------------------

def build_dual_complex() -> SimplicialComplex2:
    """Vertex per component, edge per double curve, triangle per triple point.

    Built from pairwise and triple intersections of the components, in the
    canonical component order.
    """
    from .incidence import component_intersection, enumerate_components, points_on_component

    comps = enumerate_components()
    edges = [(a, b) for a, b in combinations(comps, 2) if component_intersection(a, b) is not None]
    pts = {s: set(points_on_component(s)) for s in comps}
    tris = [(a, b, c) for a, b, c in combinations(comps, 3) if pts[a] & pts[b] & pts[c]]
    return SimplicialComplex2.from_labels(comps, edges, tris)


def kneser_label(s) -> tuple[int, int]:
    """D(i) -> {i,7}, B(j,k) -> {j,k}: the vertex bijection onto KG(7,2)."""
    from .incidence import DelPezzo

    return (s.m, 7) if isinstance(s, DelPezzo) else s.pair
