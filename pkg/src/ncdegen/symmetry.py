"""Characters of S4, S5, S6 and the representations that occur on the components.

Permutations are tuples of images: ``g[i-1] = g(i)``; products compose right
to left, ``(g*h)(i) = g(h(i))``.  Conjugacy classes are cycle types, listed
as partitions in increasing lexicographic order, e.g. for S5::

    1^5, 2 1^3, 2^2 1, 3 1^2, 3 2, 4 1, 5
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Hashable, Sequence

from .linalg import RatMatrix, kernel_basis_q, rref

Perm = tuple[int, ...]
Partition = tuple[int, ...]

# irreducible characters, rows indexed by partitions, columns by _classes(n)
_TABLES: dict[int, dict[Partition, tuple[int, ...]]] = {
    4: {
        (4,): (1, 1, 1, 1, 1),
        (3, 1): (3, 1, -1, 0, -1),
        (2, 2): (2, 0, 2, -1, 0),
        (2, 1, 1): (3, -1, -1, 0, 1),
        (1, 1, 1, 1): (1, -1, 1, 1, -1),
    },
    5: {
        (5,): (1, 1, 1, 1, 1, 1, 1),
        (4, 1): (4, 2, 0, 1, -1, 0, -1),
        (3, 2): (5, 1, 1, -1, 1, -1, 0),
        (3, 1, 1): (6, 0, -2, 0, 0, 0, 1),
        (2, 2, 1): (5, -1, 1, -1, -1, 1, 0),
        (2, 1, 1, 1): (4, -2, 0, 1, 1, 0, -1),
        (1, 1, 1, 1, 1): (1, -1, 1, 1, -1, -1, 1),
    },
    6: {
        (6,): (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
        (5, 1): (5, 3, 1, -1, 2, 0, -1, 1, -1, 0, -1),
        (4, 2): (9, 3, 1, 3, 0, 0, 0, -1, 1, -1, 0),
        (4, 1, 1): (10, 2, -2, -2, 1, -1, 1, 0, 0, 0, 1),
        (3, 3): (5, 1, 1, -3, -1, 1, 2, -1, -1, 0, 0),
        (3, 2, 1): (16, 0, 0, 0, -2, 0, -2, 0, 0, 1, 0),
        (3, 1, 1, 1): (10, -2, -2, 2, 1, 1, 1, 0, 0, 0, -1),
        (2, 2, 2): (5, -1, 1, 3, -1, -1, 2, 1, -1, 0, 0),
        (2, 2, 1, 1): (9, -3, 1, -3, 0, 0, 0, 1, 1, -1, 0),
        (2, 1, 1, 1, 1): (5, -3, 1, 1, 2, 0, -1, -1, -1, 0, 1),
        (1, 1, 1, 1, 1, 1): (1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1),
    },
}


def _partitions(n: int, maxpart: int | None = None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def cycle_type(g: Perm) -> Partition:
    seen, lengths = set(), []
    for i in range(1, len(g) + 1):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = g[j - 1]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def compose(g: Perm, h: Perm) -> Perm:
    return tuple(g[h[i] - 1] for i in range(len(h)))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def representative(shape: Partition) -> Perm:
    """Product of consecutive cycles (1..a)(a+1..a+b)... of the given lengths."""
    g, start = [], 1
    for k in shape:
        g += list(range(start + 1, start + k)) + [start]
        start += k
    return tuple(g)


def _class_size(shape: Partition) -> int:
    n = sum(shape)
    mult = {k: shape.count(k) for k in set(shape)}
    return factorial(n) // prod(k ** m * factorial(m) for k, m in mult.items())


@dataclass(frozen=True)
class SymmetricGroupData:
    n: int
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    irreducibles: tuple[Partition, ...]
    table: tuple[tuple[int, ...], ...]

    def order(self) -> int:
        return factorial(self.n)

    def class_index(self, g: Perm) -> int:
        return self.classes.index(cycle_type(g))

    def representatives(self) -> list[Perm]:
        return [representative(c) for c in self.classes]

    def generators(self) -> list[Perm]:
        """A transposition and an n-cycle."""
        t = (2, 1) + tuple(range(3, self.n + 1))
        return [t, representative((self.n,))]

    def irreducible(self, shape: Partition) -> Character:
        return Character(self, tuple(Fraction(x) for x in self.table[self.irreducibles.index(tuple(shape))]))

    def trivial(self) -> Character:
        return self.irreducible((self.n,))

    def standard(self) -> Character:
        return self.irreducible((self.n - 1, 1))

    def power_map(self, k: int) -> tuple[int, ...]:
        out = []
        for g in self.representatives():
            h = identity(self.n)
            for _ in range(k):
                h = compose(g, h)
            out.append(self.class_index(h))
        return tuple(out)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroupData:
    if n not in _TABLES:
        raise ValueError(f"character table of S{n} not available")
    classes = tuple(sorted(_partitions(n)))
    irreps = tuple(_TABLES[n])
    g = SymmetricGroupData(n, classes, tuple(_class_size(c) for c in classes), irreps,
                           tuple(_TABLES[n][p] for p in irreps))
    check_orthogonality(g)
    return g


def check_orthogonality(g: SymmetricGroupData) -> None:
    if sum(g.class_sizes) != g.order():
        raise AssertionError(f"S{g.n}: class sizes do not sum to n!")
    for i, a in enumerate(g.irreducibles):
        for j, b in enumerate(g.irreducibles):
            ip = inner_product(g.irreducible(a), g.irreducible(b))
            if ip != (i == j):
                raise AssertionError(f"S{g.n}: <{a},{b}> = {ip}")
    for c1 in range(len(g.classes)):
        for c2 in range(len(g.classes)):
            s = sum(row[c1] * row[c2] for row in g.table)
            if s != (g.order() // g.class_sizes[c1] if c1 == c2 else 0):
                raise AssertionError(f"S{g.n}: column orthogonality fails at {c1},{c2}")


@dataclass(frozen=True)
class Character:
    group: SymmetricGroupData
    values: tuple[Fraction, ...]

    @property
    def degree(self) -> Fraction:
        return self.values[0]

    def __add__(self, other: Character) -> Character:
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: Character) -> Character:
        return Character(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __rmul__(self, k) -> Character:
        return Character(self.group, tuple(k * a for a in self.values))

    def as_ints(self) -> tuple[int, ...]:
        return tuple(int(v) if v.denominator == 1 else v for v in self.values)


def inner_product(a: Character, b: Character) -> Fraction:
    g = a.group
    return sum((Fraction(s) * x * y for s, x, y in zip(g.class_sizes, a.values, b.values)),
               Fraction(0)) / g.order()


def symmetric_square(chi: Character) -> Character:
    sq = chi.group.power_map(2)
    return Character(chi.group, tuple((v * v + chi.values[sq[i]]) / 2 for i, v in enumerate(chi.values)))


def decompose_character(g: SymmetricGroupData, chi: Character) -> dict[Partition, int]:
    out = {}
    for p in g.irreducibles:
        m = inner_product(chi, g.irreducible(p))
        if m.denominator != 1 or m < 0:
            raise ValueError(f"not a character: multiplicity of {p} is {m}")
        out[p] = int(m)
    recon = [sum(out[p] * g.irreducible(p).values[c] for p in g.irreducibles) for c in range(len(g.classes))]
    assert tuple(recon) == chi.values
    return out


# -- actions ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupAction:
    group: SymmetricGroupData
    labels: tuple
    act: Callable[[Perm, Hashable], Hashable]

    def permutation_matrix(self, g: Perm) -> RatMatrix:
        idx = {x: i for i, x in enumerate(self.labels)}
        n = len(self.labels)
        rows = [[0] * n for _ in range(n)]
        for j, x in enumerate(self.labels):
            rows[idx[self.act(g, x)]][j] = 1
        return RatMatrix.from_rows(rows, cols=n)

    def validate(self) -> None:
        lab = set(self.labels)
        e = identity(self.group.n)
        if any(self.act(e, x) != x for x in self.labels):
            raise ValueError("identity does not act trivially")
        gens = self.group.generators()
        for a in gens:
            if {self.act(a, x) for x in self.labels} != lab:
                raise ValueError(f"{a} does not permute the labels")
            for b in gens:
                ab = compose(a, b)
                if any(self.act(a, self.act(b, x)) != self.act(ab, x) for x in self.labels):
                    raise ValueError(f"action does not respect the product of {a} and {b}")


def permutation_character(g: SymmetricGroupData, action: GroupAction) -> Character:
    action.validate()
    return Character(g, tuple(Fraction(sum(1 for x in action.labels if action.act(r, x) == x))
                              for r in g.representatives()))


class NonEquivariantError(ValueError):
    def __init__(self, generator: Perm):
        super().__init__(f"map is not equivariant under {generator}")
        self.generator = generator


def _restricted_trace(p: RatMatrix, kernel: list) -> Fraction:
    basis = RatMatrix.from_columns(kernel, rows=p.rows)
    image = p @ basis
    # solve basis @ A = image via pivot rows of the basis
    _, piv_rows = rref(basis.transpose())
    sub = basis.submatrix(rows=piv_rows)
    target = image.submatrix(rows=piv_rows)
    aug = sub.hstack(target)
    reduced, piv = rref(aug)
    k = len(kernel)
    assert piv == list(range(k))
    a = [[reduced[i][k + j] for j in range(k)] for i in range(k)]
    assert (basis @ RatMatrix.from_rows(a, cols=k)) == image
    return sum((a[i][i] for i in range(k)), Fraction(0))


def representation_on_kernel(g: SymmetricGroupData, action: GroupAction, matrix: RatMatrix,
                             target_action: Callable[[Perm], RatMatrix] | None = None) -> Character:
    """Character of the group on ker(matrix), matrix: Q^labels -> Q^target.

    With ``target_action`` the commuting square is checked for each
    generator; without it, invariance of the kernel is checked instead.
    """
    action.validate()
    if matrix.cols != len(action.labels):
        raise ValueError("matrix columns must match the action's labels")
    kernel = kernel_basis_q(matrix)
    if not kernel:
        raise ValueError("kernel is zero")
    kmat = RatMatrix.from_columns(kernel, rows=matrix.cols)
    for s in g.generators():
        p = action.permutation_matrix(s)
        if target_action is not None:
            if matrix @ p != target_action(s) @ matrix:
                raise NonEquivariantError(s)
        elif not (matrix @ p @ kmat).is_zero():
            raise NonEquivariantError(s)
    return Character(g, tuple(_restricted_trace(action.permutation_matrix(r), kernel)
                              for r in g.representatives()))


# -- the representations carried by the components ------------------------------------

def lift_to_s6(g: Perm, support: Sequence[int]) -> Perm:
    """Let ``g`` act on ``support`` (sorted labels, order preserved) and fix the rest of 1..6."""
    support = sorted(support)
    img = {x: x for x in range(1, 7)}
    for k, x in enumerate(support):
        img[x] = support[g[k] - 1]
    return tuple(img[x] for x in range(1, 7))


def curve_action(g: SymmetricGroupData, s) -> GroupAction:
    """The stabilizer of component ``s`` (S5 for D(m), S4 for B(i,j)) permuting its curves."""
    from .incidence import DelPezzo, apply_s6, curves_on_component

    fixed = {s.m} if isinstance(s, DelPezzo) else set(s.pair)
    support = [x for x in range(1, 7) if x not in fixed]
    if len(support) != g.n:
        raise ValueError(f"S{g.n} does not act on the curves of {s}")
    return GroupAction(g, tuple(curves_on_component(s)),
                       lambda p, c: apply_s6(lift_to_s6(p, support), c))


def delta_action(g: SymmetricGroupData) -> GroupAction:
    """S5 on the ten boundary divisors Delta_{i,j}."""
    from itertools import combinations

    return GroupAction(g, tuple(combinations(range(1, 6), 2)),
                       lambda p, x: tuple(sorted(p[i - 1] for i in x)))


def boundary_class_map(s) -> RatMatrix:
    """Q^{curves on s} -> Pic(s) (column convention), each curve sent to its class."""
    from .incidence import curves_on_component
    from .surfaces import curve_class

    return RatMatrix.from_columns([curve_class(s, c).coefficients for c in curves_on_component(s)],
                                  rows=len(curve_class(s, curves_on_component(s)[0]).coefficients))


def boundary_kernel_character(m: int = 6) -> Character:
    """S5 on ker(B -> Pic(D(m))), which is H^1 of the open del Pezzo."""
    from .incidence import DelPezzo

    g = symmetric_group(5)
    s = DelPezzo(m)
    return representation_on_kernel(g, curve_action(g, s), boundary_class_map(s))


def blown_plane_relative_character(pair=(1, 2)) -> Character:
    """S4 on H^3(B, C) for B = B(i,j), computed on the kernel of the transposed restriction."""
    from .incidence import BlownPlane
    from .surfaces import restriction_matrix

    g = symmetric_group(4)
    s = BlownPlane(pair)
    return representation_on_kernel(g, curve_action(g, s), restriction_matrix(s).transpose())


def line_sum_character() -> Character:
    """S4 on the kernel of Q^4 -> Q, (four lines) -> (sum); the target is trivial."""
    g = symmetric_group(4)
    act = GroupAction(g, (1, 2, 3, 4), lambda p, x: p[x - 1])
    one = RatMatrix.from_rows([[1]])
    return representation_on_kernel(g, act, RatMatrix.from_rows([[1, 1, 1, 1]]), lambda p: one)


def s6_preserves_dual_complex() -> bool:
    """Both generators of S6 carry vertices, edges and triangles of the dual complex onto themselves."""
    from .combinatorics import build_dual_complex
    from .incidence import apply_s6

    lam = build_dual_complex()
    v = lam.vertices
    edges = {frozenset((v[a], v[b])) for a, b in lam.edges}
    tris = {frozenset((v[a], v[b], v[c])) for a, b, c in lam.triangles}
    for p in symmetric_group(6).generators():
        if {apply_s6(p, x) for x in v} != set(v):
            return False
        if {frozenset(apply_s6(p, x) for x in e) for e in edges} != edges:
            return False
        if {frozenset(apply_s6(p, x) for x in t) for t in tris} != tris:
            return False
    return True
