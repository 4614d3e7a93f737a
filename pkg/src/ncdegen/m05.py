"""The ten (-1)-lines of the quintic del Pezzo surface, as boundary divisors of M_{0,5}-bar.

The surface is the plane blown up at the four points ``S(ijk) = {x_i=x_j=x_k}``
(``x_4 = 0``), ``{i,j,k}`` in ``{1..4}``.  Its lines are the proper transforms
``S(ij)`` of the six lines through two of the points and the four exceptional
curves ``S(ijk)``.  Picard basis: ``h, e1, e2, e3, e4`` with ``e_l`` the
exceptional curve over ``S({1..4} - {l})``.

Boundary dictionary used throughout::

    S(ij)  <->  Delta_{i,j}
    S(ijk) <->  Delta_{l,5},   {i,j,k,l} = {1..4}

This is the assignment under which two lines meet exactly when their
Delta-labels are disjoint (the Petersen graph).
"""

from __future__ import annotations

from itertools import combinations

FOUR = (1, 2, 3, 4)
BASIS = ("h", "e1", "e2", "e3", "e4")

Line = tuple[int, ...]

LINES: tuple[Line, ...] = tuple(combinations(FOUR, 2)) + tuple(combinations(FOUR, 3))


def _missing(s) -> list[int]:
    return [x for x in FOUR if x not in s]


def delta_label(line: Line) -> tuple[int, int]:
    if len(line) == 2:
        return tuple(sorted(line))
    (l,) = _missing(line)
    return (l, 5)


def line_of_delta(pair: tuple[int, int]) -> Line:
    a, b = sorted(pair)
    if b == 5:
        return tuple(x for x in FOUR if x != a)
    return (a, b)


def delta_class(pair: tuple[int, int]) -> tuple[int, ...]:
    """Class of Delta_{a,b}, a < b in 1..5, in the basis ``BASIS``."""
    a, b = sorted(pair)
    v = [0] * 5
    if b == 5:
        v[a] = 1
        return tuple(v)
    # proper transform of S(ab) passes through S(abc), S(abd): exceptional e_d, e_c
    v[0] = 1
    for c in _missing((a, b)):
        v[c] = -1
    return tuple(v)


def intersect(u, v) -> int:
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def lines_meet(a: Line, b: Line) -> bool:
    """Incidence from the Petersen adjacency of the Delta labels."""
    return a != b and not set(delta_label(a)) & set(delta_label(b))
