"""Print the character tables of S4, S5, S6 via the Murnaghan-Nakayama rule.

Output is the literal embedded in ncdegen.symmetry.
"""

from functools import lru_cache


def partitions(n, maxpart=None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _beta(shape, length):
    return [shape[i] + (length - 1 - i) if i < len(shape) else length - 1 - i for i in range(length)]


@lru_cache(maxsize=None)
def mn(shape, cycles):
    """chi^shape at cycle type ``cycles`` via border-strip removal on beta-numbers."""
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    L = len(shape) + r
    beta = _beta(shape, L)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta:
            continue
        sign = (-1) ** sum(1 for x in beta if nb < x < b)
        new = sorted([x for x in beta if x != b] + [nb], reverse=True)
        lam = tuple(x - (L - 1 - k) for k, x in enumerate(new))
        lam = tuple(x for x in lam if x > 0)
        total += sign * mn(lam, rest)
    return total


if __name__ == "__main__":
    for n in (4, 5, 6):
        classes = sorted(partitions(n))
        irreps = list(partitions(n))
        print(f"n={n} classes={classes}")
        for lam in irreps:
            print(f"    {lam}: {tuple(mn(lam, c) for c in classes)},")
