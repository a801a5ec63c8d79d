"""Independent brute-force oracles used by the tests.

Nothing here imports the package's own predicates; membership is decided
from first principles so the tests can catch a wrong predicate.
"""

from __future__ import annotations

from itertools import product
from math import factorial


def weakly_increasing(seq) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))


def cyclic_oracle(images, n) -> bool:
    """A map [m] -> [n] preserves the cyclic order iff some cyclic shift of the
    source, read after some rotation of the target labels, is weakly increasing."""
    m = len(images)
    for k in range(m):
        seq = [images[(k + i) % m] for i in range(m)]
        for r in range(n):
            if weakly_increasing([(x - 1 - r) % n for x in seq]):
                return True
    return False


def member(cat: str, images, n: int) -> bool:
    images = tuple(images)
    if cat == "FA":
        return True
    if cat == "OA":
        return weakly_increasing(images)
    if cat == "BA":
        return weakly_increasing(images) or weakly_increasing(images[::-1])
    if cat == "CA":
        return cyclic_oracle(images, n)
    if cat == "SA":
        return cyclic_oracle(images, n) or cyclic_oracle(tuple(n + 1 - x for x in images), n)
    raise ValueError(cat)


def brute_hom(cat: str, m: int, n: int, kind: str = "all") -> list[tuple[int, ...]]:
    out = []
    for f in product(range(1, n + 1), repeat=m):
        if not member(cat, f, n):
            continue
        if kind == "injective" and len(set(f)) != m:
            continue
        if kind == "surjective" and len(set(f)) != n:
            continue
        out.append(f)
    return out


def group_order(cat: str, n: int) -> int:
    return len(brute_hom(cat, n, n, "injective"))


def permutation_sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def rank_by_minors(rows) -> int:
    """Largest k with a nonzero k x k minor, via Leibniz expansion."""
    from fractions import Fraction
    from itertools import combinations, permutations

    r, c = len(rows), len(rows[0]) if rows else 0

    def det(mat):
        k = len(mat)
        total = Fraction(0)
        for perm in permutations(range(k)):
            term = Fraction(permutation_sign(perm))
            for i, j in enumerate(perm):
                term *= mat[i][j]
            total += term
        return total

    for k in range(min(r, c), 0, -1):
        for rs in combinations(range(r), k):
            for cs in combinations(range(c), k):
                if det([[rows[i][j] for j in cs] for i in rs]) != 0:
                    return k
    return 0


def count_all_maps(n: int, t: int) -> int:
    return n**t


def falling(n: int, i: int) -> int:
    return factorial(n) // factorial(n - i)


def compose(g, f):
    return tuple(g[x - 1] for x in f)


def _sign_values(cat: str, n: int, chi):
    """Values of a linear character as a dict on the brute-force group."""
    return {s: chi(s) for s in brute_hom(cat, n, n, "injective")}


def hom_oracle(cat: str, m: int, n: int, lam=None, mu=None) -> int:
    """dim of {v in span C+(n, m) : g.v has no injective terms for all surjections g: [m] -> [m-1],
    sigma.v = lam(sigma) v, v.tau = mu(tau) v}, by a dense sympy nullspace.

    lam and mu are callables on image tuples, or None for no condition.
    """
    import sympy

    cols = brute_hom(cat, n, m, "injective")
    index = {f: j for j, f in enumerate(cols)}
    rows = []
    if m >= 2:
        for g in brute_hom(cat, m, m - 1, "surjective"):
            acc: dict = {}
            for j, f in enumerate(cols):
                u = compose(g, f)
                if len(set(u)) == n:
                    acc.setdefault(u, [0] * len(cols))[j] += 1
            rows.extend(acc.values())
    if lam is not None:
        for s in brute_hom(cat, m, m, "injective"):
            for j, f in enumerate(cols):
                row = [0] * len(cols)
                row[index[compose(s, f)]] += 1
                row[j] -= lam(s)
                rows.append(row)
    if mu is not None:
        for s in brute_hom(cat, n, n, "injective"):
            for j, f in enumerate(cols):
                row = [0] * len(cols)
                row[index[compose(f, s)]] += 1
                row[j] -= mu(s)
                rows.append(row)
    if not cols:
        return 0
    if not rows:
        return len(cols)
    return len(cols) - sympy.Matrix(rows).rank()


def inverse_permutation(p):
    inv = [0] * len(p)
    for i, x in enumerate(p, start=1):
        inv[x - 1] = i
    return tuple(inv)
