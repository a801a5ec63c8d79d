"""Closed-form expectations: group orders, the Hom and Ext tables, singular
pairs, the quiver of the singular block and the FA growth formulas.

Every function returns the value as stated in closed form, even where the
computation disagrees; the comparison is left to the verification suite.
Values that the closed forms leave open are returned as None.
"""

from __future__ import annotations

from math import factorial
from typing import Callable

from .algebra import LinearCharacter, linear_characters
from .core import Category, Images, automorphism_group, reflection, rotation

CYCLIC = (Category.CA, Category.SA)


def group_order(category: Category | str, n: int) -> int | None:
    category = Category.parse(category)
    if n == 1:
        return 1
    if category is Category.FA:
        return factorial(n)
    if category is Category.OA:
        return 1
    if category is Category.CA:
        return n
    if category is Category.BA:
        return 2
    return 2 * n if n >= 3 else None


def component_bound(category: Category | str) -> int:
    """Largest number of components a mutation graph may have."""
    return 2 if Category.parse(category) in (Category.BA, Category.SA) else 1


def components_d(category: Category | str, n: int) -> int:
    """The stated value of d, the number of components of Gamma_{n, n+1}."""
    category = Category.parse(category)
    if category in (Category.BA, Category.SA) and n >= 2:
        return 2
    return 1


def hom_dim(category: Category | str, m: int, n: int) -> int | None:
    """dim Hom(Delta_m, Delta_n): |G_n| on the diagonal, d just below it, 0 elsewhere."""
    if m == n:
        return group_order(category, n)
    if m == n + 1:
        return components_d(category, n)
    return 0


def ext_dim(category: Category | str, m: int, n: int) -> int:
    """dim Ext^1(Delta_m, Delta_n) for CA and SA, m >= 3."""
    if m in (n + 1, n + 2):
        return components_d(category, n)
    return 0


def psi_image_dim(category: Category | str, m: int, n: int) -> int | None:
    """dim Psi_m Delta_n(m) in the cases worked out in closed form."""
    category = Category.parse(category)
    if m == n:
        return group_order(category, n)
    if m == n + 2:
        return 0
    if m == n + 1 and category is Category.CA:
        return n
    return None


# ---------------------------------------------------------------------------
# characters


def permutation_sign(p: Images) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def character_matching(category: Category, n: int, rule: Callable[[Images], int]) -> LinearCharacter:
    """The linear character of G_n whose value on every element agrees with rule."""
    group = automorphism_group(category, n)
    for chi in linear_characters(category, n):
        if all(chi(s) == rule(s.images) for s in group.elements):
            return chi
    raise ValueError(f"no linear character of G_{n} in {category} matches the rule")


def dihedral_character(category: Category, n: int, rot: int, ref: int) -> LinearCharacter:
    """Values rot on j -> j+1 and ref on the reversal j -> n+1-j."""
    r, t = rotation(n, Category.FA).images, reflection(n, Category.FA).images
    for chi in linear_characters(category, n):
        if chi(r) == rot and chi(t) == ref:
            return chi
    raise ValueError(f"G_{n} of {category} has no character with rot={rot}, ref={ref}")


def _triv(category: Category, n: int) -> LinearCharacter:
    return linear_characters(category, n)[0]


def _sgn(category: Category, n: int) -> LinearCharacter:
    """The sign character: the permutation sign for FA, and otherwise the character
    that is -1 on the reversal j -> n+1-j and +1 on rotations (on G_1 it is trivial)."""
    if category is Category.FA or n == 1:
        return character_matching(category, n, permutation_sign)
    rev = reflection(n, Category.FA).images
    rot = rotation(n, Category.FA).images
    group = {s.images for s in automorphism_group(category, n).elements}
    for chi in linear_characters(category, n):
        if chi(rev) == -1 and (rot not in group or rot == rev or chi(rot) == 1):
            return chi
    raise ValueError(f"G_{n} of {category} has no sign character")


def singular_pairs(category: Category | str, n: int) -> list[tuple[LinearCharacter, LinearCharacter]]:
    """The stated pairs (lambda on G_{n+1}, mu on G_n) with Hom(Delta_{n+1, lambda}, Delta_{n, mu}) != 0.

    For SA with n >= 3 the reflection generator is the reversal j -> n+1-j
    in both groups.  For SA with n = 2, mu^+ and mu^- are the two characters
    of G_2 = C_2 with the stated value on its single non-identity element.
    """
    category = Category.parse(category)
    nxt = n + 1
    if category is Category.FA:
        return [(_sgn(category, nxt), _sgn(category, n))]
    if category is Category.OA:
        return [(_triv(category, nxt), _triv(category, n))]
    if category is Category.CA:
        lam = character_matching(category, nxt, _rotation_power_rule(nxt, (-1) ** n))
        mu = character_matching(category, n, _rotation_power_rule(n, (-1) ** (n - 1)))
        return [(lam, mu)]
    if category is Category.BA:
        if n == 1:
            return [(_sgn(category, nxt), _sgn(category, n))]
        return [(_triv(category, nxt), _triv(category, n)), (_sgn(category, nxt), _sgn(category, n))]
    # SA
    if n == 1:
        return [(_sgn(category, nxt), _sgn(category, n))]
    if n == 2:
        mu_plus = _triv(category, 2)
        mu_minus = _sgn(category, 2)
        return [(_triv(category, 3), mu_plus), (_sgn(category, 3), mu_minus)]
    return [
        (dihedral_character(category, nxt, (-1) ** n, s), dihedral_character(category, n, (-1) ** (n - 1), s))
        for s in (1, -1)
    ]


def _rotation_power_rule(n: int, value: int) -> Callable[[Images], int]:
    """chi(rot^k) = value^k on the cyclic group generated by j -> j+1."""

    def rule(p: Images) -> int:
        k = (p[0] - 1) % n  # rot^k sends 1 to 1 + k
        return value**k

    return rule


def singular_targets(category: Category | str, n: int) -> set[LinearCharacter]:
    return {mu for _, mu in singular_pairs(category, n)}


# ---------------------------------------------------------------------------
# the singular block and FA


def end_dim_singular(n: int) -> int:
    """dim End of the projective cover of a singular standard module at n >= 2."""
    return 2 if n >= 2 else 1


def fa_ext_dim(n: int) -> int:
    """dim Ext^1(Delta_n, Delta_{n-1}) for FA."""
    return (n - 1) * factorial(n) // 2 + 1 - factorial(n)


def normalized_dims(category: Category | str, n: int) -> dict[str, int | None]:
    """Upper bounds for dim K(n, n+1), K(n, n), K(n+1, n) from the spanning sets."""
    category = Category.parse(category)
    g = automorphism_group(category, n).order
    g_prev = automorphism_group(category, n - 1).order if n >= 2 else 0
    cyclic = category in CYCLIC
    return {
        "up": g,
        "diag": g + (g_prev if cyclic else 0),
        "down": g if cyclic else 0,
    }


# ---------------------------------------------------------------------------
# drawn mutation graphs, as (category, m, n) -> edge list on image tuples

FIGURES: dict[tuple[Category, int, int], list[tuple[Images, Images]]] = {
    (Category.FA, 2, 3): [
        ((1, 2), (1, 3)), ((1, 3), (2, 3)), ((2, 3), (2, 1)),
        ((2, 1), (3, 1)), ((3, 1), (3, 2)), ((3, 2), (1, 2)),
    ],
    (Category.OA, 2, 4): [
        ((1, 2), (1, 3)), ((1, 3), (1, 4)), ((1, 4), (2, 4)), ((2, 4), (3, 4)),
        ((2, 3), (1, 3)), ((2, 3), (2, 4)),
    ],
    (Category.BA, 2, 4): [
        ((1, 2), (1, 3)), ((1, 3), (2, 3)),
        ((3, 2), (3, 1)), ((3, 1), (2, 1)),
    ],
}


def figure_shape(edges: list[tuple[Images, Images]]) -> tuple[int, list[int], list[int]]:
    """(vertex count, sorted degree sequence, sorted component sizes) of an edge list."""
    adj: dict[Images, set[Images]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen: set[Images] = set()
    sizes = []
    for v in adj:
        if v in seen:
            continue
        stack, size = [v], 0
        seen.add(v)
        while stack:
            u = stack.pop()
            size += 1
            for w in adj[u] - seen:
                seen.add(w)
                stack.append(w)
        sizes.append(size)
    return len(adj), sorted(len(x) for x in adj.values()), sorted(sizes)
