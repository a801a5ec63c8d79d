"""Corner algebras Psi_n kC(n, n) Psi_n and their primitive idempotents.

The decomposition runs in three stages:

1. the radical is the kernel of the trace form (x, y) -> tr(L_{xy}) of the
   left regular representation, which is exact in characteristic zero;
2. the semisimple quotient is split recursively: inside a corner fSf an
   element with reducible minimal polynomial yields orthogonal idempotents by
   the Chinese remainder theorem; a corner in which some element has an
   irreducible minimal polynomial of full degree is a field, hence f is
   primitive;
3. the idempotents are lifted one at a time through the radical with the
   iteration e <- 3e^2 - 2e^3.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from .algebra import AlgebraElement, LinearCharacter, normalized_hom_basis, psi
from .core import Category, Images
from .linalg import RationalMatrix

Vec = list[Fraction]


class IdempotentLiftError(RuntimeError):
    pass


@dataclass
class CornerAlgebra:
    """A finite-dimensional algebra given by a basis of elements of kC(n, n).

    The stored basis is in reduced echelon form with respect to the morphism
    coordinates, so the coordinates of an element are its values at the pivot
    morphisms.
    """

    category: Category
    n: int
    basis: tuple[AlgebraElement, ...]
    pivots: tuple[Images, ...]
    structure_constants: list[list[Vec]] = field(repr=False)
    unit: Vec = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: AlgebraElement) -> Vec:
        c = [x.coefficient(p) for p in self.pivots]
        if self.element(c) != x:
            raise ValueError("element does not lie in the corner algebra")
        return c

    def element(self, c: Sequence[Fraction]) -> AlgebraElement:
        terms: dict[Images, Fraction] = {}
        for ci, b in zip(c, self.basis):
            if ci:
                for k, v in b.terms.items():
                    terms[k] = terms.get(k, 0) + ci * v
        return AlgebraElement(self.category, self.n, self.n, terms)

    def mul(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
        out = [Fraction(0)] * self.dim
        sc = self.structure_constants
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = sc[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                w = ai * bj
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += w * c
        return out

    def left_matrix(self, a: Sequence[Fraction]) -> list[list[Fraction]]:
        cols = [self.mul(a, [Fraction(int(i == j)) for i in range(self.dim)]) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def is_commutative(self) -> bool:
        sc = self.structure_constants
        return all(sc[i][j] == sc[j][i] for i in range(self.dim) for j in range(i))


def algebra_from_basis(category: Category, n: int, spanning: Sequence[AlgebraElement]) -> CornerAlgebra:
    keys = sorted(set().union(*(b.terms for b in spanning))) if spanning else []
    index = {k: i for i, k in enumerate(keys)}
    mat = RationalMatrix.from_sparse_rows([{index[k]: v for k, v in b.terms.items()} for b in spanning], len(keys))
    rows, pivots = mat.rref()
    basis = tuple(AlgebraElement(category, n, n, {keys[j]: v for j, v in r.items()}) for r in rows)
    piv = tuple(keys[p] for p in pivots)
    alg = CornerAlgebra(category, n, basis, piv, [], [])
    alg.structure_constants = [[alg.coords(bi * bj) for bj in basis] for bi in basis]
    alg.unit = alg.coords(psi(category, n))
    return alg


@lru_cache(maxsize=None)
def corner_algebra(category: Category | str, n: int) -> CornerAlgebra:
    """Psi_n kC(n, n) Psi_n with a reduced echelon basis and its structure constants."""
    category = Category.parse(category)
    return algebra_from_basis(category, n, normalized_hom_basis(category, n, n).basis)


# ---------------------------------------------------------------------------
# helpers on coordinate vectors


def _add(a: Vec, b: Vec, c: Fraction = Fraction(1)) -> Vec:
    return [x + c * y for x, y in zip(a, b)]


def _scale(a: Vec, c: Fraction) -> Vec:
    return [c * x for x in a]


class _Reducer:
    """Canonical representatives modulo a subspace (reduced echelon rows)."""

    def __init__(self, vectors: list[Vec], dim: int) -> None:
        self.dim = dim
        if vectors:
            rows, pivots = RationalMatrix.from_rows(vectors, dim).rref()
        else:
            rows, pivots = [], []
        self.rows = list(zip(pivots, rows))

    def __call__(self, x: Vec) -> Vec:
        x = list(x)
        for p, row in self.rows:
            c = x[p]
            if c:
                for j, v in row.items():
                    x[j] -= c * v
        return x


def radical_basis(A: CornerAlgebra) -> list[Vec]:
    """Kernel of the trace form of the left regular representation."""
    k = A.dim
    traces = []
    for i in range(k):
        e = [Fraction(int(j == i)) for j in range(k)]
        L = A.left_matrix(e)
        traces.append(sum(L[r][r] for r in range(k)))
    form = [[sum(c * t for c, t in zip(A.structure_constants[i][j], traces)) for j in range(k)] for i in range(k)]
    return RationalMatrix.from_rows(form, k).nullspace_basis() if k else []


def _poly_eval(A: CornerAlgebra, red: _Reducer, coeffs: list, x: Vec, one: Vec) -> Vec:
    """coeffs are highest degree first (sympy order)."""
    acc = [Fraction(0)] * A.dim
    for c in coeffs:
        acc = red(A.mul(acc, x))
        c = Fraction(int(c.p), int(c.q)) if hasattr(c, "p") else Fraction(c)
        acc = _add(acc, one, c)
    return red(acc)


def _minimal_polynomial(A: CornerAlgebra, red: _Reducer, x: Vec, one: Vec):
    t = sympy.Symbol("t")
    powers = [red(one)]
    while True:
        nxt = red(A.mul(powers[-1], x))
        mat = RationalMatrix.from_rows([list(p) for p in powers], A.dim).transpose()
        # solve sum c_i p_i = nxt
        aug = RationalMatrix.from_rows(
            [[mat[i, j] for j in range(len(powers))] + [-nxt[i]] for i in range(A.dim)], len(powers) + 1
        )
        ns = [v for v in aug.nullspace_basis() if v[-1] != 0]
        if ns:
            v = ns[0]
            v = [c / v[-1] for c in v]
            # t^d = sum_i c_i t^i with c_i = -v_i
            coeffs = {len(powers): 1}
            for i, c in enumerate(v[:-1]):
                coeffs[i] = coeffs.get(i, 0) - c
            expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i if isinstance(c, Fraction)
                       else sympy.Integer(c) * t**i for i, c in coeffs.items())
            return sympy.Poly(expr, t, domain="QQ")
        powers.append(nxt)
        if len(powers) > A.dim + 1:
            raise RuntimeError("minimal polynomial search did not terminate")


def _corner_span(A: CornerAlgebra, red: _Reducer, f: Vec) -> tuple[list[Vec], list[Vec]]:
    """(rref basis, raw generators f b f) of the corner f S f of the semisimple quotient."""
    vecs = []
    for i in range(A.dim):
        e = [Fraction(int(j == i)) for j in range(A.dim)]
        vecs.append(red(A.mul(A.mul(f, e), f)))
    nz = [v for v in vecs if any(v)]
    if not nz:
        return [], []
    rows, _ = RationalMatrix.from_rows(nz, A.dim).rref()
    return [[r.get(j, Fraction(0)) for j in range(A.dim)] for r in rows], nz


def _candidates(A: CornerAlgebra, red: _Reducer, span: list[Vec], raw: list[Vec]):
    """Splitting candidates, cheapest first.  The images of basis morphisms come
    first (group elements such as reflections split dihedral blocks), then sums,
    products and seeded random combinations for blocks like M_2(K)."""
    yield from raw
    yield from span
    for a, b in itertools.combinations(range(len(span)), 2):
        yield _add(span[a], span[b], Fraction(2))
    for a, b in itertools.product(range(len(raw)), repeat=2):
        yield red(A.mul(raw[a], raw[b]))
    rng = random.Random(len(span))
    for _ in range(64):
        x = [Fraction(0)] * len(span[0])
        y = [Fraction(0)] * len(span[0])
        for s in span:
            x = _add(x, s, Fraction(rng.randint(-5, 5)))
            y = _add(y, s, Fraction(rng.randint(-5, 5)))
        yield x
        yield red(A.mul(x, y))


def _split(A: CornerAlgebra, red: _Reducer, f: Vec) -> list[Vec]:
    span, raw = _corner_span(A, red, f)
    if len(span) <= 1:
        return [f]
    for x in _candidates(A, red, span, raw):
        if not any(x):
            continue
        p = _minimal_polynomial(A, red, x, f)
        _, factors = sympy.factor_list(p.as_expr(), p.gens[0])
        factors = [sympy.Poly(q, p.gens[0], domain="QQ") for q, _ in factors if sympy.Poly(q, p.gens[0]).degree() > 0]
        if len(factors) > 1:
            total = sympy.Poly(1, p.gens[0], domain="QQ")
            for q in factors:
                total *= q
            pieces = []
            for q in factors:
                rest = sympy.Poly(sympy.quo(total.as_expr(), q.as_expr(), p.gens[0]), p.gens[0], domain="QQ")
                s, tt, h = sympy.gcdex(q, rest)
                if h.as_expr() != 1:
                    raise RuntimeError("minimal polynomial in a semisimple algebra has a repeated factor")
                e_poly = (tt * rest).rem(total)
                pieces.append(_poly_eval(A, red, e_poly.all_coeffs(), x, f))
            out = []
            for piece in pieces:
                out.extend(_split(A, red, piece))
            return out
        if p.degree() == len(span):
            # f S f = Q[x] is a field
            return [f]
    raise RuntimeError(f"could not split a corner of dimension {len(span)}; no splitting element found")


def _newton_lift(A: CornerAlgebra, x: Vec) -> Vec:
    e = x
    for _ in range(A.dim + 2):
        e2 = A.mul(e, e)
        if e2 == e:
            return e
        e3 = A.mul(e2, e)
        e = [3 * a - 2 * b for a, b in zip(e2, e3)]
    raise IdempotentLiftError("idempotent lifting did not stabilise within dim(E) iterations")


@lru_cache(maxsize=None)
def _primitive_coords(category: Category, n: int) -> tuple[tuple[Fraction, ...], ...]:
    A = corner_algebra(category, n)
    red = _Reducer(radical_basis(A), A.dim)
    semisimple = _split(A, red, red(A.unit))
    lifted: list[Vec] = []
    rest = list(A.unit)
    for i, ebar in enumerate(semisimple):
        if i == len(semisimple) - 1:
            e = rest
            if A.mul(e, e) != e:
                raise IdempotentLiftError("remaining idempotent is not idempotent")
        else:
            e = _newton_lift(A, A.mul(A.mul(rest, ebar), rest))
        lifted.append(e)
        rest = _add(rest, e, Fraction(-1))
    # completeness and orthogonality are contracts, not hopes
    total = [Fraction(0)] * A.dim
    for i, a in enumerate(lifted):
        total = _add(total, a)
        for j, b in enumerate(lifted):
            prod = A.mul(a, b)
            if i == j and prod != a:
                raise IdempotentLiftError("lifted element is not idempotent")
            if i != j and any(prod):
                raise IdempotentLiftError("lifted idempotents are not orthogonal")
    if total != A.unit:
        raise IdempotentLiftError("lifted idempotents do not sum to the unit")
    return tuple(tuple(e) for e in lifted)


def primitive_idempotents(E: CornerAlgebra) -> list[AlgebraElement]:
    """A complete family of pairwise orthogonal primitive idempotents summing to Psi_n."""
    return [E.element(list(c)) for c in _primitive_coords(E.category, E.n)]


def automorphism_part(x: AlgebraElement) -> dict[Images, Fraction]:
    """Image of x under kC(n, n) -> kG_n, which kills every non-bijective morphism."""
    return {k: v for k, v in x.terms.items() if len(set(k)) == x.source}


def character_value(chi: LinearCharacter, x: AlgebraElement) -> Fraction:
    """chi extended linearly to the bijective part of x."""
    return sum((v * chi(k) for k, v in automorphism_part(x).items()), Fraction(0))


def match_character(e: AlgebraElement, characters: Sequence[LinearCharacter]) -> LinearCharacter | None:
    """The linear character on whose line the idempotent e acts as 1, if any."""
    hits = [chi for chi in characters if character_value(chi, e) == 1]
    others = [chi for chi in characters if character_value(chi, e) not in (0, 1)]
    if others or len(hits) > 1:
        raise ValueError("ambiguous idempotent-to-character matching")
    return hits[0] if hits else None
