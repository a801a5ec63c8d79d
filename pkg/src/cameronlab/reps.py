"""Standard modules Delta_n, Hom and Ext between them, singular pairs, and the
numerical shadows of the normalisation results.

Delta_n(t) has the injections [n] -> [t] as basis; a morphism acts by
post-composition, and a composite that is not injective is zero.  An element
of Delta_n(t) is a sparse dict from injective image tuples to rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .algebra import (
    AlgebraElement,
    LinearCharacter,
    bold_d,
    character_idempotent,
    linear_characters,
    normalized_hom_basis,
    psi,
)
from .core import (
    Category,
    Images,
    automorphism_group,
    compose_images,
    cyclic_degeneracy,
    hom_count,
    hom_images,
)
from .corner import corner_algebra, match_character, primitive_idempotents
from .linalg import RationalMatrix, SparseEchelon, span_rank
from .mutation import build_mutation_graph
from .report import CLOSED_FORM, DERIVED, TRIVIAL, VerificationReport

Vector = dict[Images, Fraction]
CYCLIC = (Category.CA, Category.SA)


def _injective(t: Images) -> bool:
    return len(set(t)) == len(t)


# ---------------------------------------------------------------------------
# standard modules


def standard_dim(category: Category | str, n: int, t: int) -> int:
    """dim Delta_n(t) = number of injections [n] -> [t]."""
    return hom_count(category, n, t, "injective")


def act(a: Images, v: Mapping[Images, Fraction]) -> Vector:
    """a . v in a standard module: post-compose, drop non-injective composites."""
    out: Vector = {}
    for f, c in v.items():
        k = compose_images(a, f)
        if _injective(k):
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def act_element(x: AlgebraElement, v: Mapping[Images, Fraction]) -> Vector:
    out: Vector = {}
    for a, c in x.terms.items():
        for k, w in act(a, v).items():
            out[k] = out.get(k, 0) + c * w
    return {k: c for k, c in out.items() if c}


def right_act(v: Mapping[Images, Fraction], x: AlgebraElement) -> Vector:
    """v . x for x in kG_n acting by pre-composition (always injective)."""
    out: Vector = {}
    for f, c in v.items():
        for s, w in x.terms.items():
            k = compose_images(f, s)
            out[k] = out.get(k, 0) + c * w
    return {k: c for k, c in out.items() if c}


@dataclass(frozen=True)
class StandardModuleSlice:
    category: Category
    n: int
    t: int
    basis: tuple[Images, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def action_matrix(self, a: Images) -> RationalMatrix:
        """Matrix of a: [t] -> [t'] from Delta_n(t) to Delta_n(t')."""
        t2 = max(a)
        target = hom_images(self.category, self.n, max(t2, len(a) and t2), "injective")
        index = {f: i for i, f in enumerate(target)}
        entries = {}
        for j, f in enumerate(self.basis):
            k = compose_images(a, f)
            if _injective(k) and k in index:
                entries[(index[k], j)] = Fraction(1)
        return RationalMatrix(len(target), self.dim, entries)


def standard_slice(category: Category | str, n: int, t: int) -> StandardModuleSlice:
    category = Category.parse(category)
    return StandardModuleSlice(category, n, t, hom_images(category, n, t, "injective"))


# ---------------------------------------------------------------------------
# Hom between standard modules


@dataclass(frozen=True)
class HomSpace:
    category: Category
    m: int
    n: int
    basis: tuple[Vector, ...]
    source_character: LinearCharacter | None = None
    target_character: LinearCharacter | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)


def star_constraints(category: Category, m: int, n: int) -> tuple[list[Images], list[dict[int, int]]]:
    """Columns C+(n, m) and one row per (g, u) with g in C-(m, m-1), u = g f injective."""
    cols = list(hom_images(category, n, m, "injective"))
    rows: dict[tuple[Images, Images], dict[int, int]] = {}
    if m >= 2:
        for g in hom_images(category, m, m - 1, "surjective"):
            for j, f in enumerate(cols):
                u = compose_images(g, f)
                if _injective(u):
                    rows.setdefault((g, u), {})[j] = rows.get((g, u), {}).get(j, 0) + 1
    return cols, [rows[k] for k in sorted(rows)]


@lru_cache(maxsize=None)
def hom_standard(category: Category | str, m: int, n: int) -> HomSpace:
    """Hom(Delta_m, Delta_n) as the v in kC+(n, m) with g.v free of injective terms
    for every surjection g: [m] -> [m-1]."""
    category = Category.parse(category)
    if m < 1 or n < 1:
        raise ValueError("objects start at [1]")
    cols, rows = star_constraints(category, m, n)
    if not cols:
        return HomSpace(category, m, n, ())
    mat = RationalMatrix.from_sparse_rows(rows, len(cols))
    basis = tuple({cols[j]: x for j, x in enumerate(v) if x} for v in mat.nullspace_basis())
    return HomSpace(category, m, n, basis)


def hom_dim_standard(category: Category | str, m: int, n: int) -> int:
    return hom_standard(category, m, n).dim


def satisfies_star(category: Category | str, m: int, v: Mapping[Images, Fraction]) -> bool:
    category = Category.parse(category)
    if m < 2:
        return True
    return all(not act(g, v) for g in hom_images(category, m, m - 1, "surjective"))


def _check_group(chi: LinearCharacter | None, category: Category, size: int, role: str) -> None:
    if chi is None:
        return
    if chi.group.category is not category or chi.n != size:
        raise ValueError(f"{role} character lives on G_{chi.n} of {chi.group.category}, expected G_{size} of {category}")


def hom_dim_refined(
    category: Category | str,
    m: int,
    lam: LinearCharacter | None,
    n: int,
    mu: LinearCharacter | None,
) -> int:
    """dim Hom(Delta_{m, lam}, Delta_{n, mu}); None means the whole standard module.

    mu cuts the target by pre-composition with G_n, lam extracts the isotypic
    part under post-composition with G_m.
    """
    category = Category.parse(category)
    _check_group(lam, category, m, "source")
    _check_group(mu, category, n, "target")
    space = hom_standard(category, m, n)
    vecs: Iterable[Vector] = space.basis
    if mu is not None:
        e_mu = character_idempotent(mu)
        vecs = [right_act(v, e_mu) for v in vecs]
    if lam is not None:
        e_lam = character_idempotent(lam)
        vecs = [_left_group_act(e_lam, v) for v in vecs]
    return span_rank(v for v in vecs if v)


def _left_group_act(x: AlgebraElement, v: Mapping[Images, Fraction]) -> Vector:
    # automorphisms keep injections injective, so this is plain post-composition
    return act_element(x, v)


# ---------------------------------------------------------------------------
# singular pairs


@dataclass(frozen=True)
class SingularPair:
    category: Category
    n: int
    lam: LinearCharacter  # on G_{n+1}
    mu: LinearCharacter  # on G_n
    witness: Vector

    @property
    def names(self) -> tuple[str, str]:
        return self.lam.name, self.mu.name

    def __str__(self) -> str:
        return f"({self.lam.name}, {self.mu.name})"


class SingularClassificationError(RuntimeError):
    pass


def component_vectors(category: Category | str, n: int) -> list[Vector]:
    """Alternating sums over the components of Gamma_{n, n+1}."""
    graph = build_mutation_graph(category, n, n + 1)
    out: dict[int, Vector] = {}
    for v, c, s in zip(graph.vertices, graph.components, graph.signs or []):
        out.setdefault(c, {})[v] = Fraction(s)
    return [out[c] for c in sorted(out)]


@lru_cache(maxsize=None)
def classify_singular_pairs(category: Category | str, n: int) -> tuple[SingularPair, ...]:
    """All (lam, mu) with e_lam V e_mu != 0, V spanned by the component vectors."""
    category = Category.parse(category)
    vecs = component_vectors(category, n)
    lams = linear_characters(category, n + 1)
    mus = linear_characters(category, n)
    pairs = []
    total = 0
    for lam in lams:
        e_l = character_idempotent(lam)
        for mu in mus:
            e_m = character_idempotent(mu)
            projected = [right_act(_left_group_act(e_l, v), e_m) for v in vecs]
            ech = SparseEchelon()
            witness = None
            for p in projected:
                if p and ech.add(p):
                    witness = witness or p
            total += ech.rank
            if ech.rank:
                pairs.append(SingularPair(category, n, lam, mu, witness))
    if total != len(vecs):
        raise SingularClassificationError(
            f"{category} n={n}: component vectors are not spanned by +-1 bi-eigenvectors "
            f"({total} of {len(vecs)} dimensions found)"
        )
    return tuple(pairs)


def singular_characters(category: Category | str, n: int) -> tuple[LinearCharacter, ...]:
    """Characters of G_n that occur as the target half of a singular pair at n."""
    return tuple(dict.fromkeys(p.mu for p in classify_singular_pairs(category, n)))


# ---------------------------------------------------------------------------
# Psi on standard modules and Ext for CA / SA


def _psi_image_vectors(category: Category, m: int, n: int, mu: LinearCharacter | None = None) -> list[Vector]:
    p = psi(category, m)
    e_mu = character_idempotent(mu) if mu is not None else None
    out = []
    for f in hom_images(category, n, m, "injective"):
        w = act_element(p, {f: Fraction(1)})
        if e_mu is not None:
            w = right_act(w, e_mu)
        if w:
            out.append(w)
    return out


def psi_image_basis(category: Category | str, m: int, n: int, mu: LinearCharacter | None = None) -> list[Vector]:
    category = Category.parse(category)
    ech = SparseEchelon()
    return [v for v in _psi_image_vectors(category, m, n, mu) if ech.add(v)]


def psi_image_dim(category: Category | str, m: int, n: int) -> int:
    """dim Psi_m Delta_n(m) = dim Hom(kC Psi_m, Delta_n)."""
    category = Category.parse(category)
    return span_rank(_psi_image_vectors(category, m, n))


def ext_dim_standard(category: Category | str, m: int, n: int, mu: LinearCharacter | None = None) -> int:
    """dim Ext^1(Delta_m, Delta_n e_mu) for CA and SA, m >= 3.

    From 0 -> Delta_{m-1} -> kC Psi_m -> Delta_m -> 0: Ext^1 is the cokernel of
    Psi_m Delta_n(m) -> Hom(Delta_{m-1}, Delta_n), w -> s_m . w.
    """
    category = Category.parse(category)
    if category not in CYCLIC:
        raise ValueError("ext_dim_standard covers CA and SA")
    if m < 3:
        raise ValueError("Delta_1 and Delta_2 are projective; Ext is computed for m >= 3")
    _check_group(mu, category, n, "target")
    s_m = cyclic_degeneracy(m, category).images
    restricted = [act(s_m, w) for w in psi_image_basis(category, m, n, mu)]
    image_rank = span_rank(w for w in restricted if w)
    hom_prev = hom_standard(category, m - 1, n)
    if mu is None:
        hom_prev_dim = hom_prev.dim
    else:
        e_mu = character_idempotent(mu)
        hom_prev_dim = span_rank(w for v in hom_prev.basis if (w := right_act(v, e_mu)))
    for w in restricted:
        if w and not satisfies_star(category, m - 1, w):
            raise AssertionError("restriction landed outside Hom(Delta_{m-1}, Delta_n)")
    return hom_prev_dim - image_rank


def ext_consistency(category: Category | str, m: int, n: int) -> int:
    """Alternating sum of the four-term exact sequence; zero when everything is consistent."""
    return (
        psi_image_dim(category, m, n)
        - hom_dim_standard(category, m, n)
        - hom_dim_standard(category, m - 1, n)
        + ext_dim_standard(category, m, n)
    )


# ---------------------------------------------------------------------------
# Ext^1(Delta_n, Delta_{n-1}) for FA


@dataclass(frozen=True)
class FAExtResult:
    n: int
    cutoff: int
    dim: int
    stabilized: bool
    hom_ideal_dims: tuple[int, ...]  # dim Hom(ideal_n, Delta_{n-1}) with relations up to T-1 and T

    @property
    def status(self) -> str:
        return "stable" if self.stabilized else "inconclusive"


def _fa_ideal_hom_dim(n: int, cutoff: int) -> int:
    """Dimension of the maps phi on generators g in C-(n, n-1), phi(g) in kG_{n-1},
    that respect every coincidence x g = x' g' of morphisms [n] -> [t], t <= cutoff."""
    cat = Category.FA
    gens = hom_images(cat, n, n - 1, "surjective")
    group = hom_images(cat, n - 1, n - 1, "injective")
    unknown = {(g, s): i for i, (g, s) in enumerate((g, s) for g in gens for s in group)}
    ech = SparseEchelon()
    for t in range(n - 1, cutoff + 1):
        for f in hom_images(cat, n, t):
            if _injective(f) or len(set(f)) < n - 1:
                # rank < n-1: every factor x is non-injective and acts by zero
                continue
            vectors = []
            for g in gens:
                # g must refine the fibres of f; x is then forced on the fibres of g
                x: dict[int, int] = {}
                ok = True
                for gi, fi in zip(g, f):
                    if x.setdefault(gi, fi) != fi:
                        ok = False
                        break
                if not ok:
                    continue
                xt = tuple(x[i] for i in range(1, n))
                # x . phi(g) = sum_s phi(g)_s (x s); coordinates indexed by the injection x s
                vec = {}
                for s in group:
                    vec[(compose_images(xt, s), unknown[(g, s)])] = 1
                vectors.append(vec)
            first = vectors[0]
            for other in vectors[1:]:
                diff: dict = {}
                for (coord, var), c in first.items():
                    diff.setdefault(coord, {})[var] = diff.get(coord, {}).get(var, 0) + c
                for (coord, var), c in other.items():
                    diff.setdefault(coord, {})[var] = diff.get(coord, {}).get(var, 0) - c
                for row in diff.values():
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        ech.add(row)
    return len(unknown) - ech.rank


@lru_cache(maxsize=None)
def ext_dim_fa(n: int, cutoff: int | None = None) -> FAExtResult:
    """dim Ext^1(Delta_n, Delta_{n-1}) in FA via Hom(ideal_n, Delta_{n-1}).

    Relations among the generators of the ideal are collected in degrees up to
    the cutoff T (default n + 2); the answer is flagged stable when the degrees
    T - 1 and T agree.
    """
    if n < 3:
        raise ValueError("FA Ext is computed for n >= 3")
    T = cutoff if cutoff is not None else n + 2
    if T < n + 1:
        raise ValueError("cutoff must be at least n + 1")
    dims = (_fa_ideal_hom_dim(n, T - 1), _fa_ideal_hom_dim(n, T))
    # image of Hom(P_n, Delta_{n-1}) = Delta_{n-1}(n) modulo the maps that kill the ideal
    image = standard_dim(Category.FA, n - 1, n) - hom_dim_standard(Category.FA, n, n - 1)
    return FAExtResult(n, T, dims[1] - image, dims[0] == dims[1], dims)


def fa_ext_closed_form(n: int) -> int:
    return (n - 1) * factorial(n) // 2 + 1 - factorial(n)


# ---------------------------------------------------------------------------
# filtration identities


def right_psi_rank(category: Category | str, n: int, t: int) -> int:
    """rank of x -> x Psi_n on kC(n, t)."""
    category = Category.parse(category)
    p = psi(category, n)
    vecs = []
    for f in hom_images(category, n, t):
        v: dict = {}
        for a, c in p.terms.items():
            k = compose_images(f, a)
            v[k] = v.get(k, 0) + c
        vecs.append(v)
    return span_rank(vecs)


def filtration_count(category: Category | str, n: int, t: int) -> int:
    """sum over l of |C+(l, t)| |C-(n, l)| / |G_l|."""
    category = Category.parse(category)
    total = 0
    for l in range(1, min(n, t) + 1):
        num = hom_count(category, l, t, "injective") * hom_count(category, n, l, "surjective")
        g = automorphism_group(category, l).order
        if num % g:
            raise ArithmeticError(f"{num} not divisible by |G_{l}| = {g}")
        total += num // g
    return total


def expected_psi_rank(category: Category, n: int, t: int) -> int:
    if category in CYCLIC and n >= 3:
        return standard_dim(category, n, t) + standard_dim(category, n - 1, t)
    return standard_dim(category, n, t)


def check_filtration_identity(category: Category | str, n_max: int, t_max: int) -> VerificationReport:
    category = Category.parse(category)
    rep = VerificationReport("filtration", category.value)
    for n in range(1, n_max + 1):
        for t in range(1, t_max + 1):
            rep.record("hom_count_filtration", {"n": n, "t": t}, hom_count(category, n, t),
                       filtration_count(category, n, t), DERIVED, "representables filtered by standard modules")
            if category is not Category.FA:
                rep.record("psi_rank", {"n": n, "t": t}, expected_psi_rank(category, n, t),
                           right_psi_rank(category, n, t), CLOSED_FORM,
                           "kC Psi_n is Delta_n, or an extension of Delta_n by Delta_{n-1} for CA, SA with n >= 3")
    return rep


def check_restriction_identity(category: Category | str, n_max: int, t_max: int) -> VerificationReport:
    category = Category.parse(category)
    rep = VerificationReport("restriction", category.value)
    for n in range(1, n_max + 1):
        for t in range(n, t_max + 1):
            rep.record("injections_by_group", {"n": n, "t": t},
                       automorphism_group(category, n).order * comb(t, n), standard_dim(category, n, t),
                       CLOSED_FORM, "restriction of Delta_n to OA splits into |G_n| copies")
    return rep


# ---------------------------------------------------------------------------
# FA sign projectivity


def right_idempotent_rank(category: Category | str, n: int, t: int, e: AlgebraElement) -> int:
    category = Category.parse(category)
    vecs = []
    for f in hom_images(category, n, t):
        v: dict = {}
        for a, c in e.terms.items():
            k = compose_images(f, a)
            v[k] = v.get(k, 0) + c
        vecs.append(v)
    return span_rank(vecs)


def check_fa_sgn_projectivity(n: int, t_max: int) -> VerificationReport:
    rep = VerificationReport("fa_sgn", Category.FA.value)
    sgn = [c for c in linear_characters(Category.FA, n) if not c.is_trivial]
    chi = sgn[0] if sgn else linear_characters(Category.FA, n)[0]
    e = character_idempotent(chi)
    for t in range(1, t_max + 1):
        expected = standard_dim(Category.FA, n, t) // factorial(n)
        rep.record("sgn_rank", {"n": n, "t": t}, expected, right_idempotent_rank(Category.FA, n, t, e),
                   CLOSED_FORM, "Delta_{n,sgn} is the projective kC e_sgn")
    return rep


# ---------------------------------------------------------------------------
# BA eigenspaces


def ba_eigensplit(n: int) -> tuple[int, int]:
    """(+1, -1) eigenspace dimensions of the reversal of [n] acting on K(n, n+1) by pre-composition."""
    cat = Category.BA
    space = normalized_hom_basis(cat, n, n + 1)
    if n < 2:
        return space.dim, 0
    rev = tuple(range(n, 0, -1))
    tau = AlgebraElement(cat, n, n, {rev: 1})
    ident = AlgebraElement.identity(cat, n)
    plus = span_rank(v.terms for b in space.basis if (v := b * (ident + tau)))
    minus = span_rank(v.terms for b in space.basis if (v := b * (ident - tau)))
    return plus, minus


# ---------------------------------------------------------------------------
# the singular part of the normalised category


def coinduced_injective_dim(n: int, t: int) -> int:
    """sum_{i=1}^{n} S(t, i) n! / (n - i)!, S the Stirling numbers of the second kind."""
    if n < 1 or t < 1:
        raise ValueError("n and t start at 1")
    return sum(stirling2(t, i) * factorial(n) // factorial(n - i) for i in range(1, min(n, t) + 1))


@lru_cache(maxsize=None)
def stirling2(t: int, k: int) -> int:
    if t == k:
        return 1
    if k == 0 or k > t:
        return 0
    return k * stirling2(t - 1, k) + stirling2(t - 1, k - 1)


@dataclass(frozen=True)
class SingularVertex:
    n: int
    character: LinearCharacter
    idempotent: AlgebraElement


def singular_vertices(category: Category | str, n: int) -> list[SingularVertex]:
    """Primitive idempotents of the corner at n whose top is a singular character of G_n."""
    category = Category.parse(category)
    E = corner_algebra(category, n)
    chars = linear_characters(category, n)
    singular = set(singular_characters(category, n))
    out = []
    for e in primitive_idempotents(E):
        chi = match_character(e, chars)
        if chi is not None and chi in singular:
            out.append(SingularVertex(n, chi, e))
    return out


def sandwich_dim(category: Category, left: AlgebraElement, right: AlgebraElement) -> int:
    """dim left . kC(right.target, left.source) . right."""
    vecs = []
    for f in hom_images(category, right.target, left.source):
        x = left * AlgebraElement(category, right.target, left.source, {f: 1}) * right
        if x:
            vecs.append(x.terms)
    return span_rank(vecs)


def sandwich_basis(category: Category, left: AlgebraElement, right: AlgebraElement) -> list[AlgebraElement]:
    ech = SparseEchelon()
    out = []
    for f in hom_images(category, right.target, left.source):
        x = left * AlgebraElement(category, right.target, left.source, {f: 1}) * right
        if x and ech.add(x.terms):
            out.append(x)
    return out


def singular_chains(category: Category | str, n_max: int) -> list[list[SingularVertex]]:
    """Follow singular pairs upward: (n, mu) is linked to (n+1, lam) when (lam, mu) is singular."""
    category = Category.parse(category)
    verts = {n: singular_vertices(category, n) for n in range(1, n_max + 1)}
    chains: list[list[SingularVertex]] = []
    used: set[tuple[int, LinearCharacter]] = set()
    for n in range(1, n_max + 1):
        for v in verts[n]:
            if (n, v.character) in used:
                continue
            chain = [v]
            used.add((n, v.character))
            cur = v
            for k in range(n, n_max):
                nxt = None
                for p in classify_singular_pairs(category, k):
                    if p.mu == cur.character:
                        nxt = next((w for w in verts[k + 1] if w.character == p.lam), None)
                        if nxt is not None:
                            break
                if nxt is None:
                    break
                chain.append(nxt)
                used.add((k + 1, nxt.character))
                cur = nxt
            chains.append(chain)
    return chains


def singular_quiver_dims(category: Category | str, n_max: int) -> VerificationReport:
    """End, adjacent Hom and zero relations among the projective covers of singular standards."""
    category = Category.parse(category)
    if category not in CYCLIC:
        raise ValueError("the singular quiver is checked for CA and SA")
    rep = VerificationReport("quiver", category.value)
    chains = singular_chains(category, n_max + 1)
    for chain in chains:
        label = chain[0].character.name + f"@{chain[0].n}"
        by_n = {v.n: v for v in chain}
        for v in chain:
            if v.n > n_max:
                continue
            end = sandwich_dim(category, v.idempotent, v.idempotent)
            rep.record("end_dim", {"chain": label, "n": v.n, "character": v.character.name},
                       2 if v.n >= 2 else 1, end, CLOSED_FORM,
                       "End of the projective cover of a singular standard module")
        for n in sorted(by_n):
            if n + 1 not in by_n or n + 1 > n_max:
                continue
            lo, hi = by_n[n], by_n[n + 1]
            # Hom(P_hi, P_lo) = e_hi kC(n, n+1) e_lo and Hom(P_lo, P_hi) = e_lo kC(n+1, n) e_hi
            up = sandwich_basis(category, hi.idempotent, lo.idempotent)
            down = sandwich_basis(category, lo.idempotent, hi.idempotent)
            rep.record("hom_down", {"chain": label, "n": n + 1}, 1, len(up), CLOSED_FORM,
                       "Hom(P_n, P_{n-1}) is one-dimensional")
            rep.record("hom_up", {"chain": label, "n": n + 1}, 1, len(down), CLOSED_FORM,
                       "Hom(P_{n-1}, P_n) is one-dimensional")
            if up and down:
                a, b = up[0], down[0]
                # a is d_{n+1} : [n] -> [n+1], b is s_{n+1} : [n+1] -> [n]
                rep.record("sd_zero", {"chain": label, "n": n + 1}, True, (b * a).is_zero, CLOSED_FORM,
                           "s_n d_n = 0 in the singular block")
                rep.record("ds_nonzero", {"chain": label, "n": n + 1}, True, not (a * b).is_zero, CLOSED_FORM,
                           "d_n s_n is a nonzero endomorphism")
            if n + 2 in by_n and n + 2 <= n_max:
                top = by_n[n + 2]
                up2 = sandwich_basis(category, top.idempotent, hi.idempotent)
                down2 = sandwich_basis(category, hi.idempotent, top.idempotent)
                if up and up2:
                    rep.record("dd_zero", {"chain": label, "n": n + 1}, True, (up2[0] * up[0]).is_zero,
                               CLOSED_FORM, "d_{n+1} d_n = 0")
                if down and down2:
                    rep.record("ss_zero", {"chain": label, "n": n + 1}, True, (down[0] * down2[0]).is_zero,
                               CLOSED_FORM, "s_n s_{n+1} = 0")
                rep.record("gap_two_zero", {"chain": label, "n": n, "m": n + 2}, 0,
                           sandwich_dim(category, top.idempotent, lo.idempotent)
                           + sandwich_dim(category, lo.idempotent, top.idempotent), CLOSED_FORM,
                           "no maps across a gap of two")
    return rep
