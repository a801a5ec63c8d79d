"""Category algebras kC over Q: elements, the normalisation idempotent Psi_n,
normalised morphisms, and idempotents attached to linear characters."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .core import (
    AutomorphismGroup,
    Category,
    Images,
    Morphism,
    automorphism_group,
    compose_images,
    cyclic_degeneracy,
    degeneracy_map,
    face_map,
    hom_images,
    reflection,
    rotation,
)
from .linalg import SparseEchelon
from .report import CLOSED_FORM, DERIVED, TRIVIAL, VerificationReport

Scalar = int | Fraction


@dataclass(frozen=True)
class AlgebraElement:
    """A Q-linear combination of morphisms [m] -> [n] of one category.

    ``terms`` maps image tuples to nonzero rationals.  ``a * b`` is the
    composite "b first, then a".
    """

    category: Category
    source: int
    target: int
    terms: Mapping[Images, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {tuple(k): Fraction(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", clean)

    # constructors ----------------------------------------------------------

    @classmethod
    def basis(cls, f: Morphism, coefficient: Scalar = 1) -> "AlgebraElement":
        return cls(f.category, f.source, f.target, {f.images: Fraction(coefficient)})

    @classmethod
    def zero(cls, category: Category, source: int, target: int) -> "AlgebraElement":
        return cls(category, source, target, {})

    @classmethod
    def identity(cls, category: Category, n: int) -> "AlgebraElement":
        return cls(category, n, n, {tuple(range(1, n + 1)): Fraction(1)})

    # arithmetic --------------------------------------------------------------

    def _check_parallel(self, other: "AlgebraElement") -> None:
        if (self.category, self.source, self.target) != (other.category, other.source, other.target):
            raise ValueError("elements live in different hom-spaces")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_parallel(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.category, self.source, self.target, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.category, self.source, self.target, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.category, self.source, self.target, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c: Scalar) -> "AlgebraElement":
        return self.scale(c)

    def __mul__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        if self.category is not other.category:
            raise ValueError("cannot multiply across categories")
        if other.target != self.source:
            raise ValueError(
                f"cannot compose [{self.source}]->[{self.target}] after [{other.source}]->[{other.target}]"
            )
        out: dict[Images, Fraction] = {}
        for g, a in self.terms.items():
            for f, b in other.terms.items():
                k = compose_images(g, f)
                out[k] = out.get(k, 0) + a * b
        return AlgebraElement(self.category, other.source, self.target, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.category, self.source, self.target, self.terms) == (
            other.category,
            other.source,
            other.target,
            other.terms,
        )

    def __hash__(self) -> int:
        return hash((self.category, self.source, self.target, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, images: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(images), Fraction(0))

    def support(self) -> list[Images]:
        return sorted(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            parts.append(f"{self.terms[k]}*[{','.join(map(str, k))}]")
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str, category: Category | str, source: int, target: int) -> "AlgebraElement":
        category = Category.parse(category)
        text = text.strip()
        if text == "0":
            return cls.zero(category, source, target)
        terms: dict[Images, Fraction] = {}
        for coef, tup in re.findall(r"([+-]?\s*[\d/]+)\s*\*\s*\[([\d,\s]*)\]", text):
            key = tuple(int(x) for x in tup.split(",") if x.strip())
            # validates membership and sizes
            Morphism(category, source, target, key)
            terms[key] = terms.get(key, 0) + Fraction(coef.replace(" ", ""))
        if not terms:
            raise ValueError(f"cannot parse algebra element {text!r}")
        return cls(category, source, target, terms)


def element(f: Morphism, coefficient: Scalar = 1) -> AlgebraElement:
    return AlgebraElement.basis(f, coefficient)


# ---------------------------------------------------------------------------
# the normalisation idempotent


@lru_cache(maxsize=None)
def psi(category: Category | str, n: int) -> AlgebraElement:
    """The normalisation idempotent of k C(n, n); Psi_1 = id.

    With composition read right to left, Psi_n is the product
    (id - d_1 s_1)(id - d_2 s_2) ... (id - d_{n-1} s_{n-1}).  This is the
    ordering for which s_j Psi_n = 0 and Psi_n d_j = 0 hold for every j < n:
    s_j meets its own factor first from the left, d_j from the right.
    """
    category = Category.parse(category)
    ident = AlgebraElement.identity(category, n)
    out = ident
    for i in range(1, n):
        ds = element(face_map(n, i, category)) * element(degeneracy_map(n, i, category))
        out = out * (ident - ds)
    return out


def top_face(category: Category, n: int) -> AlgebraElement:
    """d_n : [n-1] -> [n]."""
    return element(face_map(n, n, category))


def top_degeneracy(category: Category, n: int) -> AlgebraElement:
    """The cyclic degeneracy s_n : [n] -> [n-1]."""
    return element(cyclic_degeneracy(n, category))


def normalize(category: Category | str, x: AlgebraElement) -> AlgebraElement:
    """Psi_target * x * Psi_source."""
    category = Category.parse(category)
    return psi(category, x.target) * x * psi(category, x.source)


def check_psi_identities(category: Category | str, n: int) -> VerificationReport:
    category = Category.parse(category)
    if n < 2:
        raise ValueError("Psi identities are checked for n >= 2")
    rep = VerificationReport("psi", category.value)
    p = psi(category, n)
    with rep.timed() as t:
        sq = p * p
    rep.record("psi_idempotent", {"n": n}, True, sq == p, CLOSED_FORM, "Psi_n is idempotent", runtime_ms=t["ms"])
    for j in range(1, n):
        s = element(degeneracy_map(n, j, category))
        d = element(face_map(n, j, category))
        rep.record("s_j_psi_zero", {"n": n, "j": j}, True, (s * p).is_zero, CLOSED_FORM, "s_j Psi_n = 0 for j < n")
        rep.record("psi_d_j_zero", {"n": n, "j": j}, True, (p * d).is_zero, CLOSED_FORM, "Psi_n d_j = 0 for j < n")
    return rep


# ---------------------------------------------------------------------------
# normalised hom spaces


class _LeftPsiCache:
    """Memoised left multiplication g -> Psi_n * g on basis morphisms."""

    def __init__(self, category: Category, n: int) -> None:
        self.category = category
        self.p = psi(category, n)
        self.cache: dict[Images, dict[Images, Fraction]] = {}

    def __call__(self, g: Images) -> dict[Images, Fraction]:
        hit = self.cache.get(g)
        if hit is None:
            hit = {}
            for a, c in self.p.terms.items():
                k = compose_images(a, g)
                hit[k] = hit.get(k, 0) + c
            hit = {k: v for k, v in hit.items() if v}
            self.cache[g] = hit
        return hit


def normalized_image(category: Category, m: int, n: int, f: Images, left: _LeftPsiCache | None = None) -> dict:
    """Coordinates of Psi_n f Psi_m in the morphism basis of C(m, n)."""
    left = left or _LeftPsiCache(category, n)
    right: dict[Images, Fraction] = {}
    for b, c in psi(category, m).terms.items():
        k = compose_images(f, b)
        right[k] = right.get(k, 0) + c
    out: dict[Images, Fraction] = {}
    for g, c in right.items():
        if not c:
            continue
        for k, v in left(g).items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class NormalizedHom:
    category: Category
    m: int
    n: int
    basis: tuple[AlgebraElement, ...]
    witnesses: tuple[Images, ...]  # the morphisms f whose normalisations were kept

    @property
    def dim(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def normalized_hom_basis(category: Category | str, m: int, n: int) -> NormalizedHom:
    """A maximal independent family among the Psi_n f Psi_m, f in C(m, n), in lexicographic order of f."""
    category = Category.parse(category)
    ech = SparseEchelon()
    left = _LeftPsiCache(category, n)
    basis, witnesses = [], []
    # morphisms factoring through [r] with r < min(m, n) - 1 never survive; still, we
    # run the full enumeration so the dimension is certified rather than assumed
    for f in hom_images(category, m, n):
        v = normalized_image(category, m, n, f, left)
        if v and ech.add(v):
            basis.append(AlgebraElement(category, m, n, v))
            witnesses.append(f)
    return NormalizedHom(category, m, n, tuple(basis), tuple(witnesses))


def normalized_dim(category: Category | str, m: int, n: int) -> int:
    return normalized_hom_basis(category, m, n).dim


def in_span(x: AlgebraElement, family: Iterable[AlgebraElement]) -> bool:
    ech = SparseEchelon()
    for y in family:
        ech.add(y.terms)
    return ech.contains(x.terms)


# ---------------------------------------------------------------------------
# the bold generators of the normalised category


def bold_d(category: Category, n: int) -> AlgebraElement:
    """d_n normalised: Psi_n d_n Psi_{n-1}, a morphism [n-1] -> [n]."""
    return normalize(category, top_face(category, n))


def bold_s(category: Category, n: int) -> AlgebraElement:
    """s_n normalised: Psi_{n-1} s_n Psi_n with the cyclic degeneracy, a morphism [n] -> [n-1]."""
    return normalize(category, top_degeneracy(category, n))


def delta(category: Category, n: int) -> AlgebraElement:
    """Psi_n d_n s_n Psi_n."""
    return normalize(category, top_face(category, n) * top_degeneracy(category, n))


def bold(category: Category, f: Morphism) -> AlgebraElement:
    return normalize(category, element(f))


def check_dk_relations(category: Category | str, n_max: int) -> VerificationReport:
    """Dimension bounds and algebra identities of the normalised category up to n_max."""
    category = Category.parse(category)
    rep = VerificationReport("dk", category.value)
    cyclic = category in (Category.CA, Category.SA)
    G = lambda k: automorphism_group(category, k).order  # noqa: E731

    # thinness: no normalised maps across a gap of two or more
    for m in range(1, n_max + 1):
        for n in range(1, n_max + 1):
            if abs(m - n) >= 2:
                rep.record("thin", {"m": m, "n": n}, 0, normalized_dim(category, m, n), CLOSED_FORM,
                           "no normalised maps across a gap >= 2")

    for n in range(1, n_max + 1):
        # upward maps are spanned by d_{n+1} sigma
        if n + 1 <= n_max + 1:
            dim_up = normalized_dim(category, n, n + 1)
            rep.record("span_up_bound", {"n": n}, True, dim_up <= G(n), CLOSED_FORM,
                       "K(n, n+1) spanned by d_{n+1} sigma", note=f"dim={dim_up}, bound={G(n)}")
            spanning = [bold_d(category, n + 1) * bold(category, sig) for sig in automorphism_group(category, n)]
            basis = normalized_hom_basis(category, n, n + 1).basis
            ok = all(in_span(b, spanning) for b in basis)
            rep.record("span_up_generators", {"n": n}, True, ok, CLOSED_FORM, "K(n, n+1) spanned by d_{n+1} sigma")
        dim_diag = normalized_dim(category, n, n)
        bound = G(n) + (G(n - 1) if cyclic and n >= 2 else 0)
        rep.record("span_diag_bound", {"n": n}, True, dim_diag <= bound, CLOSED_FORM,
                   "K(n, n) spanned by sigma" + (" and d_n tau s_n" if cyclic else ""),
                   note=f"dim={dim_diag}, bound={bound}")
        if not cyclic:
            rep.record("diag_dim", {"n": n}, G(n), dim_diag, CLOSED_FORM, "K(n, n) spanned by sigma")
            rep.record("down_zero", {"n": n}, 0, normalized_dim(category, n + 1, n), CLOSED_FORM,
                       "no downward normalised maps for linear orders")
        # d d = 0
        if n >= 2:
            dd = bold_d(category, n + 1) * bold_d(category, n)
            rep.record("dd_zero", {"n": n}, True, dd.is_zero, CLOSED_FORM, "d_{n+1} d_n = 0")

    if not cyclic:
        return rep

    for n in range(1, n_max + 1):
        dim_down = normalized_dim(category, n + 1, n)
        rep.record("span_down_bound", {"n": n}, True, dim_down <= G(n), CLOSED_FORM,
                   "K(n+1, n) spanned by sigma s_{n+1}", note=f"dim={dim_down}, bound={G(n)}")
        spanning = [bold(category, sig) * bold_s(category, n + 1) for sig in automorphism_group(category, n)]
        basis = normalized_hom_basis(category, n + 1, n).basis
        rep.record("span_down_generators", {"n": n}, True, all(in_span(b, spanning) for b in basis), CLOSED_FORM,
                   "K(n+1, n) spanned by sigma s_{n+1}")
        diag_span = [bold(category, sig) for sig in automorphism_group(category, n)]
        if n >= 2:
            diag_span += [
                bold_d(category, n) * bold(category, tau) * bold_s(category, n)
                for tau in automorphism_group(category, n - 1)
            ]
        basis = normalized_hom_basis(category, n, n).basis
        rep.record("span_diag_generators", {"n": n}, True, all(in_span(b, diag_span) for b in basis), CLOSED_FORM,
                   "K(n, n) spanned by sigma and d_n tau s_n")
        if n >= 2 and n + 1 <= n_max:
            ss = bold_s(category, n) * bold_s(category, n + 1)
            rep.record("ss_zero", {"n": n}, True, ss.is_zero, CLOSED_FORM, "s_n s_{n+1} = 0")
        sd = bold_s(category, n + 1) * bold_d(category, n + 1)
        rep.record("sd_identity", {"n": n}, True, sd == psi(category, n), CLOSED_FORM, "s_{n+1} d_{n+1} = Psi_n",
                   note="" if sd == psi(category, n) else f"s d has {len(sd)} terms")
        ds = bold_d(category, n + 1) * bold_s(category, n + 1)
        rep.record("ds_delta", {"n": n}, True, ds == delta(category, n + 1), CLOSED_FORM,
                   "d_{n+1} s_{n+1} = delta_{n+1}")
        if n >= 2:
            dl = delta(category, n)
            rep.record("delta_idempotent", {"n": n}, True, dl * dl == dl, CLOSED_FORM, "delta_n^2 = delta_n")
            s_n, d_n = bold_s(category, n), bold_d(category, n)
            rep.record("s_delta", {"n": n}, True, s_n * dl == s_n, CLOSED_FORM, "s_n delta_n = s_n")
            rep.record("delta_d", {"n": n}, True, dl * d_n == d_n, CLOSED_FORM, "delta_n d_n = d_n")
        if n >= 3:
            dl1 = delta(category, n - 1)
            rep.record("d_delta_zero", {"n": n}, True, (bold_d(category, n) * dl1).is_zero, CLOSED_FORM,
                       "d_n delta_{n-1} = 0")
            rep.record("delta_s_zero", {"n": n}, True, (dl1 * bold_s(category, n)).is_zero, CLOSED_FORM,
                       "delta_{n-1} s_n = 0")
    return rep


# ---------------------------------------------------------------------------
# linear characters


def _named_generators(group: AutomorphismGroup) -> dict[str, Images]:
    n, cat = group.n, group.category
    elems = {s.images for s in group.elements}
    out = {}
    if n >= 2:
        r = rotation(n, Category.FA).images
        if r in elems:
            out["rot"] = r
        t = reflection(n, Category.FA).images
        if t in elems and t != r:
            out["ref"] = t
        if cat is Category.FA and n >= 3:
            out["swap"] = (2, 1) + tuple(range(3, n + 1))
    return out


@dataclass(frozen=True)
class LinearCharacter:
    """A homomorphism G_n -> {+1, -1}."""

    group: AutomorphismGroup
    values: Mapping[Images, int]

    def __post_init__(self) -> None:
        values = {tuple(k): int(v) for k, v in self.values.items()}
        object.__setattr__(self, "values", values)
        elems = [s.images for s in self.group.elements]
        if set(values) != set(elems):
            raise ValueError("character must be defined on every group element")
        if any(v not in (1, -1) for v in values.values()):
            raise ValueError("linear characters here take values +1 and -1")
        for a in elems:
            for b in elems:
                if values[compose_images(a, b)] != values[a] * values[b]:
                    raise ValueError("values are not multiplicative")

    def __call__(self, sigma: Morphism | Images) -> int:
        key = sigma.images if isinstance(sigma, Morphism) else tuple(sigma)
        return self.values[key]

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values.values())

    def signature(self) -> dict[str, int]:
        """Values on the named generators (rotation, reflection, a transposition) present in the group."""
        return {k: self.values[g] for k, g in _named_generators(self.group).items()}

    @property
    def name(self) -> str:
        if self.is_trivial:
            return "triv"
        sig = self.signature()
        if self.group.order == 2 or self.group.category is Category.FA:
            return "sgn"
        return ",".join(f"{k}{'+' if v > 0 else '-'}" for k, v in sorted(sig.items()))

    def __str__(self) -> str:
        return f"{self.name}@G{self.n}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCharacter):
            return NotImplemented
        return (self.group.category, self.group.n, self.values) == (
            other.group.category,
            other.group.n,
            other.values,
        )

    def __hash__(self) -> int:
        return hash((self.group.category, self.group.n, frozenset(self.values.items())))


@lru_cache(maxsize=None)
def linear_characters(category: Category | str, n: int) -> tuple[LinearCharacter, ...]:
    """All +-1 valued characters of G_n, trivial first, then by value pattern."""
    group = automorphism_group(category, n)
    gens = [g.images for g in group.generators]
    ident = tuple(range(1, n + 1))
    found = []
    for signs in itertools.product((1, -1), repeat=len(gens)):
        values = {ident: 1}
        frontier = [ident]
        consistent = True
        while frontier and consistent:
            nxt = []
            for x in frontier:
                for g, s in zip(gens, signs):
                    y = compose_images(g, x)
                    v = values[x] * s
                    if y not in values:
                        values[y] = v
                        nxt.append(y)
                    elif values[y] != v:
                        consistent = False
                        break
                if not consistent:
                    break
            frontier = nxt
        if not consistent:
            continue
        try:
            found.append(LinearCharacter(group, values))
        except ValueError:
            continue
    found.sort(key=lambda c: (not c.is_trivial, [-c.values[s.images] for s in group.elements]))
    return tuple(found)


def character_by_name(category: Category | str, n: int, name: str) -> LinearCharacter:
    chars = linear_characters(category, n)
    for c in chars:
        if c.name == name:
            return c
    # trivial group: sgn and triv coincide
    if len(chars) == 1 and name in ("triv", "sgn"):
        return chars[0]
    raise ValueError(f"no linear character {name!r} on G_{n} of {Category.parse(category)}; "
                     f"available: {', '.join(c.name for c in chars)}")


def character_from_signature(category: Category | str, n: int, **signature: int) -> LinearCharacter:
    """The unique linear character with the given values on named generators."""
    hits = [c for c in linear_characters(category, n)
            if all(c.signature().get(k, v) == v for k, v in signature.items())]
    if len(hits) != 1:
        raise ValueError(f"signature {signature} determines {len(hits)} characters on G_{n}")
    return hits[0]


def character_idempotent(chi: LinearCharacter) -> AlgebraElement:
    """e = (1/|G|) sum chi(sigma^-1) sigma; for +-1 values chi(sigma^-1) = chi(sigma)."""
    group = chi.group
    w = Fraction(1, group.order)
    terms = {s.images: w * chi(group.inverse(s)) for s in group.elements}
    return AlgebraElement(group.category, group.n, group.n, terms)


def group_element(sigma: Morphism) -> AlgebraElement:
    return element(sigma)
