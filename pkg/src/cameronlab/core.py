"""The five Cameron categories FA, OA, CA, BA, SA on the skeleton [1], [2], ...

A morphism [m] -> [n] is stored as its image tuple (f(1), ..., f(m)).
Membership is decided by concrete predicates:

* FA: every map.
* OA: weakly increasing.
* BA: weakly increasing or weakly decreasing.
* CA: cyclic winding number 0 or 1.
* SA: CA after possibly reversing the target labels.

Hom-set enumeration is memoised; everything else is a pure function of tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

Images = tuple[int, ...]


class Category(str, Enum):
    FA = "FA"
    OA = "OA"
    CA = "CA"
    BA = "BA"
    SA = "SA"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, value: "str | Category") -> "Category":
        if isinstance(value, Category):
            return value
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise ValueError(f"unknown category {value!r}; expected one of FA, OA, CA, BA, SA") from None


ALL_CATEGORIES = (Category.FA, Category.OA, Category.CA, Category.BA, Category.SA)
# categories carrying an underlying linear order, where the normalisation idempotent lives
ORDERED_CATEGORIES = (Category.OA, Category.CA, Category.BA, Category.SA)


# ---------------------------------------------------------------------------
# membership predicates


def winding(images: Sequence[int], n: int) -> int:
    """Number of full turns of the closed walk images[0] -> images[1] -> ... -> images[0] on Z/n."""
    m = len(images)
    total = sum((images[(i + 1) % m] - images[i]) % n for i in range(m))
    return total // n


def _weakly_increasing(images: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(images, images[1:]))


def _weakly_decreasing(images: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(images, images[1:]))


def _cyclic(images: Sequence[int], n: int) -> bool:
    return winding(images, n) <= 1


def _member(category: Category, n: int, images: Images) -> bool:
    if category is Category.FA:
        return True
    if category is Category.OA:
        return _weakly_increasing(images)
    if category is Category.BA:
        return _weakly_increasing(images) or _weakly_decreasing(images)
    if category is Category.CA:
        return _cyclic(images, n)
    if category is Category.SA:
        return _cyclic(images, n) or _cyclic(tuple(n + 1 - x for x in images), n)
    raise ValueError(category)


def is_morphism(category: Category | str, m: int, n: int, images: Sequence[int]) -> bool:
    category = Category.parse(category)
    if m < 1 or n < 1:
        raise ValueError(f"objects start at [1]; got [{m}] -> [{n}]")
    images = tuple(images)
    if len(images) != m:
        raise ValueError(f"expected {m} images, got {len(images)}")
    if any(not 1 <= x <= n for x in images):
        raise ValueError(f"images {images} not inside [1..{n}]")
    return _member(category, n, images)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, order=True)
class Morphism:
    category: Category
    source: int
    target: int
    images: Images

    def __post_init__(self) -> None:
        object.__setattr__(self, "category", Category.parse(self.category))
        object.__setattr__(self, "images", tuple(self.images))
        if not is_morphism(self.category, self.source, self.target, self.images):
            raise ValueError(f"{self.images} is not a morphism [{self.source}]->[{self.target}] in {self.category}")

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target

    @property
    def is_iso(self) -> bool:
        return self.source == self.target and self.is_injective

    @property
    def rank(self) -> int:
        return len(set(self.images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __str__(self) -> str:
        return f"{self.category} {self.source}->{self.target} [{','.join(map(str, self.images))}]"

    @classmethod
    def parse(cls, text: str, category: Category | str | None = None) -> "Morphism":
        """Read ``CAT m->n [i1,...,im]`` or, with ``category`` given, ``m->n:[i1,...]``."""
        text = text.strip()
        parts = text.split(None, 1)
        if category is None:
            if len(parts) != 2:
                raise ValueError(f"cannot parse morphism {text!r}")
            category, text = parts
        arrow, _, rest = text.replace(":", " ", 1).partition("[")
        try:
            m, n = (int(x) for x in arrow.strip().split("->"))
            images = tuple(int(x) for x in rest.rstrip("]").split(",") if x.strip())
        except ValueError:
            raise ValueError(f"cannot parse morphism {text!r}") from None
        return cls(Category.parse(category), m, n, images)


def identity(category: Category | str, n: int) -> Morphism:
    return Morphism(Category.parse(category), n, n, tuple(range(1, n + 1)))


def compose_images(g: Images, f: Images) -> Images:
    """Images of g o f (f first)."""
    return tuple(g[x - 1] for x in f)


def compose(g: Morphism, f: Morphism) -> Morphism:
    if g.category is not f.category:
        raise ValueError(f"cannot compose across categories {g.category} and {f.category}")
    if f.target != g.source:
        raise ValueError(f"cannot compose [{g.source}]->[{g.target}] after [{f.source}]->[{f.target}]")
    return Morphism(g.category, f.source, g.target, compose_images(g.images, f.images))


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def hom_images(category: Category, m: int, n: int, kind: str = "all") -> tuple[Images, ...]:
    """Image tuples of C(m, n), C+(m, n) or C-(m, n) in lexicographic order."""
    if m < 1 or n < 1:
        raise ValueError(f"objects start at [1]; got [{m}] -> [{n}]")
    if kind == "injective":
        if m > n:
            return ()
        candidates: Iterable[Images] = itertools.permutations(range(1, n + 1), m)
    elif kind == "surjective":
        if m < n:
            return ()
        candidates = (t for t in itertools.product(range(1, n + 1), repeat=m) if len(set(t)) == n)
    elif kind == "all":
        candidates = itertools.product(range(1, n + 1), repeat=m)
    else:
        raise ValueError(f"kind must be all, injective or surjective, not {kind!r}")
    return tuple(sorted(t for t in candidates if _member(category, n, t)))


def enumerate_hom(category: Category | str, m: int, n: int, kind: str = "all") -> list[Morphism]:
    category = Category.parse(category)
    return [Morphism(category, m, n, t) for t in hom_images(category, m, n, kind)]


def hom_count(category: Category | str, m: int, n: int, kind: str = "all") -> int:
    return len(hom_images(Category.parse(category), m, n, kind))


# ---------------------------------------------------------------------------
# simplicial structure maps


def face_map(n: int, i: int, category: Category | str = Category.OA) -> Morphism:
    """d_i : [n-1] -> [n], skipping i."""
    if not 1 <= i <= n or n < 2:
        raise ValueError(f"face index {i} out of range for [{n}]")
    images = tuple(j if j < i else j + 1 for j in range(1, n))
    return Morphism(Category.parse(category), n - 1, n, images)


def degeneracy_map(n: int, i: int, category: Category | str = Category.OA) -> Morphism:
    """s_i : [n] -> [n-1], identifying i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"degeneracy index {i} out of range for [{n}]")
    images = tuple(j if j <= i else j - 1 for j in range(1, n + 1))
    return Morphism(Category.parse(category), n, n - 1, images)


def cyclic_degeneracy(n: int, category: Category | str = Category.CA) -> Morphism:
    """s_n : [n] -> [n-1], identifying n with 1. Only a morphism in CA and SA (for n = 2 it is s_1)."""
    if n < 2:
        raise ValueError("cyclic degeneracy needs n >= 2")
    category = Category.parse(category)
    if n > 2 and category not in (Category.CA, Category.SA, Category.FA):
        raise ValueError(f"cyclic degeneracy is not a morphism of {category}")
    images = tuple(range(1, n)) + (1,)
    return Morphism(category, n, n - 1, images)


# ---------------------------------------------------------------------------
# automorphism groups


@dataclass(frozen=True)
class AutomorphismGroup:
    category: Category
    n: int
    elements: tuple[Morphism, ...]
    generators: tuple[Morphism, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Morphism:
        return identity(self.category, self.n)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def inverse(self, sigma: Morphism) -> Morphism:
        inv = [0] * self.n
        for i, x in enumerate(sigma.images, start=1):
            inv[x - 1] = i
        return Morphism(self.category, self.n, self.n, tuple(inv))

    def closure(self, gens: Iterable[Morphism]) -> set[Images]:
        ident = tuple(range(1, self.n + 1))
        seen = {ident}
        frontier = [ident]
        gens = [g.images for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = compose_images(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def rotation(n: int, category: Category | str = Category.CA) -> Morphism:
    """j -> j+1 mod n."""
    return Morphism(Category.parse(category), n, n, tuple(j % n + 1 for j in range(1, n + 1)))


def reflection(n: int, category: Category | str = Category.SA) -> Morphism:
    """j -> n+1-j."""
    return Morphism(Category.parse(category), n, n, tuple(n + 1 - j for j in range(1, n + 1)))


@lru_cache(maxsize=None)
def automorphism_group(category: Category | str, n: int) -> AutomorphismGroup:
    category = Category.parse(category)
    elements = tuple(enumerate_hom(category, n, n, "injective"))
    group = AutomorphismGroup(category, n, elements)
    gens: list[Morphism] = []
    span = {group.identity.images}
    for sigma in elements:
        if sigma.images not in span:
            gens.append(sigma)
            span = group.closure(gens)
    return AutomorphismGroup(category, n, elements, tuple(gens))


# ---------------------------------------------------------------------------
# Reedy factorisation


@dataclass(frozen=True)
class Factorization:
    surjective_part: Morphism
    injective_part: Morphism

    @property
    def middle_size(self) -> int:
        return self.surjective_part.target

    def recompose(self) -> Morphism:
        return compose(self.injective_part, self.surjective_part)


def factorize(f: Morphism) -> Factorization:
    """f = injective o surjective, fibres labelled by first occurrence.

    If that labelling leaves the category, the lexicographically least
    relabelling by an automorphism of the middle object is used.
    """
    labels: dict[int, int] = {}
    for x in f.images:
        labels.setdefault(x, len(labels) + 1)
    l = len(labels)
    surj = tuple(labels[x] for x in f.images)
    inj = tuple(sorted(labels, key=labels.get))
    cat = f.category
    if _member(cat, l, surj) and _member(cat, f.target, inj):
        return Factorization(Morphism(cat, f.source, l, surj), Morphism(cat, l, f.target, inj))
    # relabel the middle object by sigma: surj -> sigma o surj, inj -> inj o sigma^-1
    candidates = []
    for sigma in itertools.permutations(range(1, l + 1)):
        s2 = tuple(sigma[x - 1] for x in surj)
        inv = [0] * l
        for i, x in enumerate(sigma, start=1):
            inv[x - 1] = i
        i2 = tuple(inj[x - 1] for x in inv)
        if _member(cat, l, s2) and _member(cat, f.target, i2):
            candidates.append((s2, i2))
    if not candidates:
        raise RuntimeError(f"no factorisation of {f} inside {cat}; membership predicate is inconsistent")
    s2, i2 = min(candidates)
    return Factorization(Morphism(cat, f.source, l, s2), Morphism(cat, l, f.target, i2))


# ---------------------------------------------------------------------------
# retraction property


def check_retraction_property(category: Category | str, m: int, n: int) -> bool:
    """Every injective [m] -> [n] has a surjective left inverse in the category."""
    category = Category.parse(category)
    if m > n:
        raise ValueError("need m <= n")
    ident = tuple(range(1, m + 1))
    surjections = hom_images(category, n, m, "surjective")
    standard = tuple(range(1, m + 1))
    if not any(compose_images(p, standard) == ident for p in surjections):
        return False
    for f in hom_images(category, m, n, "injective"):
        if not any(compose_images(p, f) == ident for p in surjections):
            return False
    return True
