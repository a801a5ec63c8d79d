"""Mutation graphs on injective morphisms, their components and sign systems."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .core import Category, Images, compose_images, hom_images


class OddCycleError(RuntimeError):
    """Raised when a component of a mutation graph admits no alternating sign."""


def collapsed_pair(h: Images) -> tuple[int, int]:
    """For a surjection [n] -> [n-1], the unique pair of points it identifies."""
    seen: dict[int, int] = {}
    for i, x in enumerate(h, start=1):
        if x in seen:
            return seen[x], i
        seen[x] = i
    raise ValueError(f"{h} identifies no pair")


@lru_cache(maxsize=None)
def surjections_by_pair(category: Category, n: int) -> dict[tuple[int, int], tuple[Images, ...]]:
    """Surjections [n] -> [n-1] grouped by the pair they collapse."""
    out: dict[tuple[int, int], list[Images]] = {}
    for h in hom_images(category, n, n - 1, "surjective"):
        out.setdefault(collapsed_pair(h), []).append(h)
    return {k: tuple(v) for k, v in out.items()}


def mutation_witness(category: Category, n: int, f: Images, g: Images) -> Images | None:
    """A surjection h: [n] -> [n-1] with h f = h g, if f and g differ in exactly one place."""
    diff = [i for i, (a, b) in enumerate(zip(f, g)) if a != b]
    if len(diff) != 1:
        return None
    i = diff[0]
    pair = tuple(sorted((f[i], g[i])))
    for h in surjections_by_pair(category, n).get(pair, ()):  # type: ignore[arg-type]
        if compose_images(h, f) == compose_images(h, g):
            return h
    return None


def is_mutation(category: Category | str, n: int, f: Images, g: Images) -> bool:
    return mutation_witness(Category.parse(category), n, tuple(f), tuple(g)) is not None


@dataclass
class MutationGraph:
    category: Category
    m: int
    n: int
    vertices: list[Images]
    edges: list[tuple[int, int]]
    components: list[int] = field(default_factory=list)
    signs: list[int] | None = None

    def __post_init__(self) -> None:
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.adjacency: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            self.adjacency[a].append(b)
            self.adjacency[b].append(a)
        for nbrs in self.adjacency:
            nbrs.sort()
        if not self.components:
            self.components = _label_components(self.adjacency)

    @property
    def component_count(self) -> int:
        return len(set(self.components))

    def component_members(self, c: int) -> list[Images]:
        return [v for v, k in zip(self.vertices, self.components) if k == c]

    def neighbours(self, v: Images) -> list[Images]:
        return [self.vertices[j] for j in self.adjacency[self.index[v]]]

    def edge_set(self) -> set[frozenset[Images]]:
        return {frozenset((self.vertices[a], self.vertices[b])) for a, b in self.edges}

    def sign(self, v: Images) -> int:
        if self.signs is None:
            raise ValueError("signs are only attached to graphs with n = m + 1")
        return self.signs[self.index[v]]


def _label_components(adjacency: list[list[int]]) -> list[int]:
    labels = [-1] * len(adjacency)
    current = 0
    for start in range(len(adjacency)):
        if labels[start] != -1:
            continue
        labels[start] = current
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if labels[w] == -1:
                    labels[w] = current
                    queue.append(w)
        current += 1
    return labels


@lru_cache(maxsize=None)
def _build(category: Category, m: int, n: int) -> MutationGraph:
    vertices = list(hom_images(category, m, n, "injective"))
    index = {v: i for i, v in enumerate(vertices)}
    pairs = surjections_by_pair(category, n)
    edges: set[tuple[int, int]] = set()
    for f in vertices:
        a = index[f]
        for i in range(m):
            for y in range(1, n + 1):
                if y == f[i] or y in f:
                    continue
                g = f[:i] + (y,) + f[i + 1:]
                b = index.get(g)
                if b is None or b < a:
                    continue
                pair = (min(f[i], y), max(f[i], y))
                for h in pairs.get(pair, ()):
                    hf = compose_images(h, f)
                    if hf == compose_images(h, g):
                        if len(set(hf)) != m:
                            raise AssertionError(f"witness {h} of the edge {f} - {g} is not injective on {f}")
                        edges.add((a, b))
                        break
    graph = MutationGraph(category, m, n, vertices, sorted(edges))
    if n == m + 1:
        graph.signs = bipartition_and_sign(graph)
    return graph


def build_mutation_graph(category: Category | str, m: int, n: int) -> MutationGraph:
    """Gamma_{m,n}: injections [m] -> [n], joined when they differ at one point and some
    surjection [n] -> [n-1] equalises them."""
    category = Category.parse(category)
    if m < 1 or m >= n:
        raise ValueError(f"mutation graphs need 1 <= m < n, got m={m}, n={n}")
    return _build(category, m, n)


def component_count(category: Category | str, m: int, n: int) -> int:
    return build_mutation_graph(category, m, n).component_count


def bipartition_and_sign(graph: MutationGraph) -> list[int]:
    """Alternating signs, +1 on the lexicographically least vertex of each component."""
    signs = [0] * len(graph.vertices)
    for start in range(len(graph.vertices)):  # vertices are sorted, so the first seen is least
        if signs[start]:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if not signs[w]:
                    signs[w] = -signs[u]
                    queue.append(w)
                elif signs[w] == signs[u]:
                    raise OddCycleError(
                        f"odd cycle through {graph.vertices[u]} and {graph.vertices[w]} in "
                        f"{graph.category} Gamma_({graph.m},{graph.n})"
                    )
    return signs


def is_valid_sign_system(graph: MutationGraph, signs: list[int]) -> bool:
    return all(s in (1, -1) for s in signs) and all(signs[a] == -signs[b] for a, b in graph.edges)


_PALETTE = ("lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightgray", "aquamarine")


def export_dot(graph: MutationGraph, name: str | None = None, colour_components: bool = True) -> str:
    """Undirected DOT text; components coloured, positive vertices drawn as boxes."""
    name = name or f"{graph.category}_Gamma_{graph.m}_{graph.n}"
    lines = [f'graph "{name}" {{', "  node [style=filled];"]
    for i, v in enumerate(graph.vertices):
        label = "(" + ",".join(map(str, v)) + ")"
        attrs = [f'label="{label}"']
        if colour_components:
            attrs.append(f'fillcolor="{_PALETTE[graph.components[i] % len(_PALETTE)]}"')
            attrs.append(f"component={graph.components[i]}")
        if graph.signs is not None:
            attrs.append("shape=box" if graph.signs[i] > 0 else "shape=ellipse")
        lines.append(f"  v{i} [{', '.join(attrs)}];")
    for a, b in graph.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lift_classes(category: Category | str, m: int, n: int, f: Images, h: Images) -> list[Images]:
    """All injective g: [m] -> [n] with h g = h f."""
    category = Category.parse(category)
    target = compose_images(h, f)
    return [g for g in hom_images(category, m, n, "injective") if compose_images(h, g) == target]


def hamming_one_pairs(vertices: list[Images]):
    for f, g in combinations(vertices, 2):
        if sum(a != b for a, b in zip(f, g)) == 1:
            yield f, g
