"""Compare the drawn mutation graphs with the computed ones."""

from cameronlab.core import Category
from cameronlab.expected import FIGURES, figure_shape
from cameronlab.mutation import build_mutation_graph


def main() -> None:
    for (cat, m, n), edges in FIGURES.items():
        drawn = {frozenset(e) for e in edges}
        for mm, nn in sorted({(m, n), (m, n - 1)}):
            if nn <= mm:
                continue
            g = build_mutation_graph(cat, mm, nn)
            same = g.edge_set() == drawn
            built = [(g.vertices[a], g.vertices[b]) for a, b in g.edges]
            print(f"{cat.value} drawn as Gamma_({m},{n}); computed Gamma_({mm},{nn}) shape {figure_shape(built)}"
                  f" equal to drawing: {same}")
        print(f"  drawing shape {figure_shape(edges)}")


if __name__ == "__main__":
    main()
