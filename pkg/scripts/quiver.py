"""Maps between the projective covers of singular standard modules in CA and SA.

Prints every singular vertex (n, character) and the dimensions of
e kC(a, b) f for all pairs of singular vertices at levels a, b with |a - b| <= 1,
which shows how the singular block is wired.
"""

import argparse

from cameronlab.core import Category
from cameronlab.reps import sandwich_dim, singular_vertices


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--category", choices=("CA", "SA"), nargs="+", default=["CA", "SA"])
    args = ap.parse_args()
    for name in args.category:
        cat = Category(name)
        verts = [v for n in range(1, args.max_n + 1) for v in singular_vertices(cat, n)]
        print(f"{name}: singular vertices {[f'{v.character.name}@{v.n}' for v in verts]}")
        for v in verts:
            for w in verts:
                if abs(v.n - w.n) > 1:
                    continue
                # maps from P_w to P_v: v.e kC(w.n, v.n) w.e, as right modules over the corner
                dim = sandwich_dim(cat, v.idempotent, w.idempotent)
                if dim:
                    print(f"  {w.character.name}@{w.n} -> {v.character.name}@{v.n}: {dim}")


if __name__ == "__main__":
    main()
