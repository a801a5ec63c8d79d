"""Computed singular pairs next to the closed-form table, with the sign by which
the reversals of [n+1] and [n] act on each component vector."""

import argparse

from cameronlab import expected
from cameronlab.core import ALL_CATEGORIES, Category, compose_images, reflection
from cameronlab.reps import classify_singular_pairs, component_vectors


def reversal_sign(cat: Category, n: int, v: dict) -> int | None:
    """c with rev_{n+1} . v . rev_n = c v, if v is an eigenvector."""
    big, small = reflection(n + 1, Category.FA).images, reflection(n, Category.FA).images
    w = {compose_images(compose_images(big, f), small): c for f, c in v.items()}
    for c in (1, -1):
        if w == {k: c * x for k, x in v.items()}:
            return c
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    for cat in ALL_CATEGORIES:
        for n in range(1, args.max_n + 1):
            got = sorted(p.names for p in classify_singular_pairs(cat, n))
            want = sorted((a.name, b.name) for a, b in expected.singular_pairs(cat, n))
            flag = "ok " if got == want else "DIFF"
            line = f"{flag} {cat.value} n={n}: computed {got}  stated {want}"
            if cat in (Category.BA, Category.SA) and n >= 2:
                signs = [reversal_sign(cat, n, v) for v in component_vectors(cat, n)]
                line += f"  reversal signs {signs}"
            print(line)


if __name__ == "__main__":
    main()
