"""Print the Hom and Ext dimension tables between standard modules."""

import argparse

from cameronlab.core import ALL_CATEGORIES, Category
from cameronlab.reps import ext_dim_standard, hom_dim_standard


def table(title, rows, cols, cell):
    print(title)
    print("m\\n " + " ".join(f"{n:>4}" for n in cols))
    for m in rows:
        print(f"{m:>3} " + " ".join(f"{cell(m, n):>4}" for n in cols))
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    for cat in ALL_CATEGORIES:
        top = min(args.max_n, 5) if cat is Category.FA else args.max_n
        rng = range(1, top + 1)
        table(f"{cat.value}: dim Hom(Delta_m, Delta_n)", rng, rng, lambda m, n: hom_dim_standard(cat, m, n))
    for cat in (Category.CA, Category.SA):
        table(f"{cat.value}: dim Ext^1(Delta_m, Delta_n)", range(3, args.max_n + 1), range(1, args.max_n),
              lambda m, n: ext_dim_standard(cat, m, n))


if __name__ == "__main__":
    main()
