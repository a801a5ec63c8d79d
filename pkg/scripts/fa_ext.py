"""dim Ext^1(Delta_n, Delta_{n-1}) in FA at a range of degree cutoffs."""

import argparse

from cameronlab.reps import ext_dim_fa, fa_ext_closed_form


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--extra", type=int, default=1, help="cutoffs beyond n + 2 to try")
    args = ap.parse_args()
    for n in args.n:
        print(f"n={n}: closed form {fa_ext_closed_form(n)}")
        for cutoff in range(n + 1, n + 3 + args.extra):
            res = ext_dim_fa(n, cutoff)
            print(f"  cutoff {cutoff}: dim {res.dim} ({res.status}, Hom(ideal) dims {list(res.hom_ideal_dims)})")


if __name__ == "__main__":
    main()
