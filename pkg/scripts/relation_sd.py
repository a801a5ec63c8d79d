"""Compare s_{n+1} d_{n+1} with Psi_n in the normalised cyclic categories.

For CA and SA the product is Psi_n - delta_n + (-1)^n r_n with r_n the
normalised rotation j -> j+1, rather than Psi_n.  The script prints, for each
n, whether s d = Psi_n holds, whether the three-term formula holds, and the
status of the delta identities that depend on it.
"""

import argparse

from cameronlab.algebra import bold, bold_d, bold_s, delta, psi
from cameronlab.core import Category, rotation


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    for cat in (Category.CA, Category.SA):
        print(f"{cat.value}:")
        for n in range(1, args.max_n + 1):
            sd = bold_s(cat, n + 1) * bold_d(cat, n + 1)
            p = psi(cat, n)
            if n == 1:
                formula = sd.is_zero
                extra = ""
            else:
                dl = delta(cat, n)
                formula = sd == p - dl + bold(cat, rotation(n, cat)).scale((-1) ** n)
                s, d = bold_s(cat, n), bold_d(cat, n)
                extra = (f"  delta^2=delta {dl * dl == dl}  s delta=s {s * dl == s}"
                         f"  delta d=d {dl * d == d}")
            print(f"  n={n}: sd=Psi {sd == p}  sd=Psi-delta+(-1)^n r {formula}  terms(sd)={len(sd)}{extra}")


if __name__ == "__main__":
    main()
