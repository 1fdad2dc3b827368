"""Tabulate exact skeleton diameters against the 2n-2 and Hirsch-type bounds.

    python scripts/diameter_table.py --max-size 8
"""

import argparse

from transpoly.degree_core import degree_functions
from transpoly.pivoting import build_graph, diameter, diameter_bound
from transpoly.polytope import f_vector


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=8, help="largest m + n")
    parser.add_argument("--positive-only", action="store_true", help="skip degree functions with zeros")
    args = parser.parse_args()

    print(f"{'degrees':<18}{'f0':>7}{'f1':>8}{'diam':>6}{'2n-2':>6}{'m+n-1':>7}  note")
    for df in degree_functions(args.max_size - 1, args.max_size - 1, max_size=args.max_size):
        if args.positive_only and 0 in df.degrees:
            continue
        fv = f_vector(df)
        value = diameter(build_graph(df), check_bound=False)
        bound = diameter_bound(df)
        note = "exceeds 2n-2" if value > bound else ""
        print(f"{str(df):<18}{fv.f0:>7}{fv.f1:>8}{value:>6}{bound:>6}{df.m + df.n - 1:>7}  {note}")


if __name__ == "__main__":
    main()
