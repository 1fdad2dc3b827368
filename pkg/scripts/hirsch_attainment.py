"""Diameter of the m x (m+1) generalized Birkhoff polytope versus the Hirsch bound 2m."""

import argparse
import time

from transpoly.bounded_path import bounded_pivot_path
from transpoly.degree_core import DegreeFunction, edge_disjoint_pair
from transpoly.pivoting import build_graph, diameter
from transpoly.polytope import f_vector, hirsch_bound


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=4)
    args = parser.parse_args()

    for m in range(2, args.max_m + 1):
        df = DegreeFunction((1,) * m)
        start = time.perf_counter()
        g = build_graph(df, limit=None)
        value = diameter(g)
        fv = f_vector(df)
        pair = edge_disjoint_pair(df)
        witness = bounded_pivot_path(*pair).total_length if pair else None
        print(
            f"m={m}: f0={fv.f0} f1={fv.f1} diameter={value} hirsch={hirsch_bound(df)} "
            f"disjoint-pair path={witness} ({time.perf_counter() - start:.1f}s)"
        )


if __name__ == "__main__":
    main()
