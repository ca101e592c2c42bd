"""Tabulate dimensions of indecomposables for one-vertex loop quivers.

Rows are grades, columns the cohomological degree l; blank cells are
degrees where the graded piece is empty.
"""

import argparse

from qhall.coha import primitive_dims
from qhall.quiver import Quiver


def table(m: int, gmax: int, lmax: int) -> str:
    dims = primitive_dims(Quiver.one_vertex(m), (gmax,), lmax)
    lmin = min(l for _, l in dims)
    ls = range(lmin, lmax + 1)
    head = "gamma | " + " ".join(f"{l:>3}" for l in ls)
    rows = [f"m={m}", head, "-" * len(head)]
    for g in range(gmax + 1):
        cells = [dims.get(((g,), l)) for l in ls]
        rows.append(f"{g:>5} | " + " ".join("   " if c is None else f"{c:>3}" for c in cells))
    return "\n".join(rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--loops", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--gmax", type=int, default=3)
    ap.add_argument("--lmax", type=int, default=10)
    args = ap.parse_args()
    print("\n\n".join(table(m, args.gmax, args.lmax) for m in args.loops))


if __name__ == "__main__":
    main()
