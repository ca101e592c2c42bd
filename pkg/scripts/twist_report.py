"""Twist verification over the default catalog of symmetric quivers.

For each quiver: factor identities on every catalogued grade pair, twisted
Chern homomorphism checks, and injectivity on the single-vertex grades.
"""

import argparse
import time

from qhall.twist import TwistContext, default_catalog, injectivity_check, lemma_manipul_check, tocheck_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--verbose", action="store_true", help="print every check, not just totals")
    args = ap.parse_args()
    bad = 0
    for q, pairs in default_catalog():
        t = time.perf_counter()
        ctx = TwistContext(q, args.order)
        reps = [lemma_manipul_check(ctx, a, b) for a, b in pairs]
        reps.append(tocheck_suite(ctx, pairs, seed=args.seed))
        reps += [injectivity_check(ctx, g, -1, 1) for g in {b for _, b in pairs} if sum(g) == 1]
        total = sum(r.count for r in reps)
        fails = [f for r in reps for f in r.failures]
        bad += len(fails)
        print(f"arrows={[list(r) for r in q.arrows]}: {total - len(fails)}/{total} passed "
              f"({time.perf_counter() - t:.1f}s)")
        for r in reps:
            for line in r.lines() if args.verbose else [f.line() for f in r.failures]:
                print("  " + line)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
