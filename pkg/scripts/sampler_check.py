"""Empirical check that the move chain samples bases uniformly.

Runs the Metropolis chain, keeps every thin-th state, and compares the
observed frequencies with the uniform target.  Small sizes can compare
against the exact state list; larger ones just report the spread.

    python3 scripts/sampler_check.py --n 3 --steps 100000
    python3 scripts/sampler_check.py --n 6 --steps 200000 --thin 100
"""

import argparse
import collections

from trisol.enumeration import count_bases
from trisol.grid import is_basis
from trisol.solitaire import basis_chain


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--steps", type=int, default=100_000)
    parser.add_argument("--thin", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--show", type=int, default=8, help="rows to print")
    args = parser.parse_args(argv)

    counts: collections.Counter = collections.Counter()
    for step, state in enumerate(basis_chain(args.n, args.steps, seed=args.seed)):
        assert is_basis(state, args.n), "the chain must stay on bases"
        if step % args.thin == 0:
            counts[state] += 1
    total = sum(counts.values())
    distinct = len(counts)
    print(f"kept {total} samples, {distinct} distinct bases")

    if args.n <= 7:
        exact = count_bases(args.n)
        target = 1 / exact
        print(f"exact basis count {exact}, uniform target {target:.5f}")
        deviation = max(
            abs(counts.get(b, 0) / total - target) for b in counts
        ) if counts else 0.0
        missing = exact - distinct
        print(f"max deviation {deviation:.5f}, unvisited bases {missing}")
    for state, count in counts.most_common(args.show):
        cells = ",".join(f"({x},{y})" for x, y in sorted(state))
        print(f"  {count / total:.5f}  {cells}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
