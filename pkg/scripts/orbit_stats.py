"""Reconfiguration graph statistics for the marble game on staircases.

For each size the breadth-first orbit of the bottom row is explored and
its size, edge count, eccentricity from the start, and degree histogram
are printed.  On every size checked so far the orbit covers all bases.

    python3 scripts/orbit_stats.py --max-n 5
    python3 scripts/orbit_stats.py --n 4 --compare-count
"""

import argparse
import time

from trisol.enumeration import count_bases
from trisol.grid import line_cells
from trisol.solitaire import orbit


def describe(n: int, compare: bool, max_states: int) -> None:
    started = time.monotonic()
    report = orbit(line_cells(n), n, max_states=max_states)
    elapsed = time.monotonic() - started
    histogram = " ".join(f"{deg}:{cnt}" for deg, cnt in report.degree_histogram)
    line = (
        f"n={n}: states={report.states} edges={report.edges}"
        f" depth={report.diameter} degrees[{histogram}] ({elapsed:.2f}s)"
    )
    if report.truncated:
        line += " TRUNCATED"
    if compare and not report.truncated:
        expected = count_bases(n)
        tag = "matches" if expected == report.states else f"EXPECTED {expected}"
        line += f" basis count {tag}"
    print(line)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, help="one size only")
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--max-states", type=int, default=10_000_000)
    parser.add_argument(
        "--compare-count",
        action="store_true",
        help="check the orbit size against the independent enumerator",
    )
    args = parser.parse_args(argv)
    sizes = [args.n] if args.n is not None else list(range(1, args.max_n + 1))
    for n in sizes:
        describe(n, args.compare_count, args.max_states)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
