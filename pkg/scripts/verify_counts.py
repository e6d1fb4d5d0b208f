"""Count both sides of the correspondence and check the factorial bound.

Run from the repository root:

    python3 scripts/verify_counts.py --max-n 6
    python3 scripts/verify_counts.py --max-n 8 --force --jobs 4
"""

import argparse
import math
import sys
import time

from trisol.enumeration import count_avoiders, count_bases, verify_bijection


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--force", action="store_true", help="go past the size guards")
    parser.add_argument(
        "--full-check",
        action="store_true",
        help="also run the exhaustive per-element correspondence check",
    )
    args = parser.parse_args(argv)

    header = f"{'n':>2} {'class':>10} {'bases':>10} {'3*n!':>10}  bound  time"
    print(header)
    print("-" * len(header))
    exit_code = 0
    for n in range(1, args.max_n + 1):
        started = time.monotonic()
        class_size = count_avoiders(n, force=args.force, jobs=args.jobs)
        basis_count = count_bases(n, force=args.force, jobs=args.jobs)
        elapsed = time.monotonic() - started
        bound = 3 * math.factorial(n)
        verdict = "-" if n < 3 else ("ok" if basis_count >= bound else "BELOW")
        print(
            f"{n:>2} {class_size:>10} {basis_count:>10} {bound:>10}  {verdict:<5}"
            f"  {elapsed:6.2f}s"
        )
        if class_size != basis_count:
            print(f"   COUNT MISMATCH at size {n}", file=sys.stderr)
            exit_code = 1
    if args.full_check:
        for n in range(1, args.max_n + 1):
            report = verify_bijection(n, force=args.force)
            status = "bijective" if report["bijective"] else "BROKEN"
            print(f"size {n}: {status}")
            if not report["bijective"]:
                exit_code = 1
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())
