"""Exhaustive generation of the avoidance class and of triangle bases.

Both searches are depth-first with pruning that only ever discards
states provably without descendants of interest: a 3-permutation prefix
containing a forbidden pattern cannot extend to an avoider, and a
partial configuration that overfills some small triangle, or picks a
cell already forced by the completion rule, cannot extend to a basis.
"""

from __future__ import annotations

import math
import multiprocessing
from collections.abc import Iterator

from .bijection import configuration_to_perm, perm_to_configuration
from .errors import GuardExceededError
from .grid import Cell, is_basis, is_sparse, triangle_cells
from .perms import ThreePermutation

AVOIDER_GUARD = 7
BASIS_GUARD = 7
BASIS_HARD_LIMIT = 8


# -- the avoidance class ------------------------------------------------------

def _extendable(sigma, tau, sv, tv, both):
    """Whether appending (sv, tv) avoids creating a forbidden pattern.

    Only occurrences whose last index is the new position need checking;
    earlier occurrences were ruled out when their own last index was
    placed.
    """
    m = len(sigma)
    for a in range(m):
        if sigma[a] < sv and tau[a] < tv:
            return False
    if both:
        for b in range(1, m):
            if sigma[b] < sv:
                for a in range(b):
                    if sigma[a] > sv and tv < tau[a] < tau[b]:
                        return False
    return True


def _avoider_walk(n, both, sigma, tau, sused, tused, first_sigma=None):
    m = len(sigma)
    if m == n:
        yield ThreePermutation(tuple(sigma), tuple(tau))
        return
    sigma_choices = (first_sigma,) if (m == 0 and first_sigma) else range(1, n + 1)
    for sv in sigma_choices:
        if sused[sv]:
            continue
        for tv in range(1, n + 1):
            if tused[tv]:
                continue
            if not _extendable(sigma, tau, sv, tv, both):
                continue
            sigma.append(sv)
            tau.append(tv)
            sused[sv] = tused[tv] = True
            yield from _avoider_walk(n, both, sigma, tau, sused, tused)
            sigma.pop()
            tau.pop()
            sused[sv] = tused[tv] = False


def enumerate_avoiders(
    n: int, patterns: str = "class", force: bool = False
) -> Iterator[ThreePermutation]:
    """All 3-permutations of size n avoiding the forbidden patterns.

    ``patterns`` selects "class" (both patterns) or "12_12" (only the
    doubled ascent).  Sizes past the guard need ``force``; they can take
    a long time.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if patterns not in ("class", "12_12"):
        raise ValueError(f"unknown pattern selection {patterns!r}")
    if n > AVOIDER_GUARD and not force:
        raise GuardExceededError(
            f"enumerating size {n} exceeds the guard {AVOIDER_GUARD}; pass force=True"
        )
    yield from _avoider_walk(
        n, patterns == "class", [], [], [False] * (n + 1), [False] * (n + 1)
    )


def _count_avoiders_task(args) -> int:
    n, both, first_sigma = args
    walk = _avoider_walk(
        n, both, [], [], [False] * (n + 1), [False] * (n + 1), first_sigma
    )
    return sum(1 for _ in walk)


def count_avoiders(
    n: int, patterns: str = "class", force: bool = False, jobs: int = 1
) -> int:
    """Size of the class, optionally split over worker processes."""
    if jobs <= 1 or n <= 2:
        return sum(1 for _ in enumerate_avoiders(n, patterns, force))
    if n > AVOIDER_GUARD and not force:
        raise GuardExceededError(
            f"enumerating size {n} exceeds the guard {AVOIDER_GUARD}; pass force=True"
        )
    both = patterns == "class"
    if patterns not in ("class", "12_12"):
        raise ValueError(f"unknown pattern selection {patterns!r}")
    tasks = [(n, both, sv) for sv in range(1, n + 1)]
    with multiprocessing.Pool(processes=jobs) as pool:
        return sum(pool.map(_count_avoiders_task, tasks))


# -- bases --------------------------------------------------------------------

class _BasisSearch:
    """Shared precomputation for the basis search at one size."""

    def __init__(self, n: int):
        self.n = n
        self.cells = sorted(triangle_cells(n))
        self.total = len(self.cells)
        self.bit = {c: 1 << i for i, c in enumerate(self.cells)}
        self.full = (1 << self.total) - 1
        self.triples = []
        for x, y in self.cells:
            if x + y + 2 <= n:
                m0 = self.bit[(x, y)]
                m1 = self.bit[(x + 1, y)]
                m2 = self.bit[(x, y + 1)]
                whole = m0 | m1 | m2
                self.triples.append((whole, (whole ^ m0, whole ^ m1, whole ^ m2)))
        self.tri_by_cell = [[] for _ in range(self.total)]
        for k in range(1, n):
            for a in range(n - k + 1):
                for b in range(n - k - a + 1):
                    mask = 0
                    for dx in range(k):
                        for dy in range(k - dx):
                            mask |= self.bit[(a + dx, b + dy)]
                    for i in range(self.total):
                        if mask >> i & 1:
                            self.tri_by_cell[i].append((mask, k))

    def propagate(self, closed: int) -> int:
        changed = True
        while changed:
            changed = False
            for whole, pairs in self.triples:
                if closed & whole in pairs:
                    closed |= whole
                    changed = True
        return closed

    def walk(self, start: int, placed: int, chosen: int, closed: int):
        if placed == self.n:
            if closed == self.full:
                yield chosen
            return
        remaining = self.n - placed
        for idx in range(start, self.total - remaining + 1):
            cmask = 1 << idx
            if closed & cmask:
                # a cell the others force can never belong to a basis
                continue
            for tmask, k in self.tri_by_cell[idx]:
                if (chosen & tmask).bit_count() >= k:
                    break
            else:
                yield from self.walk(
                    idx + 1,
                    placed + 1,
                    chosen | cmask,
                    self.propagate(closed | cmask),
                )

    def unpack(self, chosen: int) -> frozenset[Cell]:
        return frozenset(
            c for i, c in enumerate(self.cells) if chosen >> i & 1
        )


def _check_basis_guard(n: int, force: bool) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > BASIS_HARD_LIMIT:
        raise GuardExceededError(
            f"the basis search refuses size {n}; {BASIS_HARD_LIMIT} is the hard limit"
        )
    if n > BASIS_GUARD and not force:
        raise GuardExceededError(
            f"enumerating size {n} exceeds the guard {BASIS_GUARD}; pass force=True"
        )


def enumerate_bases(n: int, force: bool = False) -> Iterator[frozenset[Cell]]:
    """All bases of T_n, as cell sets, in lexicographic order."""
    _check_basis_guard(n, force)
    search = _BasisSearch(n)
    for chosen in search.walk(0, 0, 0, 0):
        yield search.unpack(chosen)


def _count_bases_task(args) -> int:
    n, first = args
    search = _BasisSearch(n)
    cmask = 1 << first
    return sum(
        1
        for _ in search.walk(first + 1, 1, cmask, search.propagate(cmask))
    )


def count_bases(n: int, force: bool = False, jobs: int = 1) -> int:
    """Number of bases of T_n, optionally split over worker processes."""
    _check_basis_guard(n, force)
    if jobs <= 1 or n <= 3:
        return sum(1 for _ in enumerate_bases(n, force))
    total = len(triangle_cells(n))
    tasks = [(n, first) for first in range(total - n + 1)]
    with multiprocessing.Pool(processes=jobs) as pool:
        return sum(pool.map(_count_bases_task, tasks))


# -- whole-class verification -------------------------------------------------

def verify_bijection(n: int, force: bool = False) -> dict:
    """Check the correspondence exhaustively at one size.

    Maps every avoider to its configuration, demands a well-formed basis
    back from the inverse, and compares the image with an independently
    enumerated basis list.
    """
    avoiders = list(enumerate_avoiders(n, force=force))
    image = {}
    round_trip = True
    all_sparse = True
    for p in avoiders:
        conf = perm_to_configuration(p)
        image[conf.cells] = p
        if not is_sparse(conf.cells, n):
            all_sparse = False
        if configuration_to_perm(conf.cells, n) != p:
            round_trip = False
    bases = set(enumerate_bases(n, force=force))
    injective = len(image) == len(avoiders)
    matches = set(image) == bases
    return {
        "n": n,
        "class_size": len(avoiders),
        "basis_count": len(bases),
        "injective": injective,
        "image_equals_bases": matches,
        "round_trip": round_trip,
        "images_sparse": all_sparse,
        "bijective": injective and matches and round_trip,
    }


def verify_bounds(
    max_n: int, counts: dict[int, int] | None = None, force: bool = False
) -> list[dict]:
    """Check 3 * n! <= basis count for n from 3 up.

    ``counts`` supplies already-computed basis counts; missing sizes are
    enumerated.  Each entry reports whether the bound holds at that size.
    """
    rows = []
    for n in range(3, max_n + 1):
        count = counts[n] if counts and n in counts else count_bases(n, force=force)
        lower = 3 * math.factorial(n)
        rows.append(
            {
                "n": n,
                "basis_count": count,
                "lower_bound": lower,
                "holds": count >= lower,
            }
        )
    return rows
