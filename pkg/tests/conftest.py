"""Shared fixtures: cached enumerations and brute-force oracles.

The oracle functions here deliberately re-derive everything from first
principles (itertools over index subsets, repeated full scans) so the
package's pruned and incremental implementations are checked against
code with no shared logic.
"""

import itertools

import pytest

from trisol import ThreePermutation, enumerate_avoiders, enumerate_bases


def brute_standardize(values):
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


def brute_contains(components, pattern):
    """Lex-least occurrence of a pattern by scanning all index subsets."""
    n = len(components[0])
    k = len(pattern[0])
    if k > n:
        return None
    for indices in itertools.combinations(range(n), k):
        if all(
            brute_standardize(tuple(comp[i] for i in indices)) == pat
            for comp, pat in zip(components, pattern)
        ):
            return tuple(i + 1 for i in indices)
    return None


def brute_avoids_class(p: ThreePermutation) -> bool:
    comps = (p.sigma, p.tau)
    if brute_contains(comps, ((1, 2), (1, 2))) is not None:
        return False
    return brute_contains(comps, ((3, 1, 2), (2, 3, 1))) is None


def brute_all_avoiders(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    return tuple(
        ThreePermutation(s, t)
        for s in perms
        for t in perms
        if brute_avoids_class(ThreePermutation(s, t))
    )


def brute_closure(cells):
    """Fixpoint by repeated full scans over every anchor in range."""
    present = set(cells)
    while True:
        added = False
        xs = [x for x, _ in present]
        ys = [y for _, y in present]
        for ax in range(0, max(xs) + 2):
            for ay in range(0, max(ys) + 2):
                triple = ((ax, ay), (ax + 1, ay), (ax, ay + 1))
                missing = [c for c in triple if c not in present]
                if len(missing) == 1:
                    present.add(missing[0])
                    added = True
        if not added:
            return frozenset(present)


def brute_is_basis(cells, n):
    full = {(x, y) for x in range(n) for y in range(n - x)}
    return set(cells) <= full and brute_closure(cells) == full


def brute_all_bases(n):
    full = sorted((x, y) for x in range(n) for y in range(n - x))
    return frozenset(
        frozenset(combo)
        for combo in itertools.combinations(full, n)
        if brute_closure(combo) == set(full)
    )


def brute_is_sparse(cells, n):
    pts = list(cells)
    for k in range(1, n):
        for a in range(n):
            for b in range(n):
                inside = [
                    p
                    for p in pts
                    if p[0] >= a and p[1] >= b and p[0] + p[1] < a + b + k
                ]
                if len(inside) > k:
                    return False
    return True


@pytest.fixture(scope="session")
def avoiders():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = tuple(enumerate_avoiders(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def bases():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = frozenset(enumerate_bases(n))
        return cache[n]

    return get
