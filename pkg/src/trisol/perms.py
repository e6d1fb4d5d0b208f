"""Permutations, 3-permutations, patterns, and inversion sequences.

Permutations are tuples of 1-based values in one-line notation, so
``sigma[i - 1]`` is the image of position ``i``.  A 3-permutation is a pair
(sigma, tau) of permutations of the same size; its diagram is the point set
{(i, sigma(i), tau(i))}.  Every position-like argument in this module is
1-based; the grid module is 0-based.

The two inversion statistics that drive everything else:

* ``right_inversion_counts(sigma)[i-1]`` counts positions j > i with
  sigma(i) > sigma(j),
* ``left_inversion_counts(tau)[i-1]`` counts positions j < i with
  tau(i) < tau(j).

Both sequences determine their permutation and can be inverted with
``from_right_inversions`` and ``from_left_inversions``.
"""

from __future__ import annotations

import dataclasses
import json
import re
from collections.abc import Sequence

from .errors import ParseError

Perm = tuple[int, ...]

# The forbidden pair for the main class, as (sigma-component, tau-component).
PATTERN_12_12: tuple[Perm, Perm] = ((1, 2), (1, 2))
PATTERN_312_231: tuple[Perm, Perm] = ((3, 1, 2), (2, 3, 1))


def is_permutation(values: Sequence[int]) -> bool:
    """True iff values is a permutation of 1..n in one-line notation."""
    n = len(values)
    return sorted(values) == list(range(1, n + 1))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reversal(n: int) -> Perm:
    """The decreasing permutation n, n-1, ..., 1."""
    return tuple(range(n, 0, -1))


def inverse(perm: Perm) -> Perm:
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v - 1] = i + 1
    return tuple(out)


def compose(p: Perm, q: Perm) -> Perm:
    """(p compose q)(i) = p(q(i))."""
    assert len(p) == len(q)
    return tuple(p[v - 1] for v in q)


def standardize(values: Sequence[int]) -> Perm:
    """Replace each entry by its rank, smallest entry becoming 1.

    >>> standardize((5, 2, 3))
    (3, 1, 2)

    Entries must be distinct:

    >>> standardize((1, 1))
    Traceback (most recent call last):
        ...
    ValueError: cannot standardize (1, 1): entries are not distinct
    """
    if len(set(values)) != len(values):
        raise ValueError(f"cannot standardize {tuple(values)}: entries are not distinct")
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


def right_inversion_counts(sigma: Sequence[int]) -> tuple[int, ...]:
    """For each position i, the number of later positions with smaller value.

    >>> right_inversion_counts((2, 5, 4, 3, 6, 1))
    (1, 3, 2, 1, 1, 0)
    """
    n = len(sigma)
    return tuple(
        sum(1 for j in range(i + 1, n) if sigma[i] > sigma[j]) for i in range(n)
    )


def left_inversion_counts(tau: Sequence[int]) -> tuple[int, ...]:
    """For each position i, the number of earlier positions with larger value.

    >>> left_inversion_counts((6, 2, 4, 3, 1, 5))
    (0, 1, 1, 2, 4, 1)
    """
    n = len(tau)
    return tuple(sum(1 for j in range(i) if tau[i] < tau[j]) for i in range(n))


def from_right_inversions(counts: Sequence[int]) -> Perm:
    """Rebuild sigma from its right inversion counts.

    Position i takes the (counts[i-1] + 1)-th smallest value not yet used:
    exactly counts[i-1] of the remaining values must end up to its right
    and below it.

    >>> from_right_inversions((1, 3, 2, 1, 1, 0))
    (2, 5, 4, 3, 6, 1)
    """
    n = len(counts)
    for i, c in enumerate(counts):
        if not 0 <= c <= n - 1 - i:
            raise ValueError(f"right inversion count {c} at position {i + 1} is outside [0, {n - 1 - i}]")
    available = list(range(1, n + 1))
    return tuple(available.pop(c) for c in counts)


def from_left_inversions(counts: Sequence[int]) -> Perm:
    """Rebuild tau from its left inversion counts.

    Working from the last position backwards, position i takes the
    (counts[i-1] + 1)-th largest value not yet used.

    >>> from_left_inversions((0, 1, 1, 2, 4, 1))
    (6, 2, 4, 3, 1, 5)
    """
    n = len(counts)
    for i, c in enumerate(counts):
        if not 0 <= c <= i:
            raise ValueError(f"left inversion count {c} at position {i + 1} is outside [0, {i}]")
    available = list(range(1, n + 1))
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = available.pop(len(available) - 1 - counts[i])
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class InversionSequences:
    """The paired inversion statistics of a 3-permutation."""

    right: tuple[int, ...]
    left: tuple[int, ...]

    def __post_init__(self):
        n = len(self.right)
        assert len(self.left) == n
        for i in range(n):
            assert 0 <= self.right[i] <= n - 1 - i, f"right[{i}] out of range"
            assert 0 <= self.left[i] <= i, f"left[{i}] out of range"


@dataclasses.dataclass(frozen=True)
class ThreePermutation:
    """A pair (sigma, tau) of permutations of a common size."""

    sigma: Perm
    tau: Perm

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "tau", tuple(self.tau))
        if not is_permutation(self.sigma):
            raise ValueError(f"sigma component {self.sigma} is not a permutation")
        if not is_permutation(self.tau):
            raise ValueError(f"tau component {self.tau} is not a permutation")
        if len(self.sigma) != len(self.tau):
            raise ValueError("sigma and tau have different sizes")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def components(self) -> tuple[Perm, Perm]:
        return (self.sigma, self.tau)

    def diagram(self) -> tuple[tuple[int, int, int], ...]:
        """The 3-d point set {(i, sigma(i), tau(i))}."""
        return tuple((i + 1, self.sigma[i], self.tau[i]) for i in range(self.n))

    def to_text(self) -> str:
        sig = ",".join(str(v) for v in self.sigma)
        tav = ",".join(str(v) for v in self.tau)
        return f"σ:{sig}|τ:{tav}"

    @classmethod
    def from_text(cls, line: str, lineno: int = 1) -> "ThreePermutation":
        return parse_three_permutation(line, lineno)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "sigma": list(self.sigma), "tau": list(self.tau)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ThreePermutation":
        try:
            return cls(tuple(data["sigma"]), tuple(data["tau"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad 3-permutation object: {exc}") from exc


_PERM_LINE = re.compile(
    r"^\s*(?:σ|sigma|s)\s*:\s*([0-9,\s]+)\|\s*(?:τ|tau|t)\s*:\s*([0-9,\s]+)\s*$"
)


def parse_three_permutation(line: str, lineno: int = 1) -> ThreePermutation:
    """Parse the one-line text format ``σ:2,5,4,3,6,1|τ:6,2,4,3,1,5``.

    ``sigma:``/``s:`` and ``tau:``/``t:`` are accepted as ASCII spellings of
    the component names.
    """
    m = _PERM_LINE.match(line)
    if m is None:
        bar = line.find("|")
        raise ParseError("expected σ:v1,...,vn|τ:w1,...,wn", lineno, bar + 2 if bar >= 0 else 1)
    try:
        sigma = tuple(int(v) for v in m.group(1).split(","))
        tau = tuple(int(v) for v in m.group(2).split(","))
    except ValueError as exc:
        raise ParseError(f"bad integer in permutation: {exc}", lineno) from exc
    try:
        return ThreePermutation(sigma, tau)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from exc


def parse_permutation_input(text: str, fmt: str = "text") -> list[ThreePermutation]:
    """Parse a whole input document, one 3-permutation per line (or JSON)."""
    if fmt == "json":
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
        return [ThreePermutation.from_json_dict(d) for d in items]
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            out.append(parse_three_permutation(line, lineno))
    return out


def inversion_sequences(p: ThreePermutation) -> InversionSequences:
    return InversionSequences(
        right_inversion_counts(p.sigma), left_inversion_counts(p.tau)
    )


# -- patterns -----------------------------------------------------------------

def contains_pattern(
    components: Sequence[Sequence[int]], pattern: Sequence[Sequence[int]]
) -> tuple[int, ...] | None:
    """Search a d-permutation for a d-pattern of the same dimension.

    Both arguments are given by their value components (d - 1 sequences of
    equal length, the index component being implicit).  Returns the
    lexicographically least increasing tuple of 1-based positions whose
    entries standardize componentwise to the pattern, or None.

    >>> contains_pattern([(3, 2, 4, 6, 1, 5)], [(2, 3, 1)])
    (1, 3, 5)
    >>> contains_pattern([(5, 4, 2, 3, 1), (3, 2, 5, 1, 4)],
    ...                  [(3, 1, 2), (2, 3, 1)])
    (1, 3, 4)
    >>> contains_pattern([(1, 2, 3)], [(3, 2, 1)]) is None
    True
    """
    if len(components) != len(pattern):
        raise ValueError(
            f"dimension mismatch: {len(components) + 1} versus {len(pattern) + 1}"
        )
    comps = [tuple(c) for c in components]
    pats = [tuple(c) for c in pattern]
    n = len(comps[0]) if comps else 0
    k = len(pats[0]) if pats else 0
    if any(len(c) != n for c in comps) or any(len(c) != k for c in pats):
        raise ValueError("component lengths disagree")
    if k == 0:
        return ()
    if k > n:
        return None

    chosen: list[int] = []

    def extends(candidate: int) -> bool:
        # the chosen positions plus candidate must stay order-isomorphic to
        # the pattern prefix in every component
        m = len(chosen)
        for comp, pat in zip(comps, pats):
            cv = comp[candidate]
            pv = pat[m]
            for slot, pos in enumerate(chosen):
                if (comp[pos] < cv) != (pat[slot] < pv):
                    return False
        return True

    def search(start: int) -> tuple[int, ...] | None:
        if len(chosen) == k:
            return tuple(i + 1 for i in chosen)
        # not enough positions left to finish the pattern
        for candidate in range(start, n - (k - len(chosen)) + 1):
            if extends(candidate):
                chosen.append(candidate)
                hit = search(candidate + 1)
                if hit is not None:
                    return hit
                chosen.pop()
        return None

    return search(0)


def find_12_12(p: ThreePermutation) -> tuple[int, int] | None:
    """First pair i < j ascending in both components, in lex order."""
    sigma, tau = p.sigma, p.tau
    for i in range(p.n):
        si, ti = sigma[i], tau[i]
        for j in range(i + 1, p.n):
            if si < sigma[j] and ti < tau[j]:
                return (i + 1, j + 1)
    return None


def find_312_231(p: ThreePermutation) -> tuple[int, int, int] | None:
    """First triple i < j < k with sigma pattern 312 and tau pattern 231."""
    sigma, tau = p.sigma, p.tau
    n = p.n
    for i in range(n):
        si, ti = sigma[i], tau[i]
        for j in range(i + 1, n):
            if sigma[j] >= si or tau[j] <= ti:
                continue
            tj = tau[j]
            sj = sigma[j]
            for k in range(j + 1, n):
                if sj < sigma[k] < si and tau[k] < ti < tj:
                    return (i + 1, j + 1, k + 1)
    return None


def avoids_class(p: ThreePermutation) -> bool:
    """True iff p avoids both (12,12) and (312,231)."""
    return find_12_12(p) is None and find_312_231(p) is None


# -- symmetries ---------------------------------------------------------------

def rotate_perm(p: ThreePermutation) -> ThreePermutation:
    """Order-3 rotation of the diagram: (sigma, tau) -> (tau^-1, sigma tau^-1).

    Cycles the three axes of the diagram; applying it three times is the
    identity.
    """
    ti = inverse(p.tau)
    return ThreePermutation(ti, compose(p.sigma, ti))


def mirror_perm(p: ThreePermutation) -> ThreePermutation:
    """Order-2 mirror of the diagram: conjugate both components by reversal
    and swap them.  Applying it twice is the identity.
    """
    rev = reversal(p.n)
    return ThreePermutation(
        compose(rev, compose(p.tau, rev)), compose(rev, compose(p.sigma, rev))
    )
