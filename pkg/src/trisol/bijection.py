"""The correspondence between avoiding 3-permutations and triangle bases.

A 3-permutation (sigma, tau) of size n maps to the labeled configuration
that places label i at the cell

    x = number of positions j > i with sigma(i) > sigma(j)
    y = number of positions j < i with tau(i) < tau(j)

Both coordinates fit inside T_n.  Restricted to the class avoiding
(12, 12) and (312, 231) this map is a bijection onto the bases of T_n, and
it intertwines three shifted-sum constructions: a sum of two permutations
in any of the three directions corresponds cell for cell to the same sum
of their configurations.  The inverse direction works by locating a cut,
splitting the configuration into the two summands, recursing, and
reassembling the permutation with the matching permutation-level sum.
"""

from __future__ import annotations

import dataclasses
import enum

from .errors import CollisionError, NotABasisError
from .grid import Cell, Configuration, as_cells, in_triangle, is_basis
from .perms import (
    ThreePermutation,
    left_inversion_counts,
    right_inversion_counts,
    standardize,
)


class Direction(str, enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    DIAGONAL = "diagonal"


_DIRECTION_RANK = {
    Direction.VERTICAL: 0,
    Direction.HORIZONTAL: 1,
    Direction.DIAGONAL: 2,
}


# -- forward map --------------------------------------------------------------

def inversion_points(p: ThreePermutation) -> tuple[Cell, ...]:
    """The cell for each label 1..n, in label order.

    >>> p = ThreePermutation((2, 5, 4, 3, 6, 1), (6, 2, 4, 3, 1, 5))
    >>> inversion_points(p)
    ((1, 0), (3, 1), (2, 1), (1, 2), (1, 4), (0, 1))
    """
    xs = right_inversion_counts(p.sigma)
    ys = left_inversion_counts(p.tau)
    return tuple((x, y) for x, y in zip(xs, ys))


def perm_to_configuration(p: ThreePermutation) -> Configuration:
    """Labeled configuration of a 3-permutation.

    Outside the avoidance class two labels can land on the same cell; that
    raises CollisionError naming the first such pair.
    """
    points = inversion_points(p)
    seen: dict[Cell, int] = {}
    for label, cell in enumerate(points, start=1):
        if cell in seen:
            raise CollisionError(
                f"labels {seen[cell]} and {label} both map to cell {cell}",
                labels=(seen[cell], label),
            )
        seen[cell] = label
    conf = Configuration.labeled(points)
    assert conf.in_triangle(p.n)
    return conf


# -- shifted sums -------------------------------------------------------------

def _check_shift(shift: int, k1: int) -> None:
    if not 0 <= shift <= k1:
        raise ValueError(f"shift {shift} outside [0, {k1}]")


def perm_shifted_sum(
    p1: ThreePermutation,
    p2: ThreePermutation,
    direction: Direction,
    shift: int,
) -> ThreePermutation:
    """Combine two 3-permutations so their configurations combine too.

    The shift ranges over [0, size of the first summand].  Which summand
    keeps literal values and which gets spread out depends on the
    direction; the three cases are the unique ways to make the diagram of
    the result be the corresponding shifted sum of the two diagrams.
    """
    direction = Direction(direction)
    k1, k2 = p1.n, p2.n
    n = k1 + k2
    _check_shift(shift, k1)
    sigma = [0] * n
    tau = [0] * n

    if direction is Direction.VERTICAL:
        # first summand on positions 1..k1, on top in sigma values
        for i in range(k1):
            sigma[i] = p1.sigma[i] + k2
        for i in range(k2):
            sigma[k1 + i] = p2.sigma[i]
            tau[k1 + i] = p2.tau[i] + (k1 - shift)
        low = list(range(1, k1 - shift + 1)) + list(range(n - shift + 1, n + 1))
        for i in range(k1):
            tau[i] = low[p1.tau[i] - 1]
    elif direction is Direction.HORIZONTAL:
        # second summand on positions 1..k2, on top in tau values
        for i in range(k2):
            sigma[i] = p2.sigma[i] + shift
            tau[i] = p2.tau[i] + k1
        spread = list(range(1, shift + 1)) + list(range(shift + k2 + 1, n + 1))
        for i in range(k1):
            sigma[k2 + i] = spread[p1.sigma[i] - 1]
            tau[k2 + i] = p1.tau[i]
    else:
        # second summand on the position block shift+1..shift+k2
        first_positions = list(range(shift)) + list(range(shift + k2, n))
        for i, pos in enumerate(first_positions):
            sigma[pos] = p1.sigma[i]
            tau[pos] = p1.tau[i] + k2
        for i in range(k2):
            sigma[shift + i] = p2.sigma[i] + k1
            tau[shift + i] = p2.tau[i]

    return ThreePermutation(tuple(sigma), tuple(tau))


def config_shifted_sum(
    c1: "Configuration | frozenset[Cell]",
    c2: "Configuration | frozenset[Cell]",
    direction: Direction,
    shift: int,
) -> Configuration:
    """Shifted sum of two configurations, sizes k1 and k2.

    Vertical stacks the first summand to the right of the second, raised
    copy; horizontal mirrors that across the diagonal; diagonal pushes the
    second summand into the hypotenuse corner cut at height ``shift``.
    Labels, when both inputs carry them, are renumbered the way the
    permutation-level sum renumbers positions.
    """
    direction = Direction(direction)
    cells1, cells2 = as_cells(c1), as_cells(c2)
    k1, k2 = len(cells1), len(cells2)
    n = k1 + k2
    _check_shift(shift, k1)
    for c in cells1:
        if not in_triangle(c, k1):
            raise ValueError(f"first summand cell {c} is outside T_{k1}")
    for c in cells2:
        if not in_triangle(c, k2):
            raise ValueError(f"second summand cell {c} is outside T_{k2}")

    if direction is Direction.VERTICAL:
        move1 = lambda x, y: (x + k2, y)
        move2 = lambda x, y: (x, y + shift)
    elif direction is Direction.HORIZONTAL:
        move1 = lambda x, y: (x, y + k2)
        move2 = lambda x, y: (x + shift, y)
    else:
        move1 = lambda x, y: (x, y)
        move2 = lambda x, y: (x + k1 - shift, y + shift)

    cells = frozenset(move1(*c) for c in cells1) | frozenset(
        move2(*c) for c in cells2
    )
    if len(cells) != n:
        raise AssertionError("shifted sum collided, which the bounds forbid")

    labels = None
    lab1 = c1.labels if isinstance(c1, Configuration) else None
    lab2 = c2.labels if isinstance(c2, Configuration) else None
    if lab1 is not None and lab2 is not None:
        moved1 = [move1(*c) for c in lab1]
        moved2 = [move2(*c) for c in lab2]
        if direction is Direction.VERTICAL:
            labels = tuple(moved1 + moved2)
        elif direction is Direction.HORIZONTAL:
            labels = tuple(moved2 + moved1)
        else:
            labels = tuple(moved1[:shift] + moved2 + moved1[shift:])
    conf = Configuration(cells, labels)
    assert conf.in_triangle(n)
    return conf


# -- cuts ---------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Cut:
    """A way to split an object of size n into summands of sizes n-k, k.

    ``first`` and ``second`` are the two summands, already normalized:
    configurations translated back to their own triangles, permutations
    standardized.  ``shift`` recombines them exactly, in either world.
    """

    direction: Direction
    second_size: int
    shift: int
    first: object
    second: object

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_DIRECTION_RANK[self.direction], self.second_size, self.shift)


def config_cuts(conf: "Configuration | frozenset[Cell]", n: int | None = None) -> list[Cut]:
    """Every shifted-sum decomposition of a configuration, canonical order.

    Canonical order: vertical before horizontal before diagonal, then
    smaller second summand, then smaller shift.
    """
    pts = as_cells(conf)
    if n is None:
        n = len(pts)
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")
    cuts: list[Cut] = []
    for k2 in range(1, n):
        k1 = n - k2

        strip = [p for p in pts if p[0] < k2]
        if len(strip) == k2:
            rest = frozenset((x - k2, y) for x, y in pts if x >= k2)
            lo = max(0, max(x + y for x, y in strip) - k2 + 1)
            hi = min(min(y for _, y in strip), k1)
            for h in range(lo, hi + 1):
                second = frozenset((x, y - h) for x, y in strip)
                cuts.append(Cut(Direction.VERTICAL, k2, h, rest, second))

        strip = [p for p in pts if p[1] < k2]
        if len(strip) == k2:
            rest = frozenset((x, y - k2) for x, y in pts if y >= k2)
            lo = max(0, max(x + y for x, y in strip) - k2 + 1)
            hi = min(min(x for x, _ in strip), k1)
            for h in range(lo, hi + 1):
                second = frozenset((x - h, y) for x, y in strip)
                cuts.append(Cut(Direction.HORIZONTAL, k2, h, rest, second))

        corner_band = [p for p in pts if p[0] + p[1] >= k1]
        if len(corner_band) == k2:
            rest = frozenset(p for p in pts if p[0] + p[1] < k1)
            lo = max(0, k1 - min(x for x, _ in corner_band))
            hi = min(min(y for _, y in corner_band), k1)
            for h in range(lo, hi + 1):
                second = frozenset(
                    (x - (k1 - h), y - h) for x, y in corner_band
                )
                cuts.append(Cut(Direction.DIAGONAL, k2, h, rest, second))

    cuts.sort(key=lambda c: c.sort_key)
    return cuts


def perm_cuts(p: ThreePermutation) -> list[Cut]:
    """Every shifted-sum decomposition of a 3-permutation, canonical order.

    For a fixed direction and second-summand size the shift is forced, so
    unlike configurations a permutation admits at most one cut per
    (direction, size) pair.
    """
    n = p.n
    sigma, tau = p.sigma, p.tau
    cuts: list[Cut] = []
    for k2 in range(1, n):
        k1 = n - k2

        if all(v > k2 for v in sigma[:k1]):
            suffix_tau = tau[k1:]
            if max(suffix_tau) - min(suffix_tau) == k2 - 1:
                h = k1 + 1 - min(suffix_tau)
                if 0 <= h <= k1:
                    p1 = ThreePermutation(
                        standardize(sigma[:k1]), standardize(tau[:k1])
                    )
                    p2 = ThreePermutation(
                        standardize(sigma[k1:]), standardize(suffix_tau)
                    )
                    cuts.append(Cut(Direction.VERTICAL, k2, h, p1, p2))

        if all(v > k1 for v in tau[:k2]):
            prefix_sigma = sigma[:k2]
            if max(prefix_sigma) - min(prefix_sigma) == k2 - 1:
                h = min(prefix_sigma) - 1
                if 0 <= h <= k1:
                    p2 = ThreePermutation(
                        standardize(prefix_sigma), standardize(tau[:k2])
                    )
                    p1 = ThreePermutation(
                        standardize(sigma[k2:]), standardize(tau[k2:])
                    )
                    cuts.append(Cut(Direction.HORIZONTAL, k2, h, p1, p2))

        block = [i for i in range(n) if sigma[i] > k1]
        low_tau = [i for i in range(n) if tau[i] <= k2]
        if block == low_tau and block[-1] - block[0] == k2 - 1:
            h = block[0]
            if 0 <= h <= k1:
                inside = set(block)
                outside = [i for i in range(n) if i not in inside]
                p1 = ThreePermutation(
                    standardize(tuple(sigma[i] for i in outside)),
                    standardize(tuple(tau[i] for i in outside)),
                )
                p2 = ThreePermutation(
                    standardize(tuple(sigma[i] for i in block)),
                    standardize(tuple(tau[i] for i in block)),
                )
                cuts.append(Cut(Direction.DIAGONAL, k2, h, p1, p2))

    cuts.sort(key=lambda c: c.sort_key)
    return cuts


def find_config_cut(conf: "Configuration | frozenset[Cell]", n: int | None = None) -> Cut | None:
    cuts = config_cuts(conf, n)
    return cuts[0] if cuts else None


def find_perm_cut(p: ThreePermutation) -> Cut | None:
    cuts = perm_cuts(p)
    return cuts[0] if cuts else None


def find_cut(obj) -> Cut | None:
    """Canonical cut of a permutation or configuration, or None."""
    if isinstance(obj, ThreePermutation):
        return find_perm_cut(obj)
    return find_config_cut(obj)


# -- inverse map --------------------------------------------------------------

def configuration_to_perm(
    conf: "Configuration | frozenset[Cell]",
    n: int | None = None,
    assume_basis: bool = False,
) -> ThreePermutation:
    """The avoiding 3-permutation whose configuration is the given basis.

    Raises NotABasisError when the configuration is not a basis.  With
    ``assume_basis`` the upfront closure check is skipped, which only makes
    sense for configurations already known to be bases.
    """
    cells = as_cells(conf)
    if n is None:
        n = len(cells)
    if len(cells) != n:
        raise ValueError(f"configuration has {len(cells)} cells, expected {n}")
    if not assume_basis and not is_basis(cells, n):
        raise NotABasisError(f"configuration does not generate all of T_{n}")
    return _invert_basis(frozenset(cells), n)


def _invert_basis(cells: frozenset[Cell], n: int) -> ThreePermutation:
    if n == 1:
        if cells != {(0, 0)}:
            raise NotABasisError(f"size-1 configuration {sorted(cells)} is not the corner")
        return ThreePermutation((1,), (1,))
    cut = find_config_cut(cells, n)
    if cut is None:
        raise NotABasisError("configuration admits no shifted-sum decomposition")
    p1 = _invert_basis(cut.first, n - cut.second_size)
    p2 = _invert_basis(cut.second, cut.second_size)
    return perm_shifted_sum(p1, p2, cut.direction, cut.shift)
