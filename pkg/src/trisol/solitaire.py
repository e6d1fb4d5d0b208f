"""The marble game on configurations and its twin on 3-permutations.

A move takes the two occupied cells of an L-triple
{(x, y), (x+1, y), (x, y+1)} and slides one of them to the empty third
cell.  Played on a basis the game stays on bases, and through the
correspondence with 3-permutations each move is a transposition applied
to one or both rows of the pair:

    axis "first"   swap positions i and j wholesale
    axis "second"  swap the sigma values at i and j
    axis "third"   swap the tau values at i and j

For each adjacent pair exactly two of the three axes give a legal move;
the third would land both labels on one cell.  Which two depends on how
the pair sits: a vertical pair allows first and second, a horizontal
pair first and third, an anti-diagonal pair second and third.

Labels travel with the structure rather than with the marble: after a
move the two touched labels settle onto the two final cells in the one
order that keeps the configuration the image of a 3-permutation (smaller
label below for a vertical pair, to the right for a horizontal pair, to
the lower right for an anti-diagonal pair).
"""

from __future__ import annotations

import collections
import dataclasses
import enum
import random
from collections.abc import Iterable, Iterator

from .errors import IllegalMoveError
from .grid import (
    Cell,
    Configuration,
    _triples_at,
    as_cells,
    in_triangle,
    line_cells,
)
from .perms import ThreePermutation


class Axis(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"


_AXIS_RANK = {Axis.FIRST: 0, Axis.SECOND: 1, Axis.THIRD: 2}


@dataclasses.dataclass(frozen=True)
class SolitaireMove:
    """A marble slide within the L-triple anchored at pivot_anchor."""

    pivot_anchor: Cell
    from_cell: Cell
    to_cell: Cell


@dataclasses.dataclass(frozen=True)
class PermSolitaireMove:
    """A swap between 1-based positions i < j along one axis."""

    i: int
    j: int
    axis: Axis


# -- geometry of adjacent pairs ----------------------------------------------

def _pair_kind(c1: Cell, c2: Cell) -> str | None:
    """How two distinct cells sit relative to each other.

    "vertical", "horizontal" or "antidiagonal" when they belong to a
    common L-triple, else None.
    """
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    if dx == 0 and abs(dy) == 1:
        return "vertical"
    if dy == 0 and abs(dx) == 1:
        return "horizontal"
    if (dx, dy) in ((1, -1), (-1, 1)):
        return "antidiagonal"
    return None


def _small_label_cell(c1: Cell, c2: Cell) -> Cell:
    """Which of two adjacent cells carries the smaller label.

    In the image of the correspondence the smaller label always sits
    below, to the right, or to the lower right of the larger one.
    """
    kind = _pair_kind(c1, c2)
    if kind == "vertical":
        return min(c1, c2, key=lambda c: c[1])
    if kind == "horizontal":
        return max(c1, c2, key=lambda c: c[0])
    if kind == "antidiagonal":
        return max(c1, c2, key=lambda c: c[0])
    raise ValueError(f"cells {c1} and {c2} do not share an L-triple")


# -- moves on configurations --------------------------------------------------

def slide(from_cell: Cell, to_cell: Cell) -> SolitaireMove:
    """The move between two cells of a common L-triple.

    The anchor is forced by how the two cells sit, so a slide is fully
    described by where the marble starts and lands.
    """
    kind = _pair_kind(from_cell, to_cell)
    if kind is None:
        raise IllegalMoveError("cells do not form an L-triple with the anchor")
    if kind == "vertical":
        anchor = min(from_cell, to_cell, key=lambda c: c[1])
    elif kind == "horizontal":
        anchor = min(from_cell, to_cell, key=lambda c: c[0])
    else:
        anchor = (
            min(from_cell[0], to_cell[0]),
            min(from_cell[1], to_cell[1]),
        )
    return SolitaireMove(anchor, from_cell, to_cell)


def check_move(
    cells: "Configuration | Iterable[Cell]",
    move: SolitaireMove,
    n: int | None = None,
    within_triangle: bool = True,
) -> Cell:
    """Validate a move, returning the stationary cell of its triple.

    Raises IllegalMoveError naming the violated requirement.
    """
    pts = as_cells(cells)
    if n is None:
        n = len(pts)
    ax, ay = move.pivot_anchor
    if ax < 0 or ay < 0:
        raise IllegalMoveError("the anchor leaves the first quadrant")
    triple = _triples_at(move.pivot_anchor)
    if move.from_cell not in triple or move.to_cell not in triple:
        raise IllegalMoveError("cells do not form an L-triple with the anchor")
    if move.from_cell == move.to_cell:
        raise IllegalMoveError("the move does not leave its cell")
    if within_triangle and not in_triangle((ax + 1, ay), n):
        raise IllegalMoveError("the triple leaves the staircase region")
    if move.from_cell not in pts:
        raise IllegalMoveError("the from-cell is not occupied")
    if move.to_cell in pts:
        raise IllegalMoveError("the to-cell is already occupied")
    (stationary,) = (c for c in triple if c not in (move.from_cell, move.to_cell))
    if stationary not in pts:
        raise IllegalMoveError("the third cell of the triple is not occupied")
    return stationary


def legal_moves(
    cells: "Configuration | Iterable[Cell]",
    n: int | None = None,
    within_triangle: bool = True,
) -> tuple[SolitaireMove, ...]:
    """All legal moves, sorted by anchor, then from-cell, then to-cell."""
    pts = as_cells(cells)
    if n is None:
        n = len(pts)
    if within_triangle:
        for c in pts:
            if not in_triangle(c, n):
                raise ValueError(f"cell {c} is outside T_{n}")
    anchors = set()
    for x, y in pts:
        for a in ((x, y), (x - 1, y), (x, y - 1)):
            if a[0] >= 0 and a[1] >= 0:
                anchors.add(a)
    moves = []
    for anchor in anchors:
        if within_triangle and not in_triangle((anchor[0] + 1, anchor[1]), n):
            continue
        triple = _triples_at(anchor)
        occupied = [c for c in triple if c in pts]
        if len(occupied) != 2:
            continue
        (empty,) = (c for c in triple if c not in pts)
        for c in occupied:
            moves.append(SolitaireMove(anchor, c, empty))
    moves.sort(key=lambda m: (m.pivot_anchor, m.from_cell, m.to_cell))
    return tuple(moves)


def apply_move(
    cells: "Configuration | Iterable[Cell]",
    move: SolitaireMove,
    n: int | None = None,
    within_triangle: bool = True,
):
    """Perform a move.  Labeled input gives labeled output.

    The two touched labels end up on the two final cells in the unique
    arrangement a 3-permutation image allows; every other label keeps its
    cell.  Unlabeled input (a Configuration without labels, or a bare
    cell set) returns the same flavor.
    """
    stationary = check_move(cells, move, n, within_triangle)
    pts = as_cells(cells)
    new_cells = (pts - {move.from_cell}) | {move.to_cell}
    if not isinstance(cells, Configuration):
        return new_cells
    if cells.labels is None:
        return Configuration(new_cells)
    moved_label = cells.labels.index(move.from_cell) + 1
    still_label = cells.labels.index(stationary) + 1
    small, large = sorted((moved_label, still_label))
    small_cell = _small_label_cell(move.to_cell, stationary)
    large_cell = move.to_cell if small_cell == stationary else stationary
    labels = list(cells.labels)
    labels[small - 1] = small_cell
    labels[large - 1] = large_cell
    return Configuration(new_cells, tuple(labels))


# -- moves on 3-permutations --------------------------------------------------

def _right_inversion_positions(sigma, i: int) -> frozenset[int]:
    return frozenset(k for k in range(i + 1, len(sigma)) if sigma[i] > sigma[k])


def _left_inversion_positions(tau, i: int) -> frozenset[int]:
    return frozenset(k for k in range(i) if tau[i] < tau[k])


_ALLOWED_AXES = {
    "vertical": (Axis.FIRST, Axis.SECOND),
    "horizontal": (Axis.FIRST, Axis.THIRD),
    "antidiagonal": (Axis.SECOND, Axis.THIRD),
}


def _perm_pair_kind(p: ThreePermutation, i: int, j: int) -> str:
    """Classify the pair of 1-based positions i < j, or raise.

    The requirements are phrased on inversion sets rather than cells so
    they make sense for any 3-permutation, not only class members.
    """
    if not (1 <= i < j <= p.n):
        raise ValueError(f"positions must satisfy 1 <= i < j <= {p.n}")
    ib, jb = i - 1, j - 1
    r_i = _right_inversion_positions(p.sigma, ib)
    r_j = _right_inversion_positions(p.sigma, jb)
    l_i = _left_inversion_positions(p.tau, ib)
    l_j = _left_inversion_positions(p.tau, jb)
    if r_i == r_j:
        same_x = True
    elif r_i == r_j | {jb}:
        same_x = False
    else:
        raise IllegalMoveError(
            "the sigma right-inversion sets of i and j differ by more than position j"
        )
    if l_j == l_i:
        same_y = True
    elif l_j == l_i | {ib}:
        same_y = False
    else:
        raise IllegalMoveError(
            "the tau left-inversion sets of i and j differ by more than position i"
        )
    if same_x and same_y:
        raise IllegalMoveError("positions i and j occupy the same cell")
    if same_x:
        return "vertical"
    if same_y:
        return "horizontal"
    return "antidiagonal"


def check_perm_move(p: ThreePermutation, move: PermSolitaireMove) -> str:
    """Validate a permutation move, returning the pair kind."""
    kind = _perm_pair_kind(p, move.i, move.j)
    axis = Axis(move.axis)
    if axis not in _ALLOWED_AXES[kind]:
        raise IllegalMoveError(f"axis {axis.value} is excluded for a {kind} pair")
    return kind


def legal_perm_moves(p: ThreePermutation) -> tuple[PermSolitaireMove, ...]:
    """All legal moves on a 3-permutation, sorted by i, j, axis."""
    moves = []
    for i in range(1, p.n):
        for j in range(i + 1, p.n + 1):
            try:
                kind = _perm_pair_kind(p, i, j)
            except IllegalMoveError:
                continue
            for axis in _ALLOWED_AXES[kind]:
                moves.append(PermSolitaireMove(i, j, axis))
    moves.sort(key=lambda m: (m.i, m.j, _AXIS_RANK[m.axis]))
    return tuple(moves)


def apply_perm_move(p: ThreePermutation, move: PermSolitaireMove) -> ThreePermutation:
    """Perform a legal axis swap.  Applying the same move again undoes it."""
    check_perm_move(p, move)
    ib, jb = move.i - 1, move.j - 1
    sigma, tau = list(p.sigma), list(p.tau)
    axis = Axis(move.axis)
    if axis in (Axis.FIRST, Axis.SECOND):
        sigma[ib], sigma[jb] = sigma[jb], sigma[ib]
    if axis in (Axis.FIRST, Axis.THIRD):
        tau[ib], tau[jb] = tau[jb], tau[ib]
    return ThreePermutation(tuple(sigma), tuple(tau))


# -- translating between the two games ----------------------------------------

def grid_move_to_perm_move(conf: Configuration, move: SolitaireMove) -> PermSolitaireMove:
    """The axis swap matching a marble slide on a labeled configuration."""
    if conf.labels is None:
        raise ValueError("translating a move needs a labeled configuration")
    stationary = check_move(conf, move, within_triangle=False)
    moved_label = conf.labels.index(move.from_cell) + 1
    still_label = conf.labels.index(stationary) + 1
    i, j = sorted((moved_label, still_label))
    kind = _pair_kind(move.from_cell, stationary)
    small_cell = _small_label_cell(move.from_cell, stationary)
    mover_is_small = (small_cell == move.from_cell)
    if kind == "vertical":
        axis = Axis.SECOND if mover_is_small else Axis.FIRST
    elif kind == "horizontal":
        axis = Axis.FIRST if mover_is_small else Axis.THIRD
    else:
        axis = Axis.SECOND if mover_is_small else Axis.THIRD
    return PermSolitaireMove(i, j, axis)


def perm_move_to_grid_move(p: ThreePermutation, move: PermSolitaireMove) -> SolitaireMove:
    """The marble slide matching an axis swap."""
    from .bijection import inversion_points

    kind = check_perm_move(p, move)
    points = inversion_points(p)
    cell_i, cell_j = points[move.i - 1], points[move.j - 1]
    axis = Axis(move.axis)
    if kind == "vertical":
        anchor = min(cell_i, cell_j, key=lambda c: c[1])
        target = (anchor[0] + 1, anchor[1])
        mover = anchor if axis is Axis.SECOND else (anchor[0], anchor[1] + 1)
    elif kind == "horizontal":
        anchor = min(cell_i, cell_j, key=lambda c: c[0])
        target = (anchor[0], anchor[1] + 1)
        mover = (anchor[0] + 1, anchor[1]) if axis is Axis.FIRST else anchor
    else:
        low = max(cell_i, cell_j, key=lambda c: c[0])
        anchor = (low[0] - 1, low[1])
        target = anchor
        mover = low if axis is Axis.SECOND else (anchor[0], anchor[1] + 1)
    return SolitaireMove(anchor, mover, target)


# -- orbits -------------------------------------------------------------------

DEFAULT_ORBIT_CAP = 10_000_000


@dataclasses.dataclass(frozen=True)
class OrbitReport:
    """Summary of the connected component reachable from a start state.

    ``diameter`` is the greatest move distance from the start state.
    ``truncated`` marks a search stopped at the state cap, in which case
    the other numbers describe only the explored part.
    """

    states: int
    edges: int
    diameter: int
    degree_histogram: tuple[tuple[int, int], ...]
    truncated: bool
    members: tuple | None = None

    def to_json_dict(self) -> dict:
        out = {
            "states": self.states,
            "edges": self.edges,
            "diameter": self.diameter,
            "degree_histogram": {str(d): c for d, c in self.degree_histogram},
            "truncated": self.truncated,
        }
        return out


def _neighbor_function(start, n, within_triangle):
    if isinstance(start, ThreePermutation):
        def neighbors(state):
            return [apply_perm_move(state, m) for m in legal_perm_moves(state)]
        return start, neighbors
    if isinstance(start, Configuration) and start.labels is not None:
        nn = n if n is not None else start.n
        def neighbors(state):
            return [
                apply_move(state, m, nn, within_triangle)
                for m in legal_moves(state.cells, nn, within_triangle)
            ]
        return start, neighbors
    cells = as_cells(start)
    nn = n if n is not None else len(cells)
    def neighbors(state):
        return [
            (state - {m.from_cell}) | {m.to_cell}
            for m in legal_moves(state, nn, within_triangle)
        ]
    return cells, neighbors


def orbit(
    start,
    n: int | None = None,
    within_triangle: bool = True,
    max_states: int = DEFAULT_ORBIT_CAP,
    keep_members: bool = False,
) -> OrbitReport:
    """Breadth-first exploration of the move graph from a start state.

    ``start`` may be a 3-permutation, a labeled configuration, or a bare
    cell set; the three give the permutation game, the labeled game, and
    the plain marble game respectively.
    """
    init, neighbor_fn = _neighbor_function(start, n, within_triangle)
    seen = {init}
    frontier = [init]
    depth = 0
    total_degree = 0
    histogram: collections.Counter = collections.Counter()
    truncated = False
    while frontier:
        next_frontier = []
        for state in frontier:
            nbrs = neighbor_fn(state)
            histogram[len(nbrs)] += 1
            total_degree += len(nbrs)
            for nb in nbrs:
                if nb not in seen:
                    if len(seen) >= max_states:
                        truncated = True
                        continue
                    seen.add(nb)
                    next_frontier.append(nb)
        if next_frontier:
            depth += 1
        frontier = next_frontier
    if not truncated:
        assert total_degree % 2 == 0, "every move should be reversible"
    return OrbitReport(
        states=len(seen),
        edges=total_degree // 2,
        diameter=depth,
        degree_histogram=tuple(sorted(histogram.items())),
        truncated=truncated,
        members=tuple(seen) if keep_members else None,
    )


def same_orbit(
    a,
    b,
    n: int | None = None,
    within_triangle: bool = True,
    max_states: int = DEFAULT_ORBIT_CAP,
) -> bool | None:
    """Whether two states are connected by moves.  None when the search
    hit the state cap before deciding."""
    init, neighbor_fn = _neighbor_function(a, n, within_triangle)
    target, _ = _neighbor_function(b, n, within_triangle)
    if init == target:
        return True
    seen = {init}
    frontier = [init]
    while frontier:
        next_frontier = []
        for state in frontier:
            for nb in neighbor_fn(state):
                if nb == target:
                    return True
                if nb not in seen:
                    if len(seen) >= max_states:
                        return None
                    seen.add(nb)
                    next_frontier.append(nb)
        frontier = next_frontier
    return False


# -- uniform sampling ---------------------------------------------------------

def basis_chain(
    n: int,
    steps: int,
    seed: int | None = None,
    rng: random.Random | None = None,
    start: frozenset[Cell] | None = None,
) -> Iterator[frozenset[Cell]]:
    """Metropolis walk over the bases of T_n, one state per step.

    From the current basis a legal move is proposed uniformly and
    accepted with probability min(1, degree(current) / degree(proposed)),
    which makes the uniform distribution over bases stationary.  The
    start state (the bottom row unless given) is yielded first, then one
    state per step, so the iterator yields steps + 1 values.
    """
    if rng is None:
        rng = random.Random(seed)
    state = frozenset(start) if start is not None else line_cells(n)
    moves = legal_moves(state, n)
    yield state
    for _ in range(steps):
        proposal = moves[rng.randrange(len(moves))]
        nxt = (state - {proposal.from_cell}) | {proposal.to_cell}
        nxt_moves = legal_moves(nxt, n)
        if rng.random() * len(nxt_moves) < len(moves):
            state, moves = nxt, nxt_moves
        yield state


def sample_basis(
    n: int,
    steps: int | None = None,
    seed: int | None = None,
    rng: random.Random | None = None,
) -> frozenset[Cell]:
    """One approximately uniform basis of T_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if steps is None:
        steps = 50 * n * n
    state = line_cells(n)
    for state in basis_chain(n, steps, seed=seed, rng=rng):
        pass
    return state
