"""Marble moves, the matching axis swaps, orbits, and the sampler."""

import collections
import random

import pytest

from trisol import IllegalMoveError
from trisol.bijection import inversion_points, perm_to_configuration
from trisol.grid import Configuration, line_cells
from trisol.perms import ThreePermutation, avoids_class, identity, reversal
from trisol.solitaire import (
    Axis,
    OrbitReport,
    PermSolitaireMove,
    SolitaireMove,
    apply_move,
    apply_perm_move,
    basis_chain,
    check_move,
    check_perm_move,
    grid_move_to_perm_move,
    legal_moves,
    legal_perm_moves,
    orbit,
    perm_move_to_grid_move,
    same_orbit,
    sample_basis,
    slide,
)

SPARSE_NON_BASIS = frozenset({(0, 0), (2, 0), (0, 2)})


# -- slides on the grid -------------------------------------------------------

def test_slide_derives_the_anchor():
    assert slide((1, 1), (1, 0)) == SolitaireMove((1, 0), (1, 1), (1, 0))
    assert slide((2, 1), (1, 1)) == SolitaireMove((1, 1), (2, 1), (1, 1))
    assert slide((1, 2), (2, 1)) == SolitaireMove((1, 1), (1, 2), (2, 1))
    assert slide((2, 1), (1, 2)) == SolitaireMove((1, 1), (2, 1), (1, 2))


def test_slide_rejects_non_triple_pairs():
    with pytest.raises(IllegalMoveError):
        slide((0, 0), (2, 0))
    with pytest.raises(IllegalMoveError):
        slide((0, 0), (1, 1))
    with pytest.raises(IllegalMoveError):
        slide((0, 0), (0, 0))


def test_check_move_clauses():
    line = line_cells(3)
    cases = [
        (line, SolitaireMove((-1, 0), (0, 0), (-1, 1)), "leaves the first quadrant"),
        (line, SolitaireMove((0, 0), (0, 0), (2, 0)), "do not form an L-triple"),
        (line, SolitaireMove((0, 0), (0, 0), (0, 0)), "does not leave its cell"),
        ({(2, 0), (3, 0)}, slide((3, 0), (2, 1)), "leaves the staircase region"),
        (line, slide((0, 1), (0, 0)), "from-cell is not occupied"),
        (line, slide((0, 0), (1, 0)), "to-cell is already occupied"),
        ({(0, 0), (2, 0)}, slide((0, 0), (0, 1)), "third cell of the triple"),
    ]
    for cells, move, fragment in cases:
        with pytest.raises(IllegalMoveError, match=fragment):
            check_move(cells, move)


def test_check_move_returns_the_stationary_cell():
    assert check_move(line_cells(3), slide((0, 0), (0, 1))) == (1, 0)
    assert check_move(line_cells(3), slide((1, 0), (0, 1))) == (0, 0)


def test_check_move_raw_mode_allows_leaving_the_staircase():
    cells = {(2, 0), (3, 0)}
    assert check_move(cells, slide((3, 0), (2, 1)), within_triangle=False) == (2, 0)


def test_legal_moves_on_the_line_of_three():
    assert legal_moves(line_cells(3)) == (
        SolitaireMove((0, 0), (0, 0), (0, 1)),
        SolitaireMove((0, 0), (1, 0), (0, 1)),
        SolitaireMove((1, 0), (1, 0), (1, 1)),
        SolitaireMove((1, 0), (2, 0), (1, 1)),
    )


def test_legal_moves_raw_mode_accepts_cells_outside_the_staircase():
    cells = frozenset({(4, 0), (5, 0)})
    with pytest.raises(ValueError):
        legal_moves(cells)
    raw = legal_moves(cells, within_triangle=False)
    assert len(raw) == 2
    assert all(m.to_cell == (4, 1) for m in raw)


def test_sparse_non_basis_is_frozen():
    assert legal_moves(SPARSE_NON_BASIS, 3) == ()
    report = orbit(SPARSE_NON_BASIS, 3)
    assert (report.states, report.edges, report.diameter) == (1, 0, 0)


def test_apply_move_is_reversible():
    state = frozenset(line_cells(4))
    rng = random.Random(5)
    for _ in range(60):
        move = rng.choice(legal_moves(state, 4))
        nxt = apply_move(state, move, 4)
        back = slide(move.to_cell, move.from_cell)
        assert back in legal_moves(nxt, 4)
        assert apply_move(nxt, back, 4) == state
        state = nxt


# -- labeled repair -----------------------------------------------------------

def conf_of(sigma, tau):
    return perm_to_configuration(ThreePermutation(sigma, tau))


def test_labeled_moves_follow_the_map():
    start = conf_of((2, 1), (2, 1))
    assert start.labels == ((1, 0), (0, 1))
    down = apply_move(start, slide((1, 0), (0, 0)))
    assert down == conf_of((1, 2), (2, 1))
    left = apply_move(start, slide((0, 1), (0, 0)))
    assert left == conf_of((2, 1), (1, 2))


def test_labeled_move_can_relabel_the_stationary_marble():
    # the marble at the origin never moves, yet its label changes from
    # 2 to 1 because the final cells only admit one labeling
    start = conf_of((2, 1), (1, 2))
    assert start.labels == ((1, 0), (0, 0))
    after = apply_move(start, slide((1, 0), (0, 1)))
    assert after == conf_of((1, 2), (2, 1))
    assert after.labels == ((0, 0), (0, 1))


def test_unlabeled_configuration_stays_unlabeled():
    conf = Configuration(frozenset(line_cells(3)))
    after = apply_move(conf, slide((2, 0), (1, 1)))
    assert isinstance(after, Configuration)
    assert after.labels is None


# -- axis swaps on 3-permutations ---------------------------------------------

def test_perm_pair_clauses():
    with pytest.raises(IllegalMoveError, match="occupy the same cell"):
        check_perm_move(
            ThreePermutation((1, 2), (1, 2)), PermSolitaireMove(1, 2, Axis.FIRST)
        )
    with pytest.raises(IllegalMoveError, match="differ by more than position j"):
        check_perm_move(
            ThreePermutation((3, 1, 2), (1, 2, 3)), PermSolitaireMove(1, 2, Axis.FIRST)
        )
    with pytest.raises(IllegalMoveError, match="differ by more than position i"):
        check_perm_move(
            ThreePermutation((1, 2, 3), (2, 3, 1)), PermSolitaireMove(1, 3, Axis.FIRST)
        )
    with pytest.raises(IllegalMoveError, match="excluded for a horizontal pair"):
        check_perm_move(
            ThreePermutation((2, 1), (1, 2)), PermSolitaireMove(1, 2, Axis.SECOND)
        )
    with pytest.raises(IllegalMoveError, match="excluded for a vertical pair"):
        check_perm_move(
            ThreePermutation((1, 2), (2, 1)), PermSolitaireMove(1, 2, Axis.THIRD)
        )
    with pytest.raises(ValueError):
        check_perm_move(
            ThreePermutation((2, 1), (1, 2)), PermSolitaireMove(2, 1, Axis.FIRST)
        )


def test_apply_perm_move_swaps_the_named_axes():
    p = ThreePermutation((2, 1), (1, 2))
    swapped = apply_perm_move(p, PermSolitaireMove(1, 2, Axis.FIRST))
    assert swapped == ThreePermutation((1, 2), (2, 1))
    third = apply_perm_move(p, PermSolitaireMove(1, 2, Axis.THIRD))
    assert third == ThreePermutation((2, 1), (2, 1))


def test_perm_moves_are_involutions(avoiders):
    for p in avoiders(4):
        for move in legal_perm_moves(p):
            q = apply_perm_move(p, move)
            assert q != p
            assert apply_perm_move(q, move) == p


def test_perm_moves_preserve_the_class(avoiders):
    for p in avoiders(4):
        for move in legal_perm_moves(p):
            assert avoids_class(apply_perm_move(p, move))


def test_legal_perm_moves_matches_the_checker(avoiders):
    for p in avoiders(3):
        allowed = set(legal_perm_moves(p))
        for i in range(1, 4):
            for j in range(i + 1, 4):
                for axis in Axis:
                    move = PermSolitaireMove(i, j, axis)
                    try:
                        check_perm_move(p, move)
                    except IllegalMoveError:
                        assert move not in allowed
                    else:
                        assert move in allowed


# -- the two games agree ------------------------------------------------------

def test_move_translation_round_trips(avoiders):
    for p in avoiders(3):
        conf = perm_to_configuration(p)
        perm_moves = set(legal_perm_moves(p))
        grid_moves = set(legal_moves(conf, p.n))
        assert {grid_move_to_perm_move(conf, m) for m in grid_moves} == perm_moves
        assert {perm_move_to_grid_move(p, m) for m in perm_moves} == grid_moves
        for m in perm_moves:
            assert grid_move_to_perm_move(conf, perm_move_to_grid_move(p, m)) == m


def test_games_commute_through_the_map(avoiders):
    for p in avoiders(3):
        conf = perm_to_configuration(p)
        for move in legal_perm_moves(p):
            q = apply_perm_move(p, move)
            stepped = apply_move(conf, perm_move_to_grid_move(p, move), p.n)
            assert perm_to_configuration(q) == stepped


def test_translation_needs_labels():
    conf = Configuration(frozenset(line_cells(3)))
    with pytest.raises(ValueError):
        grid_move_to_perm_move(conf, slide((2, 0), (1, 1)))


# -- orbits -------------------------------------------------------------------

def test_orbit_of_the_line_is_every_basis(bases):
    for n in range(1, 5):
        report = orbit(line_cells(n), n, keep_members=True)
        assert set(report.members) == bases(n)


def test_orbit_statistics_are_frozen():
    small = orbit(line_cells(3), 3)
    assert (small.states, small.edges, small.diameter) == (16, 27, 4)
    mid = orbit(line_cells(4), 4)
    assert (mid.states, mid.edges, mid.diameter) == (122, 270, 9)
    assert mid.degree_histogram == ((2, 18), (4, 66), (6, 32), (8, 6))
    big = orbit(line_cells(5), 5)
    assert (big.states, big.edges, big.diameter) == (1188, 3150, 17)


def test_orbit_degrees_match_per_state_move_counts(bases):
    report = orbit(line_cells(4), 4)
    expected = collections.Counter(len(legal_moves(b, 4)) for b in bases(4))
    assert dict(report.degree_histogram) == dict(expected)
    assert report.edges == sum(expected.elements()) // 2


def test_raw_orbit_equals_staircase_orbit_on_bases(bases):
    for cells in bases(3):
        raw = orbit(cells, 3, within_triangle=False, keep_members=True)
        confined = orbit(cells, 3, keep_members=True)
        assert set(raw.members) == set(confined.members)


def test_perm_orbit_is_the_whole_class(avoiders):
    for n in (3, 4):
        p = ThreePermutation(reversal(n), identity(n))
        report = orbit(p, keep_members=True)
        assert set(report.members) == set(avoiders(n))


def test_labeled_orbit_matches_the_perm_orbit(avoiders):
    start = perm_to_configuration(ThreePermutation(reversal(3), identity(3)))
    report = orbit(start, 3, keep_members=True)
    assert set(report.members) == {perm_to_configuration(p) for p in avoiders(3)}


def test_orbit_truncation():
    report = orbit(line_cells(4), 4, max_states=10)
    assert report.truncated
    assert report.states == 10


def test_orbit_report_serializes():
    doc = orbit(line_cells(3), 3).to_json_dict()
    assert doc["states"] == 16
    assert doc["edges"] == 27
    assert doc["diameter"] == 4
    assert doc["truncated"] is False


def test_same_orbit_answers():
    start = frozenset(line_cells(3))
    neighbor = apply_move(start, slide((2, 0), (1, 1)), 3)
    assert same_orbit(start, neighbor, 3) is True
    assert same_orbit(start, start, 3) is True
    assert same_orbit(start, SPARSE_NON_BASIS, 3) is False
    assert same_orbit(line_cells(4), SPARSE_NON_BASIS | {(1, 0)}, 4, max_states=5) is None


# -- sampling -----------------------------------------------------------------

def test_chain_yields_steps_plus_one_bases():
    states = list(basis_chain(3, 200, seed=11))
    assert len(states) == 201
    assert states[0] == frozenset(line_cells(3))
    report = orbit(line_cells(3), 3, keep_members=True)
    assert set(states) <= set(report.members)


def test_chain_is_reproducible():
    a = list(basis_chain(4, 150, seed=9))
    b = list(basis_chain(4, 150, seed=9))
    c = list(basis_chain(4, 150, seed=10))
    assert a == b
    assert a != c


def test_sample_basis_returns_a_basis(bases):
    got = sample_basis(4, steps=300, seed=3)
    assert got in bases(4)
    assert sample_basis(4, steps=300, seed=3) == got
    with pytest.raises(ValueError):
        sample_basis(0)


def test_chain_visits_every_basis_eventually(bases):
    seen = set(basis_chain(3, 3000, seed=2))
    assert seen == bases(3)
