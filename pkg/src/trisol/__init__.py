"""Triangle bases of the XOR tiling and their 3-permutation twins.

The package has five layers: ``perms`` (3-permutations, patterns,
inversion statistics), ``grid`` (configurations, the completion rule,
basis and sparsity tests, two independence oracles), ``bijection`` (the
correspondence and the shifted-sum calculus behind it), ``solitaire``
(the marble game, orbits, uniform sampling), and ``enumeration``
(exhaustive searches with pruning).  ``cli`` and ``service`` expose the
lot on the command line and over HTTP.
"""

from .bijection import (
    Cut,
    Direction,
    config_cuts,
    config_shifted_sum,
    configuration_to_perm,
    find_config_cut,
    find_cut,
    find_perm_cut,
    inversion_points,
    perm_cuts,
    perm_shifted_sum,
    perm_to_configuration,
)
from .enumeration import (
    count_avoiders,
    count_bases,
    enumerate_avoiders,
    enumerate_bases,
    verify_bijection,
    verify_bounds,
)
from .errors import (
    CollisionError,
    DomainError,
    GuardExceededError,
    IllegalMoveError,
    NotABasisError,
    ParseError,
)
from .grid import (
    Configuration,
    Filling,
    Triangle,
    closure,
    decompose_closed,
    fill,
    format_configuration,
    is_basis,
    is_sparse,
    line_cells,
    mirror,
    parse_configuration,
    render_ascii,
    rotate120,
    sparsity_violation,
    touching,
    triangle_cells,
    xor_assignment_oracle,
    xor_independence_oracle,
)
from .perms import (
    ThreePermutation,
    avoids_class,
    contains_pattern,
    find_12_12,
    find_312_231,
    inversion_sequences,
    mirror_perm,
    parse_three_permutation,
    rotate_perm,
)
from .solitaire import (
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

__all__ = [
    "Axis",
    "CollisionError",
    "Configuration",
    "Cut",
    "Direction",
    "DomainError",
    "Filling",
    "GuardExceededError",
    "IllegalMoveError",
    "NotABasisError",
    "OrbitReport",
    "ParseError",
    "PermSolitaireMove",
    "SolitaireMove",
    "ThreePermutation",
    "Triangle",
    "apply_move",
    "apply_perm_move",
    "avoids_class",
    "basis_chain",
    "check_move",
    "check_perm_move",
    "closure",
    "config_cuts",
    "config_shifted_sum",
    "configuration_to_perm",
    "contains_pattern",
    "count_avoiders",
    "count_bases",
    "decompose_closed",
    "enumerate_avoiders",
    "enumerate_bases",
    "fill",
    "find_12_12",
    "find_312_231",
    "find_config_cut",
    "find_cut",
    "find_perm_cut",
    "format_configuration",
    "grid_move_to_perm_move",
    "inversion_points",
    "inversion_sequences",
    "is_basis",
    "is_sparse",
    "legal_moves",
    "legal_perm_moves",
    "line_cells",
    "mirror",
    "mirror_perm",
    "orbit",
    "parse_configuration",
    "parse_three_permutation",
    "perm_cuts",
    "perm_move_to_grid_move",
    "perm_shifted_sum",
    "perm_to_configuration",
    "render_ascii",
    "rotate120",
    "rotate_perm",
    "same_orbit",
    "sample_basis",
    "slide",
    "sparsity_violation",
    "touching",
    "triangle_cells",
    "verify_bijection",
    "verify_bounds",
    "xor_assignment_oracle",
    "xor_independence_oracle",
]

__version__ = "0.1.0"
