"""Staircase configurations, the completion rule, and basis tests.

Cells are 0-based integer pairs (x, y) in the first quadrant.  The staircase
triangle of size n is T_n = {(x, y) : x >= 0, y >= 0, x + y < n}; a translate
by (a, b) keeps the same shape with the right angle at (a, b).  A
configuration of size n is a set of n distinct cells inside T_n.

The completion rule comes from the XOR tiling: in any L-triple
{(x, y), (x+1, y), (x, y+1)} the three values sum to zero mod 2, so two known
cells determine the third.  ``closure`` iterates that step to its least fixed
point, which is independent of the order of application, and ``fill``
additionally decomposes the result into maximal pairwise non-touching
triangles.  A configuration of size n is a basis when its closure is all of
T_n.
"""

from __future__ import annotations

import dataclasses
import json
import random
import re
from collections.abc import Iterable
from typing import Literal

from .errors import ParseError

Cell = tuple[int, int]
Verdict = Literal["basis", "conflict", "underdetermined"]

XOR_ORACLE_LIMIT = 12
ASSIGNMENT_ORACLE_LIMIT = 8


def triangle_cells(n: int) -> frozenset[Cell]:
    """All cells of T_n."""
    return frozenset((x, y) for x in range(n) for y in range(n - x))


def line_cells(n: int) -> frozenset[Cell]:
    """The bottom row of T_n, a basis whose preimage is (reversal, identity)."""
    return frozenset((x, 0) for x in range(n))


def in_triangle(cell: Cell, n: int) -> bool:
    x, y = cell
    return x >= 0 and y >= 0 and x + y < n


@dataclasses.dataclass(frozen=True)
class Triangle:
    """The translate (a, b) + T_k."""

    a: int
    b: int
    k: int

    def __post_init__(self):
        assert self.k >= 1

    @property
    def cell_count(self) -> int:
        return self.k * (self.k + 1) // 2

    def cells(self) -> frozenset[Cell]:
        return frozenset(
            (self.a + x, self.b + y)
            for x in range(self.k)
            for y in range(self.k - x)
        )

    def __contains__(self, cell: Cell) -> bool:
        x, y = cell
        return x >= self.a and y >= self.b and x + y < self.a + self.b + self.k


@dataclasses.dataclass(frozen=True)
class Configuration:
    """A finite set of grid cells, optionally labeled 1..n.

    ``labels[i - 1]`` is the cell carrying label i.  When labels are present
    they enumerate the cells exactly once each.
    """

    cells: frozenset[Cell]
    labels: tuple[Cell, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))
        for x, y in self.cells:
            if x < 0 or y < 0:
                raise ValueError(f"cell ({x}, {y}) is outside the first quadrant")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(set(self.labels)):
                raise ValueError("labels repeat a cell")
            if frozenset(self.labels) != self.cells:
                raise ValueError("labels do not enumerate the cells")

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> "Configuration":
        return cls(frozenset(tuple(c) for c in cells))

    @classmethod
    def labeled(cls, points: Iterable[Cell]) -> "Configuration":
        points = tuple(tuple(c) for c in points)
        return cls(frozenset(points), points)

    @property
    def n(self) -> int:
        return len(self.cells)

    def unlabeled(self) -> "Configuration":
        return Configuration(self.cells)

    def in_triangle(self, n: int) -> bool:
        return all(in_triangle(c, n) for c in self.cells)

    def translate(self, dx: int, dy: int) -> "Configuration":
        labels = None
        if self.labels is not None:
            labels = tuple((x + dx, y + dy) for x, y in self.labels)
        return Configuration(
            frozenset((x + dx, y + dy) for x, y in self.cells), labels
        )


def as_cells(c: "Configuration | Iterable[Cell]") -> frozenset[Cell]:
    if isinstance(c, Configuration):
        return c.cells
    return frozenset(tuple(p) for p in c)


# -- completion ---------------------------------------------------------------

def _triples_at(anchor: Cell) -> tuple[Cell, Cell, Cell]:
    x, y = anchor
    return ((x, y), (x + 1, y), (x, y + 1))


def closure(cells: Iterable[Cell], rng: random.Random | None = None) -> frozenset[Cell]:
    """Least fixed point of the two-determine-the-third completion step.

    ``rng`` randomizes the order in which pending cells are processed; the
    result does not depend on it (the step is confluent), which the test
    suite checks rather than assumes.
    """
    present = set(as_cells(cells))
    pending = list(present)
    while pending:
        if rng is not None:
            i = rng.randrange(len(pending))
            pending[i], pending[-1] = pending[-1], pending[i]
        x, y = pending.pop()
        # every L-triple through (x, y)
        for anchor in ((x, y), (x - 1, y), (x, y - 1)):
            if anchor[0] < 0 or anchor[1] < 0:
                continue
            triple = _triples_at(anchor)
            missing = [c for c in triple if c not in present]
            if len(missing) == 1:
                new = missing[0]
                present.add(new)
                pending.append(new)
    return frozenset(present)


def touching(a: Iterable[Cell], b: Iterable[Cell]) -> bool:
    """Whether two cell sets share a cell or come within one completion step.

    Cells touch when equal or differing by (0, 1), (1, 0) or (1, -1), read
    symmetrically in both directions.
    """
    a = as_cells(a)
    deltas = ((0, 0), (0, 1), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1))
    for x, y in as_cells(b):
        for dx, dy in deltas:
            if (x + dx, y + dy) in a:
                return True
    return False


@dataclasses.dataclass(frozen=True)
class Filling:
    """A closure together with its maximal-triangle decomposition."""

    cells: frozenset[Cell]
    triangles: tuple[Triangle, ...]


def decompose_closed(closed: frozenset[Cell]) -> tuple[Triangle, ...]:
    """Write a closed cell set as pairwise non-touching maximal triangles.

    Every closed set decomposes this way; a failure to do so would falsify
    the completion theorem, so it raises rather than answering quietly.
    """
    triangles = []
    covered: set[Cell] = set()
    for x, y in sorted(closed):
        if (x, y) in covered:
            continue
        if (x - 1, y) in closed or (x, y - 1) in closed:
            continue
        k = 1
        while Triangle(x, y, k + 1).cells() <= closed:
            k += 1
        tri = Triangle(x, y, k)
        triangles.append(tri)
        covered |= tri.cells()
    if covered != closed:
        raise AssertionError(
            f"closed set is not a union of corner-grown triangles: {sorted(closed - covered)} uncovered"
        )
    for i, t1 in enumerate(triangles):
        for t2 in triangles[i + 1 :]:
            if touching(t1.cells(), t2.cells()):
                raise AssertionError(f"triangles {t1} and {t2} touch")
    return tuple(triangles)


def fill(cells: "Configuration | Iterable[Cell]") -> Filling:
    """Closure plus triangle decomposition of a seed set.

    The triangle sizes always sum to at most the number of seed points.
    """
    seeds = as_cells(cells)
    closed = closure(seeds)
    triangles = decompose_closed(closed)
    assert sum(t.k for t in triangles) <= len(seeds), "triangle sizes exceed seed count"
    return Filling(closed, triangles)


def is_basis(cells: "Configuration | Iterable[Cell]", n: int | None = None) -> bool:
    """Whether the configuration's closure is all of T_n."""
    pts = as_cells(cells)
    if n is None:
        n = len(pts)
    if len(pts) != n:
        raise ValueError(f"configuration has {len(pts)} cells, expected {n}")
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")
    # the closure of a subset of T_n stays inside T_n, so a size check works
    return len(closure(pts)) == n * (n + 1) // 2


# -- sparsity -----------------------------------------------------------------

def sparsity_violation(
    cells: "Configuration | Iterable[Cell]", n: int | None = None
) -> Triangle | None:
    """Smallest triangle of size below n holding more points than its size.

    Returns None when the configuration is sparse.  Ties are broken by the
    lexicographically least corner.
    """
    pts = as_cells(cells)
    if n is None:
        n = len(pts)
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")
    for k in range(1, n):
        for a in range(n - k + 1):
            for b in range(n - k - a + 1):
                tri = Triangle(a, b, k)
                count = sum(1 for p in pts if p in tri)
                if count > k:
                    return tri
    return None


def is_sparse(cells: "Configuration | Iterable[Cell]", n: int | None = None) -> bool:
    return sparsity_violation(cells, n) is None


# -- independence oracles -----------------------------------------------------

def xor_independence_oracle(
    cells: "Configuration | Iterable[Cell]", n: int | None = None, limit: int = XOR_ORACLE_LIMIT
) -> Verdict:
    """Classify a configuration by linear deduction over GF(2).

    Each configuration cell starts as a free bit; the rule value(x, y) +
    value(x+1, y) + value(x, y+1) = 0 propagates linear expressions.  The
    verdict is "basis" when all of T_n is determined consistently,
    "conflict" when some cell is forced to two different expressions (so
    some assignment of the free bits is contradictory), and
    "underdetermined" when propagation stalls first.
    """
    pts = sorted(as_cells(cells))
    if n is None:
        n = len(pts)
    if n > limit:
        raise ValueError(f"size {n} exceeds the oracle limit {limit}")
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")

    known: dict[Cell, int] = {}
    conflict = False
    pending: list[Cell] = []
    for i, c in enumerate(pts):
        known[c] = 1 << i
        pending.append(c)
    while pending and not conflict:
        x, y = pending.pop()
        for anchor in ((x, y), (x - 1, y), (x, y - 1)):
            if anchor[0] < 0 or anchor[1] < 0 or anchor[0] + anchor[1] + 1 >= n:
                # triples must lie inside T_n for the tiling on T_n
                continue
            triple = _triples_at(anchor)
            masks = [known.get(c) for c in triple]
            unknown = [c for c, m in zip(triple, masks) if m is None]
            if len(unknown) == 1:
                forced = 0
                for m in masks:
                    if m is not None:
                        forced ^= m
                known[unknown[0]] = forced
                pending.append(unknown[0])
            elif not unknown:
                if masks[0] ^ masks[1] ^ masks[2]:
                    conflict = True
                    break
    if conflict:
        return "conflict"
    if len(known) == n * (n + 1) // 2:
        return "basis"
    return "underdetermined"


def xor_assignment_oracle(
    cells: "Configuration | Iterable[Cell]", n: int | None = None, limit: int = ASSIGNMENT_ORACLE_LIMIT
) -> Verdict:
    """Second oracle: try all 2^n concrete bit assignments and propagate.

    Deliberately naive; kept as an independent check of the linear oracle.
    """
    pts = sorted(as_cells(cells))
    if n is None:
        n = len(pts)
    if n > limit:
        raise ValueError(f"size {n} exceeds the assignment oracle limit {limit}")
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")

    full = n * (n + 1) // 2
    saw_conflict = False
    covered_all = True
    for bits in range(1 << n):
        values: dict[Cell, int] = {
            c: (bits >> i) & 1 for i, c in enumerate(pts)
        }
        pending = list(values)
        conflict = False
        while pending and not conflict:
            x, y = pending.pop()
            for anchor in ((x, y), (x - 1, y), (x, y - 1)):
                if anchor[0] < 0 or anchor[1] < 0 or anchor[0] + anchor[1] + 1 >= n:
                    continue
                triple = _triples_at(anchor)
                got = [values.get(c) for c in triple]
                unknown = [c for c, v in zip(triple, got) if v is None]
                if len(unknown) == 1:
                    forced = 0
                    for v in got:
                        if v is not None:
                            forced ^= v
                    values[unknown[0]] = forced
                    pending.append(unknown[0])
                elif not unknown:
                    if got[0] ^ got[1] ^ got[2]:
                        conflict = True
                        break
        if conflict:
            saw_conflict = True
            break
        if len(values) != full:
            covered_all = False
    if saw_conflict:
        return "conflict"
    if covered_all:
        return "basis"
    return "underdetermined"


# -- symmetries ---------------------------------------------------------------

def rotate120(cells: "Configuration | Iterable[Cell]", n: int) -> frozenset[Cell]:
    """The order-3 rotation (x, y) -> (y, n - 1 - x - y) of T_n."""
    out = set()
    for x, y in as_cells(cells):
        if not in_triangle((x, y), n):
            raise ValueError(f"cell {(x, y)} is outside T_{n}")
        out.add((y, n - 1 - x - y))
    return frozenset(out)


def mirror(cells: "Configuration | Iterable[Cell]", n: int) -> frozenset[Cell]:
    """The diagonal mirror (x, y) -> (y, x) of T_n."""
    out = set()
    for x, y in as_cells(cells):
        if not in_triangle((x, y), n):
            raise ValueError(f"cell {(x, y)} is outside T_{n}")
        out.add((y, x))
    return frozenset(out)


# -- text and JSON forms ------------------------------------------------------

_CONF_LINE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*(.*?)\s*$")
_CELL = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_configuration(line: str, lineno: int = 1) -> tuple[int, Configuration]:
    """Parse ``n=5;(0,0),(1,2),(4,0),(2,1),(0,3)``.

    Cells are kept in written order as labels 1..n when they are distinct.
    """
    m = _CONF_LINE.match(line)
    if m is None:
        raise ParseError("expected n=<size>;(x,y),(x,y),...", lineno)
    n = int(m.group(1))
    body = m.group(2)
    cells = []
    pos = 0
    while pos < len(body):
        cm = _CELL.match(body, pos)
        if cm is None:
            raise ParseError("expected a cell (x,y)", lineno, m.start(2) + pos + 1)
        cells.append((int(cm.group(1)), int(cm.group(2))))
        pos = cm.end()
        if pos < len(body):
            if body[pos] != ",":
                raise ParseError("expected ',' between cells", lineno, m.start(2) + pos + 1)
            pos += 1
    for c in cells:
        if not in_triangle(c, n):
            raise ParseError(f"cell {c} is outside T_{n}", lineno)
    if len(set(cells)) == len(cells):
        conf = Configuration.labeled(cells)
    else:
        raise ParseError("cells repeat", lineno)
    return n, conf


def format_configuration(conf: "Configuration | Iterable[Cell]", n: int | None = None) -> str:
    """Inverse of parse_configuration; labeled cells keep label order."""
    if isinstance(conf, Configuration) and conf.labels is not None:
        cells = list(conf.labels)
    else:
        cells = sorted(as_cells(conf))
    if n is None:
        n = len(cells)
    body = ",".join(f"({x},{y})" for x, y in cells)
    return f"n={n};{body}"


def configuration_to_json_dict(conf: Configuration, n: int | None = None) -> dict:
    cells = list(conf.labels) if conf.labels is not None else sorted(conf.cells)
    return {
        "n": n if n is not None else conf.n,
        "cells": [[x, y] for x, y in cells],
        "labeled": conf.labels is not None,
    }


def configuration_from_json_dict(data: dict) -> tuple[int, Configuration]:
    try:
        n = int(data["n"])
        cells = [(int(x), int(y)) for x, y in data["cells"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad configuration object: {exc}") from exc
    for c in cells:
        if not in_triangle(c, n):
            raise ParseError(f"cell {c} is outside T_{n}")
    if data.get("labeled", True) and len(set(cells)) == len(cells):
        return n, Configuration.labeled(cells)
    return n, Configuration.of(cells)


def parse_configuration_input(text: str, fmt: str = "text") -> list[tuple[int, Configuration]]:
    if fmt == "json":
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
        return [configuration_from_json_dict(d) for d in items]
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            out.append(parse_configuration(line, lineno))
    return out


# -- rendering ----------------------------------------------------------------

def render_ascii(
    cells: "Configuration | Iterable[Cell]", n: int, show_filling: bool = False
) -> str:
    """Draw T_n as a left-justified staircase.

    Points print as a filled dot, empty staircase cells as a middle dot, and
    cells reached only by completion (with show_filling) as a shaded block.
    """
    pts = as_cells(cells)
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")
    extra = closure(pts) - pts if show_filling else frozenset()
    rows = []
    for y in range(n - 1, -1, -1):
        row = []
        for x in range(n - y):
            if (x, y) in pts:
                row.append("●")
            elif (x, y) in extra:
                row.append("▒")
            else:
                row.append("·")
        rows.append("".join(row))
    return "\n".join(rows)


def render_svg(
    cells: "Configuration | Iterable[Cell]",
    n: int,
    show_filling: bool = False,
    cell_size: int = 32,
) -> str:
    """The staircase as a standalone SVG document.

    Labels are drawn inside their marbles when the configuration carries
    them.  Deduced cells get a lighter fill when show_filling is set.
    """
    pts = as_cells(cells)
    for c in pts:
        if not in_triangle(c, n):
            raise ValueError(f"cell {c} is outside T_{n}")
    labels = cells.labels if isinstance(cells, Configuration) else None
    extra = closure(pts) - pts if show_filling else frozenset()
    s = cell_size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{n * s}" height="{n * s}" '
        f'viewBox="0 0 {n * s} {n * s}">'
    ]
    for x in range(n):
        for y in range(n - x):
            px, py = x * s, (n - 1 - y) * s
            fill = "#f3efe7" if (x, y) not in extra else "#cfd8e3"
            parts.append(
                f'<rect x="{px}" y="{py}" width="{s}" height="{s}" '
                f'fill="{fill}" stroke="#8a8378" stroke-width="1"/>'
            )
    for x, y in sorted(pts):
        cx, cy = x * s + s / 2, (n - 1 - y) * s + s / 2
        parts.append(
            f'<circle cx="{cx:g}" cy="{cy:g}" r="{s * 0.34:g}" fill="#2b4162"/>'
        )
        if labels is not None:
            label = labels.index((x, y)) + 1
            parts.append(
                f'<text x="{cx:g}" y="{cy + s * 0.12:g}" text-anchor="middle" '
                f'font-size="{s * 0.36:g}" fill="#ffffff" '
                f'font-family="sans-serif">{label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
