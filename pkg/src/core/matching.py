"""Matching sequences, thread decompositions and Kohnert labelings.

A matching sequence joins cells of column ``i+1`` to cells of column ``i``.
Every edge points left to a cell that sits weakly higher, each target takes
at most one edge, and every cell right of column 1 sends at most one edge.
Its connected components are paths; the path through ``(1, i)`` gives the
``i``-th part of the anchor weight.

Two matchings matter in practice:

* the thread matching, built greedily from the right by always taking the
  lowest free cell weakly above the current one, whose anchor weight is the
  thread weight ``theta(T)``;
* the Kohnert matching with respect to ``a``, which joins equal labels of
  the Kohnert labeling.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ..errors import NotMember
from .composition import WeakComposition
from .diagram import Cell, Diagram

logger = logging.getLogger("keypieri.core")


@dataclass(frozen=True)
class MatchingSequence:
    """Edges ``source -> target`` from column ``i+1`` to column ``i`` on a host diagram."""
    host: Diagram
    edges: Mapping[Cell, Cell] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "edges", {Cell(*x): Cell(*y) for x, y in dict(self.edges).items()})

    def __hash__(self) -> int:
        return hash((self.host, frozenset(self.edges.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatchingSequence):
            return NotImplemented
        return self.host == other.host and self.edges == other.edges

    def target(self, cell: Cell) -> Cell | None:
        return self.edges.get(Cell(*cell))

    def sources(self) -> dict[Cell, Cell]:
        """Reverse map ``target -> source``."""
        return {y: x for x, y in self.edges.items()}

    def component(self, cell: Cell) -> list[Cell]:
        """The path through ``cell``, ordered from its right end to column 1 side."""
        reverse = self.sources()
        start = Cell(*cell)
        while start in reverse:
            start = reverse[start]
        path = [start]
        while path[-1] in self.edges:
            path.append(self.edges[path[-1]])
        return path

    def components(self) -> list[list[Cell]]:
        reverse = self.sources()
        heads = [x for x in self.host if x not in reverse]
        return [self.component(x) for x in heads]

    def to_json(self) -> list[list[list[int]]]:
        return [[x.to_json(), y.to_json()] for x, y in sorted(self.edges.items())]


def anchor_weight(matching: MatchingSequence, n: int | None = None) -> WeakComposition:
    """wt(M): the i-th part counts the cells on the path ending at (1, i)."""
    rows = matching.host.max_row if n is None else max(n, matching.host.max_row)
    parts = [0] * rows
    reverse = matching.sources()
    for r in matching.host.column(1):
        length, cell = 1, Cell(1, r)
        while cell in reverse:
            cell = reverse[cell]
            length += 1
        parts[r - 1] = length
    return WeakComposition(tuple(parts))


def path_length(matching: MatchingSequence, cell: Cell) -> int:
    """mu_M(x): the number of cells in the component of ``cell``."""
    return len(matching.component(cell))


def path_lengths(matching: MatchingSequence) -> dict[Cell, int]:
    lengths: dict[Cell, int] = {}
    for path in matching.components():
        for cell in path:
            lengths[cell] = len(path)
    return lengths


def validate_matching(diagram: Diagram, matching: MatchingSequence | Iterable) -> bool:
    """Check that ``matching`` is a total matching sequence on ``diagram``.

    Accepts either a :class:`MatchingSequence` or a raw iterable of
    ``(source, target)`` pairs; malformed input yields ``False``.
    """
    try:
        pairs = list(matching.edges.items()) if isinstance(matching, MatchingSequence) else list(matching)
        pairs = [(Cell(*x), Cell(*y)) for x, y in pairs]
    except (TypeError, ValueError):
        return False

    seen_sources: set[Cell] = set()
    seen_targets: set[Cell] = set()
    for x, y in pairs:
        if x not in diagram or y not in diagram:
            return False
        if x.column != y.column + 1 or y.row < x.row:
            return False
        if x in seen_sources or y in seen_targets:
            return False
        seen_sources.add(x)
        seen_targets.add(y)

    return all(cell in seen_sources for cell in diagram if cell.column > 1)


@dataclass(frozen=True)
class ThreadDecomposition:
    matching: MatchingSequence
    weight: WeakComposition
    anchored: bool
    threads: tuple[tuple[Cell, ...], ...]

    def thread_of(self, cell: Cell) -> tuple[Cell, ...]:
        cell = Cell(*cell)
        for thread in self.threads:
            if cell in thread:
                return thread
        raise KeyError(cell)

    def unanchored(self) -> tuple[tuple[Cell, ...], ...]:
        return tuple(t for t in self.threads if t[-1].column != 1)


def thread_decomposition(diagram: Diagram, n: int | None = None) -> ThreadDecomposition:
    """Split ``diagram`` into threads and return the induced matching and thread weight.

    Threads are built from the rightmost column that still has free cells,
    always taking the lowest free cell weakly above the previous one. A thread
    that cannot continue before column 1 is unanchored; only anchored threads
    contribute to the weight.
    """
    free = {c: list(diagram.column(c)) for c in range(1, diagram.max_column + 1)}
    edges: dict[Cell, Cell] = {}
    threads: list[tuple[Cell, ...]] = []

    while True:
        start = max((c for c, rows in free.items() if rows), default=0)
        if not start:
            break
        row = free[start].pop(0)
        thread = [Cell(start, row)]
        for c in range(start - 1, 0, -1):
            above = [r for r in free[c] if r >= row]
            if not above:
                break
            row = above[0]
            free[c].remove(row)
            edges[thread[-1]] = Cell(c, row)
            thread.append(Cell(c, row))
        threads.append(tuple(thread))

    anchored = all(t[-1].column == 1 for t in threads)
    rows = diagram.max_row if n is None else max(n, diagram.max_row)
    parts = [0] * rows
    for thread in threads:
        if thread[-1].column == 1:
            parts[thread[-1].row - 1] = len(thread)
    if not anchored:
        logger.debug("thread decomposition has %d unanchored threads", sum(t[-1].column != 1 for t in threads))
    return ThreadDecomposition(
        matching=MatchingSequence(diagram, edges),
        weight=WeakComposition(tuple(parts)),
        anchored=anchored,
        threads=tuple(threads),
    )


def thread_weight(diagram: Diagram, n: int | None = None) -> WeakComposition:
    """theta(T)."""
    return thread_decomposition(diagram, n).weight


@dataclass(frozen=True)
class Labeling:
    labels: Mapping[Cell, int]

    def __getitem__(self, cell) -> int:
        return self.labels[Cell(*cell)]

    def cells_with(self, label: int) -> tuple[Cell, ...]:
        return tuple(sorted(x for x, i in self.labels.items() if i == label))


def kohnert_labeling(
    diagram: Diagram, a: WeakComposition | Iterable[int], check: bool = True
) -> tuple[Labeling, MatchingSequence]:
    """Compute L_a(T) and the Kohnert matching M_a(T).

    Columns are labeled right to left. Column ``j`` receives the labels
    ``{i : a_i >= j}`` from bottom to top, each cell taking the smallest
    unused label whose cell in column ``j+1`` (if any) is weakly lower.

    Raises:
        NotMember: if ``diagram`` is not in KD(a) or the labeling gets stuck.
    """
    a = WeakComposition.of(a)
    if check:
        from ..space.kohnert_space import kd_membership

        if not kd_membership(diagram, a):
            raise NotMember(f"diagram is not a Kohnert diagram for {a}")

    labels: dict[Cell, int] = {}
    right: dict[int, int] = {}  # label -> row in column j+1
    width = max(diagram.max_column, max(a, default=0))
    for j in range(width, 0, -1):
        available = [i for i, part in enumerate(a, start=1) if part >= j]
        rows = diagram.column(j)
        if len(available) != len(rows):
            raise NotMember(f"column {j} has {len(rows)} cells but {len(available)} labels")
        here: dict[int, int] = {}
        for r in rows:
            choice = next((i for i in available if right.get(i, 0) <= r), None)
            if choice is None:
                raise NotMember(f"no admissible label for cell ({j},{r})")
            available.remove(choice)
            labels[Cell(j, r)] = choice
            here[choice] = r
        right = here

    edges = {}
    by_label = {(x.column, i): x for x, i in labels.items()}
    for x, i in labels.items():
        y = by_label.get((x.column - 1, i))
        if y is not None:
            edges[x] = y
    return Labeling(labels), MatchingSequence(diagram, edges)
