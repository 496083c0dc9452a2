"""Added columns, excised weights and the k-th stratum maps.

A diagram ``U`` in stratum ``k`` of the target space of ``a`` (in the target
space bounded by row ``k`` but not by row ``k - 1``) carries one extra cell
compared to KD(a). The stratum map removes it: label ``U`` by the excised
weight plus ``e_k``, split off the long paths, drop the first-column cell of
row ``k`` from them, rectify, and glue the short paths back on.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from ..config import CROSSCHECK
from ..core.composition import WeakComposition
from ..core.diagram import Cell, Diagram, key_diagram
from ..core.matching import kohnert_labeling, path_lengths, thread_decomposition, thread_weight
from ..errors import NotMember
from ..insertion.rectify import rectify

logger = logging.getLogger("keypieri.stratify")


def added_column_set(diagram: Diagram, a: WeakComposition | Iterable[int], m: int | None = None) -> tuple[int, ...]:
    """Columns ``c_1 < ... < c_m`` with cwt(U) = cwt(a) + sum of e_{c_i}.

    Raises:
        NotMember: if the column weights do not differ by distinct unit vectors,
            or by a number of them other than ``m`` when ``m`` is given.
    """
    a = WeakComposition.of(a)
    have = diagram.column_weight()
    want = WeakComposition(a.column_weight())
    width = max(len(have), len(want))
    diff = [x - y for x, y in zip(have.padded(width), want.padded(width))]
    if any(d not in (0, 1) for d in diff):
        raise NotMember(f"column weight {have} is not cwt{a} plus a horizontal strip")
    columns = tuple(c for c, d in enumerate(diff, start=1) if d)
    if m is not None and len(columns) != m:
        raise NotMember(f"expected {m} added columns for {a}, found {list(columns)}")
    return columns


def added_column(diagram: Diagram, a: WeakComposition | Iterable[int]) -> int:
    """The single column in which ``diagram`` has one more cell than key(a)."""
    return added_column_set(diagram, a, 1)[0]


def excised_weight(diagram: Diagram, a: WeakComposition | Iterable[int], k: int) -> WeakComposition:
    """theta of key(theta(U)) with its cell at (added column, k) removed.

    Raises:
        NotMember: if key(theta(U)) has no cell at (added column, k).
    """
    a = WeakComposition.of(a)
    c = added_column(diagram, a)
    n = max(len(a), diagram.max_row, k)
    theta = thread_weight(diagram, n)
    if theta.part(k) < c:
        raise NotMember(f"key{theta} has no cell at ({c},{k}); diagram is not in stratum {k} of {a}")
    return thread_weight(key_diagram(theta).remove((c, k)), n)


@dataclass(frozen=True)
class StratumSplit:
    """Pieces of a stratum-k diagram under the labeling by ``weight + e_k``."""
    column: int
    weight: WeakComposition
    u_plus: Diagram
    u_minus: Diagram
    u_eq_k: tuple[Cell, ...]
    u_plus_star: Diagram
    rect_path: tuple[Cell, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "column": self.column,
            "weight": self.weight.to_json(),
            "u_plus": self.u_plus.to_json(),
            "u_minus": self.u_minus.to_json(),
            "u_eq_k": [x.to_json() for x in self.u_eq_k],
            "u_plus_star": self.u_plus_star.to_json(),
            "rect_path": [x.to_json() for x in self.rect_path],
        }


def stratum_split(diagram: Diagram, a: WeakComposition | Iterable[int], k: int) -> StratumSplit:
    """Partition ``diagram`` by path length in the Kohnert matching of ``b + e_k``.

    Cells on paths of at least ``c`` cells (``c`` the added column) form
    ``u_plus``; ``u_plus_star`` drops the first-column cell of row ``k``.
    """
    a = WeakComposition.of(a)
    c = added_column(diagram, a)
    b = excised_weight(diagram, a, k)
    labeling, matching = kohnert_labeling(diagram, b.plus_unit(k))
    lengths = path_lengths(matching)

    plus = Diagram.of(x for x in diagram if lengths[x] >= c)
    minus = diagram - plus
    eq_k = tuple(sorted(labeling.cells_with(k), key=lambda x: x.column))
    if (1, k) not in plus:
        raise NotMember(f"cell (1,{k}) does not start a path of length {c}")
    return StratumSplit(c, b, plus, minus, eq_k, plus.remove((1, k)))


def stratum_map_split(diagram: Diagram, a: WeakComposition | Iterable[int], k: int) -> tuple[Diagram, StratumSplit]:
    """Apply the k-th stratum map and return the image with its split (rect_path filled in)."""
    if k < 2:
        raise NotMember("stratum 1 is inverted by bottom removal, not a stratum map")
    split = stratum_split(diagram, a, k)
    trace = rectify(split.u_plus_star)
    clash = [x for x in trace.result if x in split.u_minus]
    if clash:
        raise NotMember(f"rectified long paths overlap the short ones at {clash}")
    image = trace.result | split.u_minus
    path = tuple(sorted(trace.moved_cells))
    logger.debug("stratum map on row %d: column %d, moved %s", k, split.column, path)
    return image, StratumSplit(
        split.column, split.weight, split.u_plus, split.u_minus, split.u_eq_k, split.u_plus_star, path
    )


def stratum_map(diagram: Diagram, a: WeakComposition | Iterable[int], k: int) -> Diagram:
    """The k-th stratum map of ``a``; the image lies in KD(a) and loses one cell of row ``k``."""
    return stratum_map_split(diagram, a, k)[0]


def recover_rect_path(image: Diagram, k: int, c: int) -> tuple[Cell, ...]:
    """Find the cells rectification moved, column by column from 1 to ``c - 1``.

    Each is the highest cell of its column, weakly below the previous one
    (row ``k`` to start), whose thread has fewer than ``c`` cells.
    """
    lengths = path_lengths(thread_decomposition(image).matching)
    path: list[Cell] = []
    row = k
    for i in range(1, c):
        rows = [r for r in image.column(i) if r <= row and lengths[Cell(i, r)] < c]
        if not rows:
            raise NotMember(f"no moved cell in column {i} at or below row {row}")
        row = max(rows)
        path.append(Cell(i, row))
    return tuple(path)


def stratum_inverse(image: Diagram, a: WeakComposition | Iterable[int], k: int, c: int) -> Diagram:
    """Rebuild the stratum-k diagram with added column ``c`` that maps to ``image``.

    Raises:
        NotMember: if the reconstruction is blocked or does not map back.
    """
    a = WeakComposition.of(a)
    if k < 2 or c < 1:
        raise NotMember(f"no stratum map for row {k} and column {c}")
    path = recover_rect_path(image, k, c)

    current = image
    for y in reversed(path):
        if y.right() in current:
            raise NotMember(f"cannot push {tuple(y)} right: {tuple(y.right())} is occupied")
        current = current.move(y, y.right())
    if (1, k) in current:
        raise NotMember(f"cell (1,{k}) is already occupied")
    diagram = current.add((1, k))

    back, split = stratum_map_split(diagram, a, k)
    if back != image:
        raise NotMember(f"no diagram with added column {c} maps to the given image")
    if CROSSCHECK and split.rect_path != path:
        logger.warning("recovered path %s differs from the recorded one %s", path, split.rect_path)
    return diagram
