"""Ferrers diagrams and the vertical k-packet construction.

A packet of ``k`` new cells stacked in one column can join a diagram in two
ways: as ``k`` new rows of length one at the bottom, or by lengthening ``k``
equal rows by one cell each.  Horizontal or diagonal placements cannot be
expressed with this API at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partitions import Partition, iter_partitions

Cell = tuple[int, int]  # (row, column), both 0-based

SEPARATE = "separate"
MERGE = "merge"


@dataclass(frozen=True)
class FerrersDiagram:
    """Rows of a partition, some cells optionally marked as newly added.

    Marked cells have to sit at the right end of their rows, and what is
    left after removing them must itself be a Ferrers diagram.
    """

    rows: Partition
    marks: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "marks", frozenset(self.marks))
        self.source()  # validates

    def source(self) -> Partition:
        """The partition left after deleting every marked cell."""
        lengths = list(self.rows.parts)
        per_row: dict[int, set[int]] = {}
        for r, c in self.marks:
            if not (0 <= r < len(lengths) and 0 <= c < lengths[r]):
                raise ValueError(f"marked cell {(r, c)} lies outside the diagram")
            per_row.setdefault(r, set()).add(c)
        for r, cols in per_row.items():
            if cols != set(range(lengths[r] - len(cols), lengths[r])):
                raise ValueError(f"marks in row {r} are not at the end of the row")
            lengths[r] -= len(cols)
        while lengths and lengths[-1] == 0:
            lengths.pop()
        try:
            return Partition(tuple(lengths))
        except ValueError:
            raise ValueError("removing the marked cells does not leave a Ferrers diagram") from None

    def lines(self) -> list[str]:
        return [
            "".join("#" if (r, c) in self.marks else "*" for c in range(length))
            for r, length in enumerate(self.rows.parts)
        ]


def render(d: FerrersDiagram | Partition) -> str:
    if isinstance(d, Partition):
        d = FerrersDiagram(d)
    return "\n".join(d.lines())


@dataclass(frozen=True)
class PacketResult:
    diagram: FerrersDiagram
    kind: str
    value: int | None = None  # the merged part value

    @property
    def partition(self) -> Partition:
        return self.diagram.rows

    @property
    def description(self) -> str:
        return "separate unit" if self.kind == SEPARATE else f"merge at {self.value}"


@dataclass(frozen=True)
class PacketAdditionOutcome:
    source: Partition
    k: int
    results: tuple[PacketResult, ...]

    def partitions(self) -> list[Partition]:
        return [r.partition for r in self.results]


def merge_sites(p: Partition, k: int) -> list[int]:
    """Distinct part values occurring at least ``k`` times, largest first."""
    if k < 1:
        raise ValueError(f"packet size k must be >= 1, got {k}")
    sites = []
    for v in dict.fromkeys(p.parts):
        if p.multiplicity(v) >= k:
            sites.append(v)
    return sites


def add_packet(p: Partition, k: int) -> PacketAdditionOutcome:
    """All ways of adding a vertical packet of ``k`` cells to ``p``.

    A merge at value v lengthens the top k rows of the block of v's; those
    rows sit directly below rows longer than v, so the order stays valid.
    """
    sites = merge_sites(p, k)
    parts = p.parts
    results = []

    separate = FerrersDiagram(
        Partition(parts + (1,) * k),
        frozenset((len(parts) + i, 0) for i in range(k)),
    )
    results.append(PacketResult(separate, SEPARATE))

    for v in sites:
        top = parts.index(v)
        grown = list(parts)
        for i in range(top, top + k):
            grown[i] = v + 1
        diagram = FerrersDiagram(
            Partition(tuple(grown)), frozenset((i, v) for i in range(top, top + k))
        )
        results.append(PacketResult(diagram, MERGE, v))

    return PacketAdditionOutcome(p, k, tuple(results))


def count_new_partitions(n: int, k: int, cap: int | None = None) -> int:
    """Generation events over all partitions of ``n``; duplicates across sources count."""
    if k < 1:
        raise ValueError(f"packet size k must be >= 1, got {k}")
    return sum(len(add_packet(p, k).results) for p in iter_partitions(n, cap))


def render_grid(grid: Sequence[Sequence[tuple[str, FerrersDiagram] | None]], gap: int = 3) -> str:
    """Lay labelled diagrams out side by side.

    ``grid`` is a list of bands; each band is a list of cells, and ``None``
    leaves a slot empty so columns stay aligned across bands.  Bands are
    separated by a blank line.  Trailing whitespace is stripped.
    """
    ncols = max((len(band) for band in grid), default=0)
    widths = [0] * ncols
    for band in grid:
        for j, cell in enumerate(band):
            if cell is not None:
                label, d = cell
                widths[j] = max([widths[j], len(label)] + [len(s) for s in d.lines()])

    blocks = []
    for band in grid:
        columns = []
        for j, cell in enumerate(band):
            columns.append([] if cell is None else [cell[0]] + cell[1].lines())
        height = max((len(c) for c in columns), default=0)
        lines = []
        for i in range(height):
            pieces = [
                (col[i] if i < len(col) else "").ljust(widths[j] + gap)
                for j, col in enumerate(columns)
            ]
            lines.append("".join(pieces).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def partitions_grid(n: int, cap: int | None = None) -> str:
    """Every partition of ``n`` drawn side by side, labelled with its literal."""
    band = [(str(p) or "0", FerrersDiagram(p)) for p in iter_partitions(n, cap)]
    return render_grid([band])


def packet_grid(n: int, k: int, cap: int | None = None) -> str:
    """Results of ``add_packet`` for every partition of ``n``.

    Column j belongs to the j-th partition of n.  The first band holds the
    separate-unit additions; band i + 1 holds merges at the i-th largest
    admissible value.
    """
    outcomes = [add_packet(p, k) for p in iter_partitions(n, cap)]
    depth = max(len(o.results) for o in outcomes)
    grid = []
    for i in range(depth):
        band: list[tuple[str, FerrersDiagram] | None] = []
        for o in outcomes:
            if i < len(o.results):
                res = o.results[i]
                band.append((str(res.partition), res.diagram))
            else:
                band.append(None)
        while band and band[-1] is None:
            band.pop()
        grid.append(band)
    return render_grid(grid)
