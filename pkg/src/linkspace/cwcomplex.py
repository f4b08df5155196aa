"""The combinatorial cell complex of a generic linkage.

Cells of dimension k are the admissible cyclic partitions of {1..n} into
n-k parts; the boundary of a cell consists of its one-step refinements
(all of which are admissible, since refining only shrinks part sums).
Two-part labels never occur: a 2-part partition would need both parts
admissible, forcing the equal split that genericity excludes, so dimensions
run from 0 (full cyclic orders) to n-3 (three-part labels).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .linkage import Linkage, is_admissible_partition
from .partitions import (
    CyclicPartition,
    enumerate_cyclic_partitions,
    one_step_refinements,
    parse_partition,
)


class ArityMismatch(ValueError):
    """Operation defined only for a specific number of bars."""


@dataclass(frozen=True)
class Cell:
    label: CyclicPartition
    dim: int


class CWComplex:
    """Graded admissible cells with refinement incidence.

    cells_by_dim[d] lists the d-cells sorted by label string; boundary[d][i]
    holds the indices (into cells_by_dim[d-1]) of the cell's codimension-1
    faces.  Immutable after construction.
    """

    def __init__(
        self,
        linkage: Linkage,
        cells_by_dim: list[list[Cell]],
        boundary: list[list[tuple[int, ...]]],
    ):
        self.linkage = linkage
        self.cells_by_dim = tuple(tuple(cs) for cs in cells_by_dim)
        self.boundary = tuple(tuple(bs) for bs in boundary)
        self._index = {
            cell.label: (d, i)
            for d, cells in enumerate(self.cells_by_dim)
            for i, cell in enumerate(cells)
        }

    @property
    def dim(self) -> int:
        return len(self.cells_by_dim) - 1

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(cs) for cs in self.cells_by_dim)

    def has_cell(self, label: CyclicPartition) -> bool:
        return label in self._index

    def index_of(self, label: CyclicPartition) -> tuple[int, int]:
        return self._index[label]

    def boundary_labels(self, label: CyclicPartition) -> list[CyclicPartition]:
        d, i = self._index[label]
        return [self.cells_by_dim[d - 1][j].label for j in self.boundary[d][i]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CWComplex):
            return NotImplemented
        return (
            self.linkage.lengths == other.linkage.lengths
            and self.cells_by_dim == other.cells_by_dim
            and self.boundary == other.boundary
        )

    def __repr__(self) -> str:
        return f"CWComplex(n={self.linkage.n}, f={self.f_vector()})"


def build_complex(linkage: Linkage) -> CWComplex:
    """Enumerate all admissible cyclic partitions of {1..n} grade by grade
    and wire up refinement incidence.  Supported for 4 <= n <= 8."""
    n = linkage.n
    if not 4 <= n <= 8:
        raise ValueError(f"complex construction supports 4 <= n <= 8, got n={n}")
    cells_by_dim: list[list[Cell]] = []
    for m in range(n, 2, -1):  # m parts -> dimension n - m
        dim = n - m
        labels = [
            c
            for c in enumerate_cyclic_partitions(n, m)
            if is_admissible_partition(linkage, c.parts)
        ]
        labels.sort(key=str)
        cells_by_dim.append([Cell(label, dim) for label in labels])
    # Every full cyclic order is admissible (singleton parts are admissible by
    # the polygon inequality).
    assert len(cells_by_dim[0]) == factorial(n - 1)

    boundary: list[list[tuple[int, ...]]] = [[() for _ in cells_by_dim[0]]]
    for d in range(1, len(cells_by_dim)):
        below = {cell.label: i for i, cell in enumerate(cells_by_dim[d - 1])}
        rows = []
        for cell in cells_by_dim[d]:
            faces = one_step_refinements(cell.label)
            # refinements of an admissible label are admissible, hence present
            rows.append(tuple(sorted(below[f] for f in faces)))
        boundary.append(rows)
    return CWComplex(linkage, cells_by_dim, boundary)


def euler_characteristic(complex_: CWComplex) -> int:
    return sum((-1) ** d * len(cs) for d, cs in enumerate(complex_.cells_by_dim))


# Facet rows for the two admissibility tables of the standard pentagon
# surgery, in their conventional order.  Step-2 rows are the 14 facets of the
# 4-permutohedron with {5} appended (rows 1-8 hexagons, 9-14 squares; row 8 is
# the reversal {2,3,4}{1}{5} of row 1 -- it is sometimes misprinted as
# {1,2,3}{1}{5}, which repeats 1 and omits 4).  Step-3 rows are the three-part
# cyclic partitions whose part containing 5 is not a singleton; the two cyclic
# arrangements of the same parts are paired per row since they are admissible
# or not together.
STEP2_ROWS: tuple[str, ...] = (
    "{1}{2,3,4}{5}",
    "{2}{1,3,4}{5}",
    "{3}{1,2,4}{5}",
    "{4}{1,2,3}{5}",
    "{1,2,3}{4}{5}",
    "{1,2,4}{3}{5}",
    "{1,3,4}{2}{5}",
    "{2,3,4}{1}{5}",
    "{1,2}{3,4}{5}",
    "{3,4}{1,2}{5}",
    "{1,3}{2,4}{5}",
    "{2,4}{1,3}{5}",
    "{1,4}{2,3}{5}",
    "{2,3}{1,4}{5}",
)

STEP3_ROWS: tuple[tuple[str, str], ...] = (
    ("{3}{4}{1,2,5}", "{4}{3}{1,2,5}"),
    ("{2}{4}{1,3,5}", "{4}{2}{1,3,5}"),
    ("{2}{3}{1,4,5}", "{3}{2}{1,4,5}"),
    ("{1}{4}{2,3,5}", "{4}{1}{2,3,5}"),
    ("{1}{3}{2,4,5}", "{3}{1}{2,4,5}"),
    ("{1}{2}{3,4,5}", "{2}{1}{3,4,5}"),
    ("{3,4}{2}{1,5}", "{2}{3,4}{1,5}"),
    ("{2,4}{3}{1,5}", "{3}{2,4}{1,5}"),
    ("{2,3}{4}{1,5}", "{4}{2,3}{1,5}"),
    ("{3,4}{1}{2,5}", "{1}{3,4}{2,5}"),
    ("{1,4}{3}{2,5}", "{3}{1,4}{2,5}"),
    ("{1,3}{4}{2,5}", "{4}{1,3}{2,5}"),
    ("{2,4}{1}{3,5}", "{1}{2,4}{3,5}"),
    ("{1,4}{2}{3,5}", "{2}{1,4}{3,5}"),
    ("{1,2}{4}{3,5}", "{4}{1,2}{3,5}"),
    ("{2,3}{1}{4,5}", "{1}{2,3}{4,5}"),
    ("{1,3}{2}{4,5}", "{2}{1,3}{4,5}"),
    ("{1,2}{3}{4,5}", "{3}{1,2}{4,5}"),
)


@dataclass(frozen=True)
class MembershipTable:
    """Admissibility of the step-2 and step-3 face labels per linkage."""

    columns: tuple[str, ...]
    step2: tuple[tuple[str, tuple[bool, ...]], ...]
    step3: tuple[tuple[tuple[str, str], tuple[bool, ...]], ...]


def facet_membership_table(
    linkages: list[Linkage], columns: list[str] | None = None
) -> MembershipTable:
    """Evaluate the fixed step-2/step-3 row labels against each pentagon."""
    for l in linkages:
        if l.n != 5:
            raise ArityMismatch(f"facet tables are defined for n=5, got n={l.n}")
    if columns is None:
        columns = [f"({l.spec()})" for l in linkages]
    step2 = tuple(
        (
            row,
            tuple(
                is_admissible_partition(l, parse_partition(row).parts)
                for l in linkages
            ),
        )
        for row in STEP2_ROWS
    )
    step3 = []
    for row in STEP3_ROWS:
        a, b = (parse_partition(s) for s in row)
        values = []
        for l in linkages:
            va = is_admissible_partition(l, a.parts)
            vb = is_admissible_partition(l, b.parts)
            assert va == vb  # same parts, different cyclic order
            values.append(va)
        step3.append((row, tuple(values)))
    return MembershipTable(tuple(columns), step2, tuple(step3))
