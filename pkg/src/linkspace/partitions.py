"""Cyclically ordered partitions of {1..n}.

A cyclic partition is stored in its canonical rotation: the part containing
the largest element n comes last.  That rotation is unique, so tuple equality
on the parts is equality of cyclic partitions, and it lines up with the
convention of appending {n} to an ordered partition of {1..n-1} and with the
vertex <-> permutation correspondence (cut the cycle at n, drop n).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    pass


class NotAPartition(PartitionError):
    pass


class InvalidArity(PartitionError):
    pass


class GroundSetMismatch(PartitionError):
    pass


class TooCoarse(PartitionError):
    """Raised when merging parts of a partition that has fewer than 3."""


@dataclass(frozen=True)
class CyclicPartition:
    """Canonical-rotation cyclic partition; build via canonicalize()."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        _check_partition(self.parts)
        n = sum(len(p) for p in self.parts)
        if n not in self.parts[-1]:
            raise NotAPartition(
                f"not in canonical rotation: {n} must lie in the last part"
            )

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def is_cyclic_order(self) -> bool:
        """True iff every part is a singleton (a full cyclic ordering)."""
        return all(len(p) == 1 for p in self.parts)

    def element_sequence(self) -> tuple[int, ...]:
        """The elements read around the canonical rotation (singletons only)."""
        if not self.is_cyclic_order():
            raise InvalidArity(f"{self} has non-singleton parts")
        return tuple(next(iter(p)) for p in self.parts)

    def rotations(self) -> list[tuple[frozenset[int], ...]]:
        m = len(self.parts)
        return [self.parts[k:] + self.parts[:k] for k in range(m)]

    def part_containing(self, x: int) -> frozenset[int]:
        for p in self.parts:
            if x in p:
                return p
        raise KeyError(x)

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, sorted(p))) + "}" for p in self.parts)

    def __repr__(self) -> str:
        return f"CyclicPartition({self})"


CyclicOrder = CyclicPartition  # all-singleton case; see is_cyclic_order()


def _check_partition(parts: Sequence[frozenset[int]]) -> int:
    """Validate that parts partition {1..n} for some n; return n."""
    if not parts:
        raise NotAPartition("no parts")
    if any(not p for p in parts):
        raise NotAPartition("empty part")
    union: set[int] = set()
    count = 0
    for p in parts:
        union |= p
        count += len(p)
    if count != len(union):
        raise NotAPartition("parts overlap")
    n = max(union)
    if union != set(range(1, n + 1)):
        raise NotAPartition(f"ground set {sorted(union)} is not 1..{n}")
    return n


def canonicalize(parts: Iterable[Iterable[int]]) -> CyclicPartition:
    """Rotate a raw part sequence so the part containing n comes last.

    The input must be a partition of {1..n}; the result is the unique
    canonical representative of its rotation class.
    """
    seq = tuple(frozenset(p) for p in parts)
    n = _check_partition(seq)
    for i, p in enumerate(seq):
        if n in p:
            return CyclicPartition(seq[i + 1 :] + seq[: i + 1])
    raise AssertionError("unreachable")


def parse_partition(text: str) -> CyclicPartition:
    """Parse the table notation, e.g. '{1,3}{2,4}{5}'."""
    if not re.fullmatch(r"(\{\d+(,\d+)*\})+", text):
        raise NotAPartition(f"cannot parse partition {text!r}")
    parts = [
        frozenset(int(tok) for tok in body.split(","))
        for body in re.findall(r"\{([^{}]*)\}", text)
    ]
    return canonicalize(parts)


def _set_partitions(elements: Sequence[int], m: int) -> Iterator[list[frozenset[int]]]:
    """All partitions of `elements` into exactly m unordered blocks.

    Blocks are emitted ordered by their smallest element, so every partition
    appears exactly once; element i is assigned to an existing block or opens
    a new one, pruned so exactly m blocks result.
    """
    n = len(elements)

    def extend(i: int, blocks: list[list[int]]) -> Iterator[list[frozenset[int]]]:
        if i == n:
            if len(blocks) == m:
                yield [frozenset(b) for b in blocks]
            return
        remaining = n - i
        for b in blocks:
            # still possible to open the missing blocks later?
            if len(blocks) + remaining - 1 >= m:
                b.append(elements[i])
                yield from extend(i + 1, blocks)
                b.pop()
        if len(blocks) < m:
            blocks.append([elements[i]])
            yield from extend(i + 1, blocks)
            blocks.pop()

    yield from extend(0, [])


def enumerate_cyclic_partitions(n: int, m: int) -> list[CyclicPartition]:
    """All cyclic partitions of {1..n} into exactly m parts, canonical form.

    Generated directly in canonical form: the block containing n is pinned
    last and the remaining m-1 blocks are arranged in every linear order, so
    no rotation-deduplication is needed.  Count = S(n,m) * (m-1)!.
    """
    if m < 2 or m > n:
        raise InvalidArity(f"need 2 <= m <= n, got m={m}, n={n}")
    out = []
    for blocks in _set_partitions(range(1, n + 1), m):
        last = next(b for b in blocks if n in b)
        rest = [b for b in blocks if b is not last]
        for arrangement in permutations(rest):
            out.append(CyclicPartition(tuple(arrangement) + (last,)))
    return out


def refines(fine: CyclicPartition, coarse: CyclicPartition) -> bool:
    """True iff `fine`'s parts group into cyclically consecutive blocks that
    spell out `coarse` in its cyclic order.

    Tries each rotation of `fine`; for a fixed rotation the grouping is
    forced (parts are disjoint), so a greedy scan is exact.
    """
    if fine.n != coarse.n:
        raise GroundSetMismatch(f"ground sets differ: {fine.n} vs {coarse.n}")
    m, k = fine.num_parts, coarse.num_parts
    if m < k:
        return False
    owner = {x: j for j, p in enumerate(coarse.parts) for x in p}
    for rot in fine.rotations():
        start = owner[next(iter(rot[0]))]
        idx = 0
        ok = True
        for step in range(k):
            target = coarse.parts[(start + step) % k]
            acc: set[int] = set()
            while acc != target:
                if idx == m or not rot[idx] <= target:
                    ok = False
                    break
                acc |= rot[idx]
                idx += 1
            if not ok:
                break
        if ok and idx == m:
            return True
    return False


def vertex_to_permutation(v: CyclicOrder) -> tuple[int, ...]:
    """Cut a full cyclic order at n and drop n, giving a linear order of
    {1..n-1}; a bijection between cyclic orders of {1..n} and S_{n-1}."""
    return v.element_sequence()[:-1]


def permutation_to_vertex(perm: Sequence[int]) -> CyclicOrder:
    """Inverse of vertex_to_permutation: append n = len(perm)+1 and close up."""
    m = len(perm)
    if sorted(perm) != list(range(1, m + 1)):
        raise NotAPartition(f"{perm!r} is not a permutation of 1..{m}")
    return CyclicPartition(
        tuple(frozenset((x,)) for x in perm) + (frozenset((m + 1,)),)
    )


def cell_vertices(c: CyclicPartition) -> list[CyclicOrder]:
    """All full cyclic orders refining c: order each part internally, keep the
    cyclic order of the parts.  Exactly prod(|part|!) of them."""
    per_part = [permutations(sorted(p)) for p in c.parts]
    out = []
    for choice in product(*per_part):
        seq = [x for block in choice for x in block]
        out.append(canonicalize([(x,) for x in seq]))
    return out


def coarsenings(c: CyclicPartition) -> list[CyclicPartition]:
    """All cyclic partitions obtained by merging two cyclically adjacent
    parts of c; exactly num_parts of them when num_parts >= 3."""
    m = c.num_parts
    if m < 3:
        raise TooCoarse(f"cannot merge parts of {c}: only {m} parts")
    out = []
    seen = set()
    for rot in c.rotations():
        merged = (rot[0] | rot[1],) + rot[2:]
        cp = canonicalize(merged)
        if cp not in seen:
            seen.add(cp)
            out.append(cp)
    return out


def _ordered_splits(part: frozenset[int]) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """All ordered pairs (X, Y) of nonempty sets with X | Y = part."""
    elems = sorted(part)
    for mask in range(1, 2 ** len(elems) - 1):
        x = frozenset(e for i, e in enumerate(elems) if mask >> i & 1)
        yield x, part - x


def one_step_refinements(c: CyclicPartition) -> list[CyclicPartition]:
    """All cyclic partitions obtained by splitting one part of c into an
    ordered pair of consecutive parts; these are exactly the partitions into
    num_parts+1 parts that refine c."""
    out = []
    for i, part in enumerate(c.parts):
        if len(part) < 2:
            continue
        for x, y in _ordered_splits(part):
            out.append(canonicalize(c.parts[:i] + (x, y) + c.parts[i + 1 :]))
    return out
