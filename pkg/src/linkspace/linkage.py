"""Exact-rational polygonal linkages and admissibility predicates.

A linkage is a tuple of positive rational bar lengths.  Every predicate in
the package reduces to comparing a subset sum against half the total length,
so all arithmetic is done with `fractions.Fraction` and is exact; genericity
(no subset sums to exactly half the total) guarantees that the non-strict
comparisons used below never hit the equality case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence, TypeVar

Rational = Fraction

#: Concrete stand-in for a "sufficiently small" length in the standard
#: representatives; any smaller value gives the same combinatorics (see
#: stable_under_epsilon).
DEFAULT_EPSILON = Fraction(1, 100)

T = TypeVar("T")


class LinkageError(ValueError):
    """Base class for linkage construction and predicate errors."""


class NonPositiveLength(LinkageError):
    pass


class ViolatesPolygonInequality(LinkageError):
    """Some bar is at least as long as all the others combined."""


class NonGeneric(LinkageError):
    """Some subset of bars has exactly half the total length.

    Carries the witnessing index subset in `witness`.
    """

    def __init__(self, witness: frozenset[int], half: Fraction):
        self.witness = witness
        super().__init__(
            f"subset {{{','.join(map(str, sorted(witness)))}}} sums to half the "
            f"total length ({half}); the linkage admits a collinear configuration"
        )


class EmptySubset(LinkageError):
    pass


class NotAPartition(LinkageError):
    """Parts overlap or fail to cover the index set."""


@dataclass(frozen=True)
class Linkage:
    """A validated polygonal linkage: positive, closed (polygon inequality)
    and generic.  Construct via make_linkage()."""

    lengths: tuple[Fraction, ...]
    total: Fraction

    @property
    def n(self) -> int:
        return len(self.lengths)

    def part_sum(self, indices: Iterable[int]) -> Fraction:
        return sum((self.lengths[i - 1] for i in indices), Fraction(0))

    def spec(self) -> str:
        """Comma-separated exact form, e.g. '1,1,1/100,1/100,1'."""
        return ",".join(str(l) for l in self.lengths)


def make_linkage(lengths: Sequence[Fraction | int]) -> Linkage:
    """Validate and build a Linkage.

    This is the single gate enforcing positivity, genericity and the polygon
    inequality; everything downstream may assume all three.  Genericity is
    checked before the polygon inequality so that a degenerate bar equal to
    the sum of the rest (an exact half-split) is reported as NonGeneric with
    its witness.

    Raises NonPositiveLength, NonGeneric or ViolatesPolygonInequality.
    """
    if not lengths:
        raise LinkageError("length list is empty")
    ls = tuple(Fraction(l) for l in lengths)
    if len(ls) < 3:
        raise LinkageError(f"need at least 3 bars, got {len(ls)}")
    for i, l in enumerate(ls, 1):
        if l <= 0:
            raise NonPositiveLength(f"length {i} is {l}; all lengths must be > 0")
    total = sum(ls, Fraction(0))
    half = total / 2
    n = len(ls)
    # Brute force over nonempty proper subsets, smallest first, so the
    # reported witness is deterministic.  n <= 8 in practice.
    for size in range(1, n):
        for subset in combinations(range(1, n + 1), size):
            if sum(ls[i - 1] for i in subset) == half:
                raise NonGeneric(frozenset(subset), half)
    longest = max(ls)
    if longest >= total - longest:
        raise ViolatesPolygonInequality(
            f"longest bar {longest} is >= sum of the rest {total - longest}"
        )
    return Linkage(lengths=ls, total=total)


def is_admissible_part(linkage: Linkage, part: Iterable[int]) -> bool:
    """True iff the bars indexed by `part` are collectively no longer than
    the remaining bars.

    Genericity rules out equality, so <= and < agree here.
    """
    s = frozenset(part)
    if not s:
        raise EmptySubset("admissibility is undefined for the empty subset")
    if not s <= frozenset(range(1, linkage.n + 1)):
        raise LinkageError(f"indices {sorted(s)} out of range 1..{linkage.n}")
    part_sum = linkage.part_sum(s)
    return part_sum <= linkage.total - part_sum


def is_admissible_partition(
    linkage: Linkage, parts: Iterable[Iterable[int]]
) -> bool:
    """True iff every part of the partition is admissible.

    The (cyclic) order of the parts is irrelevant: parts are checked
    independently, so partitions with the same parts in different order are
    admissible or not together.
    """
    sets = [frozenset(p) for p in parts]
    ground = frozenset(range(1, linkage.n + 1))
    if any(not p for p in sets):
        raise NotAPartition("empty part")
    if sum(len(p) for p in sets) != len(ground) or frozenset().union(*sets) != ground:
        raise NotAPartition(
            f"parts {sorted(sorted(p) for p in sets)} do not partition 1..{linkage.n}"
        )
    return all(is_admissible_part(linkage, p) for p in sets)


def substitute_epsilon(
    template: Sequence[Fraction | int | None], epsilon: Fraction
) -> list[Fraction]:
    """Fill the None slots of a length template with a concrete epsilon."""
    return [Fraction(epsilon) if l is None else Fraction(l) for l in template]


def stable_under_epsilon(
    template: Sequence[Fraction | int | None],
    predicate: Callable[[Linkage], T],
    epsilon: Fraction = DEFAULT_EPSILON,
) -> tuple[T, bool]:
    """Evaluate `predicate` on the template linkage at epsilon and at
    epsilon/10.

    Returns (value at epsilon, True iff both evaluations agree).  Agreement
    is evidence that epsilon is small enough for the combinatorics to have
    stabilised; disagreement means the chosen epsilon is too large.
    """
    at_eps = predicate(make_linkage(substitute_epsilon(template, epsilon)))
    at_tenth = predicate(make_linkage(substitute_epsilon(template, epsilon / 10)))
    return at_eps, at_eps == at_tenth


def parse_rational(token: str) -> Fraction:
    """Parse 'int' or 'int/int' into an exact rational."""
    token = token.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise LinkageError(f"cannot parse length {token!r}: {exc}") from None
