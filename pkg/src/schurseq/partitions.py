"""Integer partitions and the small amount of arithmetic needed on them.

A :class:`Partition` is a tuple subclass, so it hashes and compares equal to
the plain tuple of its parts.  Hot loops elsewhere in the package build plain
tuples and only promote to :class:`Partition` at API boundaries.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InvalidPartition, RowTooShort

__all__ = [
    "Partition",
    "componentwise_sum",
    "prepend_row",
    "is_horizontal_strip",
    "partitions_of",
    "partitions_up_to",
    "canonical_sort",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and the empty partition is the only one of
    weight zero.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise InvalidPartition(f"parts must be positive, got {tuple(parts)}")
            if i and p > parts[i - 1]:
                raise InvalidPartition(f"parts must be weakly decreasing, got {tuple(parts)}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,1"``; ``"-"`` (or an empty string) is the empty partition.

        Surrounding parentheses are tolerated, so ``"(2,1)"`` also works.
        Zeros are rejected here even though the constructor strips them.
        """
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1].strip()
        if text in ("", "-", "∅"):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InvalidPartition(f"cannot parse partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise InvalidPartition(f"partition {text!r} has a non-positive part")
        return cls(parts)


def format_partition(parts: tuple[int, ...]) -> str:
    return ",".join(map(str, parts)) if parts else "-"


def componentwise_sum(a: Iterable[int], b: Iterable[int]) -> Partition:
    """Add two partitions row by row, padding the shorter one with zeros."""
    a, b = tuple(a), tuple(b)
    if len(a) < len(b):
        a, b = b, a
    return Partition(tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def _add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # unchecked plain-tuple version of componentwise_sum
    if len(a) < len(b):
        a, b = b, a
    return tuple([x + y for x, y in zip(a, b)]) + a[len(b):]


def prepend_row(n: int, lam: Iterable[int]) -> Partition:
    """Return ``(n, lam_1, ..., lam_l)``."""
    lam = Partition(lam)
    if n < 0:
        raise RowTooShort(f"row length must be nonnegative, got {n}")
    if lam and n < lam[0]:
        raise RowTooShort(f"cannot put a row of length {n} on top of {tuple(lam)}")
    if n == 0:
        return Partition()
    return Partition((n,) + tuple(lam))


def is_horizontal_strip(inner: Iterable[int], outer: Iterable[int]) -> bool:
    """True iff ``outer / inner`` is a horizontal strip.

    That is ``outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...``; containment
    is implied by the interlacing.
    """
    inner, outer = tuple(inner), tuple(outer)
    if len(outer) > len(inner) + 1:
        return False
    for i, o in enumerate(outer):
        below = inner[i] if i < len(inner) else 0
        if o < below:
            return False
        if i and o > inner[i - 1]:
            return False
    return len(inner) <= len(outer)


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of ``n`` in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_len - 1):
            yield (first,) + rest


def partitions_up_to(weight: int) -> Iterator[tuple[int, ...]]:
    for w in range(weight + 1):
        yield from partitions_of(w)


def canonical_sort(parts: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Sort by weight ascending, then descending lexicographic within a weight."""
    return sorted(parts, key=lambda p: (sum(p), tuple(-x for x in p), -len(p)))
