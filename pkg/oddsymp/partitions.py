"""Partitions, box enumeration and the index sets I_{n+1}(lambda)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .exceptions import LengthError, PartitionError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers, trailing zeros dropped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise PartitionError(f"Negative part in {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"Parts are not weakly decreasing: {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the command-line form: comma-separated parts, empty string for the empty partition."""
        text = text.strip()
        if not text or text in ("0", "-", "∅"):
            return cls(())
        try:
            parts = [int(piece) for piece in text.split(",") if piece.strip()]
        except ValueError as exc:
            raise PartitionError(f"Cannot read a partition from {text!r}") from exc
        return cls(tuple(parts))

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def part(self, j: int) -> int:
        """1-based part lambda_j, zero beyond the length."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def first(self) -> int:
        return self.part(1)

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self.parts) > k:
            raise LengthError(f"{self} has length {self.length()} > {k}")
        return self.parts + (0,) * (k - len(self.parts))

    def tail(self) -> "Partition":
        return Partition(self.parts[1:])

    def check_length(self, bound: int) -> "Partition":
        if self.length() > bound:
            raise LengthError(f"{self} has length {self.length()}, at most {bound} allowed")
        return self

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition(())


@dataclass(frozen=True)
class IndexSet:
    elements: frozenset[int]

    def __len__(self) -> int:
        return len(self.elements)

    def ascending(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def descending(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements, reverse=True))


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(tuple(parts))


def _box(max_len: int, max_part: int) -> Iterator[tuple[int, ...]]:
    yield ()
    if max_len == 0:
        return
    for first in range(1, max_part + 1):
        for rest in _box(max_len - 1, first):
            yield (first,) + rest


def enumerate_bounded(max_len: int, max_part: int) -> list[Partition]:
    """All partitions inside a max_len x max_part box.

    Ordered lexicographically on the parts, the empty partition first, so
    that logs and tables come out the same on every run.
    """
    if max_len < 0 or max_part < 0:
        raise PartitionError("Box dimensions must be nonnegative")
    return [Partition(parts) for parts in _box(max_len, max_part)]


def partitions_up_to(max_len: int, max_size: int) -> list[Partition]:
    """Partitions with length <= max_len and |lambda| <= max_size."""
    return [lam for lam in enumerate_bounded(max_len, max_size) if lam.size() <= max_size]


def prepend_rect(r: int, k: int, lam: Partition) -> Partition:
    """(r^k) ∪ lambda: k parts equal to r followed by the parts of lambda."""
    if k < 0:
        raise PartitionError("Rectangle height must be nonnegative")
    if lam.first() > r:
        raise PartitionError(f"{lam} does not fit under a rectangle of width {r}")
    return Partition((r,) * k + lam.parts)


def rectangle(r: int, k: int) -> Partition:
    return prepend_rect(r, k, EMPTY)


def index_set(lam: Partition, n_plus_1: int) -> IndexSet:
    """I_{n+1}(lambda) = {lambda_j + (n+1) - j : 1 <= j <= n+1}."""
    parts = lam.padded(n_plus_1)
    return IndexSet(frozenset(p + n_plus_1 - j for j, p in enumerate(parts, start=1)))


def partition_from_index_set(indices: IndexSet) -> Partition:
    """Inverse of index_set: sort descending and remove the staircase."""
    values = indices.descending()
    k = len(values)
    return Partition(tuple(v - (k - j) for j, v in enumerate(values, start=1)))


def exponent_vector(lam: Partition, k: int) -> tuple[int, ...]:
    """lambda + staircase (k-1, ..., 0) as an ordered tuple."""
    return tuple(p + k - j for j, p in enumerate(lam.padded(k), start=1))


__all__ = [
    "EMPTY",
    "IndexSet",
    "Partition",
    "enumerate_bounded",
    "exponent_vector",
    "index_set",
    "make_partition",
    "partition_from_index_set",
    "partitions_up_to",
    "prepend_rect",
    "rectangle",
]
