"""Partition representation, exhaustive enumeration and brute-force statistics.

Everything here works by walking every partition of ``n``.  It is slow on
purpose: the counts produced by :mod:`partitionkit.counting` are checked
against these functions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

DEFAULT_ENUM_CAP = 60
_enum_cap = DEFAULT_ENUM_CAP


class EnumerationCapError(ValueError):
    """Raised when an exhaustive enumeration is requested beyond the cap."""


@dataclass(frozen=True, order=True)
class Partition:
    """A non-increasing tuple of positive integers.

    Ordering between partitions is the lexicographic order of ``parts``, so
    sorting in reverse gives the canonical enumeration order.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing: {parts}")
        if parts and (parts[-1] < 1 or not all(isinstance(p, int) for p in parts)):
            raise ValueError(f"parts must be positive integers: {parts}")

    @classmethod
    def parse(cls, literal: str) -> "Partition":
        """Parse ``"2+2+1"``.  ``"0"`` and ``""`` denote the empty partition."""
        text = literal.strip()
        if text in ("", "0"):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split("+"))
        except ValueError:
            raise ValueError(f"malformed partition literal: {literal!r}") from None
        if any(p < 1 for p in parts):
            raise ValueError(f"malformed partition literal: {literal!r}")
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    def stats(self) -> "PartitionStats":
        return PartitionStats(dict(Counter(self.parts)))


@dataclass(frozen=True)
class PartitionStats:
    occurrences_of: Mapping[int, int] = field(default_factory=dict)

    @property
    def distinct_count(self) -> int:
        return sum(1 for m in self.occurrences_of.values() if m >= 1)

    def occurrences(self, k: int) -> int:
        # absent values are simply not present, not an error
        return self.occurrences_of.get(k, 0)

    def values_repeated(self, k: int) -> int:
        """Number of distinct values with multiplicity at least ``k``."""
        return sum(1 for m in self.occurrences_of.values() if m >= k)


def get_enum_cap() -> int:
    return _enum_cap


def set_enum_cap(cap: int) -> int:
    """Change the cap used when none is passed explicitly; returns the old one."""
    global _enum_cap
    if cap < 0:
        raise ValueError(f"enumeration cap must be >= 0, got {cap}")
    old, _enum_cap = _enum_cap, cap
    return old


def _check_cap(n: int, cap: int | None) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    limit = _enum_cap if cap is None else cap
    if n > limit:
        raise EnumerationCapError(
            f"refusing to enumerate partitions of {n}: enumeration cap is {limit}"
        )


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"part size k must be >= 1, got {k}")


def iter_partitions(n: int, cap: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse-lexicographic order.

    The cap is checked eagerly, before the first partition is produced.
    """
    _check_cap(n, cap)
    return _reverse_lex(n)


def _reverse_lex(n: int) -> Iterator[Partition]:
    if n == 0:
        yield Partition(())
        return
    # non-unit parts are kept in `head`; trailing ones are only counted
    head = [n] if n > 1 else []
    ones = 0 if n > 1 else 1
    while True:
        yield Partition(tuple(head) + (1,) * ones)
        if not head:
            return
        v = head.pop() - 1
        rest = ones + 1
        if v == 1:
            ones = rest + 1
            continue
        q, r = divmod(rest, v)
        head.extend([v] * (q + 1))
        if r > 1:
            head.append(r)
            ones = 0
        else:
            ones = r


def enumerate_partitions(n: int, cap: int | None = None) -> list[Partition]:
    return list(iter_partitions(n, cap))


@dataclass(frozen=True)
class BruteStatistics:
    """Per-``n`` totals gathered from one pass over every partition."""

    n: int
    count: int
    q: Mapping[int, int]
    v: Mapping[int, int]
    s: int


def brute_statistics(n: int, cap: int | None = None) -> BruteStatistics:
    _check_cap(n, cap)
    return _brute_statistics(n)


@lru_cache(maxsize=128)
def _brute_statistics(n: int) -> BruteStatistics:
    q: Counter[int] = Counter()
    v: Counter[int] = Counter()
    s = count = 0
    for p in _reverse_lex(n):
        count += 1
        mult = Counter(p.parts)
        s += len(mult)
        q.update(mult)
        for m in mult.values():
            for j in range(1, m + 1):
                v[j] += 1
    return BruteStatistics(n, count, dict(q), dict(v), s)


def count_partitions_brute(n: int, cap: int | None = None) -> int:
    return brute_statistics(n, cap).count


def q_count_brute(k: int, n: int, cap: int | None = None) -> int:
    """Total multiplicity of the part ``k`` across all partitions of ``n``."""
    _check_k(k)
    return brute_statistics(n, cap).q.get(k, 0)


def v_count_brute(k: int, n: int, cap: int | None = None) -> int:
    """Over all partitions of ``n``, how many part values occur ``k`` or more times."""
    _check_k(k)
    return brute_statistics(n, cap).v.get(k, 0)


def s_sum_brute(n: int, cap: int | None = None) -> int:
    return brute_statistics(n, cap).s
