"""Exact counts of P(n), Q_k(n), V_k(n) and S(n) without enumeration.

P(n) comes from Euler's pentagonal-number recurrence; the other statistics
are finite sums of P values::

    Q_k(n) = P(n - k) + P(n - 2k) + ...
    V_k(n) = Q_k(n)
    S(n)   = P(0) + P(1) + ... + P(n - 1)

P is taken to be zero on negative arguments so the sums need no boundary
handling.
"""

from __future__ import annotations

import threading


class CountTable:
    """Memoized table of partition numbers, grown on demand.

    Reads of already-computed entries take no lock; extension is serialized.
    """

    def __init__(self) -> None:
        self.p_values: list[int] = [1]
        self._lock = threading.Lock()

    @property
    def high_water(self) -> int:
        return len(self.p_values) - 1

    def ensure(self, n: int) -> None:
        if n <= self.high_water:
            return
        with self._lock:
            if n <= self.high_water:
                return
            target = max(n, 2 * self.high_water)
            values = self.p_values
            for m in range(len(values), target + 1):
                values.append(_pentagonal_step(values, m))

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        self.ensure(n)
        return self.p_values[n]


def _pentagonal_step(values: list[int], m: int) -> int:
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > m:
            break
        g2 = g1 + j
        term = values[m - g1]
        if g2 <= m:
            term += values[m - g2]
        total += term if j % 2 else -term
        j += 1
    return total


_TABLE = CountTable()


def partition_number(n: int) -> int:
    """P(n); zero for negative n."""
    return _TABLE[n]


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"part size k must be >= 1, got {k}")


def q_count(k: int, n: int) -> int:
    """Occurrences of the part ``k`` over all partitions of ``n``."""
    _check_k(k)
    if n < k:
        return 0
    _TABLE.ensure(n - k)
    p = _TABLE.p_values
    return sum(p[m] for m in range(n - k, -1, -k))


def v_count(k: int, n: int) -> int:
    # Elder's theorem; tested against the enumeration oracle, not assumed
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return q_count(k, n)


def s_sum(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return 0
    _TABLE.ensure(n - 1)
    return sum(_TABLE.p_values[:n])


def statistic(name: str, n: int, k: int | None = None) -> int:
    """Dispatch by statistic letter: ``P``, ``Q``, ``V`` or ``S``."""
    name = name.upper()
    if name in ("Q", "V"):
        if k is None:
            raise ValueError(f"statistic {name} requires k")
        return q_count(k, n) if name == "Q" else v_count(k, n)
    if k is not None:
        raise ValueError(f"statistic {name} takes no k")
    if name == "P":
        return partition_number(n)
    if name == "S":
        return s_sum(n)
    raise ValueError(f"unknown statistic {name!r}")
