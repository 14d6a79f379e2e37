"""Exact tables of the partition numbers p(n) and cubic partitions c(n).

Each table has two independent construction paths (recurrence vs. series
inversion, inversion vs. explicit convolution); the test suite compares
them because every downstream identity is built on these values.
"""

from __future__ import annotations

from typing import Sequence

from .series import BigSeries, euler_product, invert, mul


class PartitionTable:
    """p(n) for 0 <= n <= max_index; the accessor is total: p(n<0) = 0."""

    __slots__ = ("_values",)

    def __init__(self, values: Sequence[int]):
        self._values = tuple(values)
        if not self._values or self._values[0] != 1:
            raise ValueError("p(0) must be 1")

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    def p(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.max_index:
            raise IndexError(f"p({n}) beyond table max index {self.max_index}")
        return self._values[n]

    def values(self) -> tuple:
        return self._values


class CubicTable:
    """c(n) for 0 <= n <= max_index (even parts in two colours)."""

    __slots__ = ("_values",)

    def __init__(self, values: Sequence[int]):
        self._values = tuple(values)
        if not self._values or self._values[0] != 1:
            raise ValueError("c(0) must be 1")

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    def c(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.max_index:
            raise IndexError(f"c({n}) beyond table max index {self.max_index}")
        return self._values[n]

    def values(self) -> tuple:
        return self._values


def _pentagonal_offsets(limit: int) -> list[tuple[int, int]]:
    """(generalized pentagonal number, sign) pairs up to `limit`, ascending."""
    offsets = []
    k = 1
    while k * (3 * k - 1) // 2 <= limit:
        sign = -1 if k % 2 == 0 else 1
        offsets.append((k * (3 * k - 1) // 2, sign))
        g2 = k * (3 * k + 1) // 2
        if g2 <= limit:
            offsets.append((g2, sign))
        k += 1
    return offsets


def build_p_table(N: int) -> PartitionTable:
    """Partition numbers up to N by Euler's pentagonal recurrence."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    vals = [0] * (N + 1)
    vals[0] = 1
    offsets = _pentagonal_offsets(N)
    for n in range(1, N + 1):
        s = 0
        for g, sign in offsets:
            if g > n:
                break
            s += sign * vals[n - g]
        vals[n] = s
    return PartitionTable(vals)


def p_values_via_inversion(N: int) -> tuple:
    """Independent path: coefficients of 1/(q;q)_infinity via series inversion."""
    return invert(euler_product(1, N)).coeffs


def build_c_table(N: int) -> CubicTable:
    """Cubic partition numbers up to N as coefficients of the inverse of
    (q;q)_infinity (q^2;q^2)_infinity."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    prod = mul(euler_product(1, N), euler_product(2, N))
    return CubicTable(invert(prod).coeffs)


def c_values_via_convolution(N: int, p_table: PartitionTable) -> tuple:
    """Independent path: c(n) = sum over 2b <= n of p(n - 2b) p(b)."""
    if p_table.max_index < N:
        raise IndexError("p table too short for the requested convolution")
    out = []
    for n in range(N + 1):
        s = 0
        for b in range(n // 2 + 1):
            s += p_table.p(n - 2 * b) * p_table.p(b)
        out.append(s)
    return tuple(out)
