"""Bipartite partition counts pi(m, n) with steadily decreasing parts.

Three independent routes are implemented and cross-checked:

* ``pi_value``          -- the c/alpha convolution (the fast path, good for
                          arguments in the thousands);
* ``gf_table``          -- direct box expansion of the Carlitz generating
                          function 1/((x;xy)(x^2y^2;x^2y^2)(y;xy));
* ``enumerate_steady``  -- brute-force enumeration of part-pair sequences
                          satisfying min(a_i, b_i) >= max(a_{i+1}, b_{i+1}).

``d_value`` computes the first difference D(m,n) = pi(m,n) - pi(m-1,n)
through its crank-convolution identity; ``d_value_by_difference`` is the
always-available oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .crank import CrankTable
from .partitions import CubicTable, PartitionTable
from .series import BiSeries, bi_divide_by_binomial, bi_mul


class AlphaCache:
    """Memo for alpha(s, k); one s-slice is reused across a whole diagonal."""

    __slots__ = ("p_table", "_memo")

    def __init__(self, p_table: PartitionTable):
        self.p_table = p_table
        self._memo: Dict[Tuple[int, int], int] = {}

    def alpha(self, s: int, k: int) -> int:
        key = (s, k)
        v = self._memo.get(key)
        if v is None:
            v = alpha(s, k, self.p_table)
            self._memo[key] = v
        return v


def alpha(s: int, k: int, p_table: PartitionTable) -> int:
    """alpha(s, k) = sum over l >= 0 of (-1)^l p(k - l(l+1)/2 - l s).

    The sum is finite: terms vanish once l(l+1)/2 + l s exceeds k, so the
    loop runs for O(sqrt(k)) iterations.
    """
    if s < 0 or k < 0:
        raise ValueError("alpha takes nonnegative arguments")
    if p_table.max_index < k:
        raise IndexError("p table too short for alpha")
    total = 0
    l = 0
    while True:
        arg = k - l * (l + 1) // 2 - l * s
        if arg < 0:
            break
        total += -p_table.p(arg) if l % 2 else p_table.p(arg)
        l += 1
    return total


def pi_value(
    m: int,
    n: int,
    c_table: CubicTable,
    p_table: PartitionTable,
    alpha_cache: Optional[AlphaCache] = None,
) -> int:
    """pi(m, n) = sum_{0 <= k <= min(m,n)} c(min(m,n) - k) alpha(|m-n|, k)."""
    if m < 0 or n < 0:
        raise ValueError("pi takes nonnegative arguments")
    mu = min(m, n)
    s = abs(m - n)
    if c_table.max_index < mu or p_table.max_index < mu:
        raise IndexError("tables too short for pi_value")
    if alpha_cache is None:
        alpha_cache = AlphaCache(p_table)
    total = 0
    for k in range(mu + 1):
        a = alpha_cache.alpha(s, k)
        if a:
            total += c_table.c(mu - k) * a
    return total


def d_value(m: int, n: int, c_table: CubicTable, crank_table: CrankTable) -> int:
    """D(m, n) through the crank convolution:

        D(m,n) = sum_{0 <= k <= L} c(L - k) M(n - L, n - L + k),
        L = min(2n - m, m),

    and D(m,n) = 0 outright when m > 2n.
    """
    if m < 0 or n < 0:
        raise ValueError("d_value takes nonnegative arguments")
    if m > 2 * n:
        return 0
    L = min(2 * n - m, m)
    if c_table.max_index < L:
        raise IndexError("c table too short for d_value")
    if crank_table.max_order < n:
        raise IndexError("crank table too short for d_value")
    base = n - L
    total = 0
    for k in range(L + 1):
        mk = crank_table.value(base, base + k)
        if mk:
            total += c_table.c(L - k) * mk
    return total


def d_value_by_difference(
    m: int,
    n: int,
    c_table: CubicTable,
    p_table: PartitionTable,
    alpha_cache: Optional[AlphaCache] = None,
) -> int:
    """Oracle for D(m, n): pi(m,n) - pi(m-1,n), with pi(-1,n) = 0."""
    if alpha_cache is None:
        alpha_cache = AlphaCache(p_table)
    hi = pi_value(m, n, c_table, p_table, alpha_cache)
    lo = 0 if m == 0 else pi_value(m - 1, n, c_table, p_table, alpha_cache)
    return hi - lo


@dataclass(frozen=True)
class SteadyPair:
    """A sequence of part-pairs (a_i, b_i) with steadily decreasing parts."""

    parts: Tuple[Tuple[int, int], ...]

    def is_valid(self) -> bool:
        if self.parts and self.parts[-1] == (0, 0):
            return False
        for (a1, b1), (a2, b2) in zip(self.parts, self.parts[1:]):
            if min(a1, b1) < max(a2, b2):
                return False
        return all(a >= 0 and b >= 0 and (a, b) != (0, 0) for a, b in self.parts)

    def weight(self) -> Tuple[int, int]:
        return (sum(a for a, _ in self.parts), sum(b for _, b in self.parts))


class EnumerationCapExceeded(ValueError):
    pass


def enumerate_steady(
    m: int,
    n: int,
    cap: int = 40,
    collect: bool = False,
) -> Tuple[int, Optional[List[SteadyPair]]]:
    """Count (and optionally list) steadily decreasing pair sequences of
    total weight (m, n).

    At each level we choose a pair (a, b) != (0, 0) with max(a, b) bounded
    by the min of the previous pair; individual components may be zero.
    The empty sequence is the unique witness for (0, 0).
    """
    if m < 0 or n < 0:
        raise ValueError("enumerate_steady takes nonnegative arguments")
    if m + n > cap:
        raise EnumerationCapExceeded(
            f"total weight {m + n} exceeds the enumeration cap {cap}"
        )

    if collect:
        found: List[SteadyPair] = []

        def walk(rm: int, rn: int, bound: int, prefix: list):
            if rm == 0 and rn == 0:
                found.append(SteadyPair(tuple(prefix)))
            for a in range(min(bound, rm) + 1):
                for b in range(min(bound, rn) + 1):
                    if a == 0 and b == 0:
                        continue
                    prefix.append((a, b))
                    walk(rm - a, rn - b, min(a, b), prefix)
                    prefix.pop()

        walk(m, n, max(m, n), [])
        return len(found), found

    memo: Dict[Tuple[int, int, int], int] = {}

    def count(rm: int, rn: int, bound: int) -> int:
        bound = min(bound, max(rm, rn))
        key = (rm, rn, bound)
        v = memo.get(key)
        if v is not None:
            return v
        total = 1 if rm == 0 and rn == 0 else 0
        for a in range(min(bound, rm) + 1):
            for b in range(min(bound, rn) + 1):
                if a == 0 and b == 0:
                    continue
                total += count(rm - a, rn - b, min(a, b))
        memo[key] = total
        return total

    return count(m, n, max(m, n)), None


class BipartiteTable:
    """Rectangular table of exact pi(m, n) values on a box."""

    __slots__ = ("_grid",)

    def __init__(self, grid):
        self._grid = tuple(tuple(int(v) for v in row) for row in grid)

    @property
    def x_order(self) -> int:
        return len(self._grid) - 1

    @property
    def y_order(self) -> int:
        return len(self._grid[0]) - 1

    def pi(self, m: int, n: int) -> int:
        return self._grid[m][n]


class ProductCapExceeded(ValueError):
    pass


def gf_table(M: int, N: int, cap: int = 60) -> BipartiteTable:
    """Expand the Carlitz product over the (M+1) x (N+1) box.

    Factor cutoffs (each factor is 1/(1 - x^a y^b) applied geometrically):
      - x (xy)^j : x-degree j+1, y-degree j  -> needs j+1 <= M and j <= N;
      - y (xy)^j : x-degree j, y-degree j+1  -> needs j <= M and j+1 <= N;
      - (xy)^{2j}: needs 2j <= M and 2j <= N.
    """
    if M < 0 or N < 0:
        raise ValueError("box bounds must be nonnegative")
    if max(M, N) > cap:
        raise ProductCapExceeded(f"box bound {max(M, N)} exceeds the product cap {cap}")
    one = BiSeries.one(M, N)

    px = one
    j = 0
    while j + 1 <= M and j <= N:
        px = bi_divide_by_binomial(px, j + 1, j)
        j += 1

    py = one
    j = 0
    while j <= M and j + 1 <= N:
        py = bi_divide_by_binomial(py, j, j + 1)
        j += 1

    pdiag = one
    j = 1
    while 2 * j <= M and 2 * j <= N:
        pdiag = bi_divide_by_binomial(pdiag, 2 * j, 2 * j)
        j += 1

    product = bi_mul(bi_mul(px, pdiag), py)
    return BipartiteTable(product.coeffs)


def build_pi_table(
    M: int,
    N: int,
    c_table: CubicTable,
    p_table: PartitionTable,
) -> BipartiteTable:
    """pi on a box through the c/alpha convolution (shares one alpha cache)."""
    cache = AlphaCache(p_table)
    grid = [
        [pi_value(m, n, c_table, p_table, cache) for n in range(N + 1)]
        for m in range(M + 1)
    ]
    return BipartiteTable(grid)
