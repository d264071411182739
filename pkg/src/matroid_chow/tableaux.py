"""Standard and semistandard Young tableaux: enumeration and descent statistics.

Counting functions share one memoised walk over partial fillings.  A partial
standard filling is determined by the sub-partition of occupied cells, the
row of the last entry, and whatever descent statistic is being tracked, so
counts are computed without materialising tableaux.  Enumeration, used as
the brute-force oracle in tests, is a separate backtracking generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Sequence

from .shapes import (
    DescentSet,
    Partition,
    check_composition,
    check_partition,
    horizontal_strip_additions,
)


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau stored as a tuple of rows."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        check_partition(shape)
        n = sum(shape)
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError("entries must be 1..n, each exactly once")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise ValueError("rows must strictly increase")
        for i in range(len(rows) - 1):
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self, value: int) -> int:
        for i, r in enumerate(self.rows):
            if value in r:
                return i
        raise ValueError(f"{value} not in tableau")

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in r) for r in self.rows)


def enumerate_syt(eta: Sequence[int]) -> Iterator[StandardTableau]:
    """All standard Young tableaux of shape ``eta``.

    Entries 1..|eta| are placed in increasing order, trying rows top to
    bottom, so the emission order is deterministic.
    """
    eta = check_partition(eta)
    n = sum(eta)
    rows: list[list[int]] = [[] for _ in eta]

    def rec(v: int) -> Iterator[StandardTableau]:
        if v > n:
            yield StandardTableau(tuple(tuple(r) for r in rows))
            return
        for i in range(len(eta)):
            if len(rows[i]) < eta[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                yield from rec(v + 1)
                rows[i].pop()

    yield from rec(1)


def descent_set_of(t: StandardTableau) -> DescentSet:
    """Entries i whose successor i+1 sits in a strictly lower row."""
    row = {}
    for i, r in enumerate(t.rows):
        for x in r:
            row[x] = i
    n = t.size
    return DescentSet(tuple(i for i in range(1, n) if row[i + 1] > row[i]), max(n - 1, 0))


def _descents(seq: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1])


StepFilter = Callable[[int, bool, int], bool]
# arguments: position i (the candidate descent, i.e. the previously placed
# value), whether i is a descent, and the number of descents among 1..i.


def _count_syt(eta: Partition, allow: StepFilter, accept: Callable[[int], bool]) -> int:
    """Count SYT of shape ``eta`` through a descent-aware memoised walk."""
    eta = check_partition(eta)
    n = sum(eta)
    if n == 0:
        return 1 if accept(0) else 0
    k = len(eta)
    memo: dict[tuple[tuple[int, ...], int, int], int] = {}

    def rec(shape: tuple[int, ...], last_row: int, d: int) -> int:
        filled = sum(shape)
        if filled == n:
            return 1 if accept(d) else 0
        key = (shape, last_row, d)
        cached = memo.get(key)
        if cached is not None:
            return cached
        v = filled + 1
        total = 0
        for r in range(k):
            if shape[r] >= eta[r] or (r > 0 and shape[r - 1] <= shape[r]):
                continue
            if v == 1:
                total += rec((1,) + shape[1:], 0, 0)
                continue
            is_desc = r > last_row
            if not allow(v - 1, is_desc, d + (1 if is_desc else 0)):
                continue
            new_shape = shape[:r] + (shape[r] + 1,) + shape[r + 1:]
            total += rec(new_shape, r, d + (1 if is_desc else 0))
        memo[key] = total
        return total

    return rec((0,) * k, 0, 0)


def count_syt_with_descents(eta: Sequence[int], descents: Iterable[int]) -> int:
    """Number of SYT of shape ``eta`` whose descent set is exactly ``descents``."""
    d_set = frozenset(descents)
    return _count_syt(
        check_partition(eta),
        lambda pos, is_desc, _d: (pos in d_set) == is_desc,
        lambda _d: True,
    )


def count_syt_with_num_descents(eta: Sequence[int], d: int) -> int:
    """Number of SYT of shape ``eta`` with exactly ``d`` descents."""
    return _count_syt(
        check_partition(eta),
        lambda _pos, _is_desc, running: running <= d,
        lambda final: final == d,
    )


def count_syt_transversal(eta: Sequence[int], intervals: Sequence[tuple[int, int]]) -> int:
    """SYT whose descent set is a transversal of the given interval system.

    The intervals [c_i, d_i] must satisfy c_i <= c_{i+1} and d_i <= d_{i+1};
    a descent set {x_1 < .. < x_m} is then a transversal exactly when
    x_i lies in [c_i, d_i], with one descent per interval and none to spare.
    """
    ivs = [(int(c), int(d)) for c, d in intervals]
    if any(c > d for c, d in ivs):
        raise ValueError(f"bad interval in {ivs}")
    if any(ivs[i][0] > ivs[i + 1][0] or ivs[i][1] > ivs[i + 1][1] for i in range(len(ivs) - 1)):
        raise ValueError(f"intervals must be sorted componentwise: {ivs}")
    m = len(ivs)

    def allow(pos: int, is_desc: bool, running: int) -> bool:
        if is_desc:
            j = running - 1  # index of the interval this descent must represent
            return j < m and ivs[j][0] <= pos <= ivs[j][1]
        # skipping a descent at pos is fatal once the next interval closes
        return running >= m or ivs[running][1] > pos

    return _count_syt(check_partition(eta), allow, lambda final: final == m)


def count_syt_prefix_bounded(
    eta: Sequence[int], num_descents: int, bounds: Sequence[tuple[int, int]]
) -> int:
    """SYT with exactly ``num_descents`` descents and bounded prefix descents.

    Each pair (h, r) in ``bounds`` demands that fewer than r descents occur
    among the positions 1..h-1; pairs must be increasing in both entries.
    """
    bnds = sorted((int(h), int(r)) for h, r in bounds)

    def allow(pos: int, is_desc: bool, running: int) -> bool:
        if not is_desc:
            return True
        if running > num_descents:
            return False
        for h, r in bnds:
            if h - 1 >= pos:
                return running < r  # smallest applicable bound is the binding one
        return True

    return _count_syt(check_partition(eta), allow, lambda final: final == num_descents)


def kostka(eta: Sequence[int], b: Sequence[int]) -> int:
    """Kostka number: semistandard tableaux of shape ``eta`` and content ``b``."""
    eta = check_partition(eta)
    b = check_composition(b)
    if sum(eta) != sum(b):
        raise ValueError(f"|{eta}| != |{b}|")
    # SSYT of content b = chains of horizontal strips of sizes b_1, b_2, ..
    frontier: dict[Partition, int] = {(): 1}
    for part in b:
        nxt: dict[Partition, int] = {}
        for p, c in frontier.items():
            for q in horizontal_strip_additions(p, part, max_rows=len(eta)):
                if contains_fast(q, eta):
                    nxt[q] = nxt.get(q, 0) + c
        frontier = nxt
    return frontier.get(eta, 0)


def contains_fast(inner: Partition, outer: Partition) -> bool:
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def hook_length_count(eta: Partition) -> int:
    """Number of SYT of shape ``eta`` by the hook length formula."""
    eta = check_partition(eta)
    n = sum(eta)
    if n == 0:
        return 1
    from .shapes import transpose

    conj = transpose(eta)
    count = math.factorial(n)
    for i, row in enumerate(eta):
        for j in range(row):
            count //= (row - j) + (conj[j] - i) - 1
    return count


@lru_cache(maxsize=None)
def _descent_distribution(m: int) -> dict[frozenset[int], int]:
    """Descent-set histogram over all permutations of [m]."""
    dist: dict[frozenset[int], int] = {}
    for perm in permutations(range(1, m + 1)):
        d = _descents(perm)
        dist[d] = dist.get(d, 0) + 1
    return dist


def count_permutations_with_descents(descents: Iterable[int], m: int) -> int:
    """Brute-force count of permutations of [m] with the given descent set.

    Exponential reference oracle; intended for m <= 9.
    """
    if m > 10:
        raise ValueError("brute-force descent counting is capped at m = 10")
    d = frozenset(descents)
    if any(x < 1 or x >= m for x in d):
        return 0
    return _descent_distribution(m).get(d, 0)


def _int_det(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1] if n else 1


def gessel_viennot(descents: Iterable[int], n: int) -> int:
    """Binomial determinant counting permutations of [n-1] with descent set D.

    The minor has rows D u {n-1} and columns {0} u D of the infinite matrix
    of binomial coefficients.
    """
    d = sorted(set(int(x) for x in descents))
    if any(x < 1 or x > n - 2 for x in d):
        raise ValueError(f"descents {d} must lie in [1, {n - 2}]")
    rows = d + [n - 1]
    cols = [0] + d
    matrix = [[math.comb(a, b) for b in cols] for a in rows]
    return _int_det(matrix)
