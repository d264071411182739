"""Integer partitions, compositions, skew shapes and ribbons.

Conventions used throughout the package:

* a *partition* is a tuple of weakly decreasing positive integers; the
  empty tuple is the empty partition.  Trailing zeros are never stored,
  so partition equality is plain tuple equality;
* a *composition* is a tuple of positive integers;
* Young diagrams are drawn in English notation, row 1 at the top.

All values are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def check_partition(p: Sequence[int]) -> Partition:
    """Validate and normalise a partition given as any integer sequence."""
    t = tuple(int(x) for x in p)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(x <= 0 for x in t):
        raise ValueError(f"partition parts must be positive: {p!r}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {p!r}")
    return t


def check_composition(b: Sequence[int]) -> Composition:
    """Validate a composition (all parts >= 1)."""
    t = tuple(int(x) for x in b)
    if any(x < 1 for x in t):
        raise ValueError(f"composition parts must be positive: {b!r}")
    return t


def contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """Componentwise containment of partitions, padding with zeros."""
    inner = check_partition(inner)
    outer = check_partition(outer)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def complement(eta: Sequence[int], k: int, w: int) -> Partition:
    """Complement of ``eta`` inside the k x w rectangle.

    The i-th part of the complement is w - eta_{k+1-i} (eta padded with
    zeros to k parts); zero parts are dropped.  An involution.
    """
    eta = check_partition(eta)
    if len(eta) > k or (eta and eta[0] > w):
        raise ValueError(f"{eta} does not fit inside {k}x{w}")
    padded = list(eta) + [0] * (k - len(eta))
    return tuple(x for x in (w - padded[k - 1 - i] for i in range(k)) if x > 0)


def transpose(eta: Sequence[int]) -> Partition:
    """Conjugate partition (reflect the diagram across the diagonal)."""
    eta = check_partition(eta)
    if not eta:
        return ()
    return tuple(sum(1 for x in eta if x > j) for j in range(eta[0]))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Dominance order on partitions of equal size.

    mu <= lam iff every partial sum of mu is at most the corresponding
    partial sum of lam.  Raises on a size mismatch.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: |{mu}| != |{lam}|")
    acc_m = acc_l = 0
    for i in range(max(len(mu), len(lam))):
        acc_m += mu[i] if i < len(mu) else 0
        acc_l += lam[i] if i < len(lam) else 0
        if acc_m > acc_l:
            return False
    return True


def partitions_in_box(size: int, rows: int, cols: int) -> Iterator[Partition]:
    """All partitions of ``size`` with at most ``rows`` parts, each <= ``cols``.

    Emitted in decreasing lexicographic order.
    """
    def rec(remaining: int, cap: int, depth: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if depth == 0:
            return
        top = min(cap, remaining)
        for first in range(top, 0, -1):
            if first * depth < remaining:
                break
            for rest in rec(remaining - first, first, depth - 1):
                yield (first,) + rest

    yield from rec(size, cols, rows)


def partitions_of(size: int) -> Iterator[Partition]:
    """All partitions of ``size``."""
    yield from partitions_in_box(size, size, size)


def horizontal_strip_additions(
    p: Sequence[int], b: int, *, max_rows: int | None = None, max_cols: int | None = None
) -> Iterator[Partition]:
    """Partitions q obtained from p by adding b boxes, at most one per column."""
    p = check_partition(p)
    if b < 0:
        raise ValueError("strip size must be >= 0")
    n_rows = len(p) + 1
    if max_rows is not None:
        n_rows = min(n_rows, max_rows)

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == n_rows:
            if remaining == 0:
                yield ()
            return
        cur = p[i] if i < len(p) else 0
        if i == 0:
            hi = cur + remaining if max_cols is None else min(max_cols, cur + remaining)
        else:
            # at most one new box per column: row i cannot reach past row i-1 of p
            prev = p[i - 1] if i - 1 < len(p) else 0
            hi = min(prev, cur + remaining)
        for q_i in range(cur, hi + 1):
            for rest in rec(i + 1, remaining - (q_i - cur)):
                yield (q_i,) + rest

    for q in rec(0, b):
        yield tuple(x for x in q if x > 0)


def vertical_strip_additions(
    p: Sequence[int], b: int, *, max_rows: int | None = None
) -> Iterator[Partition]:
    """Partitions q obtained from p by adding b boxes, at most one per row."""
    p = check_partition(p)
    if b < 0:
        raise ValueError("strip size must be >= 0")
    n_rows = len(p) + b
    if max_rows is not None:
        n_rows = min(n_rows, max_rows)

    def rec(i: int, remaining: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == n_rows:
            if remaining == 0:
                yield ()
            return
        cur = p[i] if i < len(p) else 0
        for add in (0, 1):
            if add > remaining or cur + add > prev:
                continue
            for rest in rec(i + 1, remaining - add, cur + add):
                yield (cur + add,) + rest

    for q in rec(0, b, 10 ** 9):
        yield tuple(x for x in q if x > 0)


def horizontal_strip_removals(p: Sequence[int], b: int) -> Iterator[Partition]:
    """Partitions q inside p with p/q a horizontal strip of b boxes."""
    p = check_partition(p)
    if b < 0:
        raise ValueError("strip size must be >= 0")

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == len(p):
            if remaining == 0:
                yield ()
            return
        lo = p[i + 1] if i + 1 < len(p) else 0
        for q_i in range(p[i], lo - 1, -1):
            if p[i] - q_i > remaining:
                break
            for rest in rec(i + 1, remaining - (p[i] - q_i)):
                yield (q_i,) + rest

    for q in rec(0, b):
        yield tuple(x for x in q if x > 0)


@dataclass(frozen=True)
class SkewShape:
    """A skew Young diagram outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", check_partition(self.outer))
        object.__setattr__(self, "inner", check_partition(self.inner))
        if len(self.inner) > len(self.outer) or not all(
            self.inner[i] <= self.outer[i] for i in range(len(self.inner))
        ):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_intervals(self) -> list[tuple[int, int]]:
        """Per row i the pair (inner_i, outer_i), inner padded with zeros."""
        return [
            (self.inner[i] if i < len(self.inner) else 0, self.outer[i])
            for i in range(len(self.outer))
        ]

    def transpose(self) -> "SkewShape":
        return SkewShape(transpose(self.outer), transpose(self.inner))

    def __str__(self) -> str:
        return f"{list(self.outer)}/{list(self.inner)}"


def is_ribbon(shape: SkewShape) -> bool:
    """True iff the shape is connected and consecutive rows share exactly one column.

    Exact overlap of one column both forbids 2x2 squares and forces
    connectivity, which is what a composition encoding requires.
    """
    bounds = shape.row_intervals()
    if any(mu >= lam for mu, lam in bounds):
        return False  # empty row
    for (mu_above, _), (_, lam_below) in zip(bounds, bounds[1:]):
        if mu_above != lam_below - 1:
            return False
    return True


def ribbon_from_composition(b: Sequence[int]) -> SkewShape:
    """The ribbon whose i-th row from the bottom has length b_i.

    The first part is the bottom row; reading the result back with
    :func:`composition_of_ribbon` returns ``b``.
    """
    b = check_composition(b)
    if not b:
        raise ValueError("the empty composition has no ribbon")
    k = len(b)
    starts = [0] * k  # leftmost column (0-based) of row i counted from the bottom
    for i in range(1, k):
        starts[i] = starts[i - 1] + b[i - 1] - 1
    # row i from the bottom is row k-i from the top
    outer = tuple(starts[i] + b[i] for i in reversed(range(k)))
    inner = tuple(starts[i] for i in reversed(range(k)))
    return SkewShape(outer, inner)


def composition_of_ribbon(shape: SkewShape) -> Composition:
    """Row lengths of a ribbon, bottom row first."""
    if not is_ribbon(shape):
        raise ValueError(f"{shape} is not a ribbon")
    return tuple(lam - mu for mu, lam in reversed(shape.row_intervals()))


@dataclass(frozen=True)
class DescentSet:
    """A strictly increasing set of positions bounded by ``ambient``."""

    elements: tuple[int, ...]
    ambient: int

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(int(x) for x in self.elements)))
        object.__setattr__(self, "elements", elems)
        if elems and (elems[0] < 1 or elems[-1] > self.ambient):
            raise ValueError(f"descents {elems} out of range [1, {self.ambient}]")

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)


def descent_set(b: Sequence[int]) -> DescentSet:
    """Partial sums of a composition, excluding the total."""
    b = check_composition(b)
    sums = []
    acc = 0
    for part in b[:-1]:
        acc += part
        sums.append(acc)
    return DescentSet(tuple(sums), max(sum(b) - 1, 0))


def composition_from_descents(descents: Iterable[int], total: int) -> Composition:
    """Inverse of :func:`descent_set` for compositions of ``total``."""
    cuts = sorted(set(descents))
    if cuts and (cuts[0] < 1 or cuts[-1] >= total):
        raise ValueError(f"descents {cuts} out of range for size {total}")
    prev = 0
    parts = []
    for c in cuts + [total]:
        parts.append(c - prev)
        prev = c
    return tuple(parts)


def coarsen(b: Sequence[int], cuts: Iterable[int]) -> Composition:
    """Merge consecutive blocks of ``b``, keeping only the cut positions in ``cuts``.

    ``cuts`` is a subset of {1, .., len(b)-1}; the full set is the identity
    and the empty set merges everything into one part.
    """
    b = check_composition(b)
    cut_list = sorted(set(int(c) for c in cuts))
    if cut_list and (cut_list[0] < 1 or cut_list[-1] > len(b) - 1):
        raise ValueError(f"cut positions {cut_list} out of range [1, {len(b) - 1}]")
    parts = []
    prev = 0
    for c in cut_list + [len(b)]:
        parts.append(sum(b[prev:c]))
        prev = c
    return tuple(parts)


def rows_cols(b: Sequence[int]) -> tuple[Partition, Partition]:
    """Sorted row lengths and column lengths of the ribbon of ``b``."""
    b = check_composition(b)
    rows = tuple(sorted(b, reverse=True))
    shape = ribbon_from_composition(b)
    width = shape.outer[0]
    col_lengths = [0] * width
    for mu, lam in shape.row_intervals():
        for c in range(mu, lam):
            col_lengths[c] += 1
    cols = tuple(sorted(col_lengths, reverse=True))
    return rows, cols
