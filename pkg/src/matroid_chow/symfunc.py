"""Exact symmetric-function arithmetic in the Schur basis.

Elements are finitely supported integer combinations of Schur functions,
optionally truncated to the quotient by all shapes outside a k x w
rectangle (the Schubert ring of a Grassmannian).  Products are computed by
growing Littlewood-Richardson fillings; Pieri multiplications get their own
strip-based fast path.

All ribbon and skew computations happen in the untruncated ring; the
rectangle bound is only applied when an expansion is read as a Chow class,
because the column-removal recursion for ribbons passes through shapes that
a truncated ring would kill.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .shapes import (
    Partition,
    check_composition,
    check_partition,
    contains,
    descent_set,
    horizontal_strip_additions,
    horizontal_strip_removals,
    ribbon_from_composition,
    vertical_strip_additions,
)


class SchurExpansion:
    """An integer combination of Schur functions, keyed by partition.

    Zero coefficients are never stored.  ``rect`` is either None (the full
    ring of symmetric functions) or a pair (k, w) restricting the support
    to partitions inside the k x w rectangle.
    """

    __slots__ = ("coeffs", "rect")

    def __init__(
        self,
        coeffs: dict[Partition, int] | None = None,
        rect: tuple[int, int] | None = None,
    ) -> None:
        clean: dict[Partition, int] = {}
        for p, c in (coeffs or {}).items():
            if c == 0:
                continue
            p = check_partition(p)
            if rect is not None and not _fits(p, rect):
                raise ValueError(f"{p} outside rectangle {rect[0]}x{rect[1]}")
            clean[p] = clean.get(p, 0) + int(c)
        self.coeffs = {p: c for p, c in clean.items() if c != 0}
        self.rect = rect

    # -- constructors ------------------------------------------------------

    @classmethod
    def schur(cls, p: Sequence[int], rect: tuple[int, int] | None = None) -> "SchurExpansion":
        return cls({check_partition(p): 1}, rect)

    @classmethod
    def one(cls, rect: tuple[int, int] | None = None) -> "SchurExpansion":
        return cls({(): 1}, rect)

    @classmethod
    def zero(cls, rect: tuple[int, int] | None = None) -> "SchurExpansion":
        return cls({}, rect)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return SchurExpansion(out, _join_rect(self.rect, other.rect))

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) - c
        return SchurExpansion(out, _join_rect(self.rect, other.rect))

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion({p: -c for p, c in self.coeffs.items()}, self.rect)

    def scale(self, c: int) -> "SchurExpansion":
        return SchurExpansion({p: c * v for p, v in self.coeffs.items()}, self.rect)

    def __mul__(self, other: "SchurExpansion") -> "SchurExpansion":
        return schur_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SchurExpansion) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    # -- inspection --------------------------------------------------------

    def coefficient(self, p: Sequence[int]) -> int:
        return self.coeffs.get(check_partition(p), 0)

    def support(self) -> set[Partition]:
        return set(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        """Terms in decreasing lexicographic partition order."""
        return sorted(self.coeffs.items(), key=lambda t: t[0], reverse=True)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p, c in self.sorted_terms():
            body = "s[" + ",".join(str(x) for x in p) + "]"
            parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _fits(p: Partition, rect: tuple[int, int]) -> bool:
    k, w = rect
    return len(p) <= k and (not p or p[0] <= w)


def _join_rect(a: tuple[int, int] | None, b: tuple[int, int] | None) -> tuple[int, int] | None:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ValueError(f"incompatible rectangle bounds {a} and {b}")


def truncate(f: SchurExpansion, k: int, w: int) -> SchurExpansion:
    """Drop all terms outside the k x w rectangle and record the bound."""
    return SchurExpansion(
        {p: c for p, c in f.coeffs.items() if _fits(p, (k, w))}, (k, w)
    )


def pieri_row(f: SchurExpansion, b: int) -> SchurExpansion:
    """Multiply by the single-row Schur function s_[b] (horizontal strips)."""
    if b < 0:
        raise ValueError("row length must be >= 0")
    rect = f.rect
    out: dict[Partition, int] = {}
    max_rows = rect[0] if rect else None
    max_cols = rect[1] if rect else None
    for p, c in f.coeffs.items():
        for q in horizontal_strip_additions(p, b, max_rows=max_rows, max_cols=max_cols):
            out[q] = out.get(q, 0) + c
    return SchurExpansion(out, rect)


def pieri_col(f: SchurExpansion, b: int) -> SchurExpansion:
    """Multiply by the single-column Schur function s_[1^b] (vertical strips)."""
    if b < 0:
        raise ValueError("column length must be >= 0")
    rect = f.rect
    out: dict[Partition, int] = {}
    for p, c in f.coeffs.items():
        for q in vertical_strip_additions(p, b, max_rows=rect[0] if rect else None):
            if rect is None or _fits(q, rect):
                out[q] = out.get(q, 0) + c
    return SchurExpansion(out, rect)


def rmv(f: SchurExpansion, b: int) -> SchurExpansion:
    """Linear operator sending s_eta to the sum of s_mu over all ways of
    removing a horizontal strip of b boxes from eta."""
    if b < 0:
        raise ValueError("strip size must be >= 0")
    out: dict[Partition, int] = {}
    for p, c in f.coeffs.items():
        for q in horizontal_strip_removals(p, b):
            out[q] = out.get(q, 0) + c
    return SchurExpansion(out, f.rect)


# -- Littlewood-Richardson machinery ---------------------------------------
#
# A skew semistandard filling is encoded by the chain of partitions
# nu^0 c nu^1 c .. where nu^i collects the cells with letters <= i.  Its
# reverse reading word (rows top to bottom, right to left) is a lattice
# word iff for every letter i and row r
#
#     sum_{q<=r} (nu^{i+1}_q - nu^i_q)  <=  sum_{q<=r-1} (nu^i_q - nu^{i-1}_q),
#
# because within a row the copies of i+1 are read before the copies of i,
# and all copies of i in earlier rows have been read by then.


def _lattice_strip_extensions(
    prev_prev: Partition | None,
    prev: Partition,
    sizes: Iterable[int],
    target: Partition | None,
) -> Iterator[tuple[int, Partition]]:
    """Horizontal strip extensions of ``prev`` keeping the word lattice.

    ``sizes`` lists the allowed strip sizes; ``target`` (if given) bounds
    the result componentwise.  Yields (size, new_partition).
    """
    size_set = sorted(set(sizes))
    if not size_set:
        return
    max_size = size_set[-1]
    n_rows = len(prev) + 1 if target is None else len(target)

    def rec(r: int, used: int, budget_prev_row: int) -> Iterator[tuple[int, ...]]:
        # budget_prev_row = number of previous-letter cells in rows < r still
        # unmatched, i.e. the lattice headroom for letter cells in row r.
        if r == n_rows:
            if used in size_set:
                yield ()
            return
        cur = prev[r] if r < len(prev) else 0
        above = prev[r - 1] if 0 < r <= len(prev) else (0 if r > 0 else None)
        hi = cur + (max_size - used)
        if above is not None:
            hi = min(hi, above)
        if target is not None:
            hi = min(hi, target[r] if r < len(target) else 0)
        if prev_prev is not None:
            hi = min(hi, cur + budget_prev_row)
        for new_r in range(cur, hi + 1):
            add = new_r - cur
            if prev_prev is not None:
                prev_in_row = cur - (prev_prev[r] if r < len(prev_prev) else 0)
                nxt_budget = budget_prev_row - add + prev_in_row
            else:
                nxt_budget = 0
            for rest in rec(r + 1, used + add, nxt_budget):
                yield (new_r,) + rest

    for q in rec(0, 0, 0):
        full = tuple(x for x in q if x > 0)
        yield sum(full) - sum(prev), full


def _lr_walk(
    mu: Partition,
    content: Partition | None,
    target: Partition | None,
    total: int,
) -> dict[tuple[Partition, Partition], int]:
    """Count lattice fillings starting from ``mu``.

    Returns a dict mapping (final shape, content) -> count, where fillings
    add ``content`` (if given) as successive strips, otherwise all partition
    contents of size ``total``.
    """
    results: dict[tuple[Partition, Partition], int] = {}
    strip_sizes: list[int] = []

    def rec(prev_prev: Partition | None, prev: Partition, letter: int, placed: int) -> None:
        if placed == total:
            key = (prev, tuple(strip_sizes))
            results[key] = results.get(key, 0) + 1
            return
        if content is not None:
            sizes: Iterable[int] = (content[letter],)
        else:
            # lattice words force weakly decreasing strip sizes
            prev_size = strip_sizes[-1] if strip_sizes else total
            sizes = range(1, min(prev_size, total - placed) + 1)
        for size, nxt in _lattice_strip_extensions(prev_prev, prev, sizes, target):
            strip_sizes.append(size)
            rec(prev, nxt, letter + 1, placed + size)
            strip_sizes.pop()

    rec(None, mu, 0, 0)
    return results


@lru_cache(maxsize=None)
def _lr_product(mu: Partition, eta: Partition) -> tuple[tuple[Partition, int], ...]:
    """Expansion of s_mu * s_eta as (shape, LR coefficient) pairs."""
    walk = _lr_walk(mu, eta, None, sum(eta))
    out: dict[Partition, int] = {}
    for (shape, _content), c in walk.items():
        out[shape] = out.get(shape, 0) + c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _lr_skew(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Expansion of the skew Schur function s_{lam/mu} as (content, coeff)."""
    walk = _lr_walk(mu, None, lam, sum(lam) - sum(mu))
    out: dict[Partition, int] = {}
    for (shape, content), c in walk.items():
        if shape == lam:
            out[content] = out.get(content, 0) + c
    return tuple(sorted(out.items()))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], eta: Sequence[int]) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu, eta}."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    eta = check_partition(eta)
    if not contains(mu, lam):
        raise ValueError(f"{mu} not contained in {lam}")
    if sum(lam) != sum(mu) + sum(eta):
        raise ValueError(f"|{lam}| != |{mu}| + |{eta}|")
    return dict(_lr_skew(lam, mu)).get(eta, 0)


def schur_multiply(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """Bilinear product of Schur expansions."""
    rect = _join_rect(f.rect, g.rect)
    out: dict[Partition, int] = {}
    for mu, cf in f.coeffs.items():
        for eta, cg in g.coeffs.items():
            # keep the cached key small: grow the smaller factor
            a, b = (mu, eta) if sum(eta) <= sum(mu) else (eta, mu)
            for lam, c in _lr_product(a, b):
                if rect is None or _fits(lam, rect):
                    out[lam] = out.get(lam, 0) + cf * cg * c
    return SchurExpansion(out, rect)


def skew_schur(lam: Sequence[int], mu: Sequence[int]) -> SchurExpansion:
    """Schur expansion of the skew Schur function s_{lam/mu}."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} not contained in {lam}")
    return SchurExpansion({eta: c for eta, c in _lr_skew(lam, mu)})


def jacobi_trudi_ribbon(b: Sequence[int]) -> SchurExpansion:
    """Ribbon Schur function of ``b`` as a minor of the single-row matrix.

    The determinant has rows {0} u D and columns D u {n-1}, D the partial
    sums of ``b``; its entry at (i, j) is s_[col_j - row_i].  The matrix is
    upper Hessenberg (unit subdiagonal, zeros below), so cofactor expansion
    along the first column is a two-term recursion.
    """
    b = check_composition(b)
    if not b:
        raise ValueError("empty composition")
    d = list(descent_set(b))
    n = sum(b) + 1
    rows = tuple([0] + d)
    cols = tuple(d + [n - 1])

    def det(r: tuple[int, ...], c: tuple[int, ...]) -> SchurExpansion:
        if not r:
            return SchurExpansion.one()
        total = SchurExpansion.zero()
        for i, row in enumerate(r):
            v = c[0] - row
            if v < 0:
                break  # rows increase, later entries in the column all vanish
            minor = det(r[:i] + r[i + 1:], c[1:])
            term = pieri_row(minor, v)
            total = total + (term if i % 2 == 0 else -term)
        return total

    return det(rows, cols)


def ribbon_schur(b: Sequence[int]) -> SchurExpansion:
    """Ribbon Schur function computed from the skew shape of ``b``."""
    shape = ribbon_from_composition(b)
    return skew_schur(shape.outer, shape.inner)
