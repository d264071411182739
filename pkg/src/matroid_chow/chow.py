"""Chow classes of matroids in the Schubert basis.

A class is stored primally: the coefficient of the Schubert cycle indexed
by eta, for partitions eta inside the k x (n-k) rectangle of codimension
degree m.  Internally everything is computed through the dual expansion
(coefficients attached to the complementary partitions), which is blind to
loops and coloops and matches the ribbon/tableau formulas directly; the
primal view is produced at the boundary by complementation.

Family formulas: ribbons for snakes, interval transversals for lattice path
matroids, prefix-bounded descent counts for nested matroids, plain descent
counts for uniform matroids.  Arbitrary loop-free coloop-free connected
matroids go through the cyclic-flat chain decomposition into nested
matroids.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import matroid as mt
from .shapes import (
    Partition,
    SkewShape,
    check_composition,
    check_partition,
    complement,
    composition_of_ribbon,
    contains,
    descent_set,
    dominance_leq,
    partitions_in_box,
    ribbon_from_composition,
    rows_cols,
    transpose,
)
from .symfunc import SchurExpansion, pieri_row, rmv, schur_multiply, skew_schur, truncate
from .tableaux import (
    count_syt_prefix_bounded,
    count_syt_transversal,
    count_syt_with_descents,
    count_syt_with_num_descents,
    hook_length_count,
)


@dataclass(frozen=True)
class ChowClass:
    """Schubert-coefficient expansion of a matroid class in G(k, n)."""

    k: int
    n: int
    m: int
    coeffs: SchurExpansion

    def __post_init__(self) -> None:
        w = self.n - self.k
        for p in self.coeffs.support():
            if sum(p) != self.m or not _fits_rect(p, self.k, w):
                raise ValueError(f"{p} incompatible with degree {self.m} in {self.k}x{w}")

    @classmethod
    def from_dual(cls, dual: dict[Partition, int], k: int, n: int, m: int) -> "ChowClass":
        """Build the primal class from dual-indexed coefficients."""
        w = n - k
        primal = {complement(nu, k, w): c for nu, c in dual.items() if c != 0}
        return cls(k, n, m, SchurExpansion(primal, (k, w)))

    def dual_coefficients(self) -> dict[Partition, int]:
        """Coefficients re-indexed by the complementary partitions."""
        w = self.n - self.k
        return {complement(p, self.k, w): c for p, c in self.coeffs.coeffs.items()}

    def coefficient(self, eta: Sequence[int]) -> int:
        return self.coeffs.coefficient(eta)

    def dual_coefficient(self, nu: Sequence[int]) -> int:
        """The Schubert coefficient attached to the complement of ``nu``."""
        return self.coeffs.coefficient(complement(nu, self.k, self.n - self.k))

    def render(self) -> str:
        if self.coeffs.is_zero():
            return "0"
        return " + ".join(
            f"{c}*s[{','.join(str(x) for x in p)}]" for p, c in self.coeffs.sorted_terms()
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "n": self.n,
                "m": self.m,
                "terms": [
                    {"partition": list(p), "coeff": c} for p, c in self.coeffs.sorted_terms()
                ],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "ChowClass":
        data = json.loads(text)
        coeffs = {tuple(t["partition"]): int(t["coeff"]) for t in data["terms"]}
        k, n = int(data["k"]), int(data["n"])
        return cls(k, n, int(data["m"]), SchurExpansion(coeffs, (k, n - k)))


def _fits_rect(p: Partition, k: int, w: int) -> bool:
    return len(p) <= k and (not p or p[0] <= w)


def _expected_degree(k: int, n: int, kappa: int) -> int:
    return k * (n - k) - (n - kappa)


# -- family formulas ----------------------------------------------------------


def sc_snake(b: Sequence[int], method: str = "ribbon") -> ChowClass:
    """Chow class of the snake matroid of composition ``b``.

    ``method`` selects the computation: "ribbon" expands the skew Schur
    function of the ribbon, "syt" counts standard tableaux with the
    composition's descent set, "recursion" peels off the last part through
    the row-multiplication recursion.  All three agree.
    """
    b = check_composition(b)
    if not b:
        raise ValueError("empty composition")
    k = len(b)
    n = sum(b) + 1
    if method == "ribbon":
        shape = ribbon_from_composition(b)
        dual = dict(skew_schur(shape.outer, shape.inner).coeffs)
    elif method == "syt":
        d = descent_set(b).as_set()
        dual = {}
        for nu in partitions_in_box(n - 1, k, n - k):
            c = count_syt_with_descents(nu, d)
            if c:
                dual[nu] = c
    elif method == "recursion":
        dual = dict(_snake_recursion(b).coeffs)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ChowClass.from_dual(dual, k, n, _expected_degree(k, n, 1))


def _snake_recursion(b: tuple[int, ...]) -> SchurExpansion:
    """Dual snake class via s_[last part] * previous - merged, untruncated."""
    if len(b) == 1:
        return SchurExpansion.schur((b[0],))
    shorter = _snake_recursion(b[:-1])
    merged = _snake_recursion(b[:-2] + (b[-2] + b[-1],))
    return pieri_row(shorter, b[-1]) - merged


def sc_lattice_path(
    spec: mt.LatticePathSpec | SkewShape | tuple[str, str], method: str = "transversal"
) -> ChowClass:
    """Chow class of a connected lattice path matroid.

    "transversal" counts standard tableaux whose descent set is a system of
    distinct representatives of the interval system spanned by the extreme
    snakes; "snakes" sums the ribbon classes of all snakes inside the
    diagram.  Both agree.
    """
    shape = mt._normalized_shape(spec)
    k = shape.num_rows
    n = shape.outer[0] + k
    if method == "snakes":
        dual: dict[Partition, int] = {}
        for b in mt.snakes_in(shape):
            for nu, c in sc_snake(b).dual_coefficients().items():
                dual[nu] = dual.get(nu, 0) + c
        dual = {nu: c for nu, c in dual.items() if c}
    elif method == "transversal":
        intervals = mt.transversal_intervals(shape)
        dual = {}
        for nu in partitions_in_box(n - 1, k, n - k):
            c = count_syt_transversal(nu, intervals)
            if c:
                dual[nu] = c
    else:
        raise ValueError(f"unknown method {method!r}")
    return ChowClass.from_dual(dual, k, n, _expected_degree(k, n, 1))


def sc_nested(chain: Sequence[tuple[int, int]], n: int) -> ChowClass:
    """Chow class of the connected nested matroid with cyclic-flat data ``chain``.

    The chain lists (size, rank) of the cyclic flats above the empty one,
    ending with (n, k).  The coefficient attached to the complement of eta
    counts standard tableaux of shape eta with exactly k-1 descents and
    fewer than r_i descents among the first h_i - 1 positions.
    """
    data = mt.validate_chain(chain, n)
    k = data[-1][1]
    return ChowClass.from_dual(
        _nested_dual(data, n), k, n, _expected_degree(k, n, 1)
    )


@lru_cache(maxsize=None)
def _nested_dual(data: tuple[tuple[int, int], ...], n: int) -> dict[Partition, int]:
    k = data[-1][1]
    bounds = data[:-1]
    dual: dict[Partition, int] = {}
    for nu in partitions_in_box(n - 1, k, n - k):
        c = count_syt_prefix_bounded(nu, k - 1, bounds)
        if c:
            dual[nu] = c
    return dual


def sc_uniform(k: int, n: int) -> ChowClass:
    """Chow class of the uniform matroid: descent-count statistics."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    dual = {}
    for nu in partitions_in_box(n - 1, k, n - k):
        c = count_syt_with_num_descents(nu, k - 1)
        if c:
            dual[nu] = c
    return ChowClass.from_dual(dual, k, n, _expected_degree(k, n, 1))


class DisconnectedCoreError(ValueError):
    """The loop/coloop-free core splits as a direct sum, which the nested
    decomposition cannot evaluate in the core's own codimension degree."""


def sc_general(m: mt.Matroid) -> ChowClass:
    """Chow class of an arbitrary matroid with a connected core.

    Loops and coloops are stripped first (the dual expansion is unchanged
    by either), the core is decomposed into nested matroids through its
    cyclic-flat chains, each summand is evaluated by the nested-matroid
    descent formula, and the signed sum is re-read in the ambient
    rectangle.  Matroids whose core is disconnected are rejected.
    """
    kappa = m.num_components()
    degree = _expected_degree(m.rank, m.n, kappa)
    core, _, _ = mt.core_strip(m)
    if core is None:
        dual: dict[Partition, int] = {(): 1}
        return ChowClass.from_dual(dual, m.rank, m.n, degree)
    if not core.is_connected():
        raise DisconnectedCoreError(
            "matroid core is disconnected; only loops/coloops can be split off"
        )
    dual = {}
    for chain, weight in mt.hampe_coefficients(core):
        for nu, c in _nested_dual(chain.profile(), core.n).items():
            dual[nu] = dual.get(nu, 0) + weight * c
    dual = {nu: c for nu, c in dual.items() if c}
    return ChowClass.from_dual(dual, m.rank, m.n, degree)


# -- transforms and extracted invariants ----------------------------------------


def poincare_dual(c: ChowClass) -> ChowClass:
    """Complement every partition inside the k x (n-k) rectangle."""
    w = c.n - c.k
    flipped = {complement(p, c.k, w): v for p, v in c.coeffs.coeffs.items()}
    return ChowClass(c.k, c.n, c.k * w - c.m, SchurExpansion(flipped, (c.k, w)))


def transform_dual_matroid(c: ChowClass) -> ChowClass:
    """The class of the dual matroid: transpose shapes, swap k and n-k."""
    flipped = {transpose(p): v for p, v in c.coeffs.coeffs.items()}
    return ChowClass(c.n - c.k, c.n, c.m, SchurExpansion(flipped, (c.n - c.k, c.k)))


def beta_from_chow(c: ChowClass) -> int:
    """Read the beta invariant off the coefficient at the complemented hook."""
    if c.k < 1:
        raise ValueError("hook coefficient needs rank >= 1")
    hook = ((c.n - c.k,) + (1,) * (c.k - 1)) if c.n > c.k else (1,) * (c.k - 1)
    hook = check_partition(hook)
    return c.dual_coefficient(hook)


def volume_from_chow(c: ChowClass) -> int:
    """Normalized base-polytope volume: pair coefficients with tableau counts."""
    total = 0
    for nu, v in c.dual_coefficients().items():
        total += v * hook_length_count(nu)
    return total


def support_of(c: ChowClass) -> set[Partition]:
    """Support of the class, indexed dually (nu with nonzero coefficient
    attached to the complement of nu)."""
    return set(c.dual_coefficients())


def check_support_bounds(b: Sequence[int]) -> bool:
    """Verify the support bounds of a snake class.

    Every supported shape must fit inside the ribbon's outer partition for
    both reading directions and sit in the dominance sandwich between the
    sorted row lengths and the conjugated sorted column lengths; for shapes
    of full length or full first row those conditions are exact.
    """
    b = check_composition(b)
    k = len(b)
    n = sum(b) + 1
    supp = support_of(sc_snake(b))
    lam = ribbon_from_composition(b).outer
    lam_rev = ribbon_from_composition(tuple(reversed(b))).outer
    rows, cols = rows_cols(b)
    cols_t = transpose(cols)
    for nu in partitions_in_box(n - 1, k, n - k):
        inside = nu in supp
        if inside:
            if not (contains(nu, lam) and contains(nu, lam_rev)):
                return False
            if not (dominance_leq(rows, nu) and dominance_leq(nu, cols_t)):
                return False
        if len(nu) == k and inside != dominance_leq(rows, nu):
            return False
        if nu and nu[0] == n - k and inside != dominance_leq(nu, cols_t):
            return False
    return True


# -- closed forms and paving positivity ------------------------------------------


def eta_m_partition(k: int, n: int, m: int) -> Partition:
    """The shape [n-k, m+1, 1^(k-m-2)] used in the paving positivity bound."""
    if k < 2 or not 0 <= m <= k - 2:
        raise ValueError(f"need k >= 2 and 0 <= m <= k-2, got k={k}, m={m}")
    if m + 1 > n - k:
        raise ValueError(f"shape needs m+1 <= n-k, got m={m}, n-k={n - k}")
    return check_partition((n - k, m + 1) + (1,) * (k - m - 2))


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} not divisible by {den}")
    return q


def uniform_eta_m(k: int, n: int, m: int) -> int:
    """Closed form for the uniform coefficient attached to eta(m)'s complement."""
    eta_m_partition(k, n, m)
    return _exact_div((n - k) * math.comb(n - m - 2, n - k) * math.comb(n - k - 1, m), k - 1)


def uniform_eta_m_transposed(k: int, n: int, m: int) -> int:
    """Closed form for the coefficient attached to the transpose of the
    dual-frame shape [k, m+1, 1^(n-k-m-2)]; equal by duality to
    :func:`uniform_eta_m` with k replaced by n-k."""
    eta_m_partition(n - k, n, m)  # validates the dual-frame shape
    if m + 1 > k:
        raise ValueError(f"transposed shape needs m+1 <= k, got m={m}, k={k}")
    return _exact_div(k * math.comb(n - m - 2, k) * math.comb(k - 1, m), n - k - 1)


def panhandle_eta_m(k: int, h: int, n: int, m: int) -> int:
    """Closed form for the panhandle coefficient attached to eta(m)'s complement."""
    eta_m_partition(k, n, m)
    if not k <= h < n:
        raise ValueError(f"need k <= h < n, got k={k}, h={h}, n={n}")
    return _exact_div(
        (h - k + 1) * math.comb(h - m - 1, h - k + 1) * math.comb(h - k, m), k - 1
    )


def paving_schubert(m: mt.Matroid, deg: int) -> int:
    """Coefficient attached to eta(deg)'s complement for a connected paving matroid.

    Evaluates the hyperplane-corrected combination of the uniform value and
    panhandle values; positive for every connected paving matroid.
    """
    if not m.is_paving():
        raise ValueError("input is not paving")
    if not m.is_connected():
        raise ValueError("input is not connected")
    k, n = m.rank, m.n
    value = uniform_eta_m(k, n, deg)
    for h, c_h in m.paving_flat_counts().items():
        value -= c_h * panhandle_eta_m(k, h, n, deg)
    return value


# -- identity checkers ----------------------------------------------------------


def check_main_identity(m: mt.Matroid, b: int) -> bool:
    """Series/parallel extension identity for Chow classes.

    Compares the sum of the loop-decorated series route and the
    coloop-decorated parallel route against removing a horizontal strip of
    size b from the class of the matroid with one coloop and b loops added.
    """
    if b < 1:
        raise ValueError("need b >= 1")
    left_series = m.series_ext()
    for _ in range(b - 1):
        left_series = left_series.parallel_ext()
    lhs1 = sc_general(left_series.add_loop())
    left_parallel = m
    for _ in range(b):
        left_parallel = left_parallel.parallel_ext()
    lhs2 = sc_general(left_parallel.add_coloop())
    right = m.add_coloop()
    for _ in range(b):
        right = right.add_loop()
    rhs = sc_general(right)
    lhs_sum = lhs1.coeffs + lhs2.coeffs
    return lhs_sum == rmv(rhs.coeffs, b)


def check_product_identities(k: int, n: int) -> bool:
    """Snake classes of maximal ribbons as two-factor products, and their sum.

    For every mu inside (k-1) x (n-k-1) the snake of the ribbon lam/mu with
    lam = [n-k, mu_1+1, .., mu_(k-1)+1] has class s_mu * s_(complement of
    lam), and the classes sum to the uniform class.  The n = k+1 edge is
    a single trivial term.
    """
    if not 1 < k < n:
        raise ValueError(f"need 1 < k < n, got k={k}, n={n}")
    w = n - k
    total = SchurExpansion.zero((k, w))
    for mu in _all_partitions_in_box(k - 1, w - 1):
        padded = tuple(mu) + (0,) * (k - 1 - len(mu))
        lam = check_partition((w,) + tuple(x + 1 for x in padded))
        shape = SkewShape(lam, mu)
        direct = sc_snake(composition_of_ribbon(shape))
        product = truncate(
            schur_multiply(SchurExpansion.schur(mu), SchurExpansion.schur(complement(lam, k, w))),
            k,
            w,
        )
        if direct.coeffs != product:
            return False
        total = total + product
    return total == sc_uniform(k, n).coeffs


def _all_partitions_in_box(rows: int, cols: int):
    for size in range(rows * cols + 1):
        yield from partitions_in_box(size, rows, cols)


def check_beta_volume_conjecture(m: mt.Matroid) -> tuple[bool, bool]:
    """Whether beta * binom(n-2, k-1) <= volume, and whether equality holds."""
    if not m.is_connected():
        raise ValueError("inequality is about connected matroids")
    c = sc_general(m)
    vol = volume_from_chow(c)
    lhs = beta_from_chow(c) * math.comb(m.n - 2, m.rank - 1)
    return lhs <= vol, lhs == vol
