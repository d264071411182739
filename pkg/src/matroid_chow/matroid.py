"""Matroids given by their bases, and the constructions the Chow pipeline needs.

A matroid lives on the ground set {1, .., n} (n <= 64) and is stored as the
explicit list of its bases, each a bitmask with bit e-1 for element e.  That
makes rank queries, duality, extensions and cyclic-flat searches exact and
simple; everything here targets the small-n regime where those scans are
cheap.

Families: uniform, snake (ribbon), lattice path, nested (chain of cyclic
flats), minimal, panhandle.  The decomposition machinery expresses a
loop-free, coloop-free matroid as an integer combination of nested matroids
through the Moebius function of its lattice of chains of cyclic flats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .shapes import (
    Composition,
    SkewShape,
    check_composition,
    check_partition,
    composition_of_ribbon,
    is_ribbon,
    ribbon_from_composition,
)

MAX_GROUND = 64


class Matroid:
    """A rank-k matroid on {1, .., n} stored by its set of bases."""

    __slots__ = ("n", "rank", "_bases", "_bases_set")

    def __init__(
        self,
        n: int,
        bases: Iterable[Iterable[int]],
        *,
        _masks: tuple[int, ...] | None = None,
        validate: bool | None = None,
    ) -> None:
        if not 0 <= n <= MAX_GROUND:
            raise ValueError(f"ground set size {n} out of range 0..{MAX_GROUND}")
        self.n = n
        if _masks is None:
            masks = set()
            for basis in bases:
                mask = 0
                for e in basis:
                    e = int(e)
                    if not 1 <= e <= n:
                        raise ValueError(f"element {e} outside 1..{n}")
                    mask |= 1 << (e - 1)
                masks.add(mask)
            _masks = tuple(sorted(masks))
        self._bases = _masks
        self._bases_set = frozenset(_masks)
        if not self._bases:
            raise ValueError("a matroid needs at least one basis")
        sizes = {m.bit_count() for m in self._bases}
        if len(sizes) != 1:
            raise ValueError("bases must all have the same cardinality")
        self.rank = sizes.pop()
        if validate is None:
            validate = n <= 9
        if validate:
            self._check_exchange()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], validate: bool | None = None) -> "Matroid":
        return cls(n, (), _masks=tuple(sorted(set(masks))), validate=validate)

    def _check_exchange(self) -> None:
        for b1 in self._bases:
            for b2 in self._bases:
                only1 = b1 & ~b2
                x = only1
                while x:
                    bit = x & -x
                    x ^= bit
                    removed = b1 ^ bit
                    y = b2 & ~b1
                    ok = False
                    while y:
                        bit2 = y & -y
                        y ^= bit2
                        if (removed | bit2) in self._bases_set:
                            ok = True
                            break
                    if not ok:
                        raise ValueError("basis-exchange axiom fails")

    # -- basic queries ---------------------------------------------------------

    def bases_sets(self) -> list[frozenset[int]]:
        return [frozenset(_mask_elements(m)) for m in self._bases]

    def bases_masks(self) -> tuple[int, ...]:
        return self._bases

    def is_basis(self, elements: Iterable[int]) -> bool:
        return _mask_of(elements) in self._bases_set

    def rank_of(self, elements: Iterable[int]) -> int:
        mask = _mask_of(elements)
        return max((b & mask).bit_count() for b in self._bases)

    def closure(self, elements: Iterable[int]) -> frozenset[int]:
        mask = _mask_of(elements)
        r = self.rank_of_mask(mask)
        out = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and self.rank_of_mask(mask | bit) == r:
                out |= bit
        return frozenset(_mask_elements(out))

    def rank_of_mask(self, mask: int) -> int:
        return max((b & mask).bit_count() for b in self._bases)

    def loops(self) -> frozenset[int]:
        used = 0
        for b in self._bases:
            used |= b
        return frozenset(_mask_elements(_full(self.n) & ~used))

    def coloops(self) -> frozenset[int]:
        common = _full(self.n)
        for b in self._bases:
            common &= b
        return frozenset(_mask_elements(common))

    # -- standard constructions -------------------------------------------------

    def dual(self) -> "Matroid":
        full = _full(self.n)
        return Matroid.from_masks(self.n, (full ^ b for b in self._bases), validate=False)

    def add_loop(self) -> "Matroid":
        return Matroid.from_masks(self.n + 1, self._bases, validate=False)

    def add_coloop(self) -> "Matroid":
        bit = 1 << self.n
        return Matroid.from_masks(self.n + 1, (b | bit for b in self._bases), validate=False)

    def parallel_ext(self) -> "Matroid":
        """Add element n+1 parallel to the last element n."""
        last = 1 << (self.n - 1)
        new = 1 << self.n
        masks = set(self._bases)
        for b in self._bases:
            if b & last:
                masks.add((b ^ last) | new)
        return Matroid.from_masks(self.n + 1, masks, validate=False)

    def series_ext(self) -> "Matroid":
        """Add element n+1 in series with the last element n."""
        last = 1 << (self.n - 1)
        new = 1 << self.n
        masks = {b | new for b in self._bases}
        for b in self._bases:
            if not b & last:
                masks.add(b | last)
        return Matroid.from_masks(self.n + 1, masks, validate=False)

    def relabel(self, mapping: dict[int, int]) -> "Matroid":
        """Relabel elements by a bijection of {1, .., n}."""
        if sorted(mapping) != list(range(1, self.n + 1)) or sorted(
            mapping.values()
        ) != list(range(1, self.n + 1)):
            raise ValueError("mapping must be a permutation of the ground set")
        masks = []
        for b in self._bases:
            m = 0
            for e in _mask_elements(b):
                m |= 1 << (mapping[e] - 1)
            masks.append(m)
        return Matroid.from_masks(self.n, masks, validate=False)

    def reversed_labels(self) -> "Matroid":
        return self.relabel({e: self.n + 1 - e for e in range(1, self.n + 1)})

    # -- connectivity -------------------------------------------------------------

    def connected_components(self) -> list[frozenset[int]]:
        """Finest direct-sum decomposition of the ground set.

        Elements e != f lie in a common component iff some basis exchange
        swaps them; loops and coloops are their own components.
        """
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int) -> None:
            parent[find(a)] = find(b)

        for b in self._bases:
            inside = list(_mask_elements(b))
            for e in inside:
                removed = b ^ (1 << (e - 1))
                for f in range(1, self.n + 1):
                    if b & (1 << (f - 1)):
                        continue
                    if (removed | (1 << (f - 1))) in self._bases_set:
                        union(e, f)
        groups: dict[int, set[int]] = {}
        for e in range(1, self.n + 1):
            groups.setdefault(find(e), set()).add(e)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def num_components(self) -> int:
        return len(self.connected_components())

    # -- flats ---------------------------------------------------------------------

    def cyclic_flats(self) -> list[tuple[frozenset[int], int]]:
        """All cyclic flats (flats whose restriction has no coloops), with ranks.

        Scans all subsets; meant for n up to ~14.
        """
        if self.n > 14:
            raise ValueError("cyclic-flat enumeration is capped at n = 14")
        out = []
        for mask in range(1 << self.n):
            r = self.rank_of_mask(mask)
            # flat: no element outside keeps the rank
            is_flat = True
            for e in range(self.n):
                bit = 1 << e
                if not mask & bit and self.rank_of_mask(mask | bit) == r:
                    is_flat = False
                    break
            if not is_flat:
                continue
            # cyclic: removing any single element keeps the rank
            is_cyclic = True
            m = mask
            while m:
                bit = m & -m
                m ^= bit
                if self.rank_of_mask(mask ^ bit) < r:
                    is_cyclic = False
                    break
            if is_cyclic:
                out.append((frozenset(_mask_elements(mask)), r))
        return sorted(out, key=lambda fr: (len(fr[0]), sorted(fr[0])))

    def hyperplanes(self) -> list[frozenset[int]]:
        """Flats of rank k-1 (closures of independent (k-1)-sets)."""
        seen = set()
        for combo in combinations(range(1, self.n + 1), self.rank - 1):
            if self.rank_of(combo) == self.rank - 1:
                seen.add(self.closure(combo))
        return sorted(seen, key=lambda f: (len(f), sorted(f)))

    def is_paving(self) -> bool:
        """True iff every circuit has at least k elements."""
        return all(
            self.rank_of(c) == self.rank - 1
            for c in combinations(range(1, self.n + 1), self.rank - 1)
        )

    def paving_flat_counts(self) -> dict[int, int]:
        """Histogram h -> number of hyperplanes with h >= k elements."""
        counts: dict[int, int] = {}
        for f in self.hyperplanes():
            if len(f) >= self.rank:
                counts[len(f)] = counts.get(len(f), 0) + 1
        return dict(sorted(counts.items()))

    # -- invariants -------------------------------------------------------------------

    def beta(self) -> int:
        """Crapo's beta invariant via the full 2^n rank sum (oracle; n <= 20)."""
        if self.n > 20:
            raise ValueError("beta rank-sum oracle is capped at n = 20")
        total = 0
        for mask in range(1 << self.n):
            r = self.rank_of_mask(mask)
            total += -r if mask.bit_count() % 2 else r
        return (-1) ** self.rank * total

    # -- serialization --------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "bases": [sorted(b) for b in self.bases_sets()]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Matroid":
        data = json.loads(text)
        return cls(int(data["n"]), data["bases"])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matroid) and self.n == other.n and self._bases == other._bases
        )

    def __hash__(self) -> int:
        return hash((self.n, self._bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self._bases)})"


def _full(n: int) -> int:
    return (1 << n) - 1


def _mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (int(e) - 1)
    return mask


def _mask_elements(mask: int):
    e = 1
    while mask:
        if mask & 1:
            yield e
        mask >>= 1
        e += 1


# -- families ------------------------------------------------------------------


def uniform(k: int, n: int) -> Matroid:
    """All k-subsets of {1, .., n} as bases."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    masks = [_mask_of(c) for c in combinations(range(1, n + 1), k)]
    return Matroid.from_masks(n, masks, validate=False)


@dataclass(frozen=True)
class LatticePathSpec:
    """Bounding paths for a lattice path matroid.

    ``upper`` and ``lower`` are strings of N and E steps from the origin
    with the same number of each letter; ``upper`` must stay weakly above
    ``lower``.  Bases are the north-step index sets of monotone paths
    between the two.
    """

    upper: str
    lower: str

    def __post_init__(self) -> None:
        u, l = self.upper.upper(), self.lower.upper()
        object.__setattr__(self, "upper", u)
        object.__setattr__(self, "lower", l)
        if set(u) - {"N", "E"} or set(l) - {"N", "E"}:
            raise ValueError("paths must consist of N and E steps")
        if len(u) != len(l) or u.count("N") != l.count("N"):
            raise ValueError("paths must share endpoints")
        height = 0
        for cu, cl in zip(u, l):
            height += (cu == "N") - (cl == "N")
            if height < 0:
                raise ValueError("upper path dips below lower path")

    @property
    def n(self) -> int:
        return len(self.upper)

    @property
    def k(self) -> int:
        return self.upper.count("N")

    def row_bounds(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Per row i (top to bottom) the window [mu_i, lam_i] for the position
        of the row's north step, counted in east steps from the origin."""
        mu = _norths_to_rows(self.upper)
        lam = _norths_to_rows(self.lower)
        return mu, lam

    @classmethod
    def from_shape(cls, shape: SkewShape, n: int | None = None) -> "LatticePathSpec":
        """Paths of the skew diagram, bottom-left corner to top-right corner."""
        k = shape.num_rows
        bounds = shape.row_intervals()
        if n is None:
            n = shape.outer[0] + k
        width = n - k
        if shape.outer[0] > width:
            raise ValueError(f"shape wider than {width}")
        mu = [b[0] for b in bounds]
        lam = [b[1] for b in bounds]
        upper = _rows_to_path(mu, k, width)
        lower = _rows_to_path(lam, k, width)
        return cls(upper, lower)


def _norths_to_rows(path: str) -> tuple[int, ...]:
    """East-coordinates of the north steps, top row first."""
    xs = []
    x = 0
    for step in path:
        if step == "N":
            xs.append(x)
        else:
            x += 1
    return tuple(reversed(xs))


def _rows_to_path(xs: Sequence[int], k: int, width: int) -> str:
    """Inverse of :func:`_norths_to_rows` for weakly decreasing rows."""
    chunks = []
    x = 0
    for target in reversed(xs):  # bottom row first
        chunks.append("E" * (target - x) + "N")
        x = target
    chunks.append("E" * (width - x))
    return "".join(chunks)


def lattice_path(spec: LatticePathSpec | SkewShape | tuple[str, str]) -> Matroid:
    """The lattice path matroid of bounding paths or a skew shape."""
    if isinstance(spec, SkewShape):
        spec = LatticePathSpec.from_shape(spec)
    elif isinstance(spec, tuple):
        spec = LatticePathSpec(*spec)
    mu, lam = spec.row_bounds()
    k, n = spec.k, spec.n
    masks: list[int] = []

    def rec(i: int, lo: int, mask: int) -> None:
        # rows bottom to top: i = k-1 .. 0; north step of row i at east-coord x
        if i < 0:
            masks.append(mask)
            return
        for x in range(max(lo, mu[i]), lam[i] + 1):
            rec(i - 1, x, mask | (1 << (x + (k - 1 - i))))
        # element index of row i's north step is x + (number of norths below) + 1

    rec(k - 1, 0, 0)
    return Matroid.from_masks(n, masks, validate=False)


def path_count(spec: LatticePathSpec) -> int:
    """Number of monotone paths between the bounds, by dynamic programming."""
    mu, lam = spec.row_bounds()
    k = spec.k
    width = spec.n - spec.k
    # count paths by the weakly increasing east-coordinates bottom-to-top
    counts = {x: 1 for x in range(mu[k - 1], lam[k - 1] + 1)} if k else {}
    if k == 0:
        return 1
    for i in range(k - 2, -1, -1):
        nxt: dict[int, int] = {}
        for x in range(mu[i], lam[i] + 1):
            nxt[x] = sum(c for y, c in counts.items() if y <= x)
        counts = nxt
    return sum(counts.values())


def snake(b: Sequence[int]) -> Matroid:
    """The snake matroid of a composition: the lattice path matroid of its ribbon."""
    b = check_composition(b)
    return lattice_path(ribbon_from_composition(b))


def minimal(k: int, n: int) -> Matroid:
    """The connected matroid of rank k on [n] with the fewest bases."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    return snake((n - k,) + (1,) * (k - 1))


def panhandle(k: int, h: int, n: int) -> Matroid:
    """Nested matroid of shape [n-k, (h-k+1)^(k-1)]: one hyperplane of size h."""
    if not (2 <= k <= h < n):
        raise ValueError(f"need 2 <= k <= h < n, got k={k}, h={h}, n={n}")
    shape = check_partition((n - k,) + (h - k + 1,) * (k - 1))
    return lattice_path(SkewShape(shape, ()))


def validate_chain(chain: Sequence[tuple[int, int]], n: int) -> tuple[tuple[int, int], ...]:
    """Validate (size, rank) data for a chain of cyclic flats ending at (n, k).

    Consecutive members must gain strictly more elements than rank, and at
    least one of each; the bottom is the empty flat of rank zero.
    """
    data = tuple((int(h), int(r)) for h, r in chain)
    if not data:
        raise ValueError("chain must contain at least the top flat (n, k)")
    if data[-1][0] != n:
        raise ValueError(f"chain must end at the full ground set of size {n}")
    prev_h, prev_r = 0, 0
    for h, r in data:
        if not (r > prev_r and h - prev_h > r - prev_r):
            raise ValueError(f"inconsistent cyclic-flat data {data}")
        prev_h, prev_r = h, r
    return data


def nested_from_chain(chain: Sequence[tuple[int, int]], n: int) -> Matroid:
    """The nested matroid whose cyclic flats are prefixes of sizes/ranks ``chain``.

    The flat of size h_i has rank r_i and consists of the first h_i
    elements; the chain must end with (n, k).
    """
    data = validate_chain(chain, n)
    k = data[-1][1]
    upper = []
    prev_h, prev_r = 0, 0
    for h, r in data:
        upper.append("N" * (r - prev_r) + "E" * ((h - prev_h) - (r - prev_r)))
        prev_h, prev_r = h, r
    lower = "E" * (n - k) + "N" * k
    return lattice_path(LatticePathSpec("".join(upper), lower))


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum, relabelling the second summand to n1+1 .. n1+n2."""
    shift = m1.n
    masks = [b1 | (b2 << shift) for b1 in m1.bases_masks() for b2 in m2.bases_masks()]
    return Matroid.from_masks(m1.n + m2.n, masks, validate=False)


# -- snakes inside a lattice path matroid ---------------------------------------


def _normalized_shape(spec: LatticePathSpec | SkewShape | tuple[str, str] | Matroid) -> SkewShape:
    """Connected lattice path input as a skew shape with k rows, lam_1 = n-k."""
    if isinstance(spec, Matroid):
        raise TypeError("pass a shape or bounding paths, not a matroid")
    if isinstance(spec, tuple):
        spec = LatticePathSpec(*spec)
    if isinstance(spec, LatticePathSpec):
        mu, lam = spec.row_bounds()
        width = spec.n - spec.k
        shape = SkewShape(lam, mu)
    else:
        shape = spec
        width = shape.outer[0]
    bounds = shape.row_intervals()
    k = shape.num_rows
    if shape.outer[0] != width:
        raise ValueError("top row must span the full width")
    if bounds[-1][0] != 0:
        raise ValueError("bottom row must start at the first column")
    for i, (m, l) in enumerate(bounds):
        if m >= l:
            raise ValueError(f"row {i + 1} of {shape} is empty: disconnected")
    for (m_above, _), (_, l_below) in zip(bounds, bounds[1:]):
        if m_above >= l_below:
            raise ValueError(f"{shape} is a disconnected lattice path diagram")
    return shape


def snakes_in(spec: LatticePathSpec | SkewShape | tuple[str, str]) -> list[Composition]:
    """Compositions whose ribbon fits inside a connected lattice path diagram."""
    shape = _normalized_shape(spec)
    bounds = shape.row_intervals()
    k = shape.num_rows
    n = shape.outer[0] + k
    out = []

    def rec(i: int, start: int, parts: tuple[int, ...]) -> None:
        # rows bottom to top; row i (1-based from bottom) occupies columns
        # start+1 .. start+b_i, so its partition row is k-i (0-based).
        if i == k:
            if sum(parts) == n - 1:
                out.append(parts)
            return
        mu_i, lam_i = bounds[k - 1 - i]
        if not mu_i <= start <= lam_i - 1:
            return
        hi = lam_i - start
        if i == k - 1:
            lo = hi = (n - k) - start  # top row must reach the last column
            if lo < 1:
                return
        else:
            lo = 1
        for b_i in range(lo, hi + 1):
            rec(i + 1, start + b_i - 1, parts + (b_i,))

    mu_k, lam_k = bounds[k - 1]
    for b1 in range(1, lam_k + 1):
        rec(1, b1 - 1, (b1,))
    return sorted(out)


def extreme_snakes(spec: LatticePathSpec | SkewShape | tuple[str, str]) -> tuple[Composition, Composition]:
    """The snakes hugging the upper and the lower bounding path."""
    shape = _normalized_shape(spec)
    bounds = shape.row_intervals()
    k = shape.num_rows
    upper_rows = []
    lower_rows = []
    for i, (mu_i, lam_i) in enumerate(bounds):
        up_hi = lam_i if i == 0 else bounds[i - 1][0] + 1
        upper_rows.append(up_hi - mu_i)
        lo_lo = bounds[i + 1][1] - 1 if i + 1 < k else 0
        lower_rows.append(lam_i - lo_lo)
    return tuple(reversed(upper_rows)), tuple(reversed(lower_rows))


def transversal_intervals(
    spec: LatticePathSpec | SkewShape | tuple[str, str]
) -> list[tuple[int, int]]:
    """Interval system [c_i, d_i]: c from the uppermost snake's descents,
    d from the lowermost's."""
    upper_snake, lower_snake = extreme_snakes(spec)
    from .shapes import descent_set

    cs = list(descent_set(upper_snake))
    ds = list(descent_set(lower_snake))
    return list(zip(cs, ds))


# -- nested decomposition --------------------------------------------------------


@dataclass(frozen=True)
class CyclicChain:
    """A chain of cyclic flats from the empty flat to the full ground set."""

    flats: tuple[frozenset[int], ...]
    ranks: tuple[int, ...]

    def profile(self) -> tuple[tuple[int, int], ...]:
        """The (size, rank) data of the proper-plus-top part of the chain."""
        return tuple((len(f), r) for f, r in zip(self.flats[1:], self.ranks[1:]))

    def __str__(self) -> str:
        return " < ".join(
            "{" + ",".join(str(e) for e in sorted(f)) + "}" for f in self.flats
        )


def hampe_coefficients(m: Matroid) -> list[tuple[CyclicChain, int]]:
    """Integer weights expressing ``m`` as a combination of nested matroids.

    The weight of a chain C of cyclic flats (always including the empty
    flat and the full ground set) is minus the Moebius value of C against
    the artificial top of the chain lattice.  Requires a loop-free,
    coloop-free matroid, so that the bounding flats are the empty set and
    the ground set.  Chains with weight zero are omitted.
    """
    if m.loops() or m.coloops():
        raise ValueError("strip loops and coloops before decomposing")
    flats = m.cyclic_flats()
    ranks = {f: r for f, r in flats}
    bottom = frozenset()
    top = frozenset(range(1, m.n + 1))
    if bottom not in ranks or top not in ranks:
        raise ValueError("cyclic flats must contain the empty set and the ground set")
    proper = [f for f, _ in flats if f not in (bottom, top)]
    proper.sort(key=lambda f: (len(f), sorted(f)))

    chains: list[frozenset[frozenset[int]]] = []

    def grow(idx: int, current: tuple[frozenset[int], ...]) -> None:
        chains.append(frozenset(current))
        for j in range(idx, len(proper)):
            f = proper[j]
            if not current or current[-1] < f:
                grow(j + 1, current + (f,))

    grow(0, ())

    # Moebius values against the artificial maximum, top-down by chain size
    order = sorted(chains, key=len, reverse=True)
    mu: dict[frozenset[frozenset[int]], int] = {}
    for c in order:
        acc = 1  # contribution of the artificial top
        for d in order:
            if len(d) > len(c) and c < d:
                acc += mu[d]
        mu[c] = -acc

    out = []
    for c in sorted(chains, key=lambda c: (len(c), sorted(sorted(f) for f in c))):
        weight = -mu[c]
        if weight == 0:
            continue
        members = (bottom,) + tuple(sorted(c, key=len)) + (top,)
        chain = CyclicChain(members, tuple(ranks[f] for f in members))
        out.append((chain, weight))
    return out


def core_strip(m: Matroid) -> tuple[Matroid | None, int, int]:
    """Remove loops and contract coloops until none remain.

    Returns (core, loops_removed, coloops_removed); the core is None when
    nothing is left.  Relabelling preserves the relative order of the
    surviving elements.
    """
    loops_removed = 0
    coloops_removed = 0
    cur = m
    while True:
        loops = cur.loops()
        coloops = cur.coloops()
        if not loops and not coloops:
            return cur, loops_removed, coloops_removed
        loops_removed += len(loops)
        coloops_removed += len(coloops)
        keep = [e for e in range(1, cur.n + 1) if e not in loops and e not in coloops]
        if not keep:
            return None, loops_removed, coloops_removed
        pos = {e: i for i, e in enumerate(keep)}
        drop_coloops = _mask_of(coloops)
        masks = set()
        for b in cur.bases_masks():
            new = 0
            bb = b & ~drop_coloops
            for e in _mask_elements(bb):
                new |= 1 << pos[e]
            masks.add(new)
        cur = Matroid.from_masks(len(keep), masks, validate=False)


# -- shorthand parsing -------------------------------------------------------------


def from_spec_string(text: str) -> Matroid:
    """Parse a family shorthand or inline JSON matroid description.

    Shorthands: ``uniform:k,n``, ``snake:b1,b2,..``, ``minimal:k,n``,
    ``panhandle:k,h,n``, ``nested:(h1,r1),(h2,r2),..;n``,
    ``lpm:U=NEN..;L=ENE..``
    """
    text = text.strip()
    if text.startswith("{"):
        return Matroid.from_json(text)
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"unrecognized matroid spec {text!r}")
    head = head.lower()
    if head == "uniform":
        k, n = (int(x) for x in rest.split(","))
        return uniform(k, n)
    if head == "snake":
        return snake(tuple(int(x) for x in rest.split(",")))
    if head == "minimal":
        k, n = (int(x) for x in rest.split(","))
        return minimal(k, n)
    if head == "panhandle":
        k, h, n = (int(x) for x in rest.split(","))
        return panhandle(k, h, n)
    if head == "nested":
        pairs_text, sep2, n_text = rest.partition(";")
        if not sep2:
            raise ValueError("nested spec needs a trailing ;n")
        pairs = []
        for chunk in pairs_text.replace("(", " ").replace(")", " ").split():
            chunk = chunk.strip(",")
            if not chunk:
                continue
            h, r = (int(x) for x in chunk.split(","))
            pairs.append((h, r))
        return nested_from_chain(pairs, int(n_text))
    if head == "lpm":
        parts = dict(p.split("=", 1) for p in rest.split(";"))
        return lattice_path(LatticePathSpec(parts["U"].strip(), parts["L"].strip()))
    raise ValueError(f"unknown matroid family {head!r}")
