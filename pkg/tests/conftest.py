"""Shared fixtures: named matroids, corpora and small helpers."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from matroid_chow import matroid as mt


def compositions(total: int, parts: int | None = None):
    """All compositions of ``total``, optionally with a fixed number of parts."""
    if total == 0:
        return
    if parts is None:
        for p in range(1, total + 1):
            yield from compositions(total, p)
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def appendix_matroid() -> mt.Matroid:
    """Rank-3 matroid on [7] with cyclic flats {1,2}, {3,4}, [1,4], [3,6]."""
    bases = [
        set(b)
        for b in combinations(range(1, 8), 3)
        if len(set(b) & {1, 2}) <= 1
        and len(set(b) & {3, 4}) <= 1
        and len(set(b) & {1, 2, 3, 4}) <= 2
        and len(set(b) & {3, 4, 5, 6}) <= 2
    ]
    return mt.Matroid(7, bases)


FIGURE3_PATHS = ("NENEENE", "EEEENNN")


@pytest.fixture(scope="session")
def appendix():
    return appendix_matroid()


@pytest.fixture(scope="session")
def figure3():
    return mt.lattice_path(FIGURE3_PATHS)


def _gf_rank(matrix: list[list[int]], p: int) -> int:
    m = [row[:] for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def random_representable(k: int, n: int, p: int, rng: random.Random) -> mt.Matroid | None:
    """Matroid of the columns of a random k x n matrix over GF(p)."""
    matrix = [[rng.randrange(p) for _ in range(n)] for _ in range(k)]
    bases = []
    for cols in combinations(range(n), k):
        sub = [[matrix[i][c] for c in cols] for i in range(k)]
        if _gf_rank(sub, p) == k:
            bases.append([c + 1 for c in cols])
    if not bases:
        return None
    return mt.Matroid(n, bases, validate=False)


def random_matroids(count: int, max_n: int, seed: int = 20240229, connected_core: bool = True):
    """Deterministic sample of representable matroids with valid bases."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        k = rng.randint(1, n - 1)
        p = rng.choice([2, 3, 5])
        m = random_representable(k, n, p, rng)
        if m is None:
            continue
        if connected_core:
            core, _, _ = mt.core_strip(m)
            if core is not None and not core.is_connected():
                continue
        out.append(m)
    return out


def named_corpus(max_n: int) -> list[mt.Matroid]:
    """Families with connected cores used across the identity tests."""
    out = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            out.append(mt.uniform(k, n))
    for size in range(1, max_n):
        for b in compositions(size):
            out.append(mt.snake(b))
    for k in range(2, 4):
        for n in range(k + 2, max_n + 1):
            for h in range(k, n):
                out.append(mt.panhandle(k, h, n))
    if max_n >= 7:
        out.append(appendix_matroid())
        out.append(mt.lattice_path(FIGURE3_PATHS))
    # loop/coloop decorations keep the core connected
    if max_n >= 6:
        out.append(mt.uniform(2, 4).add_loop())
        out.append(mt.uniform(2, 4).add_coloop())
        out.append(mt.uniform(2, 4).add_loop().add_coloop())
        out.append(mt.snake((2, 1)).add_coloop().add_loop())
    return [m for m in out if m.n <= max_n]
