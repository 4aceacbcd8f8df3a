"""Exact reduced simplicial homology over prime fields.

Boundary matrices use the augmented chain complex, so the empty face is a row
of the 0-th boundary map and the irrelevant complex has one unit of homology
in dimension -1. Ranks over GF(2) run on bit-packed integer rows; ranks over
larger primes run on word-sized dense elimination (numpy for anything that is
not tiny).
"""

from __future__ import annotations

from dataclasses import dataclass
from weakref import WeakKeyDictionary

import numpy as np


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p)."""

    characteristic: int

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")


GF2 = FieldSpec(2)
DEFAULT_FIELD = FieldSpec(32003)  # large-prime stand-in for characteristic 0


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError("entry position out of range")
            if v == 0:
                raise ValueError("stored zero entry")
            if (r, c) in seen:
                raise ValueError("duplicate entry position")
            seen.add((r, c))


def _rank_gf2_columns(columns: list[int]) -> int:
    # columns are bit-packed over row indices; reduce against a pivot table
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        cur = col
        while cur:
            low = cur & -cur
            row = pivots.get(low)
            if row is None:
                pivots[low] = cur
                rank += 1
                break
            cur ^= row
    return rank


def _rank_dense_modp(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = (a[r] * pow(piv, p - 2, p)) % p
        below = np.flatnonzero(a[r + 1 :, c])
        if below.size:
            rows = below + r + 1
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        r += 1
    return r


def _rank_small_modp(rows: list[list[int]], p: int) -> int:
    rank = 0
    work = [row[:] for row in rows]
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], p - 2, p)
        work[r] = [(v * inv) % p for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] % p:
                f = work[i][c]
                work[i] = [(v - f * w) % p for v, w in zip(work[i], work[r])]
        r += 1
        rank += 1
        if r == len(work):
            break
    return rank


def rank(matrix: SparseMatrix, field: FieldSpec) -> int:
    """Exact rank of a sparse matrix over GF(p)."""
    p = field.characteristic
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if p == 2:
        columns = [0] * matrix.cols
        for r, c, v in matrix.entries:
            if v % 2:
                columns[c] |= 1 << r
        return _rank_gf2_columns([c for c in columns if c])
    if matrix.rows * matrix.cols <= 4096:
        dense = [[0] * matrix.cols for _ in range(matrix.rows)]
        for r, c, v in matrix.entries:
            dense[r][c] = v % p
        return _rank_small_modp(dense, p)
    a = np.zeros((matrix.rows, matrix.cols), dtype=np.int64)
    for r, c, v in matrix.entries:
        a[r, c] = v % p
    return _rank_dense_modp(a, p)


# ---------------------------------------------------------------------------
# face enumeration (bitmask internals shared with the Betti sweeps)

_FACE_CACHE: "WeakKeyDictionary" = WeakKeyDictionary()


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def faces_by_dim_masks(facet_masks) -> dict[int, list[int]]:
    """All faces of the complex generated by the given masks, grouped by
    dimension (popcount - 1) and sorted; the empty face sits at dimension -1."""
    faces: set[int] = set()
    for f in facet_masks:
        faces.update(_submasks(f))
    out: dict[int, list[int]] = {}
    for m in faces:
        out.setdefault(bin(m).count("1") - 1, []).append(m)
    for lst in out.values():
        lst.sort()
    return out


def _complex_faces(cx) -> dict[int, list[int]]:
    cached = _FACE_CACHE.get(cx)
    if cached is None:
        cached = faces_by_dim_masks(cx.facet_masks()) if not cx.is_void else {}
        _FACE_CACHE[cx] = cached
    return cached


def faces_of_dim(cx, d: int) -> list[tuple[int, ...]]:
    """Ordered list of d-faces; d = -1 gives the empty face of a non-void complex."""
    if d < -1:
        raise ValueError("dimension must be at least -1")
    masks = _complex_faces(cx).get(d, [])
    out = []
    for m in masks:
        face = []
        while m:
            low = m & -m
            face.append(low.bit_length() - 1)
            m ^= low
        out.append(tuple(face))
    return out


def boundary_matrix(cx, d: int, field: FieldSpec) -> SparseMatrix:
    """The d-th boundary map of the augmented chain complex, rows indexed by
    (d-1)-faces and columns by d-faces, entries (-1)^position mod p."""
    if d < 0:
        raise ValueError("boundary dimension must be at least 0")
    p = field.characteristic
    by_dim = _complex_faces(cx)
    rows = by_dim.get(d - 1, [])
    cols = by_dim.get(d, [])
    row_index = {m: i for i, m in enumerate(rows)}
    entries = []
    for j, m in enumerate(cols):
        rest = m
        pos = 0
        while rest:
            low = rest & -rest
            entries.append((row_index[m ^ low], j, (-1) ** pos % p))
            pos += 1
            rest ^= low
    return SparseMatrix(len(rows), len(cols), tuple(entries))


def _boundary_ranks(by_dim: dict[int, list[int]], field: FieldSpec) -> dict[int, int]:
    p = field.characteristic
    ranks: dict[int, int] = {}
    top = max(by_dim) if by_dim else -2
    for d in range(0, top + 1):
        rows = by_dim.get(d - 1, [])
        cols = by_dim.get(d, [])
        if not rows or not cols:
            ranks[d] = 0
            continue
        if d == 0:
            ranks[0] = 1  # every vertex hits the empty face with coefficient 1
            continue
        row_index = {m: i for i, m in enumerate(rows)}
        if p == 2:
            packed = []
            for m in cols:
                col = 0
                rest = m
                while rest:
                    low = rest & -rest
                    col |= 1 << row_index[m ^ low]
                    rest ^= low
                packed.append(col)
            ranks[d] = _rank_gf2_columns(packed)
            continue
        if len(rows) * len(cols) <= 4096:
            dense_small = [[0] * len(cols) for _ in rows]
            for j, m in enumerate(cols):
                rest = m
                pos = 0
                while rest:
                    low = rest & -rest
                    dense_small[row_index[m ^ low]][j] = (-1) ** pos % p
                    pos += 1
                    rest ^= low
            ranks[d] = _rank_small_modp(dense_small, p)
            continue
        a = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for j, m in enumerate(cols):
            rest = m
            pos = 0
            while rest:
                low = rest & -rest
                a[row_index[m ^ low], j] = (-1) ** pos % p
                pos += 1
                rest ^= low
        ranks[d] = _rank_dense_modp(a, p)
    return ranks


def betti_of_face_masks(by_dim: dict[int, list[int]], field: FieldSpec) -> dict[int, int]:
    """Reduced Betti numbers of a complex given as faces-by-dimension masks."""
    if not by_dim:
        return {}
    ranks = _boundary_ranks(by_dim, field)
    top = max(by_dim)
    out: dict[int, int] = {}
    euler_faces = 0
    euler_betti = 0
    for d in range(-1, top + 1):
        fd = len(by_dim.get(d, []))
        b = fd - ranks.get(d, 0) - ranks.get(d + 1, 0)
        out[d] = b
        sign = -1 if d % 2 else 1
        euler_faces += sign * fd
        euler_betti += sign * b
    # alternating sums must agree; a mismatch means an inconsistent rank
    assert euler_faces == euler_betti, "Euler characteristic check failed"
    return out


def reduced_betti(cx, field: FieldSpec) -> dict[int, int]:
    """Reduced Betti numbers b~_d for d = -1 .. dim; {} for the void complex."""
    if cx.is_void:
        return {}
    return betti_of_face_masks(_complex_faces(cx), field)
