"""
Exact integer linear algebra: sparse matrices, rank over Q, and Smith
normal form.

Boundary matrices of the complexes here are very sparse with mostly
unit entries, so the elimination first exhausts unit pivots (each one is
a unimodular step that strips a row and a column and contributes a 1 to
the diagonal).  Whatever is left is small and is finished either by
fraction-free elimination (rank only) or by dense Smith reduction.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Iterable


def xgcd(a: int, b: int) -> tuple:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntMatrix:
    """Sparse integer matrix; absent entries are zero."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            if v:
                self.entries[(i, j)] = int(v)

    @classmethod
    def from_dense(cls, data: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        data = [list(r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        entries = {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v}
        return cls(len(data), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = other.row_dicts()
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row[k].items():
                out[(i, j)] = out.get((i, j), 0) + a * b
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple  # d_1 | d_2 | ... | d_r, all positive
    rank: int
    U: IntMatrix | None = None
    V: IntMatrix | None = None

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.diagonal if d > 1)


# ---------------------------------------------------------------- sparse part


def _unit_eliminate(rows: list) -> tuple:
    """Strip unit pivots in place.

    Returns (number of pivots, remaining nonzero rows).  The invariant
    factors of the input are [1]*pivots followed by those of the rest.
    """
    cols: dict = {}
    for r, row in enumerate(rows):
        for c in row:
            cols.setdefault(c, set()).add(r)
    version = [0] * len(rows)
    # lazy heap of (row length, row, version); stale entries are skipped
    heap = [(len(row), r, 0) for r, row in enumerate(rows) if row]
    heapq.heapify(heap)
    pivots = 0
    while heap:
        lr, pr, ver = heapq.heappop(heap)
        if ver != version[pr] or not rows[pr]:
            continue
        prow = rows[pr]
        # shortest row first; within it the unit entry in the sparsest column
        pc = None
        best = None
        for c, v in prow.items():
            if v == 1 or v == -1:
                n = len(cols[c])
                if best is None or n < best:
                    best, pc = n, c
        if pc is None:
            continue  # re-queued if a later update changes this row
        pv = prow[pc]
        for r in list(cols[pc]):
            if r == pr:
                continue
            row = rows[r]
            f = row[pc] * pv  # pv is ±1, so row[pc]/pv == row[pc]*pv
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            version[r] += 1
            if row:
                heapq.heappush(heap, (len(row), r, version[r]))
        for c in prow:
            cols[c].discard(pr)
        rows[pr] = {}
        pivots += 1
    return pivots, [row for row in rows if row]


def _fraction_free_rank(rows: list) -> int:
    """Rank over Q of the given sparse rows, by integer row elimination."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        # pick the pivot row as the shortest one, pivot at its smallest entry
        idx = min(range(len(rows)), key=lambda i: len(rows[i]))
        prow = rows.pop(idx)
        pc = min(prow, key=lambda c: abs(prow[c]))
        pv = prow[pc]
        rank += 1
        nxt = []
        for row in rows:
            a = row.get(pc)
            if a:
                g = gcd(a, pv)
                ma, mp = pv // g, a // g
                new = {}
                for c in set(row) | set(prow):
                    v = ma * row.get(c, 0) - mp * prow.get(c, 0)
                    if v:
                        new[c] = v
                if new:
                    content = 0
                    for v in new.values():
                        content = gcd(content, v)
                        if content == 1:
                            break
                    if content > 1:
                        new = {c: v // content for c, v in new.items()}
                    nxt.append(new)
            else:
                nxt.append(row)
        rows = nxt
    return rank


def rank(M: IntMatrix) -> int:
    """Rank of M over Q."""
    rows = M.row_dicts()
    pivots, remaining = _unit_eliminate(rows)
    return pivots + _fraction_free_rank(remaining)


def elementary_divisors(M: IntMatrix) -> tuple:
    """Nonzero invariant factors of M, in divisibility order."""
    rows = M.row_dicts()
    pivots, remaining = _unit_eliminate(rows)
    if not remaining:
        return (1,) * pivots
    used = sorted({c for r in remaining for c in r})
    index = {c: i for i, c in enumerate(used)}
    dense = [[0] * len(used) for _ in remaining]
    for i, r in enumerate(remaining):
        for c, v in r.items():
            dense[i][index[c]] = v
    diag, _, _ = _dense_smith(dense, len(used), want_transforms=False)
    return (1,) * pivots + tuple(diag)


# ----------------------------------------------------------------- dense part


def _dense_smith(A: list, ncols: int, want_transforms: bool):
    """Smith normal form of a dense list-of-lists matrix.

    Returns (diagonal, U, V) with U*A*V = D when transforms are wanted
    (U, V as dense lists), else (diagonal, None, None).
    """
    D = [row[:] for row in A]
    m, n = len(D), ncols
    U = [[int(i == j) for j in range(m)] for i in range(m)] if want_transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if want_transforms else None

    def row_combine(i1, i2, a, b, c, d):
        # (row i1, row i2) <- (a*r1 + b*r2, c*r1 + d*r2), determinant ±1
        R1, R2 = D[i1], D[i2]
        for jj in range(n):
            x, y = R1[jj], R2[jj]
            if x or y:
                R1[jj], R2[jj] = a * x + b * y, c * x + d * y
        if U is not None:
            R1, R2 = U[i1], U[i2]
            for jj in range(m):
                x, y = R1[jj], R2[jj]
                R1[jj], R2[jj] = a * x + b * y, c * x + d * y

    def col_combine(j1, j2, a, b, c, d):
        # (col j1, col j2) <- (a*c1 + b*c2, c*c1 + d*c2)
        for R in D:
            x, y = R[j1], R[j2]
            if x or y:
                R[j1], R[j2] = a * x + b * y, c * x + d * y
        if V is not None:
            for R in V:
                x, y = R[j1], R[j2]
                R[j1], R[j2] = a * x + b * y, c * x + d * y

    def swap_rows(i1, i2):
        if i1 != i2:
            D[i1], D[i2] = D[i2], D[i1]
            if U is not None:
                U[i1], U[i2] = U[i2], U[i1]

    def swap_cols(j1, j2):
        if j1 != j2:
            for R in D:
                R[j1], R[j2] = R[j2], R[j1]
            if V is not None:
                for R in V:
                    R[j1], R[j2] = R[j2], R[j1]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            Ri = D[i]
            for j in range(t, n):
                v = Ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            done = True
            p = D[t][t]
            for i in range(t + 1, m):
                b = D[i][t]
                if b:
                    if b % p == 0:
                        row_combine(t, i, 1, 0, -(b // p), 1)
                    else:
                        x, y, g = xgcd(p, b)
                        row_combine(t, i, x, y, -(b // g), p // g)
                        p = D[t][t]
                        done = False
            for j in range(t + 1, n):
                b = D[t][j]
                if b:
                    if b % p == 0:
                        col_combine(t, j, 1, 0, -(b // p), 1)
                    else:
                        x, y, g = xgcd(p, b)
                        col_combine(t, j, x, y, -(b // g), p // g)
                        p = D[t][t]
                        done = False
            if not done:
                continue
            # pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_combine(t, bad, 1, 1, 0, 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            if U is not None:
                U[t] = [-v for v in U[t]]
        t += 1
    diag = [D[i][i] for i in range(min(m, n)) if D[i][i]]
    return diag, U, V


def smith_normal_form(M: IntMatrix, transforms: bool = False) -> SmithForm:
    """Smith normal form of M.

    With ``transforms`` the dense algorithm is used and unimodular U, V
    with U @ M @ V == diag(d_1, ..., d_r, 0, ...) are returned; this is
    meant for small matrices.  Without it the sparse path is used.
    """
    if not transforms:
        diag = elementary_divisors(M)
        return SmithForm(tuple(diag), len(diag))
    diag, U, V = _dense_smith(M.to_dense(), M.cols, want_transforms=True)
    return SmithForm(
        tuple(diag), len(diag), IntMatrix.from_dense(U, M.rows), IntMatrix.from_dense(V, M.cols)
    )


def diagonal_matrix(diag: Iterable[int], rows: int, cols: int) -> IntMatrix:
    return IntMatrix(rows, cols, {(i, i): d for i, d in enumerate(diag)})
