"""Exact linear algebra over Q(sqrt3, i).

Vectors are either dense lists of Scalar or sparse dicts {index: Scalar}
with zero entries absent.  The workhorse is an incremental reduced row
echelon form; everything downstream (membership, coordinates, nullspaces,
ranks) sits on top of it.  No pivoting heuristics are needed for
correctness since the arithmetic is exact, but rows are kept fully
reduced so nullspace extraction is direct.
"""

from __future__ import annotations

import heapq
from typing import Dict, Iterable, List, Optional, Sequence

from .scalars import ONE, ZERO, Scalar

SparseVec = Dict[int, Scalar]
DenseVec = List[Scalar]


def to_sparse(v: Sequence[Scalar]) -> SparseVec:
    return {i: x for i, x in enumerate(v) if x}


def to_dense(v: SparseVec, n: int) -> DenseVec:
    out = [ZERO] * n
    for i, x in v.items():
        out[i] = x
    return out


def vadd(u: Sequence[Scalar], v: Sequence[Scalar]) -> DenseVec:
    return [x + y for x, y in zip(u, v)]


def vsub(u: Sequence[Scalar], v: Sequence[Scalar]) -> DenseVec:
    return [x - y for x, y in zip(u, v)]


def vscale(c: Scalar, v: Sequence[Scalar]) -> DenseVec:
    return [c * x for x in v]


def vzero(n: int) -> DenseVec:
    return [ZERO] * n


def is_zero_vec(v: Sequence[Scalar]) -> bool:
    return not any(v)


class Echelon:
    """Incremental RREF over sparse rows.

    `add` feeds one vector; the stored rows stay fully reduced (each pivot
    column is zero in every other row).  With `track=True` each row also
    carries its expression as a combination of the inserted vectors, which
    is what SpanSolver uses to produce coordinates.
    """

    def __init__(self, track: bool = False):
        self.rows: List[SparseVec] = []
        self.pivcol: List[int] = []
        self.piv: Dict[int, int] = {}
        self.track = track
        self.combos: List[SparseVec] = []
        self.ninserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: SparseVec, combo: Optional[SparseVec]) -> None:
        # Process columns in increasing order; eliminating a pivot only
        # touches columns >= it, so each column is handled at most once.
        heap = list(v.keys())
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            coef = v.get(c)
            if not coef:
                v.pop(c, None)
                continue
            r = self.piv.get(c)
            if r is None:
                continue
            for col, val in self.rows[r].items():
                nv = v.get(col, ZERO) - coef * val
                if nv:
                    v[col] = nv
                    if col not in seen:
                        heapq.heappush(heap, col)
                else:
                    v.pop(col, None)
            if combo is not None:
                for k, val in self.combos[r].items():
                    nv = combo.get(k, ZERO) - coef * val
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)

    def residual(self, v: SparseVec):
        """Reduced copy of v, plus the tracking combo (None if untracked)."""
        w = dict(v)
        combo: Optional[SparseVec] = {} if self.track else None
        self._reduce(w, combo)
        return w, combo

    def contains(self, v: SparseVec) -> bool:
        w, _ = self.residual(v)
        return not w

    def add(self, v: SparseVec) -> bool:
        """Insert a vector; returns True if it increased the rank."""
        idx = self.ninserted
        self.ninserted += 1
        w = dict(v)
        combo: Optional[SparseVec] = {idx: ONE} if self.track else None
        self._reduce(w, combo)
        if not w:
            return False
        p = min(w)
        lead = w[p]
        if lead != ONE:
            inv = lead.inverse()
            w = {c: inv * x for c, x in w.items()}
            if combo is not None:
                combo = {k: inv * x for k, x in combo.items()}
        # knock the new pivot column out of every older row
        for r, row in enumerate(self.rows):
            coef = row.get(p)
            if not coef:
                continue
            for col, val in w.items():
                nv = row.get(col, ZERO) - coef * val
                if nv:
                    row[col] = nv
                else:
                    row.pop(col, None)
            if self.track:
                rc = self.combos[r]
                for k, val in combo.items():  # type: ignore[union-attr]
                    nv = rc.get(k, ZERO) - coef * val
                    if nv:
                        rc[k] = nv
                    else:
                        rc.pop(k, None)
        self.rows.append(w)
        self.pivcol.append(p)
        self.piv[p] = len(self.rows) - 1
        if combo is not None:
            self.combos.append(combo)
        return True

    def free_columns(self, ncols: int) -> List[int]:
        return [c for c in range(ncols) if c not in self.piv]


class SpanSolver:
    """Coordinates of vectors relative to a fixed spanning list.

    Feed basis vectors with `add`; then `coords(v)` returns c with
    v = sum c[k] * basis[k], or None if v is outside the span.  Dependent
    basis vectors are tolerated (their coordinate just stays unused).
    """

    def __init__(self, basis: Optional[Iterable[Sequence[Scalar]]] = None):
        self.ech = Echelon(track=True)
        if basis is not None:
            for b in basis:
                self.add(b)

    def add(self, v: Sequence[Scalar]) -> bool:
        return self.ech.add(to_sparse(v))

    @property
    def rank(self) -> int:
        return self.ech.rank

    def coords_sparse(self, v: SparseVec) -> Optional[List[Scalar]]:
        w, combo = self.ech.residual(v)
        if w:
            return None
        out = [ZERO] * self.ech.ninserted
        for k, val in combo.items():  # type: ignore[union-attr]
            out[k] = -val
        return out

    def coords(self, v: Sequence[Scalar]) -> Optional[List[Scalar]]:
        return self.coords_sparse(to_sparse(v))


def rank_of(vectors: Iterable[Sequence[Scalar]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(to_sparse(v))
    return ech.rank


def nullspace(rows: Iterable[SparseVec], ncols: int) -> List[DenseVec]:
    """Basis of {x : R x = 0} for the matrix with the given sparse rows.

    Rows are inserted smallest-support first, which keeps the intermediate
    fill-in low for the big derivation systems.
    """
    ech = Echelon()
    for row in sorted(rows, key=len):
        ech.add(row)
    free = ech.free_columns(ncols)
    basis: List[DenseVec] = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, p in enumerate(ech.pivcol):
            val = ech.rows[r].get(f)
            if val:
                x[p] = -val
        basis.append(x)
    return basis


def mat_vec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> DenseVec:
    out = []
    for row in m:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]):
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append(
            [sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt]
        )
    return out


def identity_matrix(n: int) -> List[DenseVec]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def sylvester_signature(gram) -> tuple:
    """(n_plus, n_minus, n_zero) of a symmetric real matrix, by congruence.

    Symmetric pivoting with exact signs; when every remaining diagonal
    entry vanishes, a row+column addition manufactures a nonzero one
    (always possible in characteristic 0).
    """
    g = [list(row) for row in gram]
    n = len(g)
    active = list(range(n))
    plus = minus = 0
    while active:
        pivot = None
        nice = None
        for k in active:
            x = g[k][k]
            if x:
                if pivot is None:
                    pivot = k
                if x.is_rational() and abs(x.a) in (1, 2) or x == ONE or x == -ONE:
                    nice = k
                    break
        if nice is not None:
            pivot = nice
        if pivot is None:
            hit = None
            for i in active:
                for j in active:
                    if i != j and g[i][j]:
                        hit = (i, j)
                        break
                if hit:
                    break
            if hit is None:
                break  # remaining block is zero
            i, j = hit
            for s in (ONE, -ONE):
                if g[i][i] + s * (g[i][j] + g[j][i]) + s * s * g[j][j]:
                    break
            for c in range(n):
                g[i][c] = g[i][c] + s * g[j][c]
            for r in range(n):
                g[r][i] = g[r][i] + s * g[r][j]
            continue
        d = g[pivot][pivot]
        if d.sign() > 0:
            plus += 1
        else:
            minus += 1
        active.remove(pivot)
        for m in active:
            coef = g[m][pivot]
            if not coef:
                continue
            f = coef / d
            for c in range(n):
                g[m][c] = g[m][c] - f * g[pivot][c]
            for r in range(n):
                g[r][m] = g[r][m] - f * g[r][pivot]
    return plus, minus, n - plus - minus
