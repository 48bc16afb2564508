"""Lie algebras as exact structure-constant tables, with certificates.

Brackets are stored sparsely for i < j only.  Certification (Jacobi,
Killing form) prefers an integer fast path: when every structure constant
is rational, scale by the common denominator and compare int64 numpy
arrays, which is exact as long as the bounds checked here rule out
overflow.  Algebras with sqrt3 in their constants (the Okubo-built ones)
take the pure-Python route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import VerificationError
from .linalg import (
    DenseVec,
    SparseVec,
    SpanSolver,
    nullspace,
    sylvester_signature,
    to_dense,
    to_sparse,
    vzero,
)
from .scalars import ONE, ZERO, Rat, Scalar


@dataclass(eq=False)
class LieAlgebra:
    name: str
    labels: List[str]
    brk: Dict[Tuple[int, int], SparseVec]  # keys (i, j) with i < j

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket_basis(self, i: int, j: int) -> SparseVec:
        if i == j:
            return {}
        if i < j:
            return self.brk.get((i, j), {})
        v = self.brk.get((j, i), {})
        return {p: -x for p, x in v.items()}

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> DenseVec:
        out = vzero(self.dim)
        sup_x = [(i, xi) for i, xi in enumerate(x) if xi]
        sup_y = [(j, yj) for j, yj in enumerate(y) if yj]
        for i, xi in sup_x:
            for j, yj in sup_y:
                if i == j:
                    continue
                c = xi * yj
                if i < j:
                    for p, v in self.brk.get((i, j), {}).items():
                        out[p] = out[p] + c * v
                else:
                    for p, v in self.brk.get((j, i), {}).items():
                        out[p] = out[p] - c * v
        return out

    def ad_matrix(self, x: Sequence[Scalar]) -> List[DenseVec]:
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            col = self.bracket(x, self.basis_vec(j))
            for p in range(n):
                if col[p]:
                    m[p][j] = col[p]
        return m

    def basis_vec(self, i: int) -> DenseVec:
        v = vzero(self.dim)
        v[i] = ONE
        return v


def lie_from_fn(
    name: str, labels: List[str], pair_fn: Callable[[int, int], Sequence[Scalar]]
) -> LieAlgebra:
    """Assemble a table from a function giving [b_i, b_j] for i < j."""
    n = len(labels)
    brk: Dict[Tuple[int, int], SparseVec] = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = pair_fn(i, j)
            s = to_sparse(v) if isinstance(v, list) else dict(v)
            if s:
                brk[(i, j)] = s
    return LieAlgebra(name, labels, brk)


# ---------------------------------------------------------------------------
# integer fast path

_INT_LIMIT = 1 << 62


def _integerize(L: LieAlgebra):
    """(A, N, scale) with A[i] = scale * ad(b_i) as int64, or None.

    N[i][j][m] = scale * c^m_{ij}.  Returns None when constants are not
    rational or int64 bounds could overflow.
    """
    n = L.dim
    denoms = set()
    for v in L.brk.values():
        for x in v.values():
            if not x.is_rational():
                return None
            denoms.add(int(x.a.denominator))
    scale = math.lcm(*denoms) if denoms else 1
    N = np.zeros((n, n, n), dtype=np.int64)
    maxa = 0
    for (i, j), v in L.brk.items():
        for m, x in v.items():
            e = int(x.a * scale)
            N[i][j][m] = e
            N[j][i][m] = -e
            maxa = max(maxa, abs(e))
    if maxa and n * maxa * maxa >= _INT_LIMIT // 4:
        return None
    A = np.ascontiguousarray(N.transpose(0, 2, 1))
    return A, N, scale


def certify_jacobi(L: LieAlgebra) -> Dict[str, object]:
    """Check ad([x,y]) = [ad x, ad y] on all basis pairs (equivalent to the
    Jacobi identity).  Raises with a witness triple on failure."""
    n = L.dim
    fast = _integerize(L)
    if fast is not None:
        A, N, scale = fast
        for i in range(n):
            lhs = np.matmul(A[i], A) - np.matmul(A, A[i])
            rhs = np.tensordot(N[i], A, axes=(1, 0))
            if not np.array_equal(lhs, rhs):
                j = int(np.nonzero((lhs != rhs).any(axis=(1, 2)))[0][0])
                raise VerificationError(
                    f"{L.name}: Jacobi fails on ({L.labels[i]}, {L.labels[j]})",
                    witness=(i, j),
                )
        return {"method": "int64", "pairs": n * (n - 1) // 2, "scale": scale}
    checked = 0
    for i in range(n):
        bi = L.basis_vec(i)
        for j in range(i + 1, n):
            bj = L.basis_vec(j)
            vij = to_dense(L.bracket_basis(i, j), n)
            for k in range(j + 1, n):
                bk = L.basis_vec(k)
                acc = L.bracket(vij, bk)
                acc2 = L.bracket(to_dense(L.bracket_basis(j, k), n), bi)
                acc3 = L.bracket(to_dense(L.bracket_basis(k, i), n), bj)
                if any(a + b + c for a, b, c in zip(acc, acc2, acc3)):
                    raise VerificationError(
                        f"{L.name}: Jacobi fails on "
                        f"({L.labels[i]}, {L.labels[j]}, {L.labels[k]})",
                        witness=(i, j, k),
                    )
                checked += 1
    return {"method": "exact", "triples": checked}


def killing_form(L: LieAlgebra) -> List[List[Scalar]]:
    """K[i][j] = trace(ad b_i ad b_j), exact."""
    n = L.dim
    fast = _integerize(L)
    if fast is not None:
        A, _, scale = fast
        k_int = np.einsum("ipq,jqp->ij", A, A)
        s2 = scale * scale
        return [
            [Scalar(Rat(int(k_int[i, j]), s2)) for j in range(n)] for i in range(n)
        ]
    # sparse exact fallback: K[i][j] = sum_{p,q} ad_i[p][q] ad_j[q][p]
    ads: List[Dict[int, Dict[int, Scalar]]] = []
    for i in range(n):
        cols: Dict[int, Dict[int, Scalar]] = {}
        for j in range(n):
            v = L.bracket_basis(i, j)
            if v:
                cols[j] = v
        ads.append(cols)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = ZERO
            for q, col_i in ads[i].items():
                for p, val_i in col_i.items():
                    col_j = ads[j].get(p)
                    if col_j:
                        v = col_j.get(q)
                        if v:
                            acc = acc + val_i * v
            out[i][j] = acc
            out[j][i] = acc
    return out


def killing_signature(L: LieAlgebra) -> Tuple[int, int, int]:
    return sylvester_signature(killing_form(L))


def check_killing_invariance(L: LieAlgebra) -> Dict[str, object]:
    """k([x,y], z) + k(y, [x,z]) = 0 on all basis triples.

    Equivalent to K ad(b_i) being antisymmetric for every i.
    """
    n = L.dim
    fast = _integerize(L)
    if fast is not None:
        A, N, scale = fast
        k_int = np.einsum("ipq,jqp->ij", A, A)
        maxn = int(np.abs(N).max()) if n else 0
        maxk = int(np.abs(k_int).max()) if n else 0
        if not maxn or n * maxn * maxk < _INT_LIMIT:
            for i in range(n):
                m = np.matmul(N[i], k_int)
                bad = np.argwhere(m + m.T)
                if len(bad):
                    j, k = map(int, bad[0])
                    raise VerificationError(
                        f"{L.name}: Killing invariance fails on "
                        f"({L.labels[i]}, {L.labels[j]}, {L.labels[k]})",
                        witness=(i, j, k),
                    )
            return {"method": "int64", "triples": n * n * n}
    K = killing_form(L)
    for i in range(n):
        m = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            v = L.bracket_basis(i, j)
            for p, c in v.items():
                kp = K[p]
                row = m[j]
                for k in range(n):
                    if kp[k]:
                        row[k] = row[k] + c * kp[k]
        for j in range(n):
            for k in range(j + 1, n):
                if m[j][k] + m[k][j]:
                    raise VerificationError(
                        f"{L.name}: Killing invariance fails on "
                        f"({L.labels[i]}, {L.labels[j]}, {L.labels[k]})",
                        witness=(i, j, k),
                    )
    return {"method": "exact", "triples": n * n * n}


# ---------------------------------------------------------------------------
# derivation algebras of structure-constant tables


def derivation_rows(table) -> List[SparseVec]:
    """Linear conditions on D (row-major n x n unknowns) for
    D(b_i b_j) = D(b_i) b_j + b_i D(b_j)."""
    n = table.dim
    sc_ = table.sc
    commutative = all(
        sc_[i][j] == sc_[j][i] for i in range(n) for j in range(i + 1, n)
    )
    pairs = (
        [(i, j) for i in range(n) for j in range(i, n)]
        if commutative
        else [(i, j) for i in range(n) for j in range(n)]
    )
    rows: List[SparseVec] = []
    for i, j in pairs:
        prod = sc_[i][j]
        for p in range(n):
            row: SparseVec = {}
            for q, v in enumerate(prod):
                if v:
                    row[p * n + q] = v
            for r in range(n):
                v = sc_[r][j][p]
                if v:
                    k = r * n + i
                    nv = row.get(k, ZERO) - v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                w = sc_[i][r][p]
                if w:
                    k = r * n + j
                    nv = row.get(k, ZERO) - w
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            if row:
                rows.append(row)
    return rows


def derivations(table) -> List[List[DenseVec]]:
    """Basis of the derivation algebra, as matrices acting on coordinates."""
    n = table.dim
    flat = nullspace(derivation_rows(table), n * n)
    return [[vec[p * n : (p + 1) * n] for p in range(n)] for vec in flat]


def derivation_lie_algebra(name: str, mats: List[List[DenseVec]]) -> LieAlgebra:
    """Close a list of matrices under commutator brackets (must span one)."""
    n2 = len(mats[0])
    flat = [[m[p][q] for p in range(n2) for q in range(n2)] for m in mats]
    solver = SpanSolver(flat)
    if solver.rank != len(mats):
        raise VerificationError(f"{name}: derivation basis is dependent")

    def comm(i: int, j: int) -> DenseVec:
        a, b = mats[i], mats[j]
        out = []
        for p in range(n2):
            for q in range(n2):
                acc = ZERO
                for r in range(n2):
                    if a[p][r] and b[r][q]:
                        acc = acc + a[p][r] * b[r][q]
                    if b[p][r] and a[r][q]:
                        acc = acc - b[p][r] * a[r][q]
                out.append(acc)
        coords = solver.coords(out)
        if coords is None:
            raise VerificationError(f"{name}: commutator escapes the span")
        return coords

    labels = [f"D{k}" for k in range(len(mats))]
    return lie_from_fn(name, labels, comm)


def sub_lie_algebra(
    L: LieAlgebra, vectors: List[DenseVec], name: str, labels: Optional[List[str]] = None
) -> LieAlgebra:
    """The Lie algebra on a bracket-closed independent spanning list."""
    solver = SpanSolver(vectors)
    if solver.rank != len(vectors):
        raise VerificationError(f"{name}: spanning list is dependent")

    def fn(i: int, j: int) -> DenseVec:
        coords = solver.coords(L.bracket(vectors[i], vectors[j]))
        if coords is None:
            raise VerificationError(
                f"{name}: bracket of elements {i}, {j} leaves the span"
            )
        return coords

    if labels is None:
        labels = [f"x{k}" for k in range(len(vectors))]
    return lie_from_fn(name, labels, fn)
