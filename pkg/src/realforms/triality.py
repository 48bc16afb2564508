"""Orthogonal and triality Lie algebras of a symmetric composition algebra.

tri(S) consists of triples (d0, d1, d2) of skew transformations with
d0(x*y) = d1(x)*y + x*d2(y); it carries the order-3 rotation
theta(d0, d1, d2) = (d2, d0, d1) and is spanned by the maps

    t_{x,y} = (s_{x,y}, q(x,y)/2 - r_x l_y, q(x,y)/2 - l_x r_y),

with s_{x,y}(z) = q(x,z) y - q(y,z) x.  For an 8-dimensional S this is a
form of so(8); for the 2-dimensional paras it is a 2-dimensional abelian
algebra; for S = R it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .algebras import AlgebraTable
from .errors import ConstructionError, VerificationError
from .linalg import (
    DenseVec,
    SparseVec,
    SpanSolver,
    mat_mul,
    mat_vec,
    nullspace,
    vadd,
    vscale,
    vzero,
)
from .lie import LieAlgebra, lie_from_fn
from .scalars import HALF, ONE, ZERO, Scalar

Matrix = List[DenseVec]


def orthogonal_lie(s: AlgebraTable) -> List[Matrix]:
    """Basis of {D : D^t Q + Q D = 0} for the polar form Q of s."""
    n = s.dim
    q = s.form
    rows: List[SparseVec] = []
    for i in range(n):
        for j in range(i, n):
            row: SparseVec = {}
            for p in range(n):
                if q[p][j]:
                    k = p * n + i
                    row[k] = row.get(k, ZERO) + q[p][j]
                if q[i][p]:
                    k = p * n + j
                    row[k] = row.get(k, ZERO) + q[i][p]
            row = {k: v for k, v in row.items() if v}
            if row:
                rows.append(row)
    flat = nullspace(rows, n * n)
    return [[vec[p * n : (p + 1) * n] for p in range(n)] for vec in flat]


def _flatten_triple(t: Tuple[Matrix, Matrix, Matrix], n: int) -> DenseVec:
    out: DenseVec = []
    for m in t:
        for p in range(n):
            out.extend(m[p])
    return out


@dataclass(eq=False)
class TrialityAlgebra:
    comp: AlgebraTable
    basis: List[Tuple[Matrix, Matrix, Matrix]]
    lie: LieAlgebra
    solver: SpanSolver
    theta_mat: Matrix  # action of theta on coordinates

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords_of_triple(self, t: Tuple[Matrix, Matrix, Matrix]) -> DenseVec:
        c = self.solver.coords(_flatten_triple(t, self.comp.dim))
        if c is None:
            raise VerificationError(
                f"tri({self.comp.name}): triple is not a triality element"
            )
        return c

    def component_maps(self, coords: Sequence[Scalar]) -> Tuple[Matrix, Matrix, Matrix]:
        n = self.comp.dim
        out = [[[ZERO] * n for _ in range(n)] for _ in range(3)]
        for k, c in enumerate(coords):
            if not c:
                continue
            for slot in range(3):
                m = self.basis[k][slot]
                om = out[slot]
                for p in range(n):
                    row = m[p]
                    orow = om[p]
                    for q in range(n):
                        if row[q]:
                            orow[q] = orow[q] + c * row[q]
        return tuple(out)  # type: ignore[return-value]

    def sigma_map(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Matrix:
        """s_{x,y}: z -> q(x,z) y - q(y,z) x."""
        n = self.comp.dim
        cols = []
        for j in range(n):
            ej = self.comp.basis_vec(j)
            cols.append(
                vadd(
                    vscale(self.comp.polar(x, ej), y),
                    vscale(-self.comp.polar(y, ej), x),
                )
            )
        return [[cols[j][p] for j in range(n)] for p in range(n)]

    def t_element(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> DenseVec:
        """Coordinates of t_{x,y} in the solved tri basis."""
        n = self.comp.dim
        half_q = self.comp.polar(x, y) * HALF
        lx = self.comp.lmul_matrix(x)
        ly = self.comp.lmul_matrix(y)
        rx = self.comp.rmul_matrix(x)
        d1 = [[-row[q] for q in range(n)] for row in mat_mul(rx, ly)]
        d2 = [[-row[q] for q in range(n)] for row in mat_mul(lx, self.comp.rmul_matrix(y))]
        if half_q:
            for p in range(n):
                d1[p][p] = d1[p][p] + half_q
                d2[p][p] = d2[p][p] + half_q
        return self.coords_of_triple((self.sigma_map(x, y), d1, d2))

    def theta(self, coords: Sequence[Scalar], power: int = 1) -> DenseVec:
        out = list(coords)
        for _ in range(power % 3):
            out = mat_vec(self.theta_mat, out)
        return out


def triality(s: AlgebraTable) -> TrialityAlgebra:
    n = s.dim
    orth = orthogonal_lie(s)
    no = len(orth)
    # columns of each orthogonal basis matrix, as vectors
    bcols = [[[m[p][i] for p in range(n)] for i in range(n)] for m in orth]
    rows: List[SparseVec] = []
    for i in range(n):
        ei = s.basis_vec(i)
        for j in range(n):
            ej = s.basis_vec(j)
            prod = s.sc[i][j]
            terms = []  # unknown index -> contribution vector
            for k in range(no):
                # d0 term: B_k applied to (e_i * e_j)
                terms.append((k, mat_vec(orth[k], prod)))
                # d1 term: -(B_k e_i) * e_j
                terms.append((no + k, vscale(-ONE, s.mul(bcols[k][i], ej))))
                # d2 term: -e_i * (B_k e_j)
                terms.append((2 * no + k, vscale(-ONE, s.mul(ei, bcols[k][j]))))
            for p in range(n):
                row: SparseVec = {}
                for idx, vec in terms:
                    if vec[p]:
                        row[idx] = row.get(idx, ZERO) + vec[p]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    sols = nullspace(rows, 3 * no)

    def unflatten(coefs: DenseVec) -> Tuple[Matrix, Matrix, Matrix]:
        mats = []
        for slot in range(3):
            m = [[ZERO] * n for _ in range(n)]
            for k in range(no):
                c = coefs[slot * no + k]
                if not c:
                    continue
                for p in range(n):
                    row = orth[k][p]
                    for q in range(n):
                        if row[q]:
                            m[p][q] = m[p][q] + c * row[q]
            mats.append(m)
        return tuple(mats)  # type: ignore[return-value]

    basis = [unflatten(c) for c in sols]
    solver = SpanSolver([_flatten_triple(t, n) for t in basis])
    if solver.rank != len(basis):
        raise ConstructionError(f"tri({s.name}): dependent solution basis")

    def brk(i: int, j: int) -> DenseVec:
        a, b = basis[i], basis[j]
        comm = tuple(
            [
                [
                    [x - y for x, y in zip(r1, r2)]
                    for r1, r2 in zip(mat_mul(a[s_], b[s_]), mat_mul(b[s_], a[s_]))
                ]
                for s_ in range(3)
            ]
        )
        c = solver.coords(_flatten_triple(comm, n))
        if c is None:
            raise VerificationError(f"tri({s.name}): bracket escapes the span")
        return c

    lie = lie_from_fn(
        f"tri({s.name})", [f"t{k}" for k in range(len(basis))], brk
    )
    theta_cols = []
    for t in basis:
        rot = (t[2], t[0], t[1])
        c = solver.coords(_flatten_triple(rot, n))
        if c is None:
            raise VerificationError(f"tri({s.name}): theta leaves the span")
        theta_cols.append(c)
    theta_mat = [
        [theta_cols[j][p] for j in range(len(basis))] for p in range(len(basis))
    ]
    return TrialityAlgebra(s, basis, lie, solver, theta_mat)
