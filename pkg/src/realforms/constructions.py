"""The twisted magic square and the derivation model of its (8,1) row.

g_eps(S, S') = tri(S) + tri(S') + iota_0(S x S') + iota_1 + iota_2, with
the cross brackets twisted by signs eps = (e0, e1, e2).  Block order is
tri(S), tri(S'), iota_0, iota_1, iota_2; inside an iota block the S index
is major.  For S' = R the square collapses to tri(S) + S^3 (dimension 52
when dim S = 8), and that algebra acts on the 27-dimensional Jordan
algebra by derivations; extending by the traceless part of the Jordan
algebra yields the 78-dimensional model used for the rank-2 real form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebras import AlbertAlgebra, AlgebraTable, albert, symmetric_composition
from .errors import ConstructionError, VerificationError
from .lie import LieAlgebra, lie_from_fn
from .linalg import (
    DenseVec,
    SpanSolver,
    mat_mul,
    mat_vec,
    to_sparse,
    vadd,
    vscale,
    vzero,
)
from .scalars import HALF, ONE, ZERO, Rat, Scalar, sc
from .triality import Matrix, TrialityAlgebra, triality


@dataclass(eq=False)
class MagicSquareAlgebra:
    lie: LieAlgebra
    s: AlgebraTable
    sp: AlgebraTable
    tri_s: TrialityAlgebra
    tri_sp: TrialityAlgebra
    eps: Tuple[int, int, int]

    @property
    def dim(self) -> int:
        return self.lie.dim

    @property
    def iota_offset(self) -> int:
        return self.tri_s.dim + self.tri_sp.dim

    def iota_index(self, blk: int, a: int, b: int) -> int:
        return self.iota_offset + blk * self.s.dim * self.sp.dim + a * self.sp.dim + b

    def tri_s_vec(self, coords: Sequence[Scalar]) -> DenseVec:
        v = vzero(self.dim)
        for k, c in enumerate(coords):
            v[k] = c
        return v

    def tri_sp_vec(self, coords: Sequence[Scalar]) -> DenseVec:
        v = vzero(self.dim)
        off = self.tri_s.dim
        for k, c in enumerate(coords):
            v[off + k] = c
        return v

    def iota_vec(self, blk: int, x: Sequence[Scalar], xp: Sequence[Scalar]) -> DenseVec:
        v = vzero(self.dim)
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, xb in enumerate(xp):
                if xb:
                    v[self.iota_index(blk, a, b)] = xa * xb
        return v

    def t_s(self, a: int, b: int) -> DenseVec:
        """t_{e_a, e_b} of the first factor, embedded."""
        return self.tri_s_vec(
            self.tri_s.t_element(self.s.basis_vec(a), self.s.basis_vec(b))
        )


def magic_square(
    s: AlgebraTable,
    sp: AlgebraTable,
    eps: Tuple[int, int, int],
    tri_s: Optional[TrialityAlgebra] = None,
    tri_sp: Optional[TrialityAlgebra] = None,
) -> MagicSquareAlgebra:
    if any(e * e != 1 for e in eps):
        raise ConstructionError("eps entries must be +-1")
    tri_s = tri_s if tri_s is not None else triality(s)
    tri_sp = tri_sp if tri_sp is not None else triality(sp)
    ns, nsp = s.dim, sp.dim
    nts, ntsp = tri_s.dim, tri_sp.dim
    off_iota = nts + ntsp
    dim = off_iota + 3 * ns * nsp
    eps_s = [sc(e) for e in eps]

    def theta_t_table(tri: TrialityAlgebra) -> List[List[List[DenseVec]]]:
        """pow[k][a][b] = theta^k(t_{e_a, e_b})."""
        n = tri.comp.dim
        base: List[List[DenseVec]] = [[[] for _ in range(n)] for _ in range(n)]
        for a in range(n):
            for b in range(n):
                if a == b:
                    base[a][b] = vzero(tri.dim)
                elif b > a:
                    base[a][b] = tri.t_element(
                        tri.comp.basis_vec(a), tri.comp.basis_vec(b)
                    )
                else:
                    base[a][b] = [-x for x in base[b][a]]
        out = [base]
        for _ in range(2):
            prev = out[-1]
            out.append([[mat_vec(tri.theta_mat, v) for v in row] for row in prev])
        return out

    ts_pow = theta_t_table(tri_s)
    tsp_pow = theta_t_table(tri_sp)

    def decode(idx: int):
        if idx < nts:
            return ("ts", idx)
        if idx < off_iota:
            return ("tsp", idx - nts)
        r = idx - off_iota
        blk, r = divmod(r, ns * nsp)
        a, b = divmod(r, nsp)
        return ("iota", blk, a, b)

    def iota_index(blk: int, a: int, b: int) -> int:
        return off_iota + blk * ns * nsp + a * nsp + b

    def place_tensor(out: DenseVec, blk: int, xs: DenseVec, xps: DenseVec, coef: Scalar):
        for p, u in enumerate(xs):
            if not u:
                continue
            cu = coef * u
            for q, w in enumerate(xps):
                if w:
                    k = iota_index(blk, p, q)
                    out[k] = out[k] + cu * w

    def fn(i: int, j: int) -> DenseVec:
        bi, bj = decode(i), decode(j)
        out = vzero(dim)
        if bi[0] == "ts" and bj[0] == "ts":
            for p, v in tri_s.lie.bracket_basis(bi[1], bj[1]).items():
                out[p] = v
            return out
        if bi[0] == "tsp" and bj[0] == "tsp":
            for p, v in tri_sp.lie.bracket_basis(bi[1], bj[1]).items():
                out[nts + p] = v
            return out
        if bi[0] == "ts" and bj[0] == "tsp":
            return out
        if bi[0] == "ts":
            _, blk, a, b = bj
            d = tri_s.basis[bi[1]][blk]
            for p in range(ns):
                if d[p][a]:
                    out[iota_index(blk, p, b)] = d[p][a]
            return out
        if bi[0] == "tsp":
            _, blk, a, b = bj
            d = tri_sp.basis[bi[1]][blk]
            for p in range(nsp):
                if d[p][b]:
                    out[iota_index(blk, a, p)] = d[p][b]
            return out
        # both iota
        _, blki, a, b = bi
        _, blkj, c, d = bj
        if blki == blkj:
            i1, i2 = (blki + 1) % 3, (blki + 2) % 3
            coef = eps_s[i1] * eps_s[i2]
            qp = sp.form[b][d]
            if qp:
                cc = coef * qp
                for p, v in enumerate(ts_pow[blki][a][c]):
                    if v:
                        out[p] = out[p] + cc * v
            q = s.form[a][c]
            if q:
                cc = coef * q
                for p, v in enumerate(tsp_pow[blki][b][d]):
                    if v:
                        out[nts + p] = out[nts + p] + cc * v
            return out
        if blkj == (blki + 1) % 3:
            i2 = (blki + 2) % 3
            place_tensor(out, i2, s.sc[a][c], sp.sc[b][d], eps_s[i2])
            return out
        # stored pair (blk, blk+2): reverse the rule for (blk+2, blk)
        i1 = (blki + 1) % 3
        place_tensor(out, i1, s.sc[c][a], sp.sc[d][b], -eps_s[i1])
        return out

    labels = [f"dS{k}" for k in range(nts)] + [f"dS'{k}" for k in range(ntsp)]
    for blk in range(3):
        for a in range(ns):
            for b in range(nsp):
                if nsp == 1:
                    labels.append(f"i{blk}({s.labels[a]})")
                else:
                    labels.append(f"i{blk}({s.labels[a]}|{sp.labels[b]})")
    name = (
        f"g[{''.join('+' if e > 0 else '-' for e in eps)}]"
        f"({s.name},{sp.name})"
    )
    lie = lie_from_fn(name, labels, fn)
    return MagicSquareAlgebra(lie, s, sp, tri_s, tri_sp, tuple(eps))


# ---------------------------------------------------------------------------
# the 52-dimensional algebra as Jordan derivations, and its extension


@dataclass(eq=False)
class DerivationModel:
    """g = rho(g(S, R)) + A0 on the Jordan algebra A = A(S, +++).

    Basis: the 52 derivation images rho(b_k) in the magic-square order,
    then the traceless basis E0 - E1, E2 - E0, iota_i(e_b) of A.
    """

    lie: LieAlgebra
    alg: AlbertAlgebra
    square: MagicSquareAlgebra
    rho: List[Matrix]

    @property
    def der_dim(self) -> int:
        return len(self.rho)

    def der_vec(self, coords: Sequence[Scalar]) -> DenseVec:
        v = vzero(self.lie.dim)
        for k, c in enumerate(coords):
            v[k] = c
        return v

    def albert_zero_vec(self, u: Sequence[Scalar]) -> DenseVec:
        """Embed a traceless Jordan element (27 coordinates)."""
        c0, c1, c2 = u[0], u[1], u[2]
        if c0 + c1 + c2:
            raise ConstructionError("element has nonzero trace")
        v = vzero(self.lie.dim)
        off = self.der_dim
        v[off] = -c1  # coefficient of E0 - E1
        v[off + 1] = c2  # coefficient of E2 - E0
        for k in range(3, len(u)):
            v[off + 2 + (k - 3)] = u[k]
        return v


def rho_images(square: MagicSquareAlgebra, alg: AlbertAlgebra) -> List[Matrix]:
    """The action of g(S, R) on the Jordan algebra, basis by basis."""
    s = square.s
    if square.sp.dim != 1:
        raise ConstructionError("derivation model needs the S' = R square")
    n = alg.dim
    tab = alg.table
    out: List[Matrix] = []
    for k in range(square.tri_s.dim):
        d = square.tri_s.basis[k]
        m = [[ZERO] * n for _ in range(n)]
        for i in range(3):
            di = d[i]
            off = 3 + i * s.dim
            for p in range(s.dim):
                for q in range(s.dim):
                    if di[p][q]:
                        m[off + p][off + q] = di[p][q]
        out.append(m)
    lE = [tab.lmul_matrix(tab.basis_vec(a)) for a in range(3)]
    for i in range(3):
        for a in range(s.dim):
            v = alg.iota_vec(i, s.basis_vec(a))
            lv = tab.lmul_matrix(v)
            w = lE[(i + 1) % 3]
            comm = mat_mul(lv, w)
            back = mat_mul(w, lv)
            m = [
                [sc(2) * (comm[p][q] - back[p][q]) for q in range(n)]
                for p in range(n)
            ]
            out.append(m)
    return out


def check_rho_homomorphism(square: MagicSquareAlgebra, rho: List[Matrix]) -> Dict[str, int]:
    """rho([x, y]) = [rho x, rho y] on all basis pairs, and rho injective."""
    nb = len(rho)
    n = len(rho[0])
    denoms = set()
    for m in rho:
        for row in m:
            for x in row:
                if not x.is_rational():
                    raise ConstructionError("derivation images must be rational here")
                denoms.add(int(x.a.denominator))
    for v in square.lie.brk.values():
        for x in v.values():
            denoms.add(int(x.a.denominator))
    scale = math.lcm(*denoms)
    R = np.zeros((nb, n, n), dtype=np.int64)
    for k, m in enumerate(rho):
        for p in range(n):
            for q in range(n):
                if m[p][q]:
                    R[k, p, q] = int(m[p][q].a * scale)
    N = np.zeros((nb, nb, nb), dtype=np.int64)
    for (i, j), v in square.lie.brk.items():
        for m_, x in v.items():
            e = int(x.a * scale)
            N[i][j][m_] = e
            N[j][i][m_] = -e
    from .linalg import rank_of

    flat = [[m[p][q] for p in range(n) for q in range(n)] for m in rho]
    if rank_of(flat) != nb:
        raise VerificationError("derivation images are dependent")
    for i in range(nb):
        # R = scale * rho, so [R_i, R_j] = sum_m (scale c^m) R_m exactly
        lhs = np.matmul(R[i], R) - np.matmul(R, R[i])
        rhs = np.tensordot(N[i], R, axes=(1, 0))
        if not np.array_equal(lhs, rhs):
            j = int(np.nonzero((lhs != rhs).any(axis=(1, 2)))[0][0])
            raise VerificationError(
                f"action map fails to be a homomorphism at pair ({i}, {j})"
            )
    return {"pairs": nb * (nb - 1) // 2}


def derivation_model(s: Optional[AlgebraTable] = None) -> DerivationModel:
    """The 78-dimensional extension Der(A) + A0 for A = A(S, +++)."""
    if s is None:
        s = symmetric_composition("pO")
    square = magic_square(s, symmetric_composition("R"), (1, 1, 1))
    alg = albert(s, (1, 1, 1))
    rho = rho_images(square, alg)
    check_rho_homomorphism(square, rho)
    nd = len(rho)
    n27 = alg.dim
    zb = alg.zero_trace_basis()
    na = len(zb)
    dim = nd + na

    solver = SpanSolver(
        [[m[p][q] for p in range(n27) for q in range(n27)] for m in rho]
    )
    if solver.rank != nd:
        raise VerificationError("derivation images are dependent")

    def zero_trace_coords(u: DenseVec) -> DenseVec:
        c0, c1, c2 = u[0], u[1], u[2]
        if c0 + c1 + c2:
            raise VerificationError("bracket left the traceless subspace")
        return [-c1, c2] + list(u[3:])

    lmuls = [alg.table.lmul_matrix(z) for z in zb]

    def fn(i: int, j: int) -> DenseVec:
        out = vzero(dim)
        if j < nd:
            for p, v in square.lie.bracket_basis(i, j).items():
                out[p] = v
            return out
        if i < nd:
            img = mat_vec(rho[i], zb[j - nd])
            for p, v in enumerate(zero_trace_coords(img)):
                out[nd + p] = v
            return out
        a, b = lmuls[i - nd], lmuls[j - nd]
        comm = mat_mul(a, b)
        back = mat_mul(b, a)
        flatc = [
            comm[p][q] - back[p][q] for p in range(n27) for q in range(n27)
        ]
        coords = solver.coords(flatc)
        if coords is None:
            raise VerificationError("commutator of multiplications is not in the image")
        for p, v in enumerate(coords):
            out[p] = v
        return out

    labels = list(square.lie.labels) + ["E0-E1", "E2-E0"] + [
        alg.table.labels[k] for k in range(3, n27)
    ]
    lie = lie_from_fn(f"Der({alg.table.name})+A0", labels, fn)
    return DerivationModel(lie, alg, square, rho)


@dataclass(eq=False)
class SignedPermutation:
    """A map sending basis vector k to sign[k] * basis vector perm[k]."""

    perm: List[int]
    sign: List[int]

    def apply(self, v: Sequence[Scalar]) -> DenseVec:
        out = vzero(len(self.perm))
        for k, x in enumerate(v):
            if x:
                out[self.perm[k]] = x if self.sign[k] > 0 else -x
        return out

    def apply_sparse(self, v: Dict[int, Scalar]) -> Dict[int, Scalar]:
        return {
            self.perm[k]: (x if self.sign[k] > 0 else -x) for k, x in v.items()
        }


def psi_automorphism(square: MagicSquareAlgebra, i: int) -> SignedPermutation:
    """The order-4 automorphism fixing tri + tri', negating iota_i, and
    rotating the 2-dimensional second tensor slot of the other blocks
    (e_0 -> -e_1, e_1 -> e_0).  Requires dim S' = 2."""
    if square.sp.dim != 2:
        raise ConstructionError("second factor must be 2-dimensional")
    if i not in (0, 1, 2):
        raise ConstructionError("block index must be 0, 1 or 2")
    n = square.dim
    perm = list(range(n))
    sign = [1] * n
    ns = square.s.dim
    for blk in range(3):
        for a in range(ns):
            for b in range(2):
                k = square.iota_index(blk, a, b)
                if blk == i:
                    sign[k] = -1
                else:
                    perm[k] = square.iota_index(blk, a, 1 - b)
                    sign[k] = -1 if b == 0 else 1
    psi = SignedPermutation(perm, sign)
    L = square.lie
    for p in range(n):
        for q in range(p + 1, n):
            lhs = psi.apply_sparse(L.bracket_basis(p, q))
            rhs_raw = L.bracket_basis(perm[p], perm[q])
            s = sign[p] * sign[q]
            rhs = {k: (v if s > 0 else -v) for k, v in rhs_raw.items()}
            if lhs != rhs:
                raise VerificationError(
                    f"psi_{i} fails multiplicativity on basis pair ({p}, {q})"
                )
    return psi
