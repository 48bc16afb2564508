"""Composition algebras and the 27-dimensional exceptional Jordan algebra.

Everything is a structure-constant table over Q(sqrt3, i).  The unital
algebras (R, R+R, C, split quaternions, H, octonions, split octonions)
come from Cayley-Dickson doubling or an explicit split basis; their para
twists x*y = conj(x) conj(y) and the Okubo algebras on traceless 3x3
matrices give the symmetric composition algebras that feed the Lie
constructions.  Checks are exhaustive on basis tuples, which decides the
polynomial identities completely in characteristic 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionError, IOFormatError, VerificationError
from .linalg import DenseVec, SpanSolver, mat_vec, rank_of, vadd, vscale, vsub, vzero
from .scalars import HALF, IUNIT, OMEGA, ONE, SQRT3, ZERO, Scalar, sc


@dataclass(eq=False)
class AlgebraTable:
    """A finite-dimensional algebra with a bilinear form, as exact tables.

    `sc[i][j]` is the coordinate vector of b_i b_j; `form[i][j]` is the
    polar form n(b_i, b_j) (so n(x, x) = 2 n(x)).  `unit` and `invol` are
    present only when the algebra has them; the unit need not be a basis
    element (split octonions: 1 = e1 + e2).
    """

    name: str
    labels: List[str]
    sc: List[List[DenseVec]]
    form: List[List[Scalar]]
    unit: Optional[DenseVec] = None
    invol: Optional[List[List[Scalar]]] = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vec(self, i: int) -> DenseVec:
        v = vzero(self.dim)
        v[i] = ONE
        return v

    def vec_of(self, coeffs: Dict[str, Scalar]) -> DenseVec:
        v = vzero(self.dim)
        for lab, c in coeffs.items():
            v[self.labels.index(lab)] = sc(c)
        return v

    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> DenseVec:
        n = self.dim
        out = vzero(n)
        tab = self.sc
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for p, v in enumerate(tab[i][j]):
                    if v:
                        out[p] = out[p] + c * v
        return out

    def polar(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        acc = ZERO
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.form[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    acc = acc + xi * row[j] * yj
        return acc

    def norm(self, x: Sequence[Scalar]) -> Scalar:
        return self.polar(x, x) * HALF

    def polar_with(self, x: Sequence[Scalar]) -> DenseVec:
        """The covector j -> n(x, b_j)."""
        return [self.polar(x, self.basis_vec(j)) for j in range(self.dim)]

    def conj_vec(self, x: Sequence[Scalar]) -> DenseVec:
        if self.invol is None:
            raise ConstructionError(f"{self.name} carries no involution")
        return mat_vec(self.invol, x)

    def lmul_matrix(self, x: Sequence[Scalar]) -> List[DenseVec]:
        """Matrix of y -> x y (columns indexed by basis)."""
        cols = [self.mul(x, self.basis_vec(j)) for j in range(self.dim)]
        return [[cols[j][p] for j in range(self.dim)] for p in range(self.dim)]

    def rmul_matrix(self, x: Sequence[Scalar]) -> List[DenseVec]:
        cols = [self.mul(self.basis_vec(j), x) for j in range(self.dim)]
        return [[cols[j][p] for j in range(self.dim)] for p in range(self.dim)]

    def show_vec(self, x: Sequence[Scalar]) -> str:
        parts = []
        for lab, c in zip(self.labels, x):
            if c:
                parts.append(f"({c})*{lab}" if not c.is_integer() else f"{c}*{lab}")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# unital composition algebras


def _table_R() -> AlgebraTable:
    return AlgebraTable(
        "R", ["1"], [[[ONE]]], [[sc(2)]], unit=[ONE], invol=[[ONE]]
    )


def cayley_dickson(t: AlgebraTable, alpha, letter: str) -> AlgebraTable:
    """Double a unital algebra with involution; the new unit is `letter`.

    (a, b)(c, d) = (ac + alpha conj(d) b, da + b conj(c)), with norm
    n(a, b) = n(a) - alpha n(b).
    """
    if t.unit is None or t.invol is None:
        raise ConstructionError("Cayley-Dickson needs a unit and an involution")
    al = sc(alpha)
    n = t.dim
    m = 2 * n
    labels = list(t.labels) + [
        letter if lab == "1" else lab + letter for lab in t.labels
    ]
    tab = [[vzero(m) for _ in range(m)] for _ in range(m)]

    def first(v: DenseVec) -> DenseVec:
        return list(v) + [ZERO] * n

    def second(v: DenseVec) -> DenseVec:
        return [ZERO] * n + list(v)

    e = [t.basis_vec(i) for i in range(n)]
    ebar = [t.conj_vec(x) for x in e]
    for i in range(n):
        for j in range(n):
            tab[i][j] = first(t.sc[i][j])
            tab[i][n + j] = second(t.mul(e[j], e[i]))
            tab[n + i][j] = second(t.mul(e[i], ebar[j]))
            tab[n + i][n + j] = first(vscale(al, t.mul(ebar[j], e[i])))
    form = [[ZERO] * m for _ in range(m)]
    for i in range(n):
        for j in range(n):
            form[i][j] = t.form[i][j]
            form[n + i][n + j] = -al * t.form[i][j]
    unit = first(t.unit)
    invol = [[ZERO] * m for _ in range(m)]
    for i in range(n):
        for p in range(n):
            invol[p][i] = t.invol[p][i]
        invol[n + i][n + i] = -ONE
    return AlgebraTable(f"CD({t.name},{al})", labels, tab, form, unit, invol)


def _split_octonions() -> AlgebraTable:
    """Split octonions on the basis e1, e2, u1..u3, v1..v3.

    e1, e2 are orthogonal idempotents with e1 + e2 = 1; the u_i pair with
    the v_i under the norm and multiply crosswise:
    u_i v_i = -e1, v_i u_i = -e2, u_i u_{i+1} = v_{i+2} = -u_{i+1} u_i,
    v_i v_{i+1} = u_{i+2} = -v_{i+1} v_i.
    """
    labels = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"]
    idx = {lab: k for k, lab in enumerate(labels)}
    n = 8
    tab = [[vzero(n) for _ in range(n)] for _ in range(n)]

    def put(a: str, b: str, target: str, coef: int) -> None:
        v = vzero(n)
        v[idx[target]] = sc(coef)
        tab[idx[a]][idx[b]] = v

    put("e1", "e1", "e1", 1)
    put("e2", "e2", "e2", 1)
    for i in range(3):
        u, v = f"u{i + 1}", f"v{i + 1}"
        put("e1", u, u, 1)
        put(u, "e2", u, 1)
        put("e2", v, v, 1)
        put(v, "e1", v, 1)
        put(u, v, "e1", -1)
        put(v, u, "e2", -1)
        j = (i + 1) % 3
        k = (i + 2) % 3
        put(u, f"u{j + 1}", f"v{k + 1}", 1)
        put(f"u{j + 1}", u, f"v{k + 1}", -1)
        put(v, f"v{j + 1}", f"u{k + 1}", 1)
        put(f"v{j + 1}", v, f"u{k + 1}", -1)
    form = [[ZERO] * n for _ in range(n)]
    form[idx["e1"]][idx["e2"]] = form[idx["e2"]][idx["e1"]] = ONE
    for i in range(3):
        a, b = idx[f"u{i + 1}"], idx[f"v{i + 1}"]
        form[a][b] = form[b][a] = ONE
    unit = vzero(n)
    unit[idx["e1"]] = unit[idx["e2"]] = ONE
    t = AlgebraTable("Os", labels, tab, form, unit=unit)
    # conj(x) = n(x, 1) 1 - x
    invol = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        tr = t.polar(t.basis_vec(j), unit)
        col = [tr * u for u in unit]
        col[j] = col[j] - ONE
        for p in range(n):
            invol[p][j] = col[p]
    t.invol = invol
    return t


_HURWITZ_CACHE: Dict[str, AlgebraTable] = {}


def hurwitz(name: str) -> AlgebraTable:
    """The seven unital composition algebras used here, by short name."""
    if name in _HURWITZ_CACHE:
        return _HURWITZ_CACHE[name]
    if name == "R":
        t = _table_R()
    elif name == "RR":
        t = cayley_dickson(_table_R(), 1, "u")
        t.name = "RR"
    elif name == "C":
        t = cayley_dickson(_table_R(), -1, "i")
        t.name = "C"
    elif name == "Mat2":
        t = cayley_dickson(hurwitz("C"), 1, "u")
        t.name = "Mat2"
    elif name == "H":
        t = cayley_dickson(hurwitz("C"), -1, "j")
        t.labels = ["1", "i", "j", "k"]
        t.name = "H"
    elif name == "O":
        t = cayley_dickson(hurwitz("H"), -1, "l")
        t.name = "O"
    elif name == "Os":
        t = _split_octonions()
    else:
        raise IOFormatError(f"unknown composition algebra {name!r}")
    _HURWITZ_CACHE[name] = t
    return t


# ---------------------------------------------------------------------------
# symmetric composition algebras


def para(t: AlgebraTable) -> AlgebraTable:
    """Para twist x*y = conj(x) conj(y); same norm, no unit."""
    if t.invol is None:
        raise ConstructionError("para twist needs the involution")
    n = t.dim
    e = [t.conj_vec(t.basis_vec(i)) for i in range(n)]
    tab = [[t.mul(e[i], e[j]) for j in range(n)] for i in range(n)]
    return AlgebraTable(
        "p" + t.name, list(t.labels), tab, [list(r) for r in t.form]
    )


def _m(rows) -> List[List[Scalar]]:
    return [[sc(x) for x in row] for row in rows]


def _m_mul(a, b):
    return [
        [
            sum((a[r][k] * b[k][c] for k in range(3) if a[r][k] and b[k][c]), ZERO)
            for c in range(3)
        ]
        for r in range(3)
    ]


def _m_tr(a) -> Scalar:
    return a[0][0] + a[1][1] + a[2][2]


def _m_lin(*pairs):
    out = [[ZERO] * 3 for _ in range(3)]
    for coef, mat in pairs:
        for r in range(3):
            for c in range(3):
                if mat[r][c]:
                    out[r][c] = out[r][c] + coef * mat[r][c]
    return out


def _E(r, c):
    m = [[ZERO] * 3 for _ in range(3)]
    m[r][c] = ONE
    return m


def _okubo_from_matrices(name: str, basis, labels) -> AlgebraTable:
    """Okubo product on a real span of traceless 3x3 matrices.

    x*y = w x y - w^2 y x - ((w - w^2)/3) tr(xy) I with w a primitive cube
    root of unity; the span must be closed with real coefficients.
    """
    w = OMEGA
    w2 = OMEGA * OMEGA
    third = (w - w2) / sc(3)
    ident = _m([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def star(x, y):
        xy = _m_mul(x, y)
        yx = _m_mul(y, x)
        return _m_lin((w, xy), (-w2, yx), (-third * _m_tr(xy), ident))

    def flat(mt) -> DenseVec:
        return [mt[r][c] for r in range(3) for c in range(3)]

    solver = SpanSolver([flat(b) for b in basis])
    if solver.rank != 8:
        raise ConstructionError(f"{name}: matrix basis is dependent")
    n = 8
    tab = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = solver.coords(flat(star(basis[i], basis[j])))
            if coords is None:
                raise ConstructionError(f"{name}: product escapes the span")
            for c in coords:
                if not c.is_real():
                    raise ConstructionError(f"{name}: non-real structure constant")
            row.append(coords)
        tab.append(row)
    form = [
        [-_m_tr(_m_mul(basis[i], basis[j])) for j in range(n)] for i in range(n)
    ]
    for r in form:
        for x in r:
            if not x.is_real():
                raise ConstructionError(f"{name}: non-real form entry")
    return AlgebraTable(name, labels, tab, form)


def okubo_compact() -> AlgebraTable:
    i = IUNIT
    basis = [
        _m_lin((i, _m([[1, 0, 0], [0, -1, 0], [0, 0, 0]]))),
        _m_lin((i, _m([[0, 0, 0], [0, 1, 0], [0, 0, -1]]))),
        _m_lin((ONE, _E(0, 1)), (-ONE, _E(1, 0))),
        _m_lin((ONE, _E(0, 2)), (-ONE, _E(2, 0))),
        _m_lin((ONE, _E(1, 2)), (-ONE, _E(2, 1))),
        _m_lin((i, _E(0, 1)), (i, _E(1, 0))),
        _m_lin((i, _E(0, 2)), (i, _E(2, 0))),
        _m_lin((i, _E(1, 2)), (i, _E(2, 1))),
    ]
    labels = ["ih1", "ih2", "x12", "x13", "x23", "y12", "y13", "y23"]
    return _okubo_from_matrices("Ok", basis, labels)


def okubo_split() -> AlgebraTable:
    i = IUNIT
    two_i = i * sc(2)
    basis = [
        _m_lin((two_i, _E(0, 0)), (-i, _E(1, 1)), (-i, _E(2, 2))),
        _m_lin((ONE, _E(1, 1)), (-ONE, _E(2, 2))),
        _m_lin((ONE, _E(1, 0)), (-ONE, _E(0, 2))),
        _m_lin((i, _E(1, 0)), (i, _E(0, 2))),
        _m_lin((ONE, _E(2, 0)), (-ONE, _E(0, 1))),
        _m_lin((i, _E(2, 0)), (i, _E(0, 1))),
        _m_lin((i, _E(2, 1))),
        _m_lin((i, _E(1, 2))),
    ]
    labels = ["b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"]
    return _okubo_from_matrices("Oks", basis, labels)


_SYMMETRIC: Dict[str, str] = {
    "pR": "R",
    "pRR": "RR",
    "pC": "C",
    "pMat2": "Mat2",
    "pH": "H",
    "pO": "O",
    "pOs": "Os",
}


def symmetric_composition(name: str) -> AlgebraTable:
    """Symmetric composition algebras by name (R itself counts: conj = id)."""
    if name == "R":
        return hurwitz("R")
    if name in _SYMMETRIC:
        return para(hurwitz(_SYMMETRIC[name]))
    if name == "Ok":
        return okubo_compact()
    if name == "Oks":
        return okubo_split()
    raise IOFormatError(f"unknown symmetric composition algebra {name!r}")


# ---------------------------------------------------------------------------
# identity checks


def check_composition(t: AlgebraTable) -> Dict[str, int]:
    """Unit axioms plus the fully polarized n(xy) = n(x) n(y)."""
    n = t.dim
    checked = 0
    if t.unit is not None:
        for j in range(n):
            b = t.basis_vec(j)
            if t.mul(t.unit, b) != b or t.mul(b, t.unit) != b:
                raise VerificationError(f"{t.name}: unit fails on {t.labels[j]}")
            checked += 1
        if t.norm(t.unit) != ONE:
            raise VerificationError(f"{t.name}: n(1) != 1")
    prods = t.sc
    F = t.form
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = t.polar(prods[i][j], prods[k][l]) + t.polar(
                        prods[i][l], prods[k][j]
                    )
                    if lhs != F[i][k] * F[j][l]:
                        raise VerificationError(
                            f"{t.name}: composition law fails at "
                            f"({t.labels[i]},{t.labels[j]},{t.labels[k]},{t.labels[l]})"
                        )
                    checked += 1
    return {"tuples": checked}


def check_symmetric(t: AlgebraTable) -> Dict[str, int]:
    """Composition law plus associativity of the form: n(x*y, z) = n(x, y*z)."""
    n = t.dim
    prods = t.sc
    counts = check_composition(t)
    assoc = 0
    for i in range(n):
        for j in range(n):
            pij = prods[i][j]
            bi = t.basis_vec(i)
            for k in range(n):
                if t.polar(pij, t.basis_vec(k)) != t.polar(bi, prods[j][k]):
                    raise VerificationError(
                        f"{t.name}: form associativity fails at "
                        f"({t.labels[i]},{t.labels[j]},{t.labels[k]})"
                    )
                assoc += 1
    counts["assoc_triples"] = assoc
    return counts


# ---------------------------------------------------------------------------
# the Albert algebra of a symmetric composition algebra


@dataclass(eq=False)
class AlbertAlgebra:
    """J = F^3 + three copies of a symmetric composition algebra S.

    Basis order: E0, E1, E2, then iota_0(S), iota_1(S), iota_2(S).  The
    eps signs twist the cross products; (1,1,1) over the para-octonions
    is the usual hermitian 3x3 model, (1,-1,1) its indefinite cousin.
    """

    table: AlgebraTable
    comp: AlgebraTable
    eps: Tuple[int, int, int]

    @property
    def dim(self) -> int:
        return self.table.dim

    def E_index(self, a: int) -> int:
        return a

    def iota_index(self, i: int, b: int) -> int:
        return 3 + i * self.comp.dim + b

    def iota_vec(self, i: int, x: Sequence[Scalar]) -> DenseVec:
        v = vzero(self.dim)
        off = 3 + i * self.comp.dim
        for b, c in enumerate(x):
            v[off + b] = c
        return v

    def trace(self, v: Sequence[Scalar]) -> Scalar:
        return v[0] + v[1] + v[2]

    def zero_trace_basis(self) -> List[DenseVec]:
        out = []
        e = [self.table.basis_vec(a) for a in range(3)]
        out.append(vsub(e[0], e[1]))
        out.append(vsub(e[2], e[0]))
        for k in range(3, self.dim):
            out.append(self.table.basis_vec(k))
        return out


def albert(s: AlgebraTable, eps: Tuple[int, int, int]) -> AlbertAlgebra:
    if any(e * e != 1 for e in eps):
        raise ConstructionError("eps entries must be +-1")
    d = s.dim
    n = 3 + 3 * d
    tab = [[vzero(n) for _ in range(n)] for _ in range(n)]
    eps_s = [sc(e) for e in eps]

    def iota(i: int, b: int) -> int:
        return 3 + i * d + b

    for a in range(3):
        v = vzero(n)
        v[a] = ONE
        tab[a][a] = v
    for a in range(3):
        for i in range(3):
            if a == i:
                continue
            for b in range(d):
                v = vzero(n)
                v[iota(i, b)] = HALF
                tab[a][iota(i, b)] = v
                tab[iota(i, b)][a] = list(v)
    for i in range(3):
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        for b in range(d):
            for c in range(d):
                # cross products land in the third slot
                v = vzero(n)
                prod = s.sc[b][c]
                for p in range(d):
                    if prod[p]:
                        v[iota(i2, p)] = eps_s[i2] * prod[p]
                tab[iota(i, b)][iota(i1, c)] = v
                tab[iota(i1, c)][iota(i, b)] = list(v)
                # same slot: lands on the complementary idempotents
                w = vzero(n)
                coef = sc(2) * eps_s[i1] * eps_s[i2] * s.form[b][c]
                if coef:
                    w[i1] = coef
                    w[i2] = coef
                tab[iota(i, b)][iota(i, c)] = w
    form = [[ZERO] * n for _ in range(n)]
    unit = vzero(n)
    unit[0] = unit[1] = unit[2] = ONE
    tbl = AlgebraTable(f"A({s.name},{''.join('+' if e > 0 else '-' for e in eps)})",
                       [f"E{a}" for a in range(3)]
                       + [f"i{i}({s.labels[b]})" for i in range(3) for b in range(d)],
                       tab, form, unit=unit)
    for i in range(n):
        for j in range(n):
            form[i][j] = tbl.sc[i][j][0] + tbl.sc[i][j][1] + tbl.sc[i][j][2]
    return AlbertAlgebra(tbl, s, tuple(eps))


def check_jordan_sampled(alg: AlbertAlgebra, trials: int = 40, seed: int = 20260814):
    """Commutativity exactly on basis pairs; Jordan identity on seeded
    random integer vectors ((x.x).(y.x) = ((x.x).y).x)."""
    t = alg.table
    n = t.dim
    for i in range(n):
        for j in range(i, n):
            if t.sc[i][j] != t.sc[j][i]:
                raise VerificationError(f"{t.name}: not commutative at ({i},{j})")
    rng = random.Random(seed)
    for _ in range(trials):
        x = [sc(rng.randint(-2, 2)) for _ in range(n)]
        y = [sc(rng.randint(-2, 2)) for _ in range(n)]
        xx = t.mul(x, x)
        lhs = t.mul(xx, t.mul(y, x))
        rhs = t.mul(t.mul(xx, y), x)
        if lhs != rhs:
            raise VerificationError(f"{t.name}: Jordan identity fails", witness=(x, y))
    return {"pairs": n * (n + 1) // 2, "jordan_samples": trials, "seed": seed}


# ---------------------------------------------------------------------------
# hermitian 3x3 octonion matrices, for the explicit isomorphism


def h3_octonions() -> Tuple[AlgebraTable, AlgebraTable]:
    """The Jordan algebra of hermitian 3x3 octonion matrices.

    Basis: F11, F22, F33, then for each off-diagonal pair (2,3), (1,3),
    (1,2) the eight elements x E_jk + conj(x) E_kj, x running over the
    octonion basis.  Returns (table, octonions).
    """
    o = hurwitz("O")
    d = o.dim
    n = 3 + 3 * d
    pairs = [(1, 2), (0, 2), (0, 1)]  # (2,3), (1,3), (1,2) zero-indexed

    def basis_matrix(k: int):
        m = [[vzero(d) for _ in range(3)] for _ in range(3)]
        if k < 3:
            m[k][k] = list(o.unit)
            return m
        slot, b = divmod(k - 3, d)
        r, c = pairs[slot]
        e = o.basis_vec(b)
        m[r][c] = e
        m[c][r] = o.conj_vec(e)
        return m

    def jordan(a, b):
        out = [[vzero(d) for _ in range(3)] for _ in range(3)]
        for r in range(3):
            for c in range(3):
                acc = vzero(d)
                for k in range(3):
                    acc = vadd(acc, o.mul(a[r][k], b[k][c]))
                    acc = vadd(acc, o.mul(b[r][k], a[k][c]))
                out[r][c] = vscale(HALF, acc)
        return out

    def coords(m) -> DenseVec:
        v = vzero(n)
        for a in range(3):
            entry = m[a][a]
            if any(entry[1:]):
                raise ConstructionError("H3(O): non-real diagonal entry")
            v[a] = entry[0]
        for slot, (r, c) in enumerate(pairs):
            upper = m[r][c]
            if m[c][r] != o.conj_vec(upper):
                raise ConstructionError("H3(O): result is not hermitian")
            for b in range(d):
                v[3 + slot * d + b] = upper[b]
        return v

    mats = [basis_matrix(k) for k in range(n)]
    tab = [[coords(jordan(mats[i], mats[j])) for j in range(n)] for i in range(n)]
    labels = ["F11", "F22", "F33"] + [
        f"s{slot}({o.labels[b]})" for slot in range(3) for b in range(d)
    ]
    form = [[ZERO] * n for _ in range(n)]
    unit = vzero(n)
    unit[0] = unit[1] = unit[2] = ONE
    t = AlgebraTable("H3(O)", labels, tab, form, unit=unit)
    for i in range(n):
        for j in range(n):
            form[i][j] = tab[i][j][0] + tab[i][j][1] + tab[i][j][2]
    return t, o


def albert_matrix_isomorphism() -> Dict[str, int]:
    """Explicit isomorphism A(pO, +++) -> H3(O), checked on all pairs.

    E_a -> F_aa and iota_i(x) -> 2 * (x placed in the i-th off-diagonal
    slot), with x conjugated in slots 0 and 2.
    """
    alg = albert(symmetric_composition("pO"), (1, 1, 1))
    h3, o = h3_octonions()
    n = alg.dim
    phi = [[ZERO] * n for _ in range(n)]  # columns = images
    for a in range(3):
        phi[a][a] = ONE
    for i in range(3):
        for b in range(o.dim):
            img = o.basis_vec(b) if i == 1 else o.conj_vec(o.basis_vec(b))
            col = alg.iota_index(i, b)
            for p, cval in enumerate(img):
                if cval:
                    phi[3 + i * o.dim + p][col] = cval * sc(2)
    if rank_of(phi) != n:
        raise VerificationError("Albert matrix map is not bijective")
    cols = [[phi[p][j] for p in range(n)] for j in range(n)]
    checked = 0
    for i in range(n):
        for j in range(i, n):
            lhs = mat_vec(phi, alg.table.sc[i][j])
            rhs = h3.mul(cols[i], cols[j])
            if lhs != rhs:
                raise VerificationError(
                    f"Albert matrix map fails at ({alg.table.labels[i]}, "
                    f"{alg.table.labels[j]})"
                )
            checked += 1
    return {"pairs": checked}
