"""Exact root space decompositions and root system combinatorics.

Commuting ad-semisimple elements h_1..h_r are diagonalized sequentially:
each current invariant subspace is split into eigenspaces of the next
operator.  Eigenvalues are found exactly: the minimal polynomial of the
restricted matrix comes from Krylov sequences, and its roots are located
by scanning the lattice (p + q sqrt3 + (r + s sqrt3) i)/den inside the
Cauchy bound, quarter denominators first.  Completeness is certified by
dimension count, never assumed.

Root systems are then classified intrinsically through root strings;
coordinate geometry is never trusted (the restriction of the invariant
form to a subsystem need not be the abstract one).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionError, VerificationError
from .lie import LieAlgebra
from .linalg import DenseVec, Echelon, SpanSolver, nullspace, to_sparse, vadd, vscale, vzero
from .scalars import ONE, ZERO, Rat, Scalar

Covector = Tuple[Scalar, ...]
Poly = List[Scalar]  # coefficients, low degree first


# ---------------------------------------------------------------------------
# polynomial helpers (monic arithmetic over the scalar field)


def poly_normalize(p: Poly) -> Poly:
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return poly_normalize(out)


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = b[-1].inverse()
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and poly_normalize(a):
        if len(a) < len(b):
            break
        c = a[-1] * inv
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = a[k + i] - c * y
        poly_normalize(a)
    return poly_normalize(q), a


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = list(a), list(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        inv = a[-1].inverse()
        a = [x * inv for x in a]
    return a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a:
        return list(b)
    if not b:
        return list(a)
    g = poly_gcd(a, b)
    q, r = poly_divmod(poly_mul(a, b), g)
    assert not r
    if q:
        inv = q[-1].inverse()
        q = [x * inv for x in q]
    return q


def poly_eval(p: Poly, x: Scalar) -> Scalar:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return [Scalar(k) * p[k] for k in range(1, len(p))]


def poly_squarefree(p: Poly) -> Poly:
    """Monic squarefree part p / gcd(p, p')."""
    if len(p) <= 2:
        return list(p)
    g = poly_gcd(p, poly_derivative(p))
    if len(g) <= 1:
        return list(p)
    q, r = poly_divmod(p, g)
    assert not r
    return poly_normalize(q)


# ---------------------------------------------------------------------------
# exact eigenvalues of a matrix over Q(sqrt3, i)


def minimal_polynomial(m: List[DenseVec]) -> Poly:
    n = len(m)
    smat = [to_sparse(row) for row in m]

    def apply(v: DenseVec) -> DenseVec:
        out = vzero(n)
        for p, row in enumerate(smat):
            acc = ZERO
            for q, c in row.items():
                if v[q]:
                    acc = acc + c * v[q]
            out[p] = acc
        return out

    total = Echelon()
    minpoly: Poly = [ONE]
    for start in range(n):
        e = vzero(n)
        e[start] = ONE
        if total.contains(to_sparse(e)):
            continue
        ech = Echelon(track=True)
        seq = [e]
        ech.add(to_sparse(e))
        total.add(to_sparse(e))
        while True:
            nxt = apply(seq[-1])
            w, combo = ech.residual(to_sparse(nxt))
            if not w:
                # monic annihilator: x^k + sum combo[j] x^j
                ann = [ZERO] * (len(seq) + 1)
                ann[len(seq)] = ONE
                for j, c in combo.items():  # type: ignore[union-attr]
                    ann[j] = c
                minpoly = poly_lcm(minpoly, poly_normalize(ann))
                break
            seq.append(nxt)
            ech.add(to_sparse(nxt))
            total.add(to_sparse(nxt))
        if total.rank == n:
            break
    return minpoly


def _float_abs(x: Scalar) -> float:
    return abs(float(x.a)) + abs(float(x.b)) * 1.7330808 + abs(float(x.c)) + abs(
        float(x.d)
    ) * 1.7330808


def _candidate_values(bound: float, den: int, with_sqrt3: bool):
    top = int(bound * den) + 1
    if not with_sqrt3:
        for p in range(-top, top + 1):
            for r in range(-top, top + 1):
                yield Scalar(Rat(p, den), 0, Rat(r, den), 0)
        return
    top3 = int(bound * den / 1.73) + 1
    for p in range(-top, top + 1):
        for q in range(-top3, top3 + 1):
            for r in range(-top, top + 1):
                for s in range(-top3, top3 + 1):
                    yield Scalar(Rat(p, den), Rat(q, den), Rat(r, den), Rat(s, den))


_STAGES = [(4, False), (8, False), (12, False), (4, True), (8, True)]


def exact_eigenvalues(m: List[DenseVec], context: str = "") -> List[Scalar]:
    """All eigenvalues in the field, certified complete by kernel dimensions."""
    poly = poly_squarefree(minimal_polynomial(m))
    bound = 1.0 + max(_float_abs(c) for c in poly)
    found: List[Scalar] = []
    target = len(poly) - 1  # number of distinct roots once split over the field
    for den, with_sqrt3 in _STAGES:
        for lam in _candidate_values(bound, den, with_sqrt3):
            if any(lam == f for f in found):
                continue
            if not poly_eval(poly, lam):
                found.append(lam)
                if len(found) == target:
                    break
        if len(found) == target:
            break
    if len(found) < target:
        raise VerificationError(
            f"eigenvalues escape the search lattice {context or ''}: "
            f"found {len(found)} of {target}"
        )
    found.sort(key=lambda s: s.key())
    return found


def eigen_split(
    m: List[DenseVec], context: str = ""
) -> List[Tuple[Scalar, List[DenseVec]]]:
    """(eigenvalue, kernel basis) pairs; dimensions must sum to dim."""
    n = len(m)
    if n == 0:
        return []
    out = []
    covered = 0
    for lam in exact_eigenvalues(m, context):
        shifted = [
            [m[p][q] - lam if p == q else m[p][q] for q in range(n)] for p in range(n)
        ]
        ker = nullspace([to_sparse(r) for r in shifted], n)
        if not ker:
            raise VerificationError(f"spurious eigenvalue {lam} {context}")
        out.append((lam, ker))
        covered += len(ker)
    if covered != n:
        raise VerificationError(
            f"operator is not semisimple over the field {context}: "
            f"eigenspaces cover {covered} of {n}"
        )
    return out


# ---------------------------------------------------------------------------
# simultaneous decomposition


@dataclass(eq=False)
class RootSpace:
    covector: Covector
    basis: List[DenseVec]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(eq=False)
class RootDatum:
    lie: LieAlgebra
    hs: List[DenseVec]
    spaces: List[RootSpace]  # nonzero covectors, sorted
    zero: RootSpace

    def multiplicities(self) -> Dict[Covector, int]:
        return {s.covector: s.dim for s in self.spaces}

    def root_set(self) -> set:
        return {s.covector for s in self.spaces}

    def space_of(self, cov: Covector) -> RootSpace:
        for s in self.spaces:
            if s.covector == cov:
                return s
        raise KeyError(f"no root space for {cov}")

    def total_dim(self) -> int:
        return self.zero.dim + sum(s.dim for s in self.spaces)


def _restricted_matrix(
    L: LieAlgebra, h: DenseVec, basis: List[DenseVec], context: str
) -> List[DenseVec]:
    solver = SpanSolver(basis)
    if solver.rank != len(basis):
        raise ConstructionError(f"dependent subspace basis {context}")
    cols = []
    for b in basis:
        c = solver.coords(L.bracket(h, b))
        if c is None:
            raise VerificationError(f"subspace is not ad-invariant {context}")
        cols.append(c)
    m = len(basis)
    return [[cols[j][p] for j in range(m)] for p in range(m)]


def root_decomposition(
    L: LieAlgebra,
    hs: List[DenseVec],
    subspace: Optional[List[DenseVec]] = None,
    name: str = "",
) -> RootDatum:
    if subspace is None:
        subspace = [L.basis_vec(k) for k in range(L.dim)]
    layers: List[Tuple[List[Scalar], List[DenseVec]]] = [([], subspace)]
    for hi, h in enumerate(hs):
        nxt: List[Tuple[List[Scalar], List[DenseVec]]] = []
        for prefix, basis in layers:
            ctx = f"(h{hi + 1} of {name or L.name})"
            m = _restricted_matrix(L, h, basis, ctx)
            for lam, ker in eigen_split(m, ctx):
                vecs = []
                for coords in ker:
                    v = vzero(L.dim)
                    for j, c in enumerate(coords):
                        if c:
                            v = vadd(v, vscale(c, basis[j]))
                    vecs.append(v)
                nxt.append((prefix + [lam], vecs))
        layers = nxt
    spaces = []
    zero = None
    for prefix, basis in layers:
        cov = tuple(prefix)
        if any(prefix):
            spaces.append(RootSpace(cov, basis))
        else:
            zero = RootSpace(cov, basis)
    if zero is None:
        zero = RootSpace(tuple([ZERO] * len(hs)), [])
    spaces.sort(key=lambda s: tuple(x.key() for x in s.covector))
    datum = RootDatum(L, hs, spaces, zero)
    if datum.total_dim() != len(subspace):
        raise VerificationError("decomposition lost dimensions")
    return datum


# ---------------------------------------------------------------------------
# covector arithmetic


def cov_add(a: Covector, b: Covector) -> Covector:
    return tuple(x + y for x, y in zip(a, b))


def cov_sub(a: Covector, b: Covector) -> Covector:
    return tuple(x - y for x, y in zip(a, b))


def cov_neg(a: Covector) -> Covector:
    return tuple(-x for x in a)


def cov_scale(c: Scalar, a: Covector) -> Covector:
    return tuple(c * x for x in a)


def cov_is_zero(a: Covector) -> bool:
    return not any(a)


def cov_key(a: Covector):
    return tuple(x.key() for x in a)


# ---------------------------------------------------------------------------
# root strings, Cartan matrices, classification


def cartan_integer(beta: Covector, alpha: Covector, roots: set) -> int:
    """<beta, alpha^vee> = p - q from the alpha-string through beta."""
    q = 0
    cur = cov_add(beta, alpha)
    while cur in roots:
        q += 1
        cur = cov_add(cur, alpha)
    p = 0
    cur = cov_sub(beta, alpha)
    while cur in roots:
        p += 1
        cur = cov_sub(cur, alpha)
    return p - q


def cartan_matrix(simple: List[Covector], roots: set) -> List[List[int]]:
    k = len(simple)
    c = [[2] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                c[i][j] = cartan_integer(simple[j], simple[i], roots)
    return c


def _chain_matrix(k: int) -> List[List[int]]:
    c = [[2 if i == j else 0 for j in range(k)] for i in range(k)]
    for i in range(k - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _catalog(k: int) -> List[Tuple[str, List[List[int]]]]:
    out: List[Tuple[str, List[List[int]]]] = [(f"A{k}", _chain_matrix(k))]
    if k >= 2:
        b = _chain_matrix(k)
        b[k - 1][k - 2] = -2  # last root short
        out.append((f"B{k}", b))
    if k >= 3:
        c = _chain_matrix(k)
        c[k - 2][k - 1] = -2  # last root long
        out.append((f"C{k}", c))
    if k >= 4:
        d = _chain_matrix(k - 1)
        for row in d:
            row.append(0)
        d.append([0] * k)
        d[k - 1][k - 1] = 2
        d[k - 3][k - 1] = -1
        d[k - 1][k - 3] = -1
        d[k - 2][k - 1] = 0
        d[k - 1][k - 2] = 0
        out.append((f"D{k}", d))
    if k == 2:
        g = [[2, -1], [-3, 2]]
        out.append(("G2", g))
    if k == 4:
        f = _chain_matrix(4)
        f[2][1] = -2  # alpha2 long, alpha3 short
        out.append(("F4", f))
    if k in (6, 7, 8):
        # chain 1-3-4-5-..., extra node attached at the third chain slot
        e = _chain_matrix(k - 1)
        for row in e:
            row.append(0)
        e.append([0] * k)
        e[k - 1][k - 1] = 2
        e[2][k - 1] = -1
        e[k - 1][2] = -1
        out.append((f"E{k}", e))
    return out


def _matrices_match(a: List[List[int]], b: List[List[int]]) -> bool:
    k = len(a)
    idx = range(k)
    for perm in itertools.permutations(idx):
        if all(a[i][j] == b[perm[i]][perm[j]] for i in idx for j in idx):
            return True
    return False


def _components(c: List[List[int]]) -> List[List[int]]:
    k = len(c)
    seen = [False] * k
    comps = []
    for s in range(k):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(k):
                if not seen[w] and (c[v][w] or c[w][v]):
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def classify_cartan_matrix(c: List[List[int]]) -> str:
    names = []
    for comp in _components(c):
        sub = [[c[i][j] for j in comp] for i in comp]
        k = len(comp)
        name = None
        for cand_name, cand in _catalog(k):
            if _matrices_match(sub, cand):
                name = cand_name
                break
        if name is None:
            raise VerificationError(f"unrecognized Cartan matrix component (rank {k})")
        names.append(name)
    names.sort(key=lambda s: (-int(s[1:]), s[0]))
    return "+".join(names)


def verify_simple_basis(roots: set, simple: List[Covector]) -> Dict[str, int]:
    """Each root must be an integer combination of the claimed simple roots
    with coefficients all of one sign."""
    dim = len(simple[0])
    solver = SpanSolver([list(s) for s in simple])
    positives = 0
    for cov in roots:
        coords = solver.coords(list(cov))
        if coords is None:
            raise VerificationError(f"root {cov} outside the simple span")
        signs = set()
        for c in coords:
            if not c.is_rational() or c.a.denominator != 1:
                raise VerificationError(f"non-integer simple coordinates for {cov}")
            if c:
                signs.add(1 if c.a > 0 else -1)
        if len(signs) != 1:
            raise VerificationError(f"mixed-sign simple coordinates for {cov}")
        if signs == {1}:
            positives += 1
    if 2 * positives != len(roots):
        raise VerificationError("positive roots are not half of all roots")
    return {"roots": len(roots), "positive": positives, "rank_used": dim}


def simple_coords(root: Covector, simple: List[Covector]) -> List[int]:
    solver = SpanSolver([list(s) for s in simple])
    coords = solver.coords(list(root))
    if coords is None:
        raise VerificationError("root outside the simple span")
    return [int(c.a) for c in coords]


def highest_root(roots: set, simple: List[Covector]) -> Covector:
    best = None
    best_height = None
    for cov in roots:
        h = sum(simple_coords(cov, simple))
        if best is None or h > best_height:
            best, best_height = cov, h
    for s in simple:
        if cov_add(best, s) in roots:
            raise VerificationError("highest root is not maximal")
    return best


# ---------------------------------------------------------------------------
# restriction to the split part


def restrict_covector(cov: Covector, a_idx: Sequence[int]) -> Covector:
    out = []
    for k in a_idx:
        x = cov[k]
        if not x.is_real():
            raise VerificationError("restriction to the split part is not real")
        out.append(x)
    return tuple(out)


def strip_torus_part(cov: Covector, a_idx: Sequence[int]) -> Covector:
    """The non-split components, divided by i (they must be imaginary)."""
    out = []
    for k in range(len(cov)):
        if k in a_idx:
            continue
        x = cov[k]
        if x.real():
            raise VerificationError("compact-part component is not imaginary")
        out.append(x.imag())
    return tuple(out)


def restricted_multiplicities(
    datum: RootDatum, a_idx: Sequence[int]
) -> Dict[Covector, int]:
    out: Dict[Covector, int] = {}
    for s in datum.spaces:
        r = restrict_covector(s.covector, a_idx)
        if cov_is_zero(r):
            continue
        out[r] = out.get(r, 0) + s.dim
    return out


def is_nonreduced(sigma: set) -> bool:
    return any(cov_scale(Scalar(2), lam) in sigma for lam in sigma)


def indivisible_roots(sigma: set) -> set:
    half = Scalar(Rat(1, 2))
    return {lam for lam in sigma if cov_scale(half, lam) not in sigma}


def classify_restricted(sigma: set, simple: List[Covector]) -> str:
    ind = indivisible_roots(sigma)
    name = classify_cartan_matrix(cartan_matrix(simple, ind))
    if is_nonreduced(sigma):
        # indivisible part of BC_n is B_n (A_1 when n = 1)
        if name == "A1":
            name = "BC1"
        elif name.startswith("B"):
            name = "BC" + name[1:]
        else:
            raise VerificationError(
                f"nonreduced system with indivisible type {name}"
            )
    return name


# ---------------------------------------------------------------------------
# automatic adapted positivity


def _rational_lower_abs(x: Scalar) -> Rat:
    r = Rat(1)
    ax = x.abs_real()
    for _ in range(128):
        if (ax - Scalar(r)).sign() >= 0:
            return r
        r = r / 2
    raise ArithmeticError("value unexpectedly close to zero")


def _rational_upper_abs(x: Scalar) -> Rat:
    r = Rat(1)
    ax = x.abs_real()
    for _ in range(128):
        if (Scalar(r) - ax).sign() >= 0:
            return r
        r = r * 2
    raise ArithmeticError("value unexpectedly large")


_WEIGHT_SEEDS = [(1, 2), (1, 3), (2, 3), (1, 5), (3, 2), (2, 5), (3, 5), (5, 2)]


def adapted_simple_system(
    datum: RootDatum, a_idx: Sequence[int]
) -> List[Covector]:
    """A simple system whose positivity is dominated by the split part.

    f(alpha) = M <u, restriction> + <v, compact components / i> with
    positive integer weights u, v and M large enough (exactly certified)
    that any nonzero restriction outweighs every compact contribution.
    Weights are perturbed deterministically until no root lands on 0.
    """
    roots = sorted(datum.root_set(), key=cov_key)
    na = len(a_idx)
    nb = len(roots[0]) - na
    for su, sv in _WEIGHT_SEEDS:
        u = [su**k + k for k in range(na)]
        v = [sv**k + 2 * k for k in range(nb)]
        upper = Rat(0)
        lower = None
        vals_r = []
        vals_t = []
        degenerate = False
        for cov in roots:
            rbar = restrict_covector(cov, a_idx)
            tor = strip_torus_part(cov, a_idx)
            fr = sum((Scalar(u[k]) * rbar[k] for k in range(na)), ZERO)
            ft = sum((Scalar(v[k]) * tor[k] for k in range(nb)), ZERO)
            if any(rbar) and not fr:
                degenerate = True
                break
            if not any(rbar) and not ft:
                degenerate = True
                break
            vals_r.append(fr)
            vals_t.append(ft)
            if ft:
                up = _rational_upper_abs(ft)
                if up > upper:
                    upper = up
            if fr:
                lo = _rational_lower_abs(fr)
                if lower is None or lo < lower:
                    lower = lo
        if degenerate:
            continue
        if lower is None:
            big = Rat(1)
        else:
            big = upper / lower + 1
        m_int = int(big.numerator // big.denominator) + 1
        big_s = Scalar(m_int)
        fvals = {}
        ok = True
        for cov, fr, ft in zip(roots, vals_r, vals_t):
            f = big_s * fr + ft
            if not f:
                ok = False
                break
            fvals[cov] = f
        if not ok:
            continue
        pos = [cov for cov in roots if fvals[cov].sign() > 0]
        pos_set = set(pos)
        simple = []
        for alpha in pos:
            dec = False
            for beta in pos:
                if beta != alpha and cov_sub(alpha, beta) in pos_set:
                    dec = True
                    break
            if not dec:
                simple.append(alpha)
        if len(pos) != len(roots) // 2:
            continue
        return sorted(simple, key=cov_key)
    raise ConstructionError("no admissible weights found for adapted positivity")


# ---------------------------------------------------------------------------
# Cartan decompositions


def verify_cartan_decomposition(
    L: LieAlgebra,
    t_basis: List[DenseVec],
    p_basis: List[DenseVec],
    killing: Optional[List[List[Scalar]]] = None,
) -> Dict[str, object]:
    """Certify g = t + p with [t,t], [p,p] in t, [t,p] in p, Killing
    negative definite on t and positive definite on p.  Returns the report;
    raises VerificationError on the first failed condition."""
    from .lie import killing_form
    from .linalg import sylvester_signature

    ech_t = Echelon()
    for v in t_basis:
        ech_t.add(to_sparse(v))
    ech_p = Echelon()
    for v in p_basis:
        ech_p.add(to_sparse(v))
    if ech_t.rank != len(t_basis) or ech_p.rank != len(p_basis):
        raise VerificationError("dependent vectors in t or p")
    total = Echelon()
    for v in t_basis + p_basis:
        total.add(to_sparse(v))
    if total.rank != L.dim or len(t_basis) + len(p_basis) != L.dim:
        raise VerificationError("t + p is not a direct sum decomposition")
    for name, left, right, target in (
        ("[t,t] in t", t_basis, t_basis, ech_t),
        ("[t,p] in p", t_basis, p_basis, ech_p),
        ("[p,p] in t", p_basis, p_basis, ech_t),
    ):
        for i, u in enumerate(left):
            start = i + 1 if left is right else 0
            for v in right[start:]:
                if not target.contains(to_sparse(L.bracket(u, v))):
                    raise VerificationError(f"bracket condition {name} fails")
    if killing is None:
        killing = killing_form(L)

    def gram(vs: List[DenseVec]) -> List[List[Scalar]]:
        n = L.dim
        kvs = []
        for v in vs:
            supp = [(q, x) for q, x in enumerate(v) if x]
            kv = vzero(n)
            for p in range(n):
                krow = killing[p]
                acc = ZERO
                for q, x in supp:
                    if krow[q]:
                        acc = acc + krow[q] * x
                kv[p] = acc
            kvs.append(kv)
        out = []
        for u in vs:
            usupp = [(p, x) for p, x in enumerate(u) if x]
            row = []
            for kv in kvs:
                acc = ZERO
                for p, x in usupp:
                    if kv[p]:
                        acc = acc + x * kv[p]
                row.append(acc)
            out.append(row)
        return out

    sig_t = sylvester_signature(gram(t_basis))
    sig_p = sylvester_signature(gram(p_basis))
    if sig_t != (0, len(t_basis), 0):
        raise VerificationError(f"Killing form not negative definite on t: {sig_t}")
    if sig_p != (len(p_basis), 0, 0):
        raise VerificationError(f"Killing form not positive definite on p: {sig_p}")
    return {
        "dim_t": len(t_basis),
        "dim_p": len(p_basis),
        "signature": len(p_basis) - len(t_basis),
        "killing_on_t": sig_t,
        "killing_on_p": sig_p,
    }


# ---------------------------------------------------------------------------
# sl2 triples


def sl2_triple(
    datum: RootDatum, cov: Covector
) -> Tuple[DenseVec, DenseVec, DenseVec]:
    """(e, f, h) with [e,f] = h, [h,e] = 2e, [h,f] = -2f for a
    one-dimensional root space."""
    L = datum.lie
    space = datum.space_of(cov)
    opp = datum.space_of(cov_neg(cov))
    if space.dim != 1 or opp.dim != 1:
        raise ConstructionError("sl2 normalization needs 1-dimensional spaces")
    e = space.basis[0]
    f0 = opp.basis[0]
    h0 = L.bracket(e, f0)
    hsolver = SpanSolver(datum.hs)
    coords = hsolver.coords(h0)
    if coords is None:
        raise VerificationError("[e, f] left the Cartan span")
    val = sum((c * cov[k] for k, c in enumerate(coords) if c), ZERO)
    if not val:
        raise VerificationError("root vanishes on [e, f]")
    f = vscale(Scalar(2) / val, f0)
    h = L.bracket(e, f)
    if L.bracket(h, e) != vscale(Scalar(2), e):
        raise VerificationError("sl2 normalization failed")
    return e, f, h
