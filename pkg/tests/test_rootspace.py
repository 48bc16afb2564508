import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realforms.errors import ConstructionError, VerificationError
from realforms.lie import LieAlgebra, lie_from_fn
from realforms.linalg import vadd, vscale, vsub, vzero
from realforms.rootspace import (
    RootDatum,
    RootSpace,
    adapted_simple_system,
    cartan_integer,
    cartan_matrix,
    classify_cartan_matrix,
    classify_restricted,
    cov_add,
    cov_key,
    cov_neg,
    eigen_split,
    exact_eigenvalues,
    highest_root,
    indivisible_roots,
    is_nonreduced,
    minimal_polynomial,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_normalize,
    poly_squarefree,
    restrict_covector,
    restricted_multiplicities,
    root_decomposition,
    simple_coords,
    sl2_triple,
    strip_torus_part,
    verify_cartan_decomposition,
    verify_simple_basis,
)
from realforms.scalars import IUNIT, ONE, SQRT3, ZERO, Scalar, sc


def cov(*xs):
    return tuple(sc(x) for x in xs)


def pm(*covs):
    out = set()
    for c in covs:
        out.add(c)
        out.add(cov_neg(c))
    return out


# ---------------------------------------------------------------------------
# polynomial arithmetic


def test_poly_divmod_oracle():
    # (x^2 - 1) = (x + 1)(x - 1) + 0
    q, r = poly_divmod([sc(-1), ZERO, ONE], [ONE, ONE])
    assert q == [sc(-1), ONE]
    assert r == []


def test_poly_gcd_is_monic_common_factor():
    a = poly_mul([sc(-1), ONE], [sc(2), ONE])  # (x-1)(x+2)
    b = poly_mul([sc(-1), ONE], [sc(5), ONE])  # (x-1)(x+5)
    assert poly_gcd(a, b) == [sc(-1), ONE]


def test_poly_squarefree_strips_multiplicity():
    p = poly_mul([ZERO, ONE], [ZERO, ONE])  # x^2
    assert poly_squarefree(p) == [ZERO, ONE]
    q = poly_mul(poly_mul([sc(-1), ONE], [sc(-1), ONE]), [sc(1), ONE])
    assert poly_squarefree(q) == poly_normalize(poly_mul([sc(-1), ONE], [sc(1), ONE]))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.lists(st.integers(-4, 4), min_size=2, max_size=4),
)
def test_poly_divmod_reconstructs(acoeffs, bcoeffs):
    a = poly_normalize([Scalar(x) for x in acoeffs])
    b = poly_normalize([Scalar(x) for x in bcoeffs])
    if not b:
        return
    q, r = poly_divmod(a, b)
    recon = list(poly_mul(q, b))
    n = max(len(recon), len(r), len(a), 1)
    recon += [ZERO] * (n - len(recon))
    rpad = list(r) + [ZERO] * (n - len(r))
    apad = list(a) + [ZERO] * (n - len(a))
    assert [x + y for x, y in zip(recon, rpad)] == apad
    assert len(r) < len(b)


# ---------------------------------------------------------------------------
# exact eigenvalues


def test_minimal_polynomial_diagonal():
    m = [[sc(1), ZERO, ZERO], [ZERO, sc(1), ZERO], [ZERO, ZERO, sc(-2)]]
    # (x - 1)(x + 2) = x^2 + x - 2
    assert minimal_polynomial(m) == [sc(-2), ONE, ONE]


def test_minimal_polynomial_nilpotent():
    m = [[ZERO, ONE], [ZERO, ZERO]]
    assert minimal_polynomial(m) == [ZERO, ZERO, ONE]


def test_exact_eigenvalues_rotation_gives_i():
    m = [[ZERO, sc(-1)], [ONE, ZERO]]
    assert exact_eigenvalues(m) == sorted([IUNIT, -IUNIT], key=lambda s: s.key())


def test_exact_eigenvalues_sqrt3_lattice_stage():
    m = [[ZERO, sc("3/4")], [ONE, ZERO]]
    vals = exact_eigenvalues(m)
    half_r3 = sc("1/2") * SQRT3
    assert set(vals) == {half_r3, -half_r3}


def test_exact_eigenvalues_denominators():
    m = [[sc("1/4"), ZERO], [ZERO, sc("-3/4")]]
    assert exact_eigenvalues(m) == sorted(
        [sc("1/4"), sc("-3/4")], key=lambda s: s.key()
    )


def test_eigen_split_rejects_nilpotent():
    m = [[ZERO, ONE], [ZERO, ZERO]]
    with pytest.raises(VerificationError, match="not semisimple"):
        eigen_split(m)


def test_eigen_split_dimensions():
    m = [[sc(2), ZERO, ZERO], [ZERO, sc(2), ZERO], [ZERO, ZERO, sc(-1)]]
    split = eigen_split(m)
    dims = {lam.to_str(): len(ker) for lam, ker in split}
    assert dims == {"2": 2, "-1": 1}


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(-3, 3), min_size=1, max_size=3))
def test_exact_eigenvalues_of_diagonal(values):
    vals = sorted(values)
    n = len(vals)
    m = [[Scalar(vals[i]) if i == j else ZERO for j in range(n)] for i in range(n)]
    got = exact_eigenvalues(m)
    assert sorted(int(v.a) for v in got) == vals


# ---------------------------------------------------------------------------
# root decomposition on small algebras


def sl2() -> LieAlgebra:
    # basis h, e, f
    def fn(i, j):
        if (i, j) == (0, 1):
            return [ZERO, sc(2), ZERO]
        if (i, j) == (0, 2):
            return [ZERO, ZERO, sc(-2)]
        return [ONE, ZERO, ZERO]

    return lie_from_fn("sl2", ["h", "e", "f"], fn)


def so3() -> LieAlgebra:
    def fn(i, j):
        k = 3 - i - j
        sign = sc(1) if (i, j) in ((0, 1), (1, 2)) else sc(-1)
        v = [ZERO, ZERO, ZERO]
        v[k] = sign
        return v

    return lie_from_fn("so3", ["x", "y", "z"], fn)


def test_root_decomposition_sl2():
    L = sl2()
    datum = root_decomposition(L, [L.basis_vec(0)], name="sl2")
    assert datum.zero.dim == 1
    assert datum.root_set() == pm(cov(2))
    assert datum.total_dim() == 3


def test_root_decomposition_so3_imaginary_roots():
    L = so3()
    datum = root_decomposition(L, [L.basis_vec(0)], name="so3")
    assert datum.root_set() == pm(cov("i"))
    assert all(s.dim == 1 for s in datum.spaces)


def test_root_decomposition_rejects_noncartan():
    L = sl2()
    # e is nilpotent, not semisimple
    with pytest.raises(VerificationError):
        root_decomposition(L, [L.basis_vec(1)], name="bad")


def test_sl2_triple_normalization():
    L = sl2()
    datum = root_decomposition(L, [L.basis_vec(0)], name="sl2")
    e, f, h = sl2_triple(datum, cov(2))
    assert L.bracket(e, f) == h
    assert L.bracket(h, e) == vscale(sc(2), e)
    assert L.bracket(h, f) == vscale(sc(-2), f)


# ---------------------------------------------------------------------------
# Cartan matrices and classification


A2 = pm(cov(1, 0), cov(0, 1), cov(1, 1))
B2 = pm(cov(1, -1), cov(0, 1), cov(1, 0), cov(1, 1))
G2 = pm(cov(1, 0), cov(0, 1), cov(1, 1), cov(1, 2), cov(1, 3), cov(2, 3))


def test_cartan_integer_string_walk():
    assert cartan_integer(cov(0, 1), cov(1, 0), A2) == -1
    assert cartan_integer(cov(1, 1), cov(1, 0), A2) == 1
    assert cartan_integer(cov(1, 0), cov(0, 1), G2) == -3
    assert cartan_integer(cov(0, 1), cov(1, 0), G2) == -1


def test_classify_rank2():
    assert classify_cartan_matrix(cartan_matrix([cov(1, 0), cov(0, 1)], A2)) == "A2"
    assert classify_cartan_matrix(cartan_matrix([cov(1, -1), cov(0, 1)], B2)) == "B2"
    assert classify_cartan_matrix(cartan_matrix([cov(1, 0), cov(0, 1)], G2)) == "G2"


def test_classify_direct_sum():
    roots = pm(cov(1, 0), cov(0, 1))
    cm = cartan_matrix([cov(1, 0), cov(0, 1)], roots)
    assert classify_cartan_matrix(cm) == "A1+A1"


def _bourbaki_e(k: int):
    cm = [[2 if i == j else 0 for j in range(k)] for i in range(k)]

    def join(i, j):
        cm[i][j] = cm[j][i] = -1

    for a, b in zip(range(k - 2), range(1, k - 1)):
        join(a, b)
    join(2, k - 1)
    return cm


def test_classify_e_series():
    for k in (6, 7, 8):
        assert classify_cartan_matrix(_bourbaki_e(k)) == f"E{k}"


def test_classify_f4_c3():
    f4 = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    assert classify_cartan_matrix(f4) == "F4"
    c3 = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
    assert classify_cartan_matrix(c3) == "C3"


def test_classify_rejects_garbage():
    with pytest.raises(VerificationError, match="unrecognized"):
        classify_cartan_matrix([[2, -4], [-4, 2]])


# ---------------------------------------------------------------------------
# simple systems


def test_verify_simple_basis_counts():
    report = verify_simple_basis(A2, [cov(1, 0), cov(0, 1)])
    assert report == {"roots": 6, "positive": 3, "rank_used": 2}


def test_verify_simple_basis_rejects_mixed_signs():
    # (0,1) = (1,1) - (1,0): mixed signs against this claimed basis
    with pytest.raises(VerificationError, match="mixed-sign"):
        verify_simple_basis(A2, [cov(1, 0), cov(1, 1)])


def test_highest_root_a2():
    simple = [cov(1, 0), cov(0, 1)]
    top = highest_root(A2, simple)
    assert top == cov(1, 1)
    assert simple_coords(top, simple) == [1, 1]


def test_highest_root_g2():
    top = highest_root(G2, [cov(1, 0), cov(0, 1)])
    assert top == cov(2, 3)


# ---------------------------------------------------------------------------
# restriction and nonreduced systems


def _dummy_datum(roots, dims=None):
    spaces = [
        RootSpace(c, [vzero(1) for _ in range((dims or {}).get(c, 1))])
        for c in sorted(roots, key=cov_key)
    ]
    return RootDatum(None, [], spaces, RootSpace(None, []))


def test_restrict_and_strip():
    c = cov(1, "i", "2*i")
    assert restrict_covector(c, (0,)) == cov(1)
    assert strip_torus_part(c, (0,)) == cov(1, 2)
    with pytest.raises(VerificationError):
        restrict_covector(c, (1,))
    with pytest.raises(VerificationError):
        strip_torus_part(cov(1, 1), (0,))


def test_restricted_multiplicities_fold():
    # two roots restricting to the same functional, one to zero
    roots = pm(cov(1, "i"), cov(1, "-i"), cov(0, "i"))
    datum = _dummy_datum(roots)
    rmult = restricted_multiplicities(datum, (0,))
    assert rmult == {cov(1): 2, cov(-1): 2}


def test_nonreduced_detection():
    bc1 = pm(cov(1), cov(2))
    assert is_nonreduced(bc1)
    assert indivisible_roots(bc1) == pm(cov(1))
    assert classify_restricted(bc1, [cov(1)]) == "BC1"
    assert not is_nonreduced(A2)
    assert classify_restricted(A2, [cov(1, 0), cov(0, 1)]) == "A2"


def test_classify_restricted_bc2():
    bc2 = pm(
        cov(1, 0), cov(0, 1), cov(1, 1), cov(1, -1), cov(2, 0), cov(0, 2)
    )
    assert classify_restricted(bc2, [cov(1, -1), cov(0, 1)]) == "BC2"


def test_adapted_simple_system_mixed():
    # rank-2 system with one compact direction: a_idx = (0,)
    roots = pm(cov(1, 0), cov(0, "i"), cov(1, "i"))
    datum = _dummy_datum(roots)
    simple = adapted_simple_system(datum, (0,))
    assert set(simple) == {cov(1, 0), cov(0, "i")}
    verify_simple_basis(roots, simple)


def test_adapted_simple_system_split_dominates():
    # the split part must outweigh any compact contribution, so the
    # negative-compact root (1, -i) is still positive
    roots = pm(cov(1, "-i"), cov(0, "i"), cov(1, 0))
    datum = _dummy_datum(roots)
    simple = adapted_simple_system(datum, (0,))
    for s in simple:
        r = restrict_covector(s, (0,))
        if any(r):
            assert r[0].sign() > 0


# ---------------------------------------------------------------------------
# Cartan decomposition checks


def test_verify_cartan_decomposition_sl2():
    L = sl2()
    h, e, f = L.basis_vec(0), L.basis_vec(1), L.basis_vec(2)
    report = verify_cartan_decomposition(L, [vsub(e, f)], [h, vadd(e, f)])
    assert report["dim_t"] == 1
    assert report["dim_p"] == 2
    assert report["signature"] == 1
    assert report["killing_on_t"] == (0, 1, 0)
    assert report["killing_on_p"] == (2, 0, 0)


def test_verify_cartan_decomposition_so3_compact():
    L = so3()
    report = verify_cartan_decomposition(L, [L.basis_vec(k) for k in range(3)], [])
    assert report["dim_t"] == 3
    assert report["signature"] == -3
    assert report["killing_on_t"] == (0, 3, 0)


def test_verify_cartan_decomposition_rejects_swap():
    L = sl2()
    h, e, f = L.basis_vec(0), L.basis_vec(1), L.basis_vec(2)
    with pytest.raises(VerificationError):
        verify_cartan_decomposition(L, [h, vadd(e, f)], [vsub(e, f)])


def test_verify_cartan_decomposition_rejects_non_subalgebra():
    L = sl2()
    h, e, f = L.basis_vec(0), L.basis_vec(1), L.basis_vec(2)
    # t = span(e) is a subalgebra but [t, p] leaves p
    with pytest.raises(VerificationError):
        verify_cartan_decomposition(L, [e], [h, f])


# ---------------------------------------------------------------------------
# covector helpers


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_cov_neg_involution(xs):
    c = cov(*xs)
    assert cov_neg(cov_neg(c)) == c
    assert cov_add(c, cov_neg(c)) == cov(*([0] * len(xs)))
