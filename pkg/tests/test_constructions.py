import pytest

from realforms.algebras import albert, symmetric_composition
from realforms.constructions import (
    derivation_model,
    magic_square,
    rho_images,
)
from realforms.lie import (
    certify_jacobi,
    derivations,
    killing_form,
    killing_signature,
)
from realforms.linalg import is_zero_vec, mat_vec, vadd, vscale
from realforms.scalars import HALF, ONE, ZERO, sc


@pytest.fixture(scope="module")
def f4_square():
    return magic_square(
        symmetric_composition("pO"), symmetric_composition("R"), (1, 1, 1)
    )


@pytest.fixture(scope="module")
def e6_indef_square():
    return magic_square(
        symmetric_composition("pO"), symmetric_composition("pC"), (1, -1, 1)
    )


@pytest.fixture(scope="module")
def model78():
    return derivation_model()


def test_f4_square_is_compact_f4(f4_square):
    assert f4_square.dim == 52
    certify_jacobi(f4_square.lie)
    assert killing_signature(f4_square.lie) == (0, 52, 0)


def test_e6_square_signature_minus_14(e6_indef_square):
    assert e6_indef_square.dim == 78
    certify_jacobi(e6_indef_square.lie)
    assert killing_signature(e6_indef_square.lie) == (32, 46, 0)


def test_compact_e6_square():
    sq = magic_square(
        symmetric_composition("pO"), symmetric_composition("pC"), (1, 1, 1)
    )
    certify_jacobi(sq.lie)
    assert killing_signature(sq.lie) == (0, 78, 0)


def test_killing_form_invariance_sampled(e6_indef_square):
    import random

    L = e6_indef_square.lie
    k = killing_form(L)
    rng = random.Random(5)
    n = L.dim

    def kform(x, y):
        acc = ZERO
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj and k[i][j]:
                    acc = acc + xi * k[i][j] * yj
        return acc

    for _ in range(6):
        x = [sc(rng.randint(-1, 1)) for _ in range(n)]
        y = [sc(rng.randint(-1, 1)) for _ in range(n)]
        z = [sc(rng.randint(-1, 1)) for _ in range(n)]
        assert kform(L.bracket(x, y), z) == kform(x, L.bracket(y, z))


def test_iota_bracket_eigenvector_conventions(e6_indef_square):
    # [h, v] = v for h = iota_0(e0 x e1)/2 and
    # v = iota_0(e0 x e0) - iota_0(e1 x e1) + t_{e0,e1} + t'_{e0,e1}
    sq = e6_indef_square
    s, sp = sq.s, sq.sp
    e0s, e1s = s.basis_vec(0), s.basis_vec(1)
    e0p, e1p = sp.basis_vec(0), sp.basis_vec(1)
    h = vscale(HALF, sq.iota_vec(0, e0s, e1p))
    v = vadd(
        vadd(sq.iota_vec(0, e0s, e0p), vscale(sc(-1), sq.iota_vec(0, e1s, e1p))),
        vadd(
            sq.tri_s_vec(sq.tri_s.t_element(e0s, e1s)),
            sq.tri_sp_vec(sq.tri_sp.t_element(e0p, e1p)),
        ),
    )
    assert sq.lie.bracket(h, v) == v


def test_block_layout(e6_indef_square):
    sq = e6_indef_square
    assert sq.tri_s.dim == 28
    assert sq.tri_sp.dim == 2
    assert sq.iota_offset == 30
    assert sq.iota_index(0, 0, 1) == 31
    assert sq.iota_index(1, 0, 0) == 46
    assert sq.iota_index(2, 7, 1) == 77


def test_tri_blocks_commute(e6_indef_square):
    sq = e6_indef_square
    for k in range(sq.tri_s.dim):
        for m in range(sq.tri_sp.dim):
            assert not sq.lie.bracket_basis(k, sq.tri_s.dim + m)


def test_albert_derivations_dimension():
    alg = albert(symmetric_composition("pO"), (1, 1, 1))
    assert len(derivations(alg.table)) == 52


def test_rho_images_are_derivations(f4_square):
    alg = albert(symmetric_composition("pO"), (1, 1, 1))
    rho = rho_images(f4_square, alg)
    assert len(rho) == 52
    t = alg.table
    # spot-check the derivation property on a few images, all basis pairs
    for m in (rho[0], rho[17], rho[28], rho[40], rho[51]):
        for i in range(t.dim):
            bi = t.basis_vec(i)
            dbi = mat_vec(m, bi)
            for j in range(i, t.dim):
                bj = t.basis_vec(j)
                lhs = mat_vec(m, t.sc[i][j])
                rhs = vadd(t.mul(dbi, bj), t.mul(bi, mat_vec(m, bj)))
                assert lhs == rhs


def test_model78_structure(model78):
    assert model78.lie.dim == 78
    certify_jacobi(model78.lie)
    assert killing_signature(model78.lie) == (26, 52, 0)


def test_model78_traceless_part_brackets_into_derivations(model78):
    L = model78.lie
    nd = model78.der_dim
    for i in (nd, nd + 1, nd + 9):
        for j in (nd + 2, nd + 14, nd + 25):
            if j <= i:
                continue
            v = L.bracket_basis(i, j)
            assert all(p < nd for p in v)


def test_model78_derivations_kill_unit(model78):
    alg = model78.alg
    unit = alg.table.unit
    for m in (model78.rho[3], model78.rho[33]):
        assert is_zero_vec(mat_vec(m, unit))
