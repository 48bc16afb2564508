import pytest

from realforms.algebras import (
    albert,
    albert_matrix_isomorphism,
    check_composition,
    check_jordan_sampled,
    check_symmetric,
    h3_octonions,
    hurwitz,
    okubo_compact,
    okubo_split,
    para,
    symmetric_composition,
)
from realforms.errors import VerificationError
from realforms.scalars import HALF, ONE, ZERO, sc


HURWITZ_DIMS = {"R": 1, "RR": 2, "C": 2, "Mat2": 4, "H": 4, "O": 8, "Os": 8}


@pytest.mark.parametrize("name,dim", sorted(HURWITZ_DIMS.items()))
def test_hurwitz_algebras_are_composition(name, dim):
    t = hurwitz(name)
    assert t.dim == dim
    check_composition(t)


def test_quaternion_relations():
    h = hurwitz("H")
    i, j, k = h.basis_vec(1), h.basis_vec(2), h.basis_vec(3)
    assert h.mul(i, j) == k
    assert h.mul(j, i) == [x * sc(-1) for x in k]
    assert h.mul(i, i) == [x * sc(-1) for x in h.unit]
    assert h.norm(k) == ONE


def test_octonion_labels_and_products():
    o = hurwitz("O")
    assert o.labels == ["1", "i", "j", "k", "l", "il", "jl", "kl"]
    il = o.mul(o.basis_vec(1), o.basis_vec(4))
    assert il == o.basis_vec(5)
    # polar form is twice the identity on this basis
    for a in range(8):
        for b in range(8):
            assert o.form[a][b] == (sc(2) if a == b else ZERO)


def test_octonions_not_associative():
    o = hurwitz("O")
    i, j, l = o.basis_vec(1), o.basis_vec(2), o.basis_vec(4)
    assert o.mul(o.mul(i, j), l) != o.mul(i, o.mul(j, l))


def test_conjugation_antiautomorphism():
    o = hurwitz("O")
    for a in range(8):
        for b in range(8):
            x, y = o.basis_vec(a), o.basis_vec(b)
            assert o.conj_vec(o.mul(x, y)) == o.mul(o.conj_vec(y), o.conj_vec(x))


def test_split_octonion_idempotents():
    t = hurwitz("Os")
    e1, e2 = t.basis_vec(0), t.basis_vec(1)
    assert t.mul(e1, e1) == e1
    assert t.mul(e2, e2) == e2
    assert t.mul(e1, e2) == [ZERO] * 8
    assert t.unit == [x + y for x, y in zip(e1, e2)]
    u1, v1 = t.basis_vec(2), t.basis_vec(5)
    assert t.mul(e1, u1) == u1
    assert t.mul(u1, e1) == [ZERO] * 8
    assert t.mul(u1, v1) == [-x for x in e1]
    # isotropic norms, hyperbolic pairing
    assert t.norm(e1) == ZERO
    assert t.polar(e1, e2) == ONE
    assert t.conj_vec(e1) == e2
    assert t.conj_vec(u1) == [-x for x in u1]


def test_split_octonion_cross_products():
    t = hurwitz("Os")
    u1, u2, v3 = t.basis_vec(2), t.basis_vec(3), t.basis_vec(7)
    assert t.mul(u1, u2) == v3
    assert t.mul(u2, u1) == [-x for x in v3]


@pytest.mark.parametrize("name", ["pR", "pRR", "pC", "pO", "pOs"])
def test_para_algebras_are_symmetric_composition(name):
    check_symmetric(symmetric_composition(name))


def test_para_split_idempotent_squares_across():
    t = symmetric_composition("pOs")
    e1 = t.basis_vec(0)
    assert t.mul(e1, e1) == t.basis_vec(1)


def test_para_r_is_r():
    t = symmetric_composition("R")
    assert t.dim == 1
    assert t.mul([ONE], [ONE]) == [ONE]
    check_symmetric(t)


def test_okubo_compact_is_symmetric_composition():
    t = okubo_compact()
    assert t.dim == 8
    check_symmetric(t)
    # definite: every basis vector has positive norm
    for b in range(8):
        assert t.norm(t.basis_vec(b)).sign() > 0


def test_okubo_split_is_symmetric_composition():
    t = okubo_split()
    assert t.dim == 8
    check_symmetric(t)


def test_okubo_has_no_left_unit():
    # x*y = y for all y is unsolvable: rank grows when the system is augmented
    from realforms.linalg import rank_of

    t = okubo_compact()
    rows, aug = [], []
    for j in range(8):
        for p in range(8):
            # sum_i x_i (b_i * b_j)_p = delta_jp
            row = [t.sc[i][j][p] for i in range(8)]
            rows.append(row)
            aug.append(row + [ONE if p == j else ZERO])
    assert rank_of(aug) > rank_of(rows)


def test_composition_check_catches_corruption():
    t = hurwitz("C")
    bad = [[list(v) for v in row] for row in t.sc]
    bad[1][1][0] = ONE  # i*i = +1 breaks the norm law
    broken = type(t)(t.name, t.labels, bad, t.form, t.unit, t.invol)
    with pytest.raises(VerificationError):
        check_composition(broken)


def test_albert_dimensions_and_unit():
    alg = albert(symmetric_composition("pO"), (1, 1, 1))
    assert alg.dim == 27
    t = alg.table
    for k in range(27):
        b = t.basis_vec(k)
        assert t.mul(t.unit, b) == b
    assert alg.trace(t.unit) == sc(3)


def test_albert_idempotent_action():
    alg = albert(symmetric_composition("pO"), (1, 1, 1))
    t = alg.table
    e0 = t.basis_vec(alg.E_index(0))
    i0 = t.basis_vec(alg.iota_index(0, 3))
    i1 = t.basis_vec(alg.iota_index(1, 3))
    assert t.mul(e0, i0) == [ZERO] * 27
    assert t.mul(e0, i1) == [x * HALF for x in i1]


def test_albert_same_slot_product():
    s = symmetric_composition("pO")
    alg = albert(s, (1, 1, 1))
    t = alg.table
    x = t.basis_vec(alg.iota_index(0, 2))
    y = t.basis_vec(alg.iota_index(0, 2))
    out = t.mul(x, y)
    # 2 * q(e2, e2) = 4 on E1 + E2
    assert out[1] == sc(4) and out[2] == sc(4)
    assert not any(out[3:])


@pytest.mark.parametrize(
    "sname,eps",
    [("pO", (1, 1, 1)), ("pO", (1, -1, 1)), ("pOs", (1, 1, 1))],
)
def test_albert_is_jordan(sname, eps):
    alg = albert(symmetric_composition(sname), eps)
    report = check_jordan_sampled(alg, trials=25)
    assert report["jordan_samples"] == 25


def test_h3_octonions_is_jordan_sampled():
    h3, o = h3_octonions()
    import random

    rng = random.Random(11)
    for _ in range(10):
        x = [sc(rng.randint(-2, 2)) for _ in range(27)]
        y = [sc(rng.randint(-2, 2)) for _ in range(27)]
        xx = h3.mul(x, x)
        assert h3.mul(xx, h3.mul(y, x)) == h3.mul(h3.mul(xx, y), x)


def test_albert_matches_hermitian_matrices():
    report = albert_matrix_isomorphism()
    assert report["pairs"] == 27 * 28 // 2
