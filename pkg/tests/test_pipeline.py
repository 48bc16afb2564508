"""End-to-end checks of the three exceptional pipelines.

Everything here leans on the session fixtures in conftest, so the
expensive magic-square builds and root decompositions happen once.
"""

import pytest

from realforms.constructions import psi_automorphism
from realforms.errors import ConstructionError
from realforms.linalg import is_zero_vec, vscale
from realforms.pipeline import (
    MODELS,
    PRESET_MODEL,
    PRESET_SIMPLE,
    compact_diagram,
    preset_cartan,
    table_rows,
)
from realforms.rootspace import (
    cov_is_zero,
    cov_neg,
    restrict_covector,
    restricted_multiplicities,
    sl2_triple,
    verify_simple_basis,
)
from realforms.scalars import sc


def cov(*xs):
    return tuple(sc(x) for x in xs)


# ---------------------------------------------------------------------------
# presets


def test_preset_names_resolve():
    assert set(PRESET_MODEL) == {"EIV", "EIII", "EII"}
    assert set(PRESET_SIMPLE) == {"EIV", "EIII", "EII"}
    for simple in PRESET_SIMPLE.values():
        assert len(simple) == 6


@pytest.mark.parametrize("key,na", [("e6m26", 2), ("e6m14", 2), ("e6p2", 4)])
def test_preset_cartan_shape(get_build, key, na):
    cartan = preset_cartan(get_build(key))
    assert len(cartan.hs) == 6
    assert len(cartan.a_idx) == na
    L = get_build(key).lie
    for i in range(6):
        for j in range(i + 1, 6):
            assert is_zero_vec(L.bracket(cartan.hs[i], cartan.hs[j]))


def test_preset_cartan_rejects_other_models(get_build):
    with pytest.raises(ConstructionError):
        preset_cartan(get_build("e6p6"))


# ---------------------------------------------------------------------------
# the three diagrams


def test_eiv_invariants(get_satake):
    res = get_satake("EIV")
    c = res.checks
    assert c["roots"] == 72 and c["positive_roots"] == 36
    assert res.datum.zero.dim == 6
    assert (c["delta0_type"], c["delta0_roots"]) == ("D4", 24)
    assert c["black_nodes"] == 4 and c["arrows"] == []
    assert c["sigma_type"] == "A2" and c["mult_sum"] == 48
    assert [r.m for r in res.table.rows] == [8, 8]
    assert [r.m2 for r in res.table.rows] == [0, 0]
    assert [r.label for r in res.table.rows] == ["a1", "a6"]
    assert res.diagram.meta["signature"] == -26


def test_eiii_invariants(get_satake):
    res = get_satake("EIII")
    c = res.checks
    assert (c["delta0_type"], c["delta0_roots"]) == ("A3", 12)
    assert c["black_nodes"] == 3
    assert c["arrows"] == [("a1", "a6")]
    assert c["sigma_type"] == "BC2" and c["mult_sum"] == 60
    assert c["highest_root_coords"] == [1, 2, 2, 3, 2, 1]
    assert c["highest_root_restricted_mult"] == 1
    rows = {r.label: r for r in res.table.rows}
    assert rows["a1"].members == ["a1", "a6"]
    assert (rows["a1"].m, rows["a1"].m2) == (8, 1)
    assert (rows["a2"].m, rows["a2"].m2) == (6, 0)


def test_eiii_multiplicity_values(get_satake):
    res = get_satake("EIII")
    rmult = restricted_multiplicities(res.datum, res.cartan.a_idx)
    assert rmult[cov("1/2", "1/2")] == 8
    assert rmult[cov(1, 1)] == 1
    assert rmult[cov(-1, 0)] == 6


def test_eii_invariants(get_satake):
    res = get_satake("EII")
    c = res.checks
    assert c["delta0_type"] == "empty" and c["delta0_roots"] == 0
    assert c["black_nodes"] == 0
    assert c["arrows"] == [("a1", "a6"), ("a3", "a5")]
    assert c["sigma_type"] == "F4" and c["mult_sum"] == 72
    assert [r.m for r in res.table.rows] == [2, 1, 2, 1]
    assert all(r.m2 == 0 for r in res.table.rows)


@pytest.mark.parametrize("name", ["EIV", "EIII", "EII"])
def test_rank_identity_and_auto(get_satake, name):
    res = get_satake(name)
    assert res.checks["rank_identity"] is True
    assert res.checks["auto_matches_preset"] is True
    assert res.delta_type == "E6"


@pytest.mark.parametrize("name", ["EIV", "EIII", "EII"])
def test_mult_sum_is_noncompact_root_count(get_satake, name):
    res = get_satake(name)
    assert res.table.mult_sum == 72 - res.checks["delta0_roots"]


@pytest.mark.parametrize("name", ["EIV", "EIII", "EII"])
def test_root_set_symmetry(get_satake, name):
    roots = get_satake(name).datum.root_set()
    assert {cov_neg(c) for c in roots} == roots


def test_auto_simple_is_adapted(get_satake):
    # the derived system is a genuine simple system and its compact part
    # matches the preset black count
    for name in ("EIV", "EIII", "EII"):
        res = get_satake(name)
        roots = res.datum.root_set()
        verify_simple_basis(roots, res.auto_simple)
        zero_restr = sum(
            1
            for s in res.auto_simple
            if cov_is_zero(restrict_covector(s, res.cartan.a_idx))
        )
        assert zero_restr == res.checks["black_nodes"]


# ---------------------------------------------------------------------------
# sl2 normalization inside a big algebra


def test_sl2_triples_eiv(get_satake):
    res = get_satake("EIV")
    L = res.build.lie
    alpha = res.simple[1]
    e, f, h = sl2_triple(res.datum, alpha)
    assert L.bracket(h, e) == vscale(sc(2), e)
    assert L.bracket(h, f) == vscale(sc(-2), f)


# ---------------------------------------------------------------------------
# Cartan decompositions


def test_cartan_decomposition_eiv(get_cartan_report):
    report = get_cartan_report("e6m26")
    assert (report["dim_t"], report["dim_p"]) == (52, 26)
    assert report["signature"] == -26
    assert report["killing_on_t"] == (0, 52, 0)
    assert report["killing_on_p"] == (26, 0, 0)


def test_cartan_decomposition_eiii(get_cartan_report):
    report = get_cartan_report("e6m14")
    assert (report["dim_t"], report["dim_p"]) == (46, 32)
    assert report["signature"] == -14


def test_cartan_decomposition_eii(get_cartan_report):
    report = get_cartan_report("e6p2")
    assert (report["dim_t"], report["dim_p"]) == (38, 40)
    assert report["dim_p_outside_cartan"] == 36
    assert report["phi_type"] == "F4"
    assert report["phi_positive"] == 24
    assert report["phi_positive_per_block"] == [4, 4, 4]
    assert report["signature"] == 2


def test_cartan_decomposition_unknown_model(get_build):
    from realforms.pipeline import cartan_decomposition_report

    with pytest.raises(ConstructionError):
        cartan_decomposition_report("e6m78")


# ---------------------------------------------------------------------------
# the Psi rotations


def test_psi_squares(get_build):
    # Psi_1 is -id on its own block, so it squares to +id there and on the
    # tri part, and to -id on the two rotated blocks
    build = get_build("e6p2")
    square = build.obj
    psi = psi_automorphism(square, 1)
    ns, nsp = square.s.dim, square.sp.dim
    block1 = range(
        square.iota_index(1, 0, 0), square.iota_index(1, ns - 1, nsp - 1) + 1
    )
    for k in range(build.lie.dim):
        v = build.lie.basis_vec(k)
        twice = psi.apply(psi.apply(v))
        if k < square.iota_offset or k in block1:
            assert twice == v
        else:
            assert twice == vscale(sc(-1), v)


def test_psi_sample_action(get_build):
    build = get_build("e6p2")
    square = build.obj
    psi = psi_automorphism(square, 1)
    src = square.iota_index(0, 3, 0)
    dst = square.iota_index(0, 3, 1)
    got = psi.apply(build.lie.basis_vec(src))
    assert got == vscale(sc(-1), build.lie.basis_vec(dst))


# ---------------------------------------------------------------------------
# combined table


def test_table_static_row_only():
    rows = table_rows(only=["e6p6"])
    assert len(rows) == 1
    row = rows[0]
    assert row["computed"] is False
    assert row["note"] == "not computed (static reference)"
    assert row["sigma_type"] == "E6"
    assert [r["m"] for r in row["rows"]] == [1] * 6


def test_table_rejects_unknown_key():
    with pytest.raises(ConstructionError):
        table_rows(only=["f4m52"])


def test_compact_diagrams():
    e6 = compact_diagram("e6m78")
    assert e6.meta["signature"] == -78
    assert len(e6.filled_indices()) == 6
    f4 = compact_diagram("f4m52")
    assert f4.meta["signature"] == -52
    with pytest.raises(ConstructionError):
        compact_diagram("e6p2")


def test_model_registry_signatures():
    sigs = {k: MODELS[k].signature for k in MODELS}
    assert sigs == {
        "f4m52": -52,
        "f4m20": -20,
        "f4p4": 4,
        "e6m78": -78,
        "e6m14": -14,
        "e6p2": 2,
        "e6p6": 6,
        "e6m26": -26,
    }
