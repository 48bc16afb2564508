import pytest

from realforms.errors import IOFormatError, VerificationError
from realforms.linalg import vzero
from realforms.rootspace import RootDatum, RootSpace, cov_key, cov_neg
from realforms.satake import (
    RestrictedRow,
    RestrictedTable,
    SatakeDiagram,
    SatakeEdge,
    SatakeNode,
    build_restricted_table,
    build_satake,
    compact_satake,
    e6_label_order,
)
from realforms.scalars import ONE, sc


def cov(*xs):
    return tuple(sc(x) for x in xs)


def _datum(roots):
    spaces = [
        RootSpace(c, [vzero(1)]) for c in sorted(roots, key=cov_key)
    ]
    return RootDatum(None, [], spaces, RootSpace(None, []))


def pm(*covs):
    out = set()
    for c in covs:
        out.add(c)
        out.add(cov_neg(c))
    return out


# ---------------------------------------------------------------------------
# diagram structure and serialization


def test_compact_templates():
    e6 = compact_satake("E6")
    assert len(e6.filled_indices()) == 6
    assert e6.meta["real_rank"] == 0
    f4 = compact_satake("F4")
    assert [e.bond for e in f4.edges] == [1, 2, 1]
    assert f4.edges[1].arrow_to == 2
    with pytest.raises(VerificationError):
        compact_satake("E8")


def test_json_round_trip():
    diag = compact_satake("F4", {"signature": -52})
    back = SatakeDiagram.from_json(diag.to_json())
    assert back.canonical_key() == diag.canonical_key()
    assert [n.label for n in back.nodes] == [n.label for n in diag.nodes]
    assert back.meta["signature"] == -52


def test_from_json_rejects_arrow_on_filled():
    diag = SatakeDiagram(
        [SatakeNode("a1", True), SatakeNode("a2", False)],
        [SatakeEdge(0, 1, 1)],
        [(0, 1)],
        {},
    )
    with pytest.raises(IOFormatError, match="filled"):
        SatakeDiagram.from_json(diag.to_json())


def test_from_json_rejects_malformed():
    with pytest.raises(IOFormatError):
        SatakeDiagram.from_json('{"nodes": [{"label": "a1"}]}')


def test_canonical_key_relabeling_invariance():
    base = compact_satake("E6")
    # reversed node order with remapped edges is the same diagram
    n = len(base.nodes)
    perm = list(reversed(range(n)))
    nodes = [base.nodes[perm.index(k)] for k in range(n)]
    edges = [
        SatakeEdge(perm[e.a], perm[e.b], e.bond, None) for e in base.edges
    ]
    relabeled = SatakeDiagram(nodes, edges, [], dict(base.meta))
    assert relabeled.canonical_key() == base.canonical_key()


def test_canonical_key_sees_filling_and_arrows():
    plain = SatakeDiagram(
        [SatakeNode("a1", False), SatakeNode("a2", False)],
        [SatakeEdge(0, 1, 1)],
        [],
        {},
    )
    filled = SatakeDiagram(
        [SatakeNode("a1", True), SatakeNode("a2", False)],
        [SatakeEdge(0, 1, 1)],
        [],
        {},
    )
    arrowed = SatakeDiagram(
        [SatakeNode("a1", False), SatakeNode("a2", False)],
        [SatakeEdge(0, 1, 1)],
        [(0, 1)],
        {},
    )
    keys = {plain.canonical_key(), filled.canonical_key(), arrowed.canonical_key()}
    assert len(keys) == 3


def test_canonical_key_sees_arrow_direction():
    # bond pattern 1,2 pins the chain orientation, so only the double-bond
    # arrow distinguishes the B3 and C3 shapes
    def chain(arrow_to):
        return SatakeDiagram(
            [SatakeNode(f"a{k + 1}", False) for k in range(3)],
            [SatakeEdge(0, 1, 1), SatakeEdge(1, 2, 2, arrow_to)],
            [],
            {},
        )

    assert chain(2).canonical_key() != chain(1).canonical_key()


def test_canonical_key_decorations():
    diag = SatakeDiagram([SatakeNode("a1", False)], [], [], {})
    assert diag.canonical_key([(8, 0)]) != diag.canonical_key([(8, 1)])


# ---------------------------------------------------------------------------
# renderers


def test_ascii_compact_e6_two_rows():
    text = compact_satake("E6").render_ascii()
    assert text.count("*") == 6
    assert "o" not in text.replace("node", "")
    assert "|" in text  # branch stem


def test_ascii_f4_double_bond_arrow():
    text = compact_satake("F4").render_ascii()
    assert "==>" in text


def test_ascii_arrow_lines():
    diag = SatakeDiagram(
        [SatakeNode("a1", False), SatakeNode("a2", False)],
        [SatakeEdge(0, 1, 1)],
        [(0, 1)],
        {},
    )
    assert "arrow: a1 <--> a2" in diag.render_ascii()


def test_dot_rendering():
    diag = compact_satake("E6")
    dot = diag.render_dot()
    assert dot.startswith("graph satake {")
    assert "style=filled" in dot
    arrowed = SatakeDiagram(
        [SatakeNode("a1", False), SatakeNode("a2", False)],
        [SatakeEdge(0, 1, 1)],
        [(0, 1)],
        {},
    )
    assert "dir=both, style=dashed" in arrowed.render_dot()


def test_render_dispatch():
    diag = compact_satake("F4")
    assert diag.render("ascii") == diag.render_ascii()
    assert diag.render("dot") == diag.render_dot()
    assert diag.render("json") == diag.to_json()
    with pytest.raises(IOFormatError, match="unknown format"):
        diag.render("svg")


# ---------------------------------------------------------------------------
# Bourbaki ordering


def test_e6_label_order_identity_shape():
    edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
    assert e6_label_order(edges, 6) == [0, 1, 2, 3, 4, 5]


def test_e6_label_order_rejects_path():
    with pytest.raises(VerificationError, match="E6"):
        e6_label_order([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)], 6)


# ---------------------------------------------------------------------------
# building from root data


def test_build_satake_black_node():
    # one compact direction: the zero-restriction simple root is filled
    roots = pm(cov(1, 0), cov(0, "i"), cov(1, "i"))
    diag = build_satake(_datum(roots), (0,), [cov(1, 0), cov(0, "i")])
    assert [n.filled for n in diag.nodes] == [False, True]
    assert diag.arrows == []
    assert len(diag.edges) == 1 and diag.edges[0].bond == 1


def test_build_satake_arrow_pair():
    # two simple roots with the same nonzero restriction get an arrow
    roots = pm(cov(1, "i"), cov(1, "-i"), cov(2, 0))
    diag = build_satake(_datum(roots), (0,), [cov(1, "i"), cov(1, "-i")])
    assert diag.filled_indices() == []
    assert diag.arrows == [(0, 1)]
    assert "arrow: a1 <--> a2" in diag.render_ascii()


def test_build_satake_rank_identity_guard():
    # both roots restrict to zero but a_idx claims a split direction
    roots = pm(cov(0, "i"), cov(0, "2*i"))
    with pytest.raises(VerificationError):
        build_satake(_datum(roots), (0,), [cov(0, "i"), cov(0, "2*i")])


# ---------------------------------------------------------------------------
# restricted tables


def test_restricted_table_from_arrow_pair():
    roots = pm(cov(1, "i"), cov(1, "-i"), cov(2, 0))
    table = build_restricted_table(
        _datum(roots), (0,), [cov(1, "i"), cov(1, "-i")]
    )
    assert table.sigma_type == "BC1"
    assert len(table.rows) == 1
    row = table.rows[0]
    assert row.members == ["a1", "a2"]
    assert row.restriction == cov(1)
    assert (row.m, row.m2) == (2, 1)
    # both signs count toward the multiplicity sum
    assert table.mult_sum == 6


def test_restricted_table_serialization():
    table = RestrictedTable(
        [RestrictedRow("a1", ["a1"], cov(1), 4, 1)], [], "BC1", 5
    )
    raw = table.to_json_dict()
    assert raw["rows"][0]["m"] == 4
    assert raw["rows"][0]["restriction"] == ["1"]
    assert "BC1" in table.render_ascii()


def test_restricted_table_canonical_key_sees_mults():
    t1 = RestrictedTable([RestrictedRow("a1", ["a1"], cov(1), 4, 1)], [], "BC1", 5)
    t2 = RestrictedTable([RestrictedRow("a1", ["a1"], cov(1), 4, 0)], [], "BC1", 5)
    assert t1.canonical_key() != t2.canonical_key()
