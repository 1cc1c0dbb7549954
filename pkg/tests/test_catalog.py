"""The derived res = 3 catalog.

The 17 canonical members below were frozen after three independent
derivations agreed: the production scan over the enumeration stream, the
definitional subset oracle over the same stream, and a from-scratch
recount through networkx's complete order-7 atlas.  The published
count for the girth-3 family is 14 graphs; only 13 pairwise
non-isomorphic ones exist (the likely culprit is a duplicate entry:
the join of an edge with two isolated vertices is isomorphic to the
clique-plus-vertex graph on 4 vertices, both being K4 minus an edge).
"""

import pytest

from resnum.canon import canonical_form
from resnum.catalog import (
    Res3Catalog,
    build_res3_catalog,
    clique_equals_res_report,
    load_default_catalog,
    load_fixture_text,
    render_fixture,
)
from resnum.errors import CatalogMissing
from resnum.families import complete_graph, cycle_graph, wheel_graph
from resnum.serial import parse_graph6

FROZEN_MEMBERS = (
    "Cj", "Cz", "C~", "DjC", "DrK", "DzK",
    "EiGW", "EjGO", "EjGW", "EqKW", "EyKW", "EzSo", "E{Sw", "E|Ww",
    "FiGWG", "GqKOOK", "IqK__OD?o",
)


def test_default_catalog_matches_frozen_members():
    cat = load_default_catalog()
    assert tuple(m.graph6 for m in cat.members) == FROZEN_MEMBERS


def test_rebuild_reproduces_the_fixture():
    derived = build_res3_catalog()
    assert render_fixture(derived) == render_fixture(load_default_catalog())


def test_girth_split():
    cat = load_default_catalog()
    g3 = cat.slice_by_girth(3)
    g5 = cat.slice_by_girth(5)
    assert len(g3) == 13
    assert len(g5) == 4
    assert len(cat.slice_by_girth(4)) == 0
    assert sorted(m.n for m in g5) == [6, 7, 8, 10]
    assert set(g3) | set(g5) == set(cat.members)


def test_member_metadata_consistency():
    for m in load_default_catalog().members:
        g = parse_graph6(m.graph6)
        assert m.n == g.n
        assert m.form == canonical_form(g)
        assert m.degree_sequence == tuple(sorted(g.degrees()))


def test_largest_member_is_not_regular():
    # three 5-cycles sharing a vertex and pairwise sharing an edge at it
    big = load_default_catalog().members[-1]
    assert big.n == 10
    assert big.girth == 5
    assert big.degree_sequence == (2, 2, 2, 2, 2, 2, 3, 3, 3, 3)


def test_lookup():
    cat = load_default_catalog()
    assert cat.lookup(canonical_form(complete_graph(4))).graph6 == "C~"
    assert cat.lookup(canonical_form(wheel_graph(5))) is not None
    assert cat.lookup(canonical_form(cycle_graph(6))) is None


def test_fixture_text_roundtrip():
    cat = load_default_catalog()
    text = render_fixture(cat)
    assert text.endswith("\n")
    again = load_fixture_text(text)
    assert render_fixture(again) == text


def test_fixture_rejects_non_members():
    with pytest.raises(CatalogMissing):
        load_fixture_text("Ch\n")  # P4 has res 2
    with pytest.raises(CatalogMissing):
        load_fixture_text("\n\n")


def test_clique_equals_res_report():
    rep = clique_equals_res_report(load_default_catalog())
    assert rep["derived_size"] == 12
    assert rep["discrepancy_flagged"]
    assert [e["graph6"] for e in rep["excluded"]] == ["C~"]
    assert rep["excluded"][0]["omega"] == 4
    assert len(rep["derived"]) == 12


def test_catalog_is_value_like():
    a = load_default_catalog()
    b = Res3Catalog(a.members)
    assert a == b
