import heawood
import pytest


def test_octahedron_solves_with_three_colours():
    g = heawood.generate("octahedron")
    result = heawood.solve(g)
    assert heawood.is_proper(g, result["coloring"])
    assert len(set(result["coloring"].values())) <= 3


def test_icosahedron_and_stacked():
    for g in (heawood.generate("icosahedron"), heawood.generate("stacked", depth=6, seed=3)):
        assert heawood.is_proper(g, heawood.solve(g)["coloring"])


def test_split_conserves_triangles():
    g = heawood.generate("polygon-pair", v=8, inner=3, outer=17)
    s = heawood.split(g)
    assert len(s["inner"]["triangles"]) + len(s["outer"]["triangles"]) == len(g["triangles"])
    assert sorted(s["circuit"]) == list(range(8))


def test_convert_round_trip():
    g = heawood.generate("octahedron")
    v4c = {"scheme": "v4c", "values": heawood.solve(g)["coloring"]}
    ct2 = heawood.convert(g, v4c, "ct2")
    assert ct2["scheme"] == "ct2"
    assert set(ct2["values"].values()) <= {1, 2}
    e3c = heawood.convert(g, ct2, "e3c", edge_color="g")
    assert e3c["values"]["0"] == "g"


def test_polygon_counts():
    assert [len(heawood.polygons(v)) for v in range(2, 9)] == [1, 1, 2, 5, 14, 42, 132]


def test_counts_table_row():
    assert [heawood.closed_form_count(6, r) for r in range(3)] == [22, 21, 21]
    assert heawood.brute_force_count(7, 1) == 43


def test_audit_report():
    report = heawood.audit("t2", max_v=6)
    assert report["statement"] == "T2"
    assert report["verdict"] == "holds"
    assert "elapsed_seconds" not in report
    assert heawood.audit("T1", budget=1e-9)["verdict"] == "exhausted-bound"


def test_errors_carry_codes():
    with pytest.raises(heawood.Error) as info:
        heawood.audit("T9")
    assert info.value.code == "UnknownStatement"
    with pytest.raises(heawood.Error) as info:
        heawood.solve("{not json")
    assert info.value.code == "ParseError"
    bad = {"v": 3, "triangles": [[0, 1, 2]]}
    with pytest.raises(heawood.Error):
        heawood.solve(bad)


def test_dot_uses_labels():
    g = heawood.generate("octahedron")
    g["labels"] = list("ABCDEF")
    dot = heawood.to_dot(g, heawood.solve(g)["coloring"])
    assert dot.startswith("graph heawood {")
    assert 'label="F"' in dot
