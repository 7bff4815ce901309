import json
import shutil

import pytest

from gkgraph.analysis import analyze
from gkgraph.constructions import (
    GroupSpec,
    build_complement,
    build_frobenius,
    catalog,
    complement_generators,
    default_fixture_dir,
    find_fixture,
    list_fixtures,
    load_fixture,
    lookup,
    parse_fixture,
    pgl2_generators,
)
from gkgraph.errors import (
    BudgetExceeded,
    FieldLacksRoots,
    FixtureOrderMismatch,
    MalformedFixture,
    MissingFixture,
    UnknownSpec,
)
from gkgraph.finfield import make_field
from gkgraph.groups import Bsgs, EnumeratedGroup, bsgs_build
from gkgraph.primegraph import edge_difference, graphs_equal
from gkgraph.spectrum import SpectrumFixture, compute_spectrum, mu


@pytest.mark.parametrize(
    "text,canonical",
    [
        ("S(7)", "S(7)"),
        ("A( 8 )", "A(8)"),
        ("PGL(2, 49)", "PGL(2,49)"),
        ("PSL(2,8)", "PSL(2,8)"),
        ("SL(2,5)", "SL(2,5)"),
        ("frobenius(2)", "frobenius(2)"),
        ("fixture:U4(3).2", "fixture:U4(3).2"),
        ("perm:/tmp/g.json", "perm:/tmp/g.json"),
    ],
)
def test_spec_round_trip(text, canonical):
    spec = GroupSpec.parse(text)
    assert str(spec) == canonical
    assert GroupSpec.parse(str(spec)) == spec


@pytest.mark.parametrize("text", ["B(3)", "PGL(2,6)", "S(0)", "fixture:", "SL(2,7)", ""])
def test_bad_specs(text):
    with pytest.raises(UnknownSpec):
        GroupSpec.parse(text)


def test_pgl249_catalog_entry():
    entry = lookup("PGL(2,49)")
    assert entry.degree == 50
    assert entry.order == 49 * 48 * 50 == 117_600
    assert entry.group.order == 117_600


@pytest.mark.parametrize("q", [5, 7, 8, 9])
def test_pgl2_order_formula(q):
    assert bsgs_build(pgl2_generators(q)).order == q * (q - 1) * (q + 1)
    assert lookup(f"PSL(2,{q})").order == q * (q - 1) * (q + 1) // (2 if q % 2 else 1)


def test_small_catalog_orders():
    assert lookup("S(7)").order == 5040
    assert lookup("A(8)").order == 20160
    assert lookup("SL(2,5)").order == 120


def test_u35_fixture_enumerates():
    entry = lookup("fixture:U3(5)")
    assert entry.degree == 126
    assert entry.group.order == 126_000 == entry.fixture.order
    a = analyze("fixture:U3(5)")
    assert a.strategy == "exhaustive"
    assert a.mu.maxima == (6, 7, 8, 10)


def test_complement_evidence(complement):
    C, ev = complement
    assert ev.identified
    assert ev.order == 120
    assert ev.involutions == 1
    assert ev.center_order == 2
    assert ev.quotient_order == 60 and ev.quotient_simple
    assert ev.spectrum == (1, 2, 3, 4, 5, 6, 10)
    assert ev.generator_orders == {"x": 3, "y": 10, "z": 2}


def test_complement_generator_relations(gf49):
    g = complement_generators(gf49)
    x, y, z = g["x"], g["y"], g["z"]
    alpha = y[0, 1]
    assert alpha * alpha == -1
    beta = 2 * y[1, 1] - 1
    assert beta * beta == 5
    # y^5 is -I, so y has order 10 rather than 5
    assert y**5 == z
    assert (y**10).is_identity()
    assert (x**3).is_identity()


def test_complement_needs_square_roots():
    with pytest.raises(FieldLacksRoots):
        build_complement(make_field(7, 1))
    with pytest.raises(FieldLacksRoots):
        build_complement(make_field(7, 3))
    with pytest.raises(ValueError):
        complement_generators(make_field(5, 2))


def test_complement_over_gf7_4_has_same_spectrum(complement):
    C4, ev4 = build_complement(make_field(7, 4))
    assert C4.order == 120
    assert ev4.spectrum == complement[1].spectrum


def test_frobenius_m1_exhaustive():
    res = build_frobenius(1)
    assert res.witness.order == 288_120 == 7**4 * 120
    assert res.exhaustive.orders == (1, 2, 3, 4, 5, 6, 7, 10)
    assert res.exhaustive.orders == res.decomposition.orders
    kernel = [g for g in res.group if g.A.is_identity() and not g.is_identity()]
    assert len(kernel) == 2400
    assert {g.order() for g in kernel} == {7}


def test_frobenius_m2_witness_mode():
    res = build_frobenius(2)
    assert res.group is None
    # 7^8 * 120
    assert res.witness.order == 691_776_120
    assert res.witness.fpf_certificate.ok
    assert res.spectrum.strategy == "decomposition"
    assert res.spectrum.orders == (1, 2, 3, 4, 5, 6, 7, 10)


def test_frobenius_graph_matches_pgl(pgl249):
    target = analyze("PGL(2,49)").graph
    assert graphs_equal(analyze("frobenius(2)").graph, target)


def test_u43_extensions():
    """Only the 2_2 and 2_3 extensions share the graph of PGL(2,49)."""
    target = analyze("PGL(2,49)").graph
    for name, equal in [("U4(3).2_1", False), ("U4(3).2_2", True), ("U4(3).2_3", True)]:
        a = analyze(f"fixture:{name}", samples=2000, seed=3)
        assert a.strategy == "fixture"
        assert graphs_equal(a.graph, target) == equal
        assert not a.contradictions
    diff = edge_difference(analyze("fixture:U4(3).2_1", samples=2000, seed=3).graph, target)
    assert diff["only_first"] == [[2, 7]]


def test_every_fixture_matches_its_declared_order():
    for name in list_fixtures():
        fx = find_fixture(name)
        assert bsgs_build(fx.permutations()).order == fx.order, name
        if fx.mu is not None:
            assert fx.spectrum_fixture().validate()


def test_fixture_json_round_trip():
    fx = find_fixture("L2(7)")
    assert parse_fixture(fx.to_json()) == fx


def test_small_fixtures_agree_with_enumeration():
    for name in list_fixtures():
        fx = find_fixture(name)
        if fx.mu is None or fx.order > 300_000:
            continue
        G = lookup(f"fixture:{name}").group
        assert mu(compute_spectrum(G)).maxima == fx.mu, name


def test_catalog_return_types():
    assert isinstance(catalog("S(5)"), EnumeratedGroup)
    assert isinstance(catalog("fixture:J2", budget=1000), Bsgs)
    with pytest.raises(BudgetExceeded):
        catalog("frobenius(2)")


def test_catalog_errors(tmp_path):
    with pytest.raises(UnknownSpec):
        catalog("B(3)")
    with pytest.raises(MissingFixture):
        catalog("fixture:Nope")
    with pytest.raises(MissingFixture):
        catalog(f"perm:{tmp_path / 'absent.json'}")

    data = json.loads((default_fixture_dir() / "l2_7.json").read_text())
    data["order"] = 336  # twice the real order, still divisible by mu
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises(FixtureOrderMismatch):
        catalog(f"perm:{bad}")


def test_malformed_fixture_files(tmp_path):
    with pytest.raises(MalformedFixture):
        parse_fixture("{}")
    with pytest.raises(MalformedFixture):
        parse_fixture('{"name":"x","degree":3,"order":6,"generators":[[0,0,1]],"source":"s"}')
    with pytest.raises(MalformedFixture):
        parse_fixture('{"name":"x","degree":3,"order":6,"generators":[[1,0,2]],"mu":[2,4],"source":"s"}')


def test_fixture_directory_override(tmp_path):
    shutil.copy(default_fixture_dir() / "l2_7.json", tmp_path / "anything.json")
    assert list_fixtures(tmp_path) == ["L2(7)"]
    assert lookup("fixture:L2(7)", fixtures_dir=tmp_path).order == 168
    assert load_fixture(tmp_path / "anything.json").degree == 7


def test_spectrum_fixture_type():
    fx = find_fixture("U4(3).2").spectrum_fixture()
    assert isinstance(fx, SpectrumFixture)
    assert fx.mu == (7, 8, 10, 12, 18)
