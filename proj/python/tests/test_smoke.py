from fractions import Fraction

import pytest

import tropdimer as td


def test_catalog_round_trip():
    assert len(td.catalog_names()) == 8
    for name in td.catalog_names():
        d = td.Dimer.catalog(name)
        assert td.Dimer.from_json(d.to_json()).to_json() == d.to_json()


def test_honeycomb():
    h = td.Dimer.catalog("honeycomb")
    assert h.validate()["ok"]
    assert not h.validate()["self_intersecting"]
    assert h.graph_size() == (6, 9)
    assert h.face_count() == 3
    assert h.euler_characteristic() == 0
    assert h.determinant() == "3 - z1 - z2 - z1^-1*z2^-1"
    assert h.matching_count() == 6
    assert sorted(h.zigzags()) == [(-2, -1), (1, -1), (1, 2)]
    fan = h.fan()
    assert all(m == 3 for _, m in fan)
    assert sorted(r for r, _ in fan) == [(-1, -1), (-1, 2), (2, -1)]
    assert isinstance(fan[0][0][0], Fraction)


def test_gauge_independence():
    h = td.Dimer.catalog("honeycomb")
    base = h.normalized_determinant()
    for seed in range(1, 4):
        assert h.normalized_determinant(f"random:{seed}") == base


def test_mutation():
    h = td.Dimer.catalog("honeycomb")
    m, immersed = h.mutate(1)
    assert immersed
    assert m.validate()["self_intersecting"]
    assert sorted(m.fan()) == sorted(h.fan())
    with pytest.raises(td.DomainError):
        h.mutate(5)


def test_directions_and_genus():
    for name in td.del_pezzo_names():
        seed = td.seed_dimer(name)
        assert td.compare_up_to_unimodular(td.seed_directions(name), seed.mutation_directions()) is not None
    assert [td.genus(d) for d in range(1, 6)] == [0, 0, 1, 3, 6]
    assert td.compare_up_to_unimodular([(1, 0), (0, 1), (-1, -1)], [(2, 0), (0, 1), (-2, -1)]) is None


def test_exchange_round_trip():
    outer = td.outer_torus("cp2")
    ex = td.exchange(outer, [0, 1, 2])
    assert td.diagram_status(ex) == (True, True)
    assert td.same_curve(ex, td.inner_torus("cp2"))
    assert td.same_curve(td.exchange(ex, [0, 1, 2]), outer)
    assert td.section_examples() == (True, False)


def test_errors_and_cli():
    with pytest.raises(td.ParseError):
        td.Dimer.from_json("{")
    code, out, _ = td.run_cli(["kasteleyn", "catalog:honeycomb"])
    assert code == 0
    assert "3 - z1 - z2 - z1^-1*z2^-1" in out
    assert td.run_cli(["nonsense"])[0] == 2
    svg = td.Dimer.catalog("honeycomb").svg(["polytopes", "zigzags"])
    assert svg.count('class="zigzag"') == 3
