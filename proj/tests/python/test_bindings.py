import math

import pytest

import kneading_groups as kg


def test_basilica_nucleus():
    g = kg.kv("0")
    assert g.name == "K_0"
    assert g.n == 2 and g.d == 2
    nucleus = g.nucleus()
    assert len(nucleus) == 7
    assert set(nucleus) == {"1", "a1", "a1^-1", "a2", "a2^-1", "a1 a2^-1", "a2 a1^-1"}
    assert len(g.nucleus_closed_form()) == 7


def test_word_problem():
    g = kg.kv("0")
    assert g.is_trivial("[a2, a2^a1]")
    assert not g.is_trivial("[a1,a2]")
    assert g.equal("a1 a1", "a1^2")
    assert g.is_level_transitive("a1 a2")
    assert g.abelianize("a1 a2^-1") == [1, -1]


def test_orders():
    assert kg.kwv("0", "1").order("b1") == 2
    assert kg.kwv("1", "10").order("[b1,a1]") == 4
    assert kg.kv("0").order("a1") == math.inf


def test_endomorphism():
    g = kg.kwv("1", "10")
    e = g.endomorphism()
    assert e["m"] == 2 and e["s"] == "1" and e["t"] == "b1" and e["ok"]
    assert g.phi("1") == "1"
    with pytest.raises(ValueError):
        kg.kwv("0", "1").endomorphism()


def test_presentation():
    total, distinct, failures = kg.kv("0").check_presentation(3)
    assert total == 4 and failures == 0
    total, distinct, failures = kg.kwv("110", "1").check_presentation(2)
    assert total > 0 and failures == 0
    assert kg.kv("11").hnn()["p"] == "t + t^2"


def test_family_checks():
    assert kg.kv("01").mirror_check()
    assert kg.kwv("0", "1").mirror_check()
    assert kg.kv("0").recurrence_check()
    summary, lines = kg.kwv("0", "1").witnesses()
    assert summary == "dihedral; not weakly branch; no witnesses" and lines == []


def test_angles():
    orbit, preperiod, period = kg.doubling_orbit("9/56")
    assert orbit == ["9/56", "9/28", "9/14", "2/7", "4/7", "1/7"]
    assert (preperiod, period) == (3, 3)
    k = kg.kneading_sequence("9/56")
    assert k["raw"] == "110(111)" and (k["w"], k["v"]) == ("110", "1")
    assert kg.itinerary("1/7", "1/7", 3) == "11*"
    assert kg.group_from_angle("1/6").name == "K_{1,10}"
    assert kg.group_from_angle("0").name == "K_{}"


def test_automaton_json():
    g = kg.kwv("1", "10")
    a = kg.Automaton.from_json(g.automaton.to_json())
    assert a.names() == ["b1", "a1", "a2"]
    assert a.is_trivial("b1 b1")
    assert a.act("b1", "01") == "11"
    assert "fillcolor=black" in a.moore_dot()


def test_domain_errors():
    with pytest.raises(ValueError):
        kg.kwv("1", "1")
    with pytest.raises(ValueError):
        kg.kv("0").is_trivial("a7")
