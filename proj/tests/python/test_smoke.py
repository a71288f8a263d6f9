from fractions import Fraction

import pytest

import pentaflag


def test_opt_formula_small_k():
    assert pentaflag.opt_formula(3) == Fraction(40, 27)
    assert pentaflag.opt_formula(4) == Fraction(45, 16)


def test_multipartite_counts():
    assert pentaflag.multipartite_c5_count([2, 2, 2]) == 24
    assert pentaflag.multipartite_c5_count([2, 2, 2, 2]) == 288
    assert pentaflag.multipartite_c5_count([5]) == 0


def test_turan_density():
    assert pentaflag.turan_density_c5(3, 6) == Fraction(24, 6)


def test_enumeration_on_five_vertices():
    classes = pentaflag.enumerate_graph6(5)
    assert len(classes) == 34
    counts = sorted(c for c in map(pentaflag.five_cycle_count, classes) if c)
    assert counts == [1, 1, 1, 2, 2, 4, 6, 12]


def test_cli_count(tmp_path):
    code, report = pentaflag.run_json("--cache-dir", str(tmp_path), "count", "multipartite", "--parts", "2,2,2")
    assert code == 0
    assert report["schema"] == 1
    assert report["rows"][0]["nu"] == "24"


def test_cli_oracle_emits_turan_graph(tmp_path):
    code, report = pentaflag.run_json("--cache-dir", str(tmp_path), "oracle", "--n", "6", "--forbid", "4", "--emit", "graph6")
    assert code == 0
    assert int(report["rows"][0]["max_count"]) >= 24
    assert any(row.get("graph6") == "E]~o" for row in report["rows"])


def test_cli_usage_error():
    code, _, err = pentaflag.run(["oracle", "--n", "12", "--forbid", "3"])
    assert code == 2
    assert "--n" in err
    with pytest.raises(ValueError):
        pentaflag.run_json("count", "turan", "--k", "3")
