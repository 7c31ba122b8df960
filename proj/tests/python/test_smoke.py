import json
import os

import pytest

import rank2sg

FIXTURES = os.environ.get("RANK2SG_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def test_forward_cycle_relations():
    th = rank2sg.builtin_theta("forward3")
    assert rank2sg.red_first(th, "e1.f1") == "f2.e1"
    assert rank2sg.normal_form(th, "f2.e1") == "e1.f1"
    assert rank2sg.commutes(th, "1121212", "1222212")


def test_toml_fixture_matches_builtin():
    for name in rank2sg.fixture_names():
        assert rank2sg.load_theta(os.path.join(FIXTURES, name + ".toml")) == rank2sg.builtin_theta(name)


def test_bad_relations_raise_with_code():
    with pytest.raises(rank2sg.DomainError) as info:
        rank2sg.Theta.from_relations(2, 2, [[1, 1, 1, 1], [1, 2, 1, 1], [2, 1, 2, 1], [2, 2, 2, 2]])
    assert info.value.code == "duplicate-target"


def test_grid_decomposes_into_three():
    th = rank2sg.builtin_theta("forward3")
    grid = rank2sg.from_commuting_pair(th, "211", "121")
    assert grid.validate() == "ok"
    assert grid.size == 9
    assert len(grid.decompose()) == 3
    assert grid.classify() == "1"


def test_dilation_counts():
    th = rank2sg.builtin_theta("reverse3")
    g = json.loads(rank2sg.dilate(th, rank2sg.fixed_point_rep(), depth=5))
    assert len(g["vertices"]) == 112
    assert len(g["edges"]) == 224
    assert rank2sg.to_dot(json.dumps(g)).startswith('digraph "rep"')


def test_search():
    assert rank2sg.iso_classes(2, 2) == 9
    res = rank2sg.find_commuting_pair(rank2sg.builtin_theta("forward3"), 7)
    assert res["dimension"] >= 7
    assert rank2sg.aperiodic_search(rank2sg.builtin_theta("flip")) is None
