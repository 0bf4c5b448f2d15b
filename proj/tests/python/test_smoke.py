"""Smoke tests for the python bindings: load/validate, cohomology tables,
the identity catalogue, and tree combinatorics, against the shipped fixtures."""

import os

import pytest

import homalg

FIXTURES = os.environ["HOMALG_FIXTURES"]


def fx(name):
    return os.path.join(FIXTURES, name)


def test_load_and_validate():
    a = homalg.load(fx("dual.json"))
    assert a.kind == "hom-associative"
    assert a.dim == 2
    assert a.is_valid()
    assert a.validate() == []
    assert "hom-associative" in repr(a)


def test_violations_are_structured():
    bad = homalg.load(fx("dual_perturbed.json"))
    assert not bad.is_valid()
    rows = bad.validate()
    assert {row["rule"] for row in rows} == {"multiplicativity", "twisted associativity"}
    for row in rows:
        assert isinstance(row["indices"], list)
        assert row["detail"]


def test_cohomology_dual_numbers():
    table = homalg.load(fx("dual.json")).cohomology(3)
    assert table["z1"] == 1
    by_degree = {row["n"]: row for row in table["rows"]}
    assert by_degree[2]["h"] == 1
    assert by_degree[3]["h"] == 1
    assert by_degree[2]["cochains"] - by_degree[2]["coboundary_rank"] >= 1


def test_cohomology_dialgebra():
    table = homalg.load(fx("bimodule.json")).cohomology(2)
    assert table["kind"] == "hom-dialgebra"
    assert table["rows"][0]["n"] == 2


def test_cohomology_rejects_lawless_input():
    bad = homalg.load(fx("dual_perturbed.json"))
    with pytest.raises(ValueError):
        bad.cohomology(2)


def test_json_round_trip():
    a = homalg.load(fx("dual_yau2.json"))
    again = homalg.loads(a.to_json())
    assert again.name == a.name
    assert again.to_json() == a.to_json()


def test_file_errors():
    with pytest.raises(homalg.FileError):
        homalg.load(fx("does_not_exist.json"))
    with pytest.raises(homalg.FileError):
        homalg.loads("{not json")


def test_catalogue_and_single_identity():
    names = homalg.catalogue()
    assert len(names) == 20
    assert "delta-squared" in names
    verdicts = homalg.verify("delta-squared", trials=2)
    assert len(verdicts) == 1
    assert verdicts[0]["outcome"] == "pass"


def test_verify_all_is_deterministic():
    first = homalg.verify(trials=2, max_degree=3)
    second = homalg.verify(trials=2, max_degree=3)
    assert first == second
    assert first[0]["identity"] == "validate-fixtures"
    assert all(v["outcome"] in ("pass", "skip") for v in first)


def test_verify_with_supplied_algebra():
    a = homalg.load(fx("dual.json"))
    ok = homalg.verify("mu-square", algebra=a, trials=2)
    assert ok[0]["outcome"] == "pass"
    skipped = homalg.verify("pi-square", algebra=a, trials=2)
    assert skipped[0]["outcome"] == "skip"


def test_unknown_identity_raises():
    with pytest.raises(ValueError):
        homalg.verify("no-such-identity", trials=2)


def test_tree_combinatorics():
    assert homalg.tree_labels(3) == ["[123]", "[131]", "[213]", "[312]", "[321]"]
    assert len(homalg.tree_labels(8)) == 1430
    assert homalg.tree_faces("[131]") == ["[21]", "[21]", "[12]", "[12]"]
    assert homalg.tree_bullets("[131]") == ["⊢", "⊢", "⊣", "⊣"]
    with pytest.raises(ValueError):
        homalg.tree_faces("[999]")
