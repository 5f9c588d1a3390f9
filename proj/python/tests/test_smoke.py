"""Smoke tests for the Python bindings."""

import pathlib

import pytest

import mpbe

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


@pytest.fixture(scope="module")
def psbe5():
    return mpbe.load(FIXTURES / "psbe5.alg")


def test_document(psbe5):
    assert psbe5.name == "psbe5"
    assert psbe5.elements == ["1", "a", "b", "c", "d"]
    assert psbe5.pairs == ["p1", "p2", "p3", "p4"]
    assert mpbe.parse(psbe5.serialize()).serialize() == psbe5.serialize()


def test_check(psbe5):
    report = mpbe.check(psbe5)
    bck6 = next(v for v in report["pseudo_bck"] if v["name"] == "psBCK6")
    assert bck6["status"] == "fails"
    assert ["b", "c"] in bck6["witnesses"]


def test_mop(psbe5):
    report = mpbe.mop(psbe5)
    assert report["count"] == 4
    assert [p["fixed"] for p in report["pairs"]][-1] == ["1", "c", "d"]


def test_generated(psbe5):
    assert mpbe.generated(psbe5, ["1", "d"]) == ["1", "a", "d"]


def test_systems(psbe5):
    listing = mpbe.systems(psbe5, ["p2"])
    assert [s["members"] for s in listing["systems"]] == [["1"], ["1", "a", "d"], ["1", "b", "c"], ["1", "a", "b", "c", "d"]]


def test_verify_all_fixtures():
    for name in ["psbe4", "psbe5", "bc4", "inv6"]:
        summary = mpbe.verify(mpbe.load(FIXTURES / f"{name}.alg"), threads=2)["summary"]
        assert summary["fails"] == 0


def test_search():
    result = mpbe.search(law="C.psBCK6", max_size=3)
    assert result["status"] == "found"
    assert result["counterexample"]["reverified"]
    again = mpbe.parse(result["counterexample"]["document"])
    assert again.size == 3


def test_laws():
    ids = [law["id"] for law in mpbe.laws()]
    assert "P3.forall_one" in ids
    assert ids == sorted(ids)


def test_errors():
    with pytest.raises(mpbe.ParseError) as info:
        mpbe.parse("algebra x\nelements 1 a\none q\n")
    assert info.value.args[1] == 3
    with pytest.raises(mpbe.Error):
        mpbe.search(max_size=9)
    with pytest.raises(mpbe.Error):
        mpbe.generated(mpbe.load(FIXTURES / "psbe5.alg"), ["zz"])
