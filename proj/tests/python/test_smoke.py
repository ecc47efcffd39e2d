import os
from fractions import Fraction
from pathlib import Path

import pytest

import epsnc

DATA = Path(os.environ.get("EPSNC_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_endpoint_counts():
    labels = [1, 2, 3, 4]
    assert len(epsnc.enumerate_eps_nc(labels, epsnc.EpsilonMatrix.uniform(labels, True, False))) == 15
    assert len(epsnc.enumerate_eps_nc(labels, epsnc.EpsilonMatrix.uniform(labels, False, False))) == 14
    assert epsnc.bell_number(8) == 4140
    assert epsnc.catalan_number(5) == 42


def test_single_commuting_pair():
    eps = epsnc.EpsilonMatrix.from_json((DATA / "eps" / "only_23_4.json").read_text())
    parts = epsnc.enumerate_eps_nc([1, 2, 3, 4], eps)
    assert len(parts) == 15
    assert [[1, 3], [2, 4]] in parts
    assert epsnc.is_eps_noncrossing([[1, 3], [2, 4]], [1, 2, 3, 4], eps)
    assert epsnc.join([[1, 3], [2], [4]], [[1], [2, 4], [3]], [1, 2, 3, 4], eps) == [[1, 3], [2, 4]]


def test_lattice_of_three_points():
    lat = epsnc.lattice([1, 2, 3], epsnc.EpsilonMatrix.uniform([1, 2, 3], True, False))
    assert len(lat["nodes"]) == 5
    assert len(lat["covers"]) == 6


def test_models_and_cumulants():
    tensor = epsnc.Model.bundled("semicircular-tensor")
    assert tensor.moment([1, 2, 1, 2]) == 1
    assert epsnc.Model.bundled("semicircular-free").moment("1,2,1,2") == 0
    assert tensor.cumulant([1, 1, 1, 1]) == 0
    assert tensor.cumulant([(1, 0), (2, None)]) == 0

    model = epsnc.Model(epsnc.EpsilonMatrix([1], [[1]]), {1: {1: Fraction(1, 2), 2: "3/4"}})
    assert model.moment([1, 1]) == Fraction(1, 4) + Fraction(3, 4)
    assert model.cumulant([1, 1]) == Fraction(3, 4)
    assert isinstance(model.cumulant([1]), Fraction)


def test_cumulants_from_moments():
    moments = {"1": 0, "1,1": 1, "1,1,1": 0, "1,1,1,1": 2}
    table = dict((tuple(w), v) for w, v in epsnc.cumulants(moments, "1,1,1,1", epsnc.EpsilonMatrix([1], [[0]])))
    assert table[((1, 0), (1, 0))] == 1
    assert table[((1, 0),) * 4] == 0


def test_oracles():
    assert epsnc.classical_cumulants([0, 1, 0, 3]) == [0, 1, 0, 0]
    assert epsnc.free_cumulants([0, 1, 0, 2]) == [0, 1, 0, 0]


def test_errors():
    with pytest.raises(ValueError):
        epsnc.EpsilonMatrix([1, 2], [[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        epsnc.Model(epsnc.EpsilonMatrix([1], [[1]]), {1: {2: 0.5}})
    with pytest.raises(KeyError):
        epsnc.cumulants({"1": 0}, "1,1", epsnc.EpsilonMatrix([1], [[0]]))
    with pytest.raises(epsnc.LimitExceeded):
        labels = list(range(1, 10))
        epsnc.enumerate_eps_nc(labels, epsnc.EpsilonMatrix.uniform(labels, False, False))


def test_verify_suite():
    report = epsnc.verify("mixed-cumulants", max_n=3)
    assert report["pass"] is True
    assert "theorem8" in epsnc.suite_names()
