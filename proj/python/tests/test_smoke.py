import pytest

import hochkit


def test_builtins_roundtrip():
    for name in hochkit.builtin_names():
        a = hochkit.builtin(name)
        assert a.violations() == []
        assert hochkit.parse_algebra(a.serialize()) == a


def test_hochschild_dims():
    d = hochkit.builtin("dual_numbers")
    assert hochkit.hh_cohomology(d, 5) == [2, 1, 1, 1, 1]
    assert hochkit.hh_homology(d, 5) == [2, 1, 1, 1, 1]
    assert hochkit.hh_cohomology(hochkit.builtin("dual_numbers", "Fp:2"), 4) == [2, 2, 2, 2]
    assert hochkit.cyclic_homology(hochkit.builtin("ground_field"), 5) == [1, 0, 1, 0, 1]


def test_kunneth_and_morita():
    d = hochkit.builtin("dual_numbers")
    r = hochkit.kunneth_hh(d, d, 3)
    assert r["pass"]
    assert [c["actual"] for c in r["degrees"]] == [4, 4, 5, 6]
    assert hochkit.kunneth_hh_homology(d, d, 2)["pass"]
    assert hochkit.morita(d, 2, 2)["pass"]
    assert hochkit.periodicity(d, 5)["pass"]
    assert hochkit.matrix(d, 2).dim == 8


def test_cech():
    for d in range(-4, 5):
        assert hochkit.cech(d) == [max(d + 1, 0), max(-d - 1, 0)]
    assert hochkit.cech_hom(1, -1) == [0, 1]
    assert hochkit.cech_product(-2, -2) == [0, 0, 1]
    assert hochkit.kunneth_cech(1, -2, window=5)["pass"]


def test_errors():
    with pytest.raises(hochkit.ParseError):
        hochkit.parse_algebra("field Q\nbasis 1:0\nunit 1\nx * x = 0\n")
    with pytest.raises(hochkit.InvalidAlgebra):
        hochkit.parse_algebra("field Q\nbasis 1:0 x:1\nunit 1\nx * x = 1\n")
    assert issubclass(hochkit.TruncationError, hochkit.HochkitError)


def test_run_report():
    r = hochkit.run("hh", max_degree=4, timings=False)
    assert r["schema"] == "hochkit/1"
    assert r["pass"]
    assert r["reports"][0]["checks"][0]["actual"] == [2, 1, 1, 1]
    assert hochkit.run("cech-kunneth", a=-2, b=-2)["pass"]
    assert hochkit.criterion(2)["pass"]
