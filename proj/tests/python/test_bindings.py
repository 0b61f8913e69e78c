from fractions import Fraction

import pytest

import shtk


def test_classify():
    v = shtk.classify("H4:p=1,q=1")
    assert v["finite"] is True
    assert v["bounded"] is False
    assert v["matched_cases"] == ["H4:p=1,q=1"]
    assert shtk.classify("sl(3,R)+sl(3,R)>diag(sl(3,R))")["finite"] is False


def test_orbit_checks():
    assert shtk.check_pp("so(3,1)>so(2,1)")["holds"]
    assert not shtk.check_pp("sp(3,R)>sp(2,R)+sp(1,R)")["holds"]
    assert shtk.check_bb("F1:n=2")["holds"]
    bb = shtk.check_bb("sp(3,C)>sp(2,C)+sp(1,C)")
    assert not bb["holds"] and bb["deterministic"]
    assert not shtk.check_triple("su(2,1)", seed=1, samples=3)["holds"]


def test_cross_validate():
    cv = shtk.cross_validate("F5:p=2,q=1")
    assert cv == {"finite": True, "bounded": True, "pp": True, "bb": True, "agreement": True}


def test_roots():
    d = shtk.restricted_roots("so(3,1)")
    assert d["real_rank"] == 1
    assert d["positive_roots"] == [(["1"], 2)]
    assert d["rho_n"] == ["1"]


def test_infchar():
    assert shtk.rho("sl(3)") == (["1", "0", "-1"], "A")
    assert shtk.canonical_infchar(["-2", 5]) == ["5", "2"]
    assert shtk.canonical_infchar([1, 3, 2], "A") == ["3", "2", "1"]
    assert shtk.infchar_equal([1, -2], [2, 1])
    assert not shtk.infchar_equal([1, 2], [2, -1], "A")
    c, w = shtk.affine_membership([Fraction(1, 2), "7+2i"], [Fraction(1, 2)])
    assert c == "7+2i" and w == {"perm": [1, 0], "signs": [1, 1]}
    assert shtk.affine_membership([5, 1], [0]) is None
    assert shtk.dominant_a_param(-3, 1, "plus") == "4"
    assert shtk.dominant_a_param(3, "1/2", "minus") == "-5/2"
    assert not shtk.dgk_surjective("e6(-26)")


def test_shintani():
    a = shtk.shintani(2, [5, 0], [2])
    assert a["dim_mod"] == 1 and a["c_lambda"] == "5" and a["t"] == "4"
    assert shtk.shintani(2, [5, 1], [2])["dim_mod"] == 0
    assert shtk.shintani(4, ["2+i", 1, 0], ["3/2+i", "1/2"])["dim_mod"] == 1
    assert shtk.bridge_consistency(3, ["1/2", 7], [1, 0])
    assert shtk.l_even_member(-3, -1)
    assert shtk.sbo_dim(-4, -2) == 2


def test_errors():
    with pytest.raises(shtk.ParseError):
        shtk.classify("F5:p=x")
    with pytest.raises(shtk.DomainError):
        shtk.shintani(2, [1], [1])
    with pytest.raises(shtk.Error):
        shtk.rho("e6(-26)")
