from fractions import Fraction

import pytest

import fdgb


def test_parse_and_render():
    assert fdgb.parse_poly("(x^2-2)*(x+1)") == [-2, -2, 1, 1]
    assert fdgb.to_text([2, -2, 1]) == "x^2-2*x+2"
    with pytest.raises(ValueError):
        fdgb.parse_poly("x^(-1)")


def test_verdicts():
    v = fdgb.phi1("x^2+x+1")
    assert v["kind"] == "Yes"
    assert v["witness"] == [-1, 1]
    assert fdgb.phi1([1, -2, 1])["kind"] == "No"
    assert fdgb.phi1("x^3-x^2+x-2")["kind"] == "ConjecturalYes"
    assert fdgb.in_phi0([-8, 0, 0, 0, 0, -2, 1])


def test_fstar_and_witness():
    assert fdgb.compute_fstar("(x^2-2)*(x^2-2*x+2)", 8) == [-16, 1]
    w = fdgb.find_witness("x^2-2*x+2", 8)
    assert w["degree"] == 4
    assert w["witness"] == [-4, -4, -2, 0, 1]
    assert fdgb.find_witness("x^2-2*x+2", 3) is None


def test_bounds():
    assert fdgb.series_lower_bound("x^2-2*x+2") == (4, True)
    assert fdgb.complex_lower_bound("x^2-2*x+2") == 4
    assert fdgb.quadratic_min_degree("x^2-x+2") == 2
    p = fdgb.polya_exponent("x^2-2*x+2")
    assert p["N_f"] == 9
    assert p["lambda"] == Fraction(1, 5)


def test_bases():
    g = fdgb.finite_gb("x^2+x+1")
    assert g["kind"] == "Basis"
    assert g["basis"]["text"] == ["y^[x^2+x+1] - 1", "y^[x^3] - y"]
    assert g["basis"]["certified"]
    assert fdgb.finite_gb("x^2-2*x+1")["kind"] == "Infinite"
    assert fdgb.infinite_gb_stream("x^2-2*x+1", 2) == [[-1, 2, 0, -2, 1], [0, 2, -4, 0, 3, 0, 0, -2, 1]]


def test_ideals():
    gens = ["2*(x^2-2)", "(x^2-2)*(x+1)"]
    assert fdgb.zx_groebner(gens) == [[-4, 0, 2], [-2, -2, 1, 1]]
    c = fdgb.finite_sgb_criterion(gens)
    assert c["kind"] == "Finite"
    b = fdgb.multi_finite_gb(gens, c["witness"])
    assert b["certified"]


def test_big_coefficients():
    big = 10**40 + 7
    assert fdgb.parse_poly(str(big)) == [big]
    assert fdgb.to_text([1, big]) == f"{big}*x+1"


def test_cli():
    code, out, _ = fdgb.run_cli(["phi1", "x^2+x+1"])
    assert code == 0
    assert "witness: x-1" in out
    assert fdgb.run_cli(["phi1", "x^3-x^2+x-2"])[0] == 2
    assert fdgb.run_cli(["phi1", "x^("])[0] == 1
