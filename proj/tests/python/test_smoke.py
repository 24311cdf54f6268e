"""Smoke tests for the x1poly extension module."""

from fractions import Fraction

import pytest

import x1poly


def frac(s):
    return Fraction(s)


def test_jacobi_first_polynomial_and_eigenvalues():
    # alpha=1, beta=2: a=1/2, b=3, c=5; P1 = -(x-c)/2 = 5/2 - x/2
    row = x1poly.x1_jacobi(1, "1", "2")
    assert row["coefficients"] == ["5/2", "-1/2"]
    assert row["lambda"] == "0"
    # lambda_n = (n-1)(n+alpha+beta)
    for n in range(1, 7):
        row = x1poly.x1_jacobi(n, "1", "2")
        assert frac(row["lambda"]) == (n - 1) * (n + 3)


def test_laguerre_first_polynomial():
    row = x1poly.x1_laguerre(1, "1")
    assert row["coefficients"] == ["-2", "-1"]  # -x - alpha - 1
    for n in range(1, 6):
        assert frac(x1poly.x1_laguerre(n, "1")["lambda"]) == n - 1


def test_eigenpoly_closed_form_degree_two():
    # P2 = (x-b)^2 + (2 k0 a / lambda2)(x-c); a=1/2, b=3, k0=8, k1=6, k2=1
    out = x1poly.x1_eigenpoly(2, "1/2", "3", "8", "6", "1")
    assert out["lambda"] == "5"
    assert out["coefficients"] == ["1", "-22/5", "1"]


def test_covariant_examples():
    n = 6
    # P_{n-1} inside P_n has covariant 1
    basis = ["1", "x", "x^2", "x^3", "x^4", "x^5"]
    assert x1poly.fundamental_covariant(n, basis) == "1"
    # the monomial gap space <1, x^2, ..., x^n> has covariant x^{n-1}
    basis = ["1", "x^2", "x^3", "x^4", "x^5", "x^6"]
    assert x1poly.fundamental_covariant(n, basis) == "x^5"


def test_classify_flag_subspace():
    n = 6
    basis = ["x + 1", "x^2", "x^3", "x^4", "x^5", "x^6"]
    rep = x1poly.classify_subspace(n, basis)
    assert rep["exceptional"] is True
    assert rep["equivalentToE10"] is True
    assert rep["solverDimension"] == 7
    assert "witness" in rep


def test_d2_dimensions():
    n = 5
    pn = ["1", "x", "x^2", "x^3", "x^4", "x^5"]
    assert x1poly.d2_dimension(n, pn, "1", n + 4) == 9
    flag = ["x - 1", "x^2", "x^3", "x^4", "x^5"]  # a=1, b=0
    assert x1poly.d2_dimension(n, flag, "x", n + 5) == 7


def test_bochner_round_trip():
    op = x1poly.make_x1_operator("1/2", "3", "8", "6", "1")
    rep = x1poly.bochner_classify(op["p"], op["q"], op["r"], nmax=6)
    assert rep["class"] == "x1"
    assert rep["params"]["a"] == "1/2"
    assert rep["params"]["c"] == "5"
    assert rep["additiveConstant"] == "0"
    assert 0 not in rep["solvableDegrees"]


def test_gram_matrix_is_numerically_diagonal():
    out = x1poly.gram_matrix("jacobi", "1", "2", nmax=3, order=80)
    g = out["matrix"]
    for i in range(3):
        for j in range(3):
            if i == j:
                assert g[i][j] > 0
            else:
                assert abs(g[i][j]) < 1e-8 * (g[i][i] * g[j][j]) ** 0.5
    nv = x1poly.norm_squared("jacobi", "1", "2", n=1)
    assert g[0][0] == pytest.approx(nv["value"], rel=1e-10)


def test_invalid_parameters_raise():
    with pytest.raises(Exception):
        x1poly.x1_jacobi(1, "1", "1")  # alpha == beta
    with pytest.raises(Exception):
        x1poly.x1_laguerre(1, "0")  # alpha must be positive
    with pytest.raises(Exception):
        x1poly.x1_eigenpoly(2, "0", "0", "1", "1", "1")  # a = 0
