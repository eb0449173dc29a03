"""Hankel matrices and determinant engines."""

from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from hankelbe.hankel import (
    HankelMatrix,
    InsufficientCoefficientsError,
    NotCheckerboardError,
    checkerboard_det,
    checkerboard_split,
    det_bareiss,
    det_cofactor,
    det_exact,
    det_gauss,
    hankel_det,
    hankel_matrix,
    shift_factor_dn,
    shift_factor_dn_via_det,
    term_from_str,
    term_to_str,
)
from hankelbe.orthopoly import RecurrenceCoeffs, builtin_recurrence_bern_odd
from hankelbe.poly import UniPoly, cancel_and_eval_limit
from hankelbe.sequences import (
    bern_diff_sum,
    bernoulli_number,
    euler_number,
    get_spec,
    resolve,
)

X = UniPoly.x()

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)


def hankel_terms(max_order=5):
    return st.integers(min_value=0, max_value=max_order).flatmap(
        lambda n: st.lists(rationals, min_size=2 * n + 1, max_size=2 * n + 1)
    )


# -- construction ---------------------------------------------------------


def test_matrix_examples():
    m = hankel_matrix(get_spec("E_k"), 1)
    assert m.rows() == [[1, 0], [0, -1]]
    m = hankel_matrix(get_spec("kE_{k-1}"), 1)
    assert m.rows() == [[0, 1], [1, 0]]
    m = hankel_matrix(get_spec("B_k"), 0)
    assert m.rows() == [[1]]


def test_matrix_is_persymmetric():
    m = hankel_matrix(get_spec("B_k"), 4)
    for i in range(5):
        for j in range(5):
            assert m.entry(i, j) == m.entry(j, i) == m.terms[i + j]


def test_matrix_rejects_mixed_entries():
    with pytest.raises(ValueError):
        HankelMatrix((F(1), UniPoly.x(), F(0)))
    with pytest.raises(ValueError):
        HankelMatrix((F(1), F(2)))  # even term count


def test_empty_matrix_convention():
    m = HankelMatrix(())
    assert m.order == -1
    assert det_exact(m).value == 1


# -- engines --------------------------------------------------------------


def test_det_examples():
    assert det_gauss([[F(1), F(0)], [F(0), F(-1)]])[0] == -1
    assert det_gauss([[F(1), F(-1, 2)], [F(-1, 2), F(1, 6)]])[0] == F(-1, 12)
    assert det_gauss([[F(0), F(1)], [F(1), F(0)]])[0] == -1


def test_hankel_det_examples():
    assert hankel_det(get_spec("E_k"), 2).value == -4
    assert hankel_det(get_spec("B_k"), 1).value == F(-1, 12)
    assert hankel_det(get_spec("kE_{k-1}"), 3).value == 256
    for name in ("E_k", "B_k", "zigzag"):
        spec = get_spec(name)
        assert hankel_det(spec, 0).value == resolve(spec, 0)


def test_polynomial_determinant():
    spec = get_spec("B_2k+1((x+1)/2)")
    got = hankel_det(spec, 1).value
    want = -F(1, 48) * (X**2) * (X * X - 1)  # -(x/2)^2 (x^2-1)/12
    assert got == want
    assert hankel_det(spec, 1).algorithm == "bareiss"


@settings(max_examples=60, deadline=None)
@given(hankel_terms(4))
def test_algorithm_agreement(terms):
    rows = HankelMatrix(tuple(terms)).rows()
    g = det_gauss(rows)[0]
    b = det_bareiss(rows)[0]
    assert g == b
    if len(rows) <= 5:
        assert det_cofactor(rows) == g


@settings(max_examples=40, deadline=None)
@given(hankel_terms(3), rationals)
def test_scalar_multiple_law(terms, lam):
    rows = HankelMatrix(tuple(terms)).rows()
    n1 = len(rows)
    scaled = [[lam * v for v in row] for row in rows]
    assert det_gauss(scaled)[0] == lam**n1 * det_gauss(rows)[0]


def test_bareiss_handles_polynomials_with_zero_pivots():
    # checkerboard polynomial matrix forces pivoting in fraction-free form
    spec = get_spec("kE_{k-1}(x)")
    assert hankel_det(spec, 2).value == UniPoly.zero()
    assert hankel_det(spec, 1).value == UniPoly.constant(-1)


def test_gauss_rejects_polynomials():
    with pytest.raises(TypeError):
        det_gauss([[UniPoly.x()]])


# -- structural determinant laws -------------------------------------------


@pytest.mark.parametrize("name,base", [("B_k", bernoulli_number), ("E_k", euler_number)])
@pytest.mark.parametrize("n", range(4))
def test_geometric_scaling_law(name, base, n):
    # multiplying c_k by x^k scales H_n by x^(n(n+1)), as a polynomial identity
    terms = tuple(X**k * base(k) for k in range(2 * n + 1))
    scaled = det_bareiss(HankelMatrix(terms).rows())[0]
    plain = hankel_det(get_spec(name), n).value
    assert scaled == X ** (n * (n + 1)) * plain


def _binomial_transform(terms, x):
    zero = UniPoly.zero() if isinstance(x, UniPoly) else F(0)
    return tuple(
        sum((comb(k, j) * terms[j] * x ** (k - j) for j in range(k + 1)), zero)
        for k in range(len(terms))
    )


@pytest.mark.parametrize("n", range(4))
def test_binomial_transform_invariance(n):
    terms = tuple(bernoulli_number(k) for k in range(2 * n + 1))
    transformed = _binomial_transform(terms, X)
    assert det_bareiss(HankelMatrix(transformed).rows())[0] == hankel_det(get_spec("B_k"), n).value
    # and hence H_n(B_k(x)) = H_n(B_k) since B_k(x) is that transform
    assert hankel_det(get_spec("B_k(x)"), n).value == hankel_det(get_spec("B_k"), n).value


@pytest.mark.parametrize("n", range(4))
def test_euler_polynomial_determinant_factor(n):
    got = hankel_det(get_spec("E_k(x)"), n).value
    want = F(1, 2 ** (n * (n + 1))) * hankel_det(get_spec("E_k"), n).value
    assert got == want


@pytest.mark.parametrize("q,r,s", [(2, 0, 1), (3, 1, 2), (4, 1, 3)])
@pytest.mark.parametrize("n", range(5))
def test_x_independence_of_difference_families(q, r, s, n):
    for sign in "+-":
        spec = bern_diff_sum(q, r, s, sign)
        val = hankel_det(spec, n).value
        assert val.is_constant()
        from hankelbe.sequences import euler_diff_sum

        val = hankel_det(euler_diff_sum(q, r, s, sign), n).value
        assert val.is_constant()


# -- checkerboard factorization ---------------------------------------------


def test_checkerboard_small_examples():
    a, d = F(7), F(-3, 2)
    fac = checkerboard_det([[F(0), d], [a, F(0)]])
    assert fac.total == -a * d and fac.sign == -1
    z = F(0)
    fac = checkerboard_det([[z, F(2), z], [F(3), z, F(4)], [z, F(5), z]])
    assert fac.total == 0 and fac.support == "odd"


def test_checkerboard_paper_patterns():
    # 4x4 odd-support: det = det[[f,g],[k,l]] * det[[d,e],[i,j]]
    d, e, f, g, i, j, k, l = (F(v) for v in (2, 3, 5, 7, 11, 13, 17, 19))
    z = F(0)
    rows = [[z, d, z, e], [f, z, g, z], [z, i, z, j], [k, z, l, z]]
    fac = checkerboard_det(rows)
    assert fac.sign == 1
    assert fac.total == (f * l - g * k) * (d * j - e * i) == det_gauss(rows)[0]
    # 4x4 and 5x5 even-support split
    a, b, c, m = F(23), F(29), F(31), F(37)
    rows = [[a, z, b, z], [z, d, z, e], [f, z, g, z], [z, i, z, j]]
    fac = checkerboard_det(rows)
    assert fac.total == (a * g - b * f) * (d * j - e * i) == det_gauss(rows)[0]


@pytest.mark.parametrize("q,r,s", [(2, 0, 1), (3, 1, 2), (1, 0, 3)])
@pytest.mark.parametrize("n", range(6))
def test_checkerboard_reassembly_on_difference_families(q, r, s, n):
    x0 = F(q - r - s, 2)
    spec = bern_diff_sum(q, r, s, "-").evaluated_at(x0)
    m = hankel_matrix(spec, n)
    fac = checkerboard_split(m)
    assert fac.total == det_exact(m, "gauss").value
    assert det_exact(m, "checkerboard").value == fac.total


def test_checkerboard_rejects_general_matrix():
    with pytest.raises(NotCheckerboardError):
        checkerboard_det([[F(1), F(1)], [F(1), F(1)]])


def test_checkerboard_sign_matches_direct_det():
    # 2x2 and 6x6 odd-support have sign -1, 4x4 has +1
    for n, want in ((1, -1), (3, 1), (5, -1)):
        spec = get_spec("kE_{k-1}")
        m = hankel_matrix(spec, n)
        fac = checkerboard_split(m)
        assert fac.sign == want
        assert fac.total == det_exact(m, "gauss").value


# -- the shift factors d_n ----------------------------------------------------


def test_dn_small():
    co = RecurrenceCoeffs(s=(F(2), F(3)), t=(F(5),), zeta=(F(1), F(1)))
    assert shift_factor_dn(co, 0) == -2
    assert shift_factor_dn(co, 1) == 2 * 3 - 5
    assert shift_factor_dn_via_det(co, 1) == 1
    with pytest.raises(InsufficientCoefficientsError):
        shift_factor_dn(co, 2)


@pytest.mark.parametrize("n", range(5))
def test_dn_recurrence_equals_determinant(n):
    co = builtin_recurrence_bern_odd(n, F(1, 2))
    assert shift_factor_dn(co, n) == shift_factor_dn_via_det(co, n)
    sym = builtin_recurrence_bern_odd(n)
    assert shift_factor_dn(sym, n) == shift_factor_dn_via_det(sym, n)


def test_dn_limit_values():
    co = builtin_recurrence_bern_odd(3)
    x2m1 = UniPoly((-1, 0, 1))
    assert cancel_and_eval_limit(shift_factor_dn(co, 2), x2m1, -1) == F(3, 10)
    assert cancel_and_eval_limit(shift_factor_dn(co, 3), x2m1, -1) == F(-36, 35)


# -- results and serialization -------------------------------------------------


def test_det_result_serialization():
    res = hankel_det(get_spec("B_k"), 2)
    d = res.to_dict()
    assert d["algorithm"] == "gauss" and term_from_str(d["value"]) == res.value

    res = hankel_det(get_spec("B_2k+1((x+1)/2)"), 1)
    assert term_from_str(res.to_dict()["value"]) == res.value


def test_matrix_serialization():
    m = hankel_matrix(get_spec("B_k"), 2)
    d = m.to_dict()
    assert d["order"] == 2 and d["kind"] == "rational"
    assert [term_from_str(s) for s in d["terms"]] == list(m.terms)


def test_term_roundtrip():
    for t in (F(-7, 3), UniPoly((F(1, 2), 0, -2)), UniPoly.zero()):
        assert term_from_str(term_to_str(t)) == t


def test_recurrence_product_algorithm():
    for name in ("B_k", "E_k", "B_2k+1(3/4)"):
        spec = get_spec(name)
        for n in range(5):
            assert det_exact(hankel_matrix(spec, n), "recurrence").value == hankel_det(spec, n).value
