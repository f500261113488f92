import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flagheight.height import (
    NotRegularY,
    closed_form,
    default_y,
    denominator_check,
    height_all_methods,
    height_fixed_point,
    height_grassmannian,
    height_harmo_bott,
    height_hypersurface,
    height_projective,
    height_quadric_even,
    height_quadric_odd,
    height_substitution,
    ht_coefficient,
)
from flagheight.parabolic import NotAmple, build_parabolic
from flagheight.rootsys import build_root_system


def proj_parabolic(n):
    """P^n as A_n with the first node removed from the Levi."""
    rs = build_root_system(f"A{n}")
    theta = frozenset(range(1, n))
    lam = tuple(1 if i == 0 else 0 for i in range(n))
    return build_parabolic(rs, theta), lam


# -- Ht class -----------------------------------------------------------


def test_ht_coefficients():
    assert ht_coefficient(0) == Fraction(1, 2)
    assert ht_coefficient(1) == Fraction(-1, 8)
    assert ht_coefficient(2) == Fraction(1, 36)
    for k in range(6):
        assert ht_coefficient(k) == Fraction(
            (-1) ** k, 2 * (k + 1) * math.factorial(k + 1))


# -- closed forms -------------------------------------------------------


def test_projective_values():
    assert height_projective(1) == Fraction(1, 2)
    assert height_projective(2) == Fraction(5, 4)
    assert height_projective(3) == Fraction(13, 6)
    assert height_projective(4) == Fraction(77, 24)


def test_quadric_values():
    # Q3 = B2/P1, Q4, Q5, Q6
    assert height_quadric_odd(2) == Fraction(17, 3)
    assert height_quadric_even(2) == Fraction(43, 6)
    assert height_quadric_odd(3) == Fraction(307, 30)
    assert height_quadric_even(3) == Fraction(181, 15)


def test_quadric_odd_degenerate_is_projective_line():
    # Q1 = P^1 in its degree-2 embedding: height scales by 2^{dim+1}
    assert height_quadric_odd(1) == 4 * height_projective(1)


def test_hypersurface_degree_one_is_projective():
    for n in range(1, 7):
        assert height_hypersurface(n, 1) == height_projective(n)


def test_closed_form_dispatch():
    assert closed_form("projective", 2) == Fraction(5, 4)
    with pytest.raises(ValueError):
        closed_form("elliptic", 1)


# -- the three generic algorithms --------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_by_all_methods(n):
    pd, lam = proj_parabolic(n)
    res = height_all_methods(pd, lam)
    assert res.value == height_projective(n)
    assert res.dim_plus_one == n + 1


def test_quadric_b2_by_all_methods():
    rs = build_root_system("B2")
    pd = build_parabolic(rs, {1})
    res = height_all_methods(pd, (1, 0))
    assert res.value == Fraction(17, 3)
    assert res.coxeter == 4


def test_quadric_d4_by_all_methods():
    rs = build_root_system("D4")
    pd = build_parabolic(rs, {1, 2, 3})
    res = height_all_methods(pd, (1, 0, 0, 0))
    assert res.value == height_quadric_even(3)


def test_grassmannian_closed_form():
    assert height_grassmannian(2, 1) == height_projective(1)
    assert height_grassmannian(3, 1) == height_projective(2)
    # G(4,2) via A3 with the middle node
    rs = build_root_system("A3")
    pd = build_parabolic(rs, {0, 2})
    res = height_all_methods(pd, (0, 1, 0))
    assert res.value == height_grassmannian(4, 2)


def test_grassmannian_5_2():
    rs = build_root_system("A4")
    pd = build_parabolic(rs, {0, 2, 3})
    res = height_substitution(pd, (0, 1, 0, 0))
    assert res.value == height_grassmannian(5, 2)


def test_g2_full_flag_rho():
    rs = build_root_system("G2")
    pd = build_parabolic(rs, set())
    res = height_all_methods(pd, (1, 1))
    assert res.value == Fraction(173264, 15)


# -- localization properties -------------------------------------------


Y_CHOICES = [(1, 1), (2, 3), (Fraction(1, 2), Fraction(5, 3))]


@pytest.mark.parametrize("Y", Y_CHOICES)
def test_y_independence(Y):
    rs = build_root_system("B2")
    pd = build_parabolic(rs, set())
    lam = (1, 2)
    base = height_substitution(pd, lam).value
    assert height_fixed_point(pd, lam, Y).value == base
    assert height_harmo_bott(pd, lam, Y).value == base


def test_default_y_is_ones():
    rs = build_root_system("A3")
    assert default_y(rs) == (1, 1, 1)


def test_non_regular_y_rejected():
    rs = build_root_system("A2")
    pd = build_parabolic(rs, set())
    with pytest.raises(NotRegularY):
        height_fixed_point(pd, (1, 1), Y=(1, -1))


def test_non_ample_rejected():
    rs = build_root_system("B2")
    pd = build_parabolic(rs, {1})
    with pytest.raises(NotAmple):
        height_fixed_point(pd, (1, 1))
    with pytest.raises(NotAmple):
        height_substitution(pd, (0, 0))


@pytest.mark.parametrize("a", [2, 3])
def test_homogeneity(a):
    # height(a lam) = a^{dim+1} height(lam)
    rs = build_root_system("A2")
    pd = build_parabolic(rs, set())
    lam = (1, 1)
    scaled = tuple(a * x for x in lam)
    h1 = height_all_methods(pd, lam).value
    ha = height_all_methods(pd, scaled).value
    assert ha == Fraction(a) ** (pd.dim + 1) * h1


def test_denominator_check():
    rs = build_root_system("A2")
    pd = build_parabolic(rs, set())
    res = height_all_methods(pd, (1, 1))
    c = rs.coxeter_number
    assert denominator_check(res, 2 * c - 2)


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 2), st.integers(1, 2))
def test_methods_agree_on_b2_full_flag(x, y):
    rs = build_root_system("B2")
    pd = build_parabolic(rs, set())
    res = height_all_methods(pd, (x, y))
    assert res.method == "substitution"
