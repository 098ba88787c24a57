import math

import numpy as np
import pytest
from hypothesis import given

from genquat import (
    AlgebraParams,
    GQuat,
    NonFiniteInput,
    ParamsMismatch,
    add,
    basis,
    cayley_table,
    imaginary_form,
    make,
    mul,
    norm_form,
    one,
    rep_matrix,
    right_rep_matrix,
    scale,
    zero,
)

from conftest import basis_product, brute_mul, gquat_tuples, gquats, magnitude, max_abs

Q = AlgebraParams(1.0, 1.0)


def test_make_identity_and_basis():
    assert make(Q, 1, 0, 0, 0) == one(Q)
    e2 = make(AlgebraParams(2, 3), 0, 1, 0, 0)
    assert e2 == basis(AlgebraParams(2, 3), 2)
    assert e2.params == AlgebraParams(2.0, 3.0)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_make_rejects_non_finite(bad):
    with pytest.raises(NonFiniteInput):
        make(Q, bad, 0, 0, 0)
    with pytest.raises(NonFiniteInput):
        AlgebraParams(bad, 1.0)


def test_linear_structure():
    x = make(Q, 1, 2, 0, 0)
    y = make(Q, 0, 0, 1, 1)
    assert add(x, zero(Q)) == x
    assert scale(1, x) == x
    assert add(x, y).coeffs == (1, 2, 1, 1)
    assert (x - x) == zero(Q)
    assert 2 * x == x * 2 == make(Q, 2, 4, 0, 0)


@pytest.mark.parametrize("op", [add, mul])
def test_params_mismatch(op):
    with pytest.raises(ParamsMismatch):
        op(one(Q), one(AlgebraParams(1.0, -1.0)))


def test_mul_examples():
    p = AlgebraParams(2.0, 1.0)
    assert mul(basis(p, 2), basis(p, 2)).coeffs == (-2, 0, 0, 0)
    assert mul(make(Q, 1, 2, 0, 0), make(Q, 0, 0, 1, 1)).coeffs == (0, 0, -1, 3)


@pytest.mark.parametrize("alpha,beta", [(1, 1), (1, -1), (2, 3), (0, 1), (-0.5, 0)])
def test_cayley_table_matches_basis_products(alpha, beta):
    p = AlgebraParams(alpha, beta)
    table = cayley_table(p)
    for i in range(1, 5):
        for j in range(1, 5):
            c, k = basis_product(p, i, j)
            assert table[i - 1][j - 1] == (c, k)
            expected = [0.0] * 4
            expected[k - 1] = c
            assert list(mul(basis(p, i), basis(p, j)).coeffs) == expected


def test_anticommuting_pairs():
    p = AlgebraParams(2.0, -3.0)
    for i, j in [(2, 3), (2, 4), (3, 4)]:
        assert mul(basis(p, i), basis(p, j)) == -mul(basis(p, j), basis(p, i))


@given(gquats())
def test_identity_is_exact(x):
    e1 = one(x.params)
    assert mul(e1, x) == x
    assert mul(x, e1) == x


@given(gquat_tuples(2))
def test_mul_matches_brute_force(xy):
    x, y = xy
    assert max_abs(mul(x, y).coeffs, brute_mul(x, y)) <= 1e-13 * (1 + magnitude(x, y) ** 2)


@given(gquat_tuples(3))
def test_associativity(xyz):
    x, y, z = xyz
    left = mul(mul(x, y), z)
    right = mul(x, mul(y, z))
    scale_ = max(magnitude(left, right), magnitude(mul(x, y), mul(y, z)))
    assert max_abs(left.coeffs, right.coeffs) <= 1e-12 * (1 + scale_)


@given(gquat_tuples(3))
def test_bilinearity(xyz):
    x, y, z = xyz
    tol = 1e-12 * (1 + magnitude(x, y, z) ** 2)
    assert max_abs(mul(add(x, y), z).coeffs, add(mul(x, z), mul(y, z)).coeffs) <= tol
    assert max_abs(mul(z, add(x, y)).coeffs, add(mul(z, x), mul(z, y)).coeffs) <= tol


@given(gquat_tuples(2))
def test_rep_matrix_homomorphism(mx):
    m, x = mx
    tol = 1e-13 * (1 + magnitude(m, x) ** 2)
    assert max_abs(rep_matrix(m) @ x.as_array(), mul(m, x).coeffs) <= tol
    assert max_abs(right_rep_matrix(m) @ x.as_array(), mul(x, m).coeffs) <= tol


def test_rep_matrix_examples():
    p = AlgebraParams(2.0, -1.0)
    np.testing.assert_array_equal(rep_matrix(make(p, 3, 0, 0, 0)), 3 * np.eye(4))
    m = make(p, 1, 2, 3, 4)
    np.testing.assert_array_equal(rep_matrix(m)[:, 0], m.coeffs)


@given(gquat_tuples(2))
def test_norm_multiplicative(xy):
    x, y = xy
    lhs = norm_form(mul(x, y))
    rhs = norm_form(x) * norm_form(y)
    # the products of two forms can cancel; measure against the form of |x|, |y|
    bound = norm_form(GQuat(*map(abs, x.coeffs), AlgebraParams(1, 1)))
    bound *= norm_form(GQuat(*map(abs, y.coeffs), AlgebraParams(1, 1)))
    assert abs(lhs - rhs) <= 1e-10 * (abs(rhs) + 16 * bound)


def test_forms_examples():
    assert imaginary_form(basis(Q, 2)) == 1
    assert imaginary_form(basis(AlgebraParams(1, -1), 3)) == -1
    assert imaginary_form(make(Q, 5, 3, 4, 0)) == 25
    assert norm_form(one(Q)) == 1
    assert norm_form(basis(AlgebraParams(2, 1), 2)) == 2
    x, y = make(Q, 1, 2, 0, 0), make(Q, 0, 0, 1, 1)
    assert norm_form(x) * norm_form(y) == 10 == norm_form(mul(x, y))


def test_zero_parameters_allowed():
    p = AlgebraParams(0.0, 1.0)
    assert mul(basis(p, 2), basis(p, 2)) == zero(p)
    assert norm_form(basis(p, 2)) == 0
