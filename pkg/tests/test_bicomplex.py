from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from qbicomplex.bicomplex import (
    IJ,
    ONE,
    Bicomplex,
    ConjKind,
    I,
    J,
    bc_add,
    bc_conjugate,
    bc_euclid_sq,
    bc_from_vec,
    bc_matrix,
    bc_mul,
    bc_norm_product,
    bc_scalar_part,
    bc_scale,
    bc_vec,
    bc_vector_part,
    norm_value,
)
from qbicomplex.scalars import BigFloat, MixedExactnessError, MixedRadicandError, QuadExt
from strategies import exact_bicomplex, quad_bicomplex, rational_bicomplex

ZERO = Bicomplex()


def _cmul(z, w):
    # complex product on (re, im) pairs of exact scalars
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def split_mul(x, y):
    """(z1 + j z2)(w1 + j w2) = (z1 w1 - z2 w2) + j (z1 w2 + z2 w1)."""
    z1, z2 = (x.c0, x.c1), (x.c2, x.c3)
    w1, w2 = (y.c0, y.c1), (y.c2, y.c3)
    a = _cmul(z1, w1)
    b = _cmul(z2, w2)
    c = _cmul(z1, w2)
    d = _cmul(z2, w1)
    return Bicomplex(a[0] - b[0], a[1] - b[1], c[0] + d[0], c[1] + d[1])


def test_componentwise_add_and_scale():
    assert bc_add(Bicomplex(1, 1), Bicomplex(0, 0, 1, 1)) == Bicomplex(1, 1, 1, 1)
    assert bc_scale(2, Bicomplex(1, 3, 7, 15)) == Bicomplex(2, 6, 14, 30)
    x = Bicomplex(Fraction(1, 3), -2, 5, 7)
    assert x + (-1) * x == ZERO


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (I, J, IJ),
        (IJ, IJ, ONE),
        (I, I, -ONE),
        (J, J, -ONE),
        (I, IJ, -J),
        (J, IJ, -I),
    ],
)
def test_unit_table(x, y, expected):
    assert bc_mul(x, y) == expected
    assert bc_mul(y, x) == expected


def test_square_of_all_ones():
    # (1+i+j+ij) = (1+i)(1+j); squared gives (2i)(2j) = 4ij
    x = Bicomplex(1, 1, 1, 1)
    assert x * x == 4 * IJ


def test_zero_divisors_exist():
    assert (ONE + IJ) * (ONE - IJ) == ZERO


@pytest.mark.parametrize(
    "kind, expected",
    [
        (ConjKind.STAR1, Bicomplex(1, -2, 3, -4)),
        (ConjKind.STAR2, Bicomplex(1, 2, -3, -4)),
        (ConjKind.STAR3, Bicomplex(1, -2, -3, 4)),
    ],
)
def test_conjugation_sign_patterns(kind, expected):
    assert bc_conjugate(Bicomplex(1, 2, 3, 4), kind) == expected


def test_norm_product_examples():
    assert bc_norm_product(ONE + I, ConjKind.STAR2) == 2 * I
    assert bc_norm_product(J, ConjKind.STAR1) == -ONE
    for kind in ConjKind:
        assert bc_norm_product(ZERO, kind) == ZERO


def test_euclid_sq_examples():
    assert bc_euclid_sq(Bicomplex(1, 1, 1, 1)) == 4
    assert bc_euclid_sq(ZERO) == 0
    assert bc_euclid_sq(Bicomplex(1, 3, 7, 15)) == 1 + 9 + 49 + 225


def test_norm_value_is_euclid_of_norm_product():
    x = Bicomplex(1, 2, 3, 4)
    # STAR3: (z1 + j z2)(conj z1 - j conj z2) = |z1|^2 + |z2|^2 + j(z2 conj z1 - z1 conj z2)
    # z1 = 1+2i, z2 = 3+4i: |z1|^2+|z2|^2 = 30, z2 conj(z1) - z1 conj(z2) = 2i*Im(z2 conj z1) = -4i
    assert bc_norm_product(x, ConjKind.STAR3) == Bicomplex(30, 0, 0, -4)
    assert norm_value(x, ConjKind.STAR3) == 30**2 + 4**2


def test_matrix_examples():
    assert (bc_matrix(ONE) == np.eye(4, dtype=int)).all()
    assert bc_from_vec(bc_matrix(I) @ bc_vec(I)) == -ONE
    x = Bicomplex(1, 3, 7, 15)
    # z1 = 1+3i, z2 = 7+15i: z1^2 - z2^2 = 168 - 204i, 2 z1 z2 = -76 + 72i
    assert bc_from_vec(bc_matrix(x) @ bc_vec(x)) == Bicomplex(168, -204, -76, 72)


def test_scalar_and_vector_parts():
    assert bc_scalar_part(Bicomplex(5, 2)) == 5
    assert bc_vector_part(Bicomplex(5, 2, 3)) == Bicomplex(0, 2, 3)


def test_variant_unification():
    x = Bicomplex(1, QuadExt(0, 1), Fraction(1, 2), 0)
    assert all(isinstance(c, QuadExt) for c in x)
    with pytest.raises(MixedExactnessError):
        Bicomplex(BigFloat(1, 64), 1, 0, 0)
    with pytest.raises(MixedRadicandError):
        Bicomplex(QuadExt(0, 1, 5), QuadExt(0, 1, 2))


def test_json_round_trip():
    x = Bicomplex(Fraction(3, 2), QuadExt(Fraction(1, 2), -1), 0, -7)
    data = x.to_json()
    assert data == {"c0": "3/2+0*sqrt5", "c1": "1/2-1*sqrt5", "c2": "0+0*sqrt5", "c3": "-7+0*sqrt5"}
    assert Bicomplex.from_json(data) == x
    assert Bicomplex(1, 2, 3, 4).to_json() == {"c0": "1", "c1": "2", "c2": "3", "c3": "4"}


def test_pow_matches_repeated_product():
    x = Bicomplex(1, -2, Fraction(1, 3), 2)
    assert x**0 == ONE
    assert x**3 == x * x * x


@given(exact_bicomplex, exact_bicomplex)
def test_commutative(x, y):
    assert x * y == y * x


@given(rational_bicomplex, rational_bicomplex, rational_bicomplex)
def test_associative_and_distributive(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(exact_bicomplex, exact_bicomplex)
def test_product_matches_complex_split(x, y):
    assert bc_mul(x, y) == split_mul(x, y)


@given(exact_bicomplex)
def test_conjugations(x):
    for kind in ConjKind:
        assert bc_conjugate(bc_conjugate(x, kind), kind) == x
    assert bc_conjugate(bc_conjugate(x, ConjKind.STAR2), ConjKind.STAR1) == bc_conjugate(x, ConjKind.STAR3)


@given(exact_bicomplex)
def test_norm_product_subspaces(x):
    n1 = bc_norm_product(x, ConjKind.STAR1)
    n2 = bc_norm_product(x, ConjKind.STAR2)
    n3 = bc_norm_product(x, ConjKind.STAR3)
    assert n1.c1 == 0 and n1.c3 == 0
    assert n2.c2 == 0 and n2.c3 == 0
    assert n3.c1 == 0 and n3.c2 == 0


@given(exact_bicomplex)
def test_scalar_plus_vector_reconstitutes(x):
    assert Bicomplex(bc_scalar_part(x)) + bc_vector_part(x) == x


@given(quad_bicomplex, quad_bicomplex)
def test_matrix_faithful(x, y):
    assert bc_from_vec(bc_matrix(x) @ bc_vec(y)) == x * y
    assert (bc_matrix(x * y) == bc_matrix(x) @ bc_matrix(y)).all()


def printed_matrix(x):
    """The left-multiplication matrix as typeset, with -a in row 2, column 2."""
    m = bc_matrix(x)
    m[1, 1] = -x.c0
    return m


def test_printed_matrix_row_two_is_not_faithful():
    # the sign slip multiplies the scalar coefficient, so x = i (a = 0) cannot expose it
    assert bc_from_vec(printed_matrix(I) @ bc_vec(ONE)) == I * ONE
    # the same product i*1 taken with the unit as matrix factor does
    assert bc_from_vec(printed_matrix(ONE) @ bc_vec(I)) == -I
    assert bc_from_vec(printed_matrix(ONE) @ bc_vec(I)) != ONE * I


@given(rational_bicomplex, rational_bicomplex)
def test_printed_matrix_fails_whenever_a_and_b2_nonzero(x, y):
    good = bc_from_vec(bc_matrix(x) @ bc_vec(y))
    bad = bc_from_vec(printed_matrix(x) @ bc_vec(y))
    assert (bad == good) == (x.c0 * y.c1 == 0)
