from __future__ import annotations

import cmath
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicayley.cyclotomic import (
    CyclotomicInt,
    IntPolynomial,
    cyclotomic_poly,
    euler_phi,
    integer_sqrt_if_square,
    is_perfect_square_value,
    matrix_has_integer_eigenvalues,
    root_of_unity,
)


def zeta(m: int, e: int = 1) -> CyclotomicInt:
    return root_of_unity(m, e)


def test_cyclotomic_poly_small_cases():
    assert cyclotomic_poly(1) == IntPolynomial([-1, 1])
    assert cyclotomic_poly(4) == IntPolynomial([1, 0, 1])
    assert cyclotomic_poly(6) == IntPolynomial([1, -1, 1])


def test_cyclotomic_poly_vanishes_at_primitive_root():
    for m in range(1, 25):
        phi = cyclotomic_poly(m)
        assert phi.degree == euler_phi(m)
        z = CyclotomicInt.integer(m, 0)
        for k, c in enumerate(phi.coeffs):
            z = z + zeta(m, k) * c
        assert z.is_zero(), m


def test_root_products_and_sums():
    assert zeta(4) * zeta(4) == -1
    assert zeta(6, 1) + zeta(6, 5) == 1
    assert abs((zeta(6, 1) + zeta(6, 5)).to_complex() - 1) < 1e-9
    assert zeta(8, 3).conj() == zeta(8, 5)


def test_as_rational_integer():
    full_orbit = sum((zeta(4, k) for k in range(1, 4)), CyclotomicInt.integer(4, 1))
    assert full_orbit.as_rational_integer() == 0
    assert zeta(4).as_rational_integer() is None
    assert CyclotomicInt.integer(6, 2).as_rational_integer() == 2


def test_abs_square_and_perfect_squares():
    one_plus_i = zeta(4) + 1
    assert one_plus_i.abs_square().as_rational_integer() == 2
    assert not is_perfect_square_value(one_plus_i.abs_square())
    two = CyclotomicInt.integer(4, 2)
    assert integer_sqrt_if_square(two.abs_square().as_rational_integer()) == 2
    assert integer_sqrt_if_square(CyclotomicInt.zero(4).abs_square().as_rational_integer()) == 0
    assert integer_sqrt_if_square(8) is None
    with pytest.raises(ValueError):
        integer_sqrt_if_square(-1)


def test_canonical_form_length_is_phi():
    for m in (1, 2, 3, 4, 8, 12, 15, 24):
        z = CyclotomicInt.from_exponents(m, range(m + 3))
        assert len(z.coeffs) == euler_phi(m)


def test_mixing_conductors_rejected():
    with pytest.raises(ValueError):
        zeta(4) + zeta(8)


def test_lift_preserves_value():
    z = zeta(4) * 3 + 1
    w = z.lift(12)
    assert w.m == 12
    assert abs(w.to_complex() - z.to_complex()) < 1e-12
    assert w == zeta(12, 3) * 3 + 1


def test_two_by_two_integer_eigenvalue_test():
    i = zeta(4)
    z0 = CyclotomicInt.zero(4)
    # [[0, -1], [1, 0]] has eigenvalues +-i
    assert not matrix_has_integer_eigenvalues([[z0, -1 + z0], [1 + z0, z0]])
    # [[i, 1], [1, -i]] is nilpotent: trace 0, det 0
    assert matrix_has_integer_eigenvalues([[i, 1 + z0], [1 + z0, -i]])
    assert matrix_has_integer_eigenvalues([[CyclotomicInt.integer(4, -2), z0], [z0, CyclotomicInt.integer(4, -2)]])
    assert not matrix_has_integer_eigenvalues([[i + 1]])


conductors = st.sampled_from(list(range(1, 25)))


@st.composite
def cyclo_triple(draw):
    m = draw(conductors)
    coeff = st.integers(-5, 5)
    a = CyclotomicInt.from_exponent_counts(m, draw(st.lists(coeff, min_size=m, max_size=m)))
    b = CyclotomicInt.from_exponent_counts(m, draw(st.lists(coeff, min_size=m, max_size=m)))
    c = CyclotomicInt.from_exponent_counts(m, draw(st.lists(coeff, min_size=m, max_size=m)))
    return a, b, c


@settings(max_examples=300, deadline=None)
@given(cyclo_triple())
def test_ring_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert (a * b).conj() == a.conj() * b.conj()
    n = a * a.conj()
    assert abs(n.to_complex().imag) < 1e-9
    assert n.to_complex().real >= -1e-9
    if a.as_rational_integer() is not None:
        assert a.conj() == a


def test_float_embedding_matches_complex_arithmetic():
    rng = random.Random(20240611)
    for _ in range(10_000):
        m = rng.randint(1, 24)
        a, b, c = (
            CyclotomicInt.from_exponent_counts(m, [rng.randint(-5, 5) for _ in range(m)]) for _ in range(3)
        )
        w = cmath.exp(2j * cmath.pi / m)
        fa, fb, fc = (sum(k * w**e for e, k in enumerate(x.coeffs)) for x in (a, b, c))
        for z, f in ((a + b, fa + fb), (a * b, fa * fb), (a - c, fa - fc), (a.conj(), fa.conjugate()), (a * b * c, fa * fb * fc)):
            assert abs(z.to_complex() - f) < 1e-9 * max(1.0, abs(f))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 24), st.integers(-100, 100), st.integers(-100, 100))
def test_root_of_unity_exponent_law(m, e, f):
    assert zeta(m, e) * zeta(m, f) == zeta(m, e + f)
    assert zeta(m, e) ** 3 == zeta(m, 3 * e)
