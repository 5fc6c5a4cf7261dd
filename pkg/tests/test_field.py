from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from negacyclic.errors import (
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    NotInvertible,
    NotPrime,
    UndefinedGcd,
)
from negacyclic.field import (
    FpPoly,
    PrimeField,
    count_candidates,
    fp_inv,
    get_field,
    monic_divisors,
    poly_divmod,
    poly_gcd,
    poly_pow,
)
from negacyclic.fixtures import fp_polys

fields = st.sampled_from([3, 5, 7]).map(get_field)


def poly_pairs(max_degree):
    return fields.flatmap(
        lambda field: st.tuples(
            fp_polys(field, max_degree), fp_polys(field, max_degree)
        )
    )


@pytest.mark.parametrize("p", [2, 4, 9, 1, 0, -3])
def test_not_prime(p):
    with pytest.raises(NotPrime) as excinfo:
        PrimeField(p)
    assert excinfo.value.p == p


def test_get_field_is_cached():
    assert get_field(7) is get_field(7)
    assert get_field(7) == PrimeField(7)
    assert get_field(7) != get_field(5)


@pytest.mark.parametrize("a,p,expected", [(2, 5, 3), (3, 7, 5), (1, 3, 1), (-1, 5, 4)])
def test_fp_inv(a, p, expected):
    assert fp_inv(a, get_field(p)) == expected


def test_fp_inv_of_zero(F5):
    with pytest.raises(NotInvertible) as excinfo:
        fp_inv(10, F5)
    assert excinfo.value.value == 10
    assert excinfo.value.p == 5


def test_normalized_coefficients(F5):
    f = FpPoly((6, -3, 0, 1, 0, 0), F5)
    assert f.coeffs == (1, 2, 0, 1)
    assert f.degree == 3
    assert str(f) == "1+2x+x^3"
    assert FpPoly((0, 5, 10), F5).is_zero
    assert FpPoly((), F5).degree is None
    assert str(F5.zero) == "0"
    assert f == FpPoly([1, 2, 0, 1], F5)
    assert F5.poly((3,)) == 3
    assert f.weight == 3


def test_str():
    F3 = get_field(3)
    assert str(F3.poly((0, 2, 1))) == "2x+x^2"
    assert str(F3.x) == "x"
    assert str(F3.monomial(4, 2)) == "2x^4"


def test_arithmetic(F5, g5):
    x = F5.x
    assert g5 + 4 == x
    assert 1 + x == g5
    assert x - 1 == F5.poly((4, 1))
    assert 1 - x == F5.poly((1, 4))
    assert -g5 == F5.poly((4, 4))
    assert g5 * g5 == F5.poly((1, 2, 1))
    assert 2 * g5 == F5.poly((2, 2))
    assert g5 * 0 == F5.zero


def test_frobenius(F5, g5):
    assert g5 ** 5 == F5.monomial(5) + 1
    assert g5 ** 0 == F5.one


@pytest.mark.parametrize("p", [3, 5, 7])
def test_frobenius_on_prime_powers(p):
    field = get_field(p)
    g = field.poly((1, 1))
    assert g ** (p * p) == field.monomial(p * p) + 1
    power = g
    for k in range(1, 5):
        power = power ** p
        assert power == field.monomial(p ** k) + 1, k


def test_divmod(F3):
    x = F3.x
    q, r = divmod(x ** 2 + 1, x + 1)
    assert q == x + 2
    assert r == F3.poly((2,))
    assert (x ** 2 + 1) // (x + 1) == q
    assert (x ** 2 + 1) % (x + 1) == r
    assert poly_divmod(F3.one, x) == (F3.zero, F3.one)


@given(poly_pairs(8))
@settings(max_examples=300, deadline=None)
def test_divmod_reconstructs_dividend(pair):
    f, g = pair
    assume(not g.is_zero)
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree < g.degree


def test_division_by_zero(F5):
    with pytest.raises(DivisionByZero):
        divmod(F5.x, F5.zero)
    with pytest.raises(ZeroDivisionError):
        F5.x % F5.zero


def test_divides_and_exact_div(F5, g5):
    assert g5.divides(g5 ** 3)
    assert not (g5 ** 2).divides(g5)
    assert (g5 ** 3).exact_div(g5) == g5 ** 2
    with pytest.raises(ValueError):
        g5.exact_div(g5 ** 2)


def test_gcd(F5, g5):
    x = F5.x
    assert poly_gcd(x ** 2 - 1, x ** 2 + 2 * x + 1) == g5
    assert poly_gcd(3 * g5, F5.zero) == g5
    assert poly_gcd(x, x + 1) == F5.one
    with pytest.raises(UndefinedGcd):
        poly_gcd(F5.zero, F5.zero)


@given(poly_pairs(6))
@settings(max_examples=300, deadline=None)
def test_gcd_divides_both(pair):
    f, g = pair
    assume(not (f.is_zero and g.is_zero))
    d = poly_gcd(f, g)
    assert d.is_monic
    assert d.divides(f) and d.divides(g)
    h = g.field.poly((1, 1))
    assert poly_gcd(f * h, g * h) == d * h


def test_field_mismatch(F3, F5):
    with pytest.raises(FieldMismatch) as excinfo:
        F3.x + F5.x
    assert excinfo.value.left == F3
    assert excinfo.value.right == F5
    with pytest.raises(FieldMismatch):
        poly_gcd(F3.x, F5.x)
    with pytest.raises(TypeError):
        F3.x + 1.5


def test_poly_pow_with_modulus(F5):
    modulus = F5.monomial(5) + 1
    assert poly_pow(F5.x, 5, modulus) == F5.poly((4,))
    assert poly_pow(F5.x, 7, modulus) == F5.poly((0, 0, 4))
    with pytest.raises(ValueError):
        poly_pow(F5.x, -1)


def test_helpers(F5):
    f = F5.poly((1, 2, 0, 1))
    assert f.negate_x() == F5.poly((1, 3, 0, 4))
    assert f.negate_x().negate_x() == f
    assert f.shift(2) == F5.poly((0, 0, 1, 2, 0, 1))
    assert f.padded(6) == (1, 2, 0, 1, 0, 0)
    assert f.evaluate(1) == 4
    assert F5.poly((2, 4)).monic() == F5.poly((3, 1))
    assert f.scale(2) == F5.poly((2, 4, 0, 2))
    with pytest.raises(ValueError):
        f.padded(2)


def test_sort_key(F5):
    polys = [F5.poly((1, 1)), F5.zero, F5.one, F5.poly((0, 1))]
    assert sorted(polys, key=FpPoly.sort_key) == [
        F5.zero,
        F5.one,
        F5.poly((0, 1)),
        F5.poly((1, 1)),
    ]


def test_monic_divisors_of_prime_power_length(F3):
    g = F3.poly((1, 1))
    divisors = monic_divisors(F3.monomial(3) + 1)
    assert divisors == [F3.one, g, g ** 2, g ** 3]


def test_monic_divisors_of_coprime_length(F3):
    modulus = F3.monomial(5) + 1
    divisors = monic_divisors(modulus)
    assert [d.degree for d in divisors] == [0, 1, 4, 5]
    assert all(d.divides(modulus) and d.is_monic for d in divisors)


def test_monic_divisors_budget(F3):
    assert count_candidates(3, 1) == 4
    with pytest.raises(BudgetExceeded) as excinfo:
        monic_divisors(F3.monomial(3) + 1, budget=3)
    assert excinfo.value.needed == 4
    assert excinfo.value.budget == 3
    with pytest.raises(ValueError):
        monic_divisors(F3.poly((1, 2)))


def test_monic_divisors_of_x3_plus_1_over_f5(F5):
    assert monic_divisors(F5.monomial(3) + 1) == [
        F5.one,
        F5.poly((1, 1)),
        F5.poly((1, 4, 1)),
        F5.poly((1, 0, 0, 1)),
    ]


def scan_monic_divisors(modulus):
    field = modulus.field
    found = []
    for degree in range(modulus.degree + 1):
        for lower in product(range(field.p), repeat=degree):
            candidate = FpPoly(lower + (1,), field)
            if candidate.divides(modulus):
                found.append(candidate)
    return sorted(found, key=FpPoly.sort_key)


@given(
    st.sampled_from([3, 5]).flatmap(
        lambda p: st.lists(st.integers(0, p - 1), min_size=1, max_size=4).map(
            lambda lower: FpPoly(lower + [1], get_field(p))
        )
    )
)
@settings(max_examples=40, deadline=None)
def test_monic_divisors_match_full_scan(modulus):
    assert monic_divisors(modulus) == scan_monic_divisors(modulus)


@pytest.mark.parametrize("p,n", [(3, 4), (5, 3), (5, 4), (7, 3)])
def test_monic_divisors_of_x_n_plus_1_match_full_scan(p, n):
    field = get_field(p)
    modulus = field.monomial(n) + 1
    assert monic_divisors(modulus) == scan_monic_divisors(modulus)
