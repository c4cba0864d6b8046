"""GF(2)[x] and cyclic-ring arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normbase.poly2 import (
    CyclicPoly,
    cyclic_inv,
    cyclic_mul,
    degree,
    find_irreducible,
    is_irreducible,
    is_symmetric,
    is_unit_mod_cyclic,
    parse_poly,
    parse_vector,
    poly_add,
    poly_divmod,
    poly_ext_gcd,
    poly_gcd,
    poly_mul,
    poly_to_text,
    reciprocal,
    ring_modulus,
)

polys = st.integers(min_value=0, max_value=(1 << 24) - 1)


@st.composite
def cyclic_polys(draw, min_n=1, max_n=20):
    n = draw(st.integers(min_n, max_n))
    return CyclicPoly(n, draw(st.integers(0, (1 << n) - 1)))


@st.composite
def cyclic_pairs(draw, min_n=1, max_n=20):
    n = draw(st.integers(min_n, max_n))
    bits = st.integers(0, (1 << n) - 1)
    return CyclicPoly(n, draw(bits)), CyclicPoly(n, draw(bits))


def _symmetric(n, half_bits, a0, mid=0):
    # build a symmetric length-n vector from its free lower half
    bits = a0
    for i in range(1, (n + 1) // 2):
        if (half_bits >> i) & 1:
            bits |= (1 << i) | (1 << (n - i))
    if n % 2 == 0 and mid:
        bits |= 1 << (n // 2)
    return CyclicPoly(n, bits)


@st.composite
def symmetric_polys(draw, min_n=2, max_n=20):
    n = draw(st.integers(min_n, max_n))
    return _symmetric(n, draw(st.integers(0, (1 << ((n + 1) // 2)) - 1)),
                      draw(st.integers(0, 1)), draw(st.integers(0, 1)))


# ---- base ring ----

def test_add_is_characteristic_two():
    x_plus_1 = 0b11
    assert poly_add(x_plus_1, x_plus_1) == 0


def test_square_of_x_plus_1():
    assert poly_mul(0b11, 0b11) == 0b101  # (x+1)^2 = x^2+1


def test_divmod_reassembles():
    a, b = 0b1011, 0b110  # x^3+x+1, x^2+x
    q, r = poly_divmod(a, b)
    assert degree(r) is None or degree(r) < degree(b)
    assert poly_add(poly_mul(q, b), r) == a


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(1, 0)


@given(polys, polys)
def test_divmod_identity(a, b):
    if b == 0:
        return
    q, r = poly_divmod(a, b)
    assert poly_add(poly_mul(q, b), r) == a
    assert r == 0 or degree(r) < degree(b)


def test_gcd_with_zero():
    assert poly_gcd(0b1011, 0) == 0b1011
    with pytest.raises(ValueError):
        poly_gcd(0, 0)


def test_gcd_example_degree_five():
    # gcd(1+x+x^4, x^5-1) = 1, by hand-run Euclid:
    #   x^5+1 mod x^4+x+1 = x^2+x+1; x^4+x+1 mod x^2+x+1 = 1
    assert poly_gcd(0b10011, ring_modulus(5)) == 1


@given(polys, polys)
def test_ext_gcd_bezout(a, b):
    if a == 0 and b == 0:
        return
    g, u, v = poly_ext_gcd(a, b)
    assert poly_add(poly_mul(u, a), poly_mul(v, b)) == g
    if a and b:
        assert poly_gcd(a, b) == g


def test_ext_gcd_of_golden_base_vector():
    f_b = CyclicPoly.from_support(16, {0, 2, 3, 4, 12, 13, 14}).bits
    g, u, v = poly_ext_gcd(f_b, ring_modulus(16))
    assert g == 1
    assert poly_add(poly_mul(u, f_b), poly_mul(v, ring_modulus(16))) == 1


def test_degree():
    assert degree(0) is None
    assert degree(1) == 0
    assert degree(0b10011) == 4


# ---- irreducibility ----

def _divisible(a, b):
    _, r = poly_divmod(a, b)
    return r == 0

def _is_irreducible_brute(f):
    d = degree(f)
    if d is None or d < 1:
        return False
    return not any(_divisible(f, g)
                   for g in range(2, 1 << (d // 2 + 1)) if degree(g) >= 1)


def test_irreducible_examples():
    assert is_irreducible(0b111)          # x^2+x+1
    assert not is_irreducible(0b101)      # x^2+1 = (x+1)^2
    assert is_irreducible(0x1002D)        # x^16+x^5+x^3+x^2+1
    assert not is_irreducible(1)
    assert not is_irreducible(0)


def test_irreducible_matches_bruteforce_exhaustively():
    for f in range(1 << 9):
        assert is_irreducible(f) == _is_irreducible_brute(f), poly_to_text(f)


@pytest.mark.parametrize("n", range(1, 11))
def test_find_irreducible_is_smallest(n):
    f = find_irreducible(n)
    assert degree(f) == n and is_irreducible(f)
    assert f == min(g for g in range(1 << n, 1 << (n + 1)) if _is_irreducible_brute(g))


# ---- text formats ----

def test_hex_and_caret_forms():
    assert parse_poly("x^16+x^5+x^3+x^2+1") == 0x1002D
    assert parse_poly("0x1002D") == 0x1002D
    assert poly_to_text(0x1002D) == "x^16+x^5+x^3+x^2+1"
    assert parse_poly("1+x") == parse_poly("x+1") == 0b11
    assert parse_poly("0") == 0


def test_parse_poly_rejects_duplicates_and_junk():
    with pytest.raises(ValueError):
        parse_poly("x+x")
    with pytest.raises(ValueError):
        parse_poly("x^2+y")
    with pytest.raises(ValueError):
        parse_poly("")


def test_parse_vector():
    v = parse_vector("1,0,1")
    assert v == CyclicPoly.from_coeffs([1, 0, 1])
    assert str(v) == "1,0,1"
    with pytest.raises(ValueError):
        parse_vector("1,2,0")


@given(polys)
def test_text_roundtrip(a):
    assert parse_poly(poly_to_text(a)) == a


# ---- cyclic ring ----

def test_x_times_x_power_n_minus_1():
    for n in (2, 5, 16):
        x = CyclicPoly(n, 2)
        xn1 = CyclicPoly(n, 1 << (n - 1))
        assert cyclic_mul(x, xn1) == CyclicPoly(n, 1)


def test_cyclic_mul_size_mismatch():
    with pytest.raises(ValueError):
        cyclic_mul(CyclicPoly(4, 1), CyclicPoly(5, 1))


@given(cyclic_pairs())
def test_cyclic_mul_commutes(pair):
    a, b = pair
    assert cyclic_mul(a, b) == cyclic_mul(b, a)


def test_inverse_examples():
    assert cyclic_inv(CyclicPoly(7, 1)) == CyclicPoly(7, 1)
    for n in (3, 8):
        assert cyclic_inv(CyclicPoly(n, 2)) == CyclicPoly(n, 1 << (n - 1))


def test_inverse_of_golden_base_vector():
    f_b = CyclicPoly.from_support(16, {0, 2, 3, 4, 12, 13, 14})
    inv = cyclic_inv(f_b)
    assert inv == CyclicPoly.from_support(16, {0, 1, 2, 3, 5, 6, 10, 11, 13, 14, 15})
    assert cyclic_mul(f_b, inv) == CyclicPoly(16, 1)


def test_non_unit_inverse_reports_factor():
    # 1+x+x^2 divides x^3-1
    with pytest.raises(ZeroDivisionError, match="x"):
        cyclic_inv(CyclicPoly(3, 0b111))


def test_reciprocal_examples():
    assert reciprocal(CyclicPoly(4, 0b0011)) == CyclicPoly(4, 0b1001)  # 1+x -> 1+x^3
    g = CyclicPoly.from_support(16, {0, 1, 5, 6, 9, 10, 14})
    assert reciprocal(g) == CyclicPoly.from_support(16, {0, 2, 6, 7, 10, 11, 15})


@given(cyclic_polys())
def test_reciprocal_involution(f):
    assert reciprocal(reciprocal(f)) == f


@given(cyclic_pairs())
def test_reciprocal_multiplicative(pair):
    a, b = pair
    assert reciprocal(cyclic_mul(a, b)) == cyclic_mul(reciprocal(a), reciprocal(b))


def test_symmetry_examples():
    assert is_symmetric(CyclicPoly(8, 1))
    assert is_symmetric(CyclicPoly.from_support(16, {0, 1, 15}))
    assert not is_symmetric(CyclicPoly.from_coeffs([1, 1, 0, 0]))


@given(symmetric_polys())
def test_symmetric_iff_equal_to_reciprocal(f):
    assert is_symmetric(f)
    assert reciprocal(f) == f


def test_unit_examples():
    assert not is_unit_mod_cyclic(CyclicPoly(5, 0))
    assert is_unit_mod_cyclic(CyclicPoly.from_support(16, {0, 1, 15}))
    assert not is_unit_mod_cyclic(CyclicPoly(3, 0b111))


@given(cyclic_polys())
def test_unit_agrees_with_invertibility(f):
    if is_unit_mod_cyclic(f):
        assert cyclic_mul(f, cyclic_inv(f)) == CyclicPoly(f.n, 1)
    else:
        with pytest.raises(ZeroDivisionError):
            cyclic_inv(f)


# ---- symmetric-polynomial laws used by the constructions ----

@settings(max_examples=300)
@given(symmetric_polys(), st.data())
def test_product_of_symmetric_is_symmetric(f, data):
    g = data.draw(symmetric_polys(min_n=f.n, max_n=f.n))
    assert is_symmetric(cyclic_mul(f, g))


def test_product_of_symmetric_is_symmetric_exhaustive_small():
    for n in range(1, 9):
        sym = [CyclicPoly(n, b) for b in range(1 << n) if is_symmetric(CyclicPoly(n, b))]
        for f in sym:
            for g in sym:
                assert is_symmetric(cyclic_mul(f, g))


@settings(max_examples=300)
@given(st.data())
def test_inverse_of_symmetric_unit(data):
    # symmetric unit with constant term 1: its inverse is symmetric, a unit,
    # has constant term 1, and (even n) zero middle coefficient
    f = data.draw(symmetric_polys())
    f = CyclicPoly(f.n, f.bits | 1)
    if not is_unit_mod_cyclic(f):
        return
    inv = cyclic_inv(f)
    assert is_symmetric(inv)
    assert is_unit_mod_cyclic(inv)
    assert inv.coeff(0) == 1
    if f.n % 2 == 0:
        assert inv.coeff(f.n // 2) == 0


@settings(max_examples=300)
@given(st.data())
def test_half_sum_law_for_products(data):
    # even n, symmetric factors with constant term 1 and zero middle bit:
    # the product keeps c_0 = 1 and c_{n/2} = 0; when additionally 4 | n,
    # odd-index half-sums add up mod 2 (false for n = 2 mod 4, e.g. n = 10
    # with f = 1+x^4+x^6 and g = 1+x+x^9)
    n = data.draw(st.integers(1, 10)) * 2
    halves = st.integers(0, (1 << ((n + 1) // 2)) - 1)
    f = _symmetric(n, data.draw(halves), 1)
    g = _symmetric(n, data.draw(halves), 1)
    c = cyclic_mul(f, g)
    assert c.coeff(0) == 1
    assert c.coeff(n // 2) == 0
    if n % 4 == 0:
        def odd_half_sum(v):
            return sum(v.coeff(i) for i in range(1, n // 2, 2)) & 1

        assert odd_half_sum(c) == (odd_half_sum(f) + odd_half_sum(g)) % 2
