from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopffrob.errors import FieldMismatch, ParseError
from hopffrob.scalars import CycloScalar, Field, cyclotomic_poly, format_poly, invert, primitive_root


def _divisors(n):
    return [d for d in range(1, n) if n % d == 0]


def _long_division_phi(n, cache={}):
    """Phi_n by schoolbook division of t^n - 1, an independent oracle."""
    if n in cache:
        return cache[n]
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in _divisors(n):
        den = _long_division_phi(d)
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        rem = num[:]
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(den) - 1] / den[-1]
            quot[k] = c
            for i, b in enumerate(den):
                rem[k + i] -= c * b
        assert all(r == 0 for r in rem)
        num = quot
    cache[n] = num
    return num


def test_cyclotomic_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_matches_long_division(n):
    phi = cyclotomic_poly(n)
    assert all(isinstance(c, int) for c in phi)
    assert phi[-1] == 1
    assert list(phi) == [int(c) for c in _long_division_phi(n)]


@pytest.mark.parametrize("n", range(1, 13))
def test_primitive_root_order(n):
    z = primitive_root(n)
    assert z ** n == 1
    assert all(z ** m != 1 for m in range(1, n))


def test_primitive_root_examples():
    assert primitive_root(1) == 1
    assert primitive_root(2) == -1
    z = primitive_root(3)
    assert z * z + z + 1 == 0


def test_invert_examples():
    assert invert(Fraction(2, 3)) == Fraction(3, 2)
    z = primitive_root(4)
    assert invert(z) == -z
    assert invert(1) == 1
    with pytest.raises(ZeroDivisionError):
        invert(0)
    with pytest.raises(ZeroDivisionError):
        invert(CycloScalar(5, [0, 0, 0, 0]))


def test_rational_results_demote():
    z = primitive_root(4)
    assert isinstance(z * z, (int, Fraction))
    assert z * z == -1


def test_mixed_orders_rejected():
    with pytest.raises(FieldMismatch):
        primitive_root(3) + primitive_root(4)


def test_parse_and_format():
    f = Field(4)
    assert f.parse("1 - z^2") == 2
    z = f.zeta()
    x = f.parse("1/2 + 3*z")
    assert x == Fraction(1, 2) + 3 * z
    assert f.format(x) == "1/2 + 3*z"
    assert f.parse(f.format(x)) == x
    assert format_poly([0, -1]) == "-z"
    with pytest.raises(FieldMismatch):
        Field(1).parse("z")
    with pytest.raises(ParseError):
        f.parse("1 + + z")
    with pytest.raises(ParseError):
        f.parse("")


ORDERS = [3, 4, 5, 7, 8, 12]


@st.composite
def scalars(draw, order=None):
    n = order or draw(st.sampled_from(ORDERS))
    k = len(cyclotomic_poly(n)) - 1
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=k, max_size=k))
    return CycloScalar(n, coeffs)


@st.composite
def triples(draw):
    n = draw(st.sampled_from(ORDERS))
    return draw(scalars(n)), draw(scalars(n)), draw(scalars(n))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a != 0:
        assert a * invert(a) == 1
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(scalars())
def test_format_parse_round_trip(a):
    f = Field(a.order) if isinstance(a, CycloScalar) else Field(1)
    assert f.parse(f.format(a)) == a


@settings(max_examples=40, deadline=None)
@given(scalars(), st.integers(min_value=-6, max_value=6))
def test_powers(a, k):
    if a == 0 and k < 0:
        return
    p = a ** k
    if k >= 0:
        q = 1
        for _ in range(k):
            q = q * a
    else:
        q = 1
        for _ in range(-k):
            q = q * invert(a)
    assert p == q
