import pytest
from conftest import EXAMPLES, algebra
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from hopffrob.builders import taft
from hopffrob.errors import DegeneratePairing, SnakeFailure
from hopffrob.integrals import (
    IntegralPair,
    antipode_inverse_formula,
    check_nondegenerate,
    cointegral_space,
    equaliser_dimension_check,
    frobenius_condition,
    integral_morphism,
    integral_space,
    is_cointegral,
    is_integral,
)
from hopffrob.scalars import primitive_root
from hopffrob.tensorlin import LinMap, identity, invert_matrix, kron, rank
from hopffrob.hopfcore import standard_cap, standard_cup


def test_taft2_integrals_by_hand():
    h = taft(2)
    # basis (1, x, g, gx); x - gx is absorbed on the right, delta_x on the left
    L = LinMap.column([0, 1, 0, -1])
    l = LinMap.row([0, 1, 0, 0])
    assert is_cointegral(h, L) and is_integral(h, l)
    assert not is_cointegral(h, LinMap.column([0, 1, 0, 1]))
    assert not is_integral(h, LinMap.row([0, 0, 0, 1]))
    (c,) = cointegral_space(h)
    (i,) = integral_space(h)
    assert c == L and i == l


def test_group_algebra_integrals():
    h = algebra("sym:3")
    assert cointegral_space(h) == [LinMap.column([1] * 6)]
    assert integral_space(h) == [LinMap.row([1, 0, 0, 0, 0, 0])]


def test_taft3_cointegral():
    z = primitive_root(3)
    pair = frobenius_condition(taft(3))
    # x^2 + z^2 g x^2 + z g^2 x^2
    assert pair.cointegral == LinMap.column([0, 0, 1, 0, 0, z * z, 0, 0, z])
    assert pair.pairing() == 1


@pytest.mark.parametrize("name", EXAMPLES)
def test_frobenius_condition(name):
    h = algebra(name)
    pair = frobenius_condition(h)
    P = integral_morphism(h)
    assert pair.pairing() == 1
    assert pair.cointegral @ pair.integral == P
    assert P @ P == P
    assert rank(P) == 1
    assert equaliser_dimension_check(h)
    assert check_nondegenerate(h, pair)


@pytest.mark.parametrize("name", EXAMPLES)
def test_antipode_inverse(name):
    h = algebra(name)
    assert antipode_inverse_formula(h, frobenius_condition(h)) == invert_matrix(h.antipode)


def test_unnormalised_pair_is_not_inverse():
    h = taft(2)
    p = frobenius_condition(h)
    bad = IntegralPair(p.cointegral * 2, p.integral)
    from hopffrob.errors import InternalInconsistency

    with pytest.raises(InternalInconsistency):
        antipode_inverse_formula(h, bad)


def test_scaled_pair_keeps_normalisation():
    p = frobenius_condition(taft(2))
    assert p.scaled(5).pairing() == 1
    assert p.scaled(5).cointegral == p.cointegral * 5


def test_bad_duality_rejected():
    h = taft(2)
    with pytest.raises(SnakeFailure):
        integral_morphism(h, standard_cap(4) * 2, standard_cup(4))


def test_non_hopf_input_degenerates():
    h = taft(2)
    broken = h.replace(antipode=identity(4))
    with pytest.raises(DegeneratePairing):
        frobenius_condition(broken)


@st.composite
def invertible(draw, d):
    """A product of unitriangular factors, invertible by construction."""
    entries = st.lists(st.integers(-2, 2), min_size=d * d, max_size=d * d)
    low, up = draw(entries), draw(entries)
    L = LinMap.from_rows([[1 if i == j else (low[i * d + j] if j < i else 0) for j in range(d)] for i in range(d)])
    U = LinMap.from_rows([[1 if i == j else (up[i * d + j] if j > i else 0) for j in range(d)] for i in range(d)])
    return L @ U


@pytest.mark.parametrize("name", ["taft:2", "sym:3", "dual:sym:3", "taft:3"])
@settings(max_examples=5, deadline=None, suppress_health_check=[HealthCheck.large_base_example])
@given(data=st.data())
def test_integral_morphism_independent_of_duality(name, data):
    h = algebra(name)
    d = h.dim
    A = data.draw(invertible(d))
    Ainv = invert_matrix(A)
    cap = kron(A, Ainv.T) @ standard_cap(d)
    cup = standard_cup(d) @ kron(A.T, Ainv)
    P = integral_morphism(h, cap, cup)
    assert P == integral_morphism(h)


@pytest.mark.parametrize("name", ["taft:2", "taft:4", "sym:3", "dual:taft:3"])
def test_fixed_points(name):
    h = algebra(name)
    P = integral_morphism(h)
    pair = frobenius_condition(h)
    L, l = pair.cointegral, pair.integral
    # cointegrals are exactly the fixed points of P; integrals are fixed by precomposition
    assert P @ L == L
    assert l @ P == l
    for i in range(h.dim):
        v = P @ LinMap.column([1 if j == i else 0 for j in range(h.dim)])
        assert is_cointegral(h, v)
