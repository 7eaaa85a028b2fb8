"""Integrals, cointegrals and the integral morphism of a Hopf algebra.

Conventions (pinned by the four-dimensional Taft algebra, where the
cointegral is ``x - gx`` and the integral is the delta function of ``x``):

* a cointegral is a point ``L`` with ``M(L (x) h) = e(h) L`` for all ``h``;
* an integral is a copoint ``l`` with ``(id (x) l) D = u l``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegeneratePairing, InternalInconsistency, NotRankOne, SnakeFailure
from .hopfcore import HopfData, check_snakes, standard_cap, standard_cup
from .tensorlin import (
    LinMap,
    identity,
    invert_matrix,
    kernel_basis,
    kron,
    permute_factors,
    rank_one_factor,
)


@dataclass(frozen=True)
class IntegralPair:
    cointegral: LinMap  # d x 1
    integral: LinMap  # 1 x d

    def pairing(self):
        return (self.integral @ self.cointegral).as_scalar()

    def scaled(self, k) -> "IntegralPair":
        """``(k L, l / k)``; the normalisation ``l(L)`` is unchanged."""
        return IntegralPair(self.cointegral * k, self.integral / k)


def cointegral_system(h: HopfData) -> LinMap:
    """Matrix whose kernel is the space of cointegrals.

    Row ``o*d + x`` is the ``e_o`` coefficient of ``M(L (x) e_x) - e(e_x) L``.
    """
    d = h.dim
    M, e = h.mult, h.counit
    entries = {}
    for a in range(d):
        for x in range(d):
            for o, c in M.col(a * d + x).items():
                key = (o * d + x, a)
                entries[key] = entries.get(key, 0) + c
        for x in range(d):
            ex = e[0, x]
            if ex:
                key = (a * d + x, a)
                entries[key] = entries.get(key, 0) - ex
    return LinMap.from_entries(d * d, d, entries)


def integral_system(h: HopfData) -> LinMap:
    """Matrix whose kernel holds the coordinate vectors of integrals.

    Row ``o*d + x`` is the ``e_o`` coefficient of ``(id (x) l) D(e_x) - l(e_x) 1``.
    """
    d = h.dim
    D, u = h.comult, h.unit
    entries = {}
    for x in range(d):
        for ob, c in D.col(x).items():
            o, b = divmod(ob, d)
            key = (o * d + x, b)
            entries[key] = entries.get(key, 0) + c
        for o, uo in u.col(0).items():
            key = (o * d + x, x)
            entries[key] = entries.get(key, 0) - uo
    return LinMap.from_entries(d * d, d, entries)


def cointegral_space(h: HopfData) -> list:
    return kernel_basis(cointegral_system(h))


def integral_space(h: HopfData) -> list:
    return [v.T for v in kernel_basis(integral_system(h))]


def is_cointegral(h: HopfData, point: LinMap) -> bool:
    return h.mult @ kron(point, identity(h.dim)) == point @ h.counit


def is_integral(h: HopfData, copoint: LinMap) -> bool:
    return kron(identity(h.dim), copoint) @ h.comult == h.unit @ copoint


def integral_morphism(h: HopfData, cap: LinMap = None, cup: LinMap = None) -> LinMap:
    """The idempotent projecting ``H`` onto its cointegrals.

    ``v -> sum_i <f_i, S(y_1)> y_2`` with ``y = v S(e_i)``, where
    ``sum_i e_i (x) f_i`` is ``cap: I -> H (x) B`` and ``<,>`` is
    ``cup: B (x) H -> I``.  Only the snake equations of the pair are used, so
    any duality pair gives the same map.
    """
    d = h.dim
    cap = standard_cap(d) if cap is None else cap
    cup = standard_cup(d) if cup is None else cup
    if not check_snakes(cap, cup, d):
        raise SnakeFailure("cap and cup do not satisfy the snake equations")
    I = identity(d)
    M, D, S = h.mult, h.comult, h.antipode
    y = kron(M @ kron(I, S), I) @ kron(I, cap)  # H -> H (x) B
    split = kron(kron(S, I) @ D, I) @ y  # H -> H (x) H (x) B
    to_front = permute_factors([d, d, d], [2, 0, 1])
    return kron(cup, I) @ to_front @ split


def frobenius_condition(h: HopfData) -> IntegralPair:
    """Factor the integral morphism as ``L l`` with ``l(L) = 1``.

    ``L`` keeps the leading-one normalisation of the rank-one factor, any
    rescaling goes into ``l``.
    """
    P = integral_morphism(h)
    try:
        u, v = rank_one_factor(P)
    except NotRankOne as exc:
        raise DegeneratePairing(f"integral morphism is not rank one: {exc}") from None
    s = (v @ u).as_scalar()
    if s == 0:
        raise DegeneratePairing("integral morphism is nilpotent, l(L) = 0")
    pair = IntegralPair(u, v / s)
    if pair.cointegral @ pair.integral != P:
        raise DegeneratePairing("integral morphism is not idempotent")
    if not is_cointegral(h, pair.cointegral) or not is_integral(h, pair.integral):
        raise DegeneratePairing("factors of the integral morphism are not (co)integrals")
    return pair


def frobenius_forms(h: HopfData, p: IntegralPair):
    """The green cup and cap ``(l M, (S (x) id) D L)``."""
    I = identity(h.dim)
    beta = p.integral @ h.mult
    gamma = kron(h.antipode, I) @ h.comult @ p.cointegral
    return beta, gamma


def check_nondegenerate(h: HopfData, p: IntegralPair) -> bool:
    """Whether the green cup and cap built from ``p`` satisfy both snakes."""
    beta, gamma = frobenius_forms(h, p)
    return check_snakes(gamma, beta, h.dim)


def antipode_inverse_formula(h: HopfData, p: IntegralPair) -> LinMap:
    """``h -> L_1 l(L_2 h)``, the inverse of the antipode."""
    I = identity(h.dim)
    out = kron(I, p.integral @ h.mult) @ kron(h.comult @ p.cointegral, I)
    if out @ h.antipode != I or h.antipode @ out != I:
        invert_matrix(h.antipode)  # raises Singular when there is nothing to match
        raise InternalInconsistency("integral formula does not invert the antipode")
    return out


def equaliser_dimension_check(h: HopfData) -> bool:
    return len(cointegral_space(h)) == 1 and len(integral_space(h)) == 1
