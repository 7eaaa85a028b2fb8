"""The Hopf-Frobenius structure carried by every finite-dimensional Hopf algebra.

Given a Hopf algebra ``(M, u, D, e, S)`` and a normalised pair ``(L, l)`` of
cointegral and integral, the four Frobenius forms are::

    green cup  beta   = l M                 green cap  gamma  = (S (x) id) D L
    red cap    beta_r = D L                 red cup    gamma_r = l M (id (x) S)

They produce a second comultiplication (green, bending ``M`` with ``gamma``)
and a second multiplication (red, bending ``D`` with ``gamma_r``), and a red
Hopf algebra ``(red_mult, L, green_comult, l, red_antipode)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace as dc_replace

from .errors import InternalInconsistency, InvalidForm, NotCoinvertible, DegeneratePairing
from .hopfcore import HopfData, Report, check_hopf, dual_map
from .integrals import (
    IntegralPair,
    antipode_inverse_formula,
    frobenius_condition,
    is_cointegral,
    is_integral,
)
from .scalars import invert
from .tensorlin import LinMap, identity, kron, solve, swap


@dataclass(frozen=True)
class FrobeniusForms:
    beta: LinMap  # 1 x d^2, green cup
    gamma: LinMap  # d^2 x 1, green cap
    beta_red: LinMap  # d^2 x 1, red cap
    gamma_red: LinMap  # 1 x d^2, red cup


@dataclass(frozen=True)
class HopfFrobeniusData:
    green_hopf: HopfData
    pair: IntegralPair
    green_comult: LinMap
    red_mult: LinMap
    red_antipode: LinMap
    forms: FrobeniusForms

    @property
    def dim(self) -> int:
        return self.green_hopf.dim

    @property
    def red_hopf(self) -> HopfData:
        """``(red_mult, L, green_comult, l, red_antipode)``."""
        h = self.green_hopf
        return HopfData.from_maps(
            self.red_mult,
            self.pair.cointegral,
            self.green_comult,
            self.pair.integral,
            self.red_antipode,
            basis_names=h.basis_names,
            field=h.field,
        )

    def replace(self, **changes) -> "HopfFrobeniusData":
        return dc_replace(self, **changes)


def _forms(h: HopfData, p: IntegralPair) -> FrobeniusForms:
    I = identity(h.dim)
    M, D, S = h.mult, h.comult, h.antipode
    L, l = p.cointegral, p.integral
    return FrobeniusForms(
        beta=l @ M,
        gamma=kron(S, I) @ D @ L,
        beta_red=D @ L,
        gamma_red=l @ M @ kron(I, S),
    )


def _transpose(f: LinMap, forms: FrobeniusForms, d: int, n_in: int, n_out: int) -> LinMap:
    return dual_map(f, forms.gamma, forms.beta, d, n_in, n_out, planar=True)


def build_hf(h: HopfData, pair: IntegralPair = None) -> HopfFrobeniusData:
    """Construct and verify the Hopf-Frobenius structure of ``h``.

    ``pair`` defaults to the output of :func:`frobenius_condition`; any other
    pair must consist of a cointegral and an integral with ``l(L) = 1``.
    """
    if pair is None:
        pair = frobenius_condition(h)
    elif pair.pairing() != 1 or not is_cointegral(h, pair.cointegral) or not is_integral(h, pair.integral):
        raise DegeneratePairing("supplied pair is not a normalised cointegral/integral pair")
    d = h.dim
    I = identity(d)
    forms = _forms(h, pair)
    green_comult = kron(h.mult, I) @ kron(I, forms.gamma)
    red_mult = kron(forms.gamma_red, I) @ kron(I, h.comult)
    s_inv = antipode_inverse_formula(h, pair)
    red_antipode = _transpose(s_inv, forms, d, 1, 1)
    hf = HopfFrobeniusData(h, pair, green_comult, red_mult, red_antipode, forms)
    report = verify_hf(hf)
    if report:
        raise InternalInconsistency(f"Hopf-Frobenius structure failed verification: {report}", report)
    return hf


def _frobenius_law(r: Report, name: str, mult: LinMap, comult: LinMap, d: int):
    I = identity(d)
    mid = comult @ mult
    r.law(name + "_l", kron(I, mult) @ kron(comult, I), mid)
    r.law(name + "_r", kron(mult, I) @ kron(I, comult), mid)


def _snakes(r: Report, name: str, cap: LinMap, cup: LinMap, d: int):
    I = identity(d)
    r.law(name + "_l", kron(I, cup) @ kron(cap, I), I)
    r.law(name + "_r", kron(cup, I) @ kron(I, cap), I)


def _prefixed(prefix: str, sub: Report) -> Report:
    out = Report()
    out.checked = [prefix + c for c in sub.checked]
    out.violations = [type(v)(prefix + v.law, v.witness) for v in sub.violations]
    return out


def verify_hf(hf: HopfFrobeniusData) -> Report:
    """Recheck every law of a Hopf-Frobenius structure.

    Laws of the green and red Hopf algebras are reported as ``green.<law>``
    and ``red.<law>``.
    """
    h = hf.green_hopf
    d = h.dim
    I = identity(d)
    M, u, D, e, S = h.mult, h.unit, h.comult, h.counit, h.antipode
    L, l = hf.pair.cointegral, hf.pair.integral
    f = hf.forms
    gc, rm, sbar = hf.green_comult, hf.red_mult, hf.red_antipode
    r = Report()
    r.law("normalised", l @ L, LinMap.scalar(1))
    r.law("cointegral", M @ kron(L, I), L @ e)
    r.law("integral", kron(I, l) @ D, u @ l)
    # the forms are the ones induced by the integrals
    r.law("green_cup", f.beta, l @ M)
    r.law("green_cap", f.gamma, gc @ u)
    r.law("red_cap", f.beta_red, D @ L)
    r.law("red_cup", f.gamma_red, e @ rm)
    _snakes(r, "green_snake", f.gamma, f.beta, d)
    _snakes(r, "red_snake", f.beta_red, f.gamma_red, d)
    # green Frobenius algebra (M, u, gc, l)
    r.law("green_coassoc", kron(gc, I) @ gc, kron(I, gc) @ gc)
    r.law("green_counit_l", kron(l, I) @ gc, I)
    r.law("green_counit_r", kron(I, l) @ gc, I)
    _frobenius_law(r, "green_frobenius", M, gc, d)
    # red Frobenius algebra (rm, L, D, e)
    r.law("red_assoc", rm @ kron(rm, I), rm @ kron(I, rm))
    r.law("red_unit_l", rm @ kron(L, I), I)
    r.law("red_unit_r", rm @ kron(I, L), I)
    _frobenius_law(r, "red_frobenius", rm, D, d)
    r.extend(_prefixed("green.", check_hopf(h)))
    r.extend(_prefixed("red.", check_hopf(hf.red_hopf)))
    r.law("antipode_form", S, kron(I, f.gamma_red) @ kron(f.gamma, I))
    r.law("red_antipode_form", sbar, kron(f.beta, I) @ kron(I, f.beta_red))
    return r


def green_transpose(hf: HopfFrobeniusData, f: LinMap) -> LinMap:
    """Transpose of ``f: H^m -> H^n`` through the green cup and cap.

    Wires are bent without crossings, so the transpose of the multiplication
    is the green comultiplication and that of the comultiplication is the red
    multiplication precomposed with the swap.
    """
    d = hf.dim
    n_in = _legs(f.src_dim, d)
    n_out = _legs(f.dst_dim, d)
    return _transpose(f, hf.forms, d, n_in, n_out)


def _legs(size: int, d: int) -> int:
    if d == 1:
        if size != 1:
            raise ValueError("size is not a power of the dimension")
        return 1
    n, p = 0, 1
    while p < size:
        p *= d
        n += 1
    if p != size:
        raise ValueError(f"{size} is not a power of {d}")
    return n


def antipode_from_integrals(h: HopfData, pair: IntegralPair) -> LinMap:
    """``(id (x) gamma_r)(gamma (x) id)`` for an arbitrary pair; equals ``S``
    exactly when the pair is a normalised cointegral/integral pair."""
    f = _forms(h, pair)
    I = identity(h.dim)
    return kron(I, f.gamma_red) @ kron(f.gamma, I)


def rescale(hf: HopfFrobeniusData, k) -> HopfFrobeniusData:
    """The structure built from ``(k L, l / k)``."""
    if k == 0:
        raise ValueError("scalar must be invertible")
    return build_hf(hf.green_hopf, hf.pair.scaled(k))


def _same_hopf(a: HopfData, b: HopfData) -> bool:
    return (
        a.dim == b.dim
        and a.mult == b.mult
        and a.unit == b.unit
        and a.comult == b.comult
        and a.counit == b.counit
        and a.antipode == b.antipode
    )


def scalar_equivalence(hf1: HopfFrobeniusData, hf2: HopfFrobeniusData):
    """The ``k`` with ``L2 = k L1`` and ``l2 = l1 / k``, or ``None``.

    Also confirms the derived maps follow the same pattern: green cap, red
    cap and green comultiplication scale by ``k``, the cups and red
    multiplication by ``1/k``, the red antipode not at all.
    """
    if not _same_hopf(hf1.green_hopf, hf2.green_hopf):
        return None
    L1, L2 = hf1.pair.cointegral, hf2.pair.cointegral
    lead = next(iter(sorted(L1.col(0))), None)
    if lead is None:
        return None
    k = L2[lead, 0] * invert(L1[lead, 0])
    if k == 0:
        return None
    f1, f2 = hf1.forms, hf2.forms
    checks = [
        (L2, L1 * k),
        (hf2.pair.integral, hf1.pair.integral / k),
        (f2.gamma, f1.gamma * k),
        (f2.beta_red, f1.beta_red * k),
        (f2.beta, f1.beta / k),
        (f2.gamma_red, f1.gamma_red / k),
        (hf2.green_comult, hf1.green_comult * k),
        (hf2.red_mult, hf1.red_mult / k),
        (hf2.red_antipode, hf1.red_antipode),
    ]
    if all(a == b for a, b in checks):
        return k
    return None


# ----------------------------------------------------------------------------
# Frobenius forms versus coinvertible copoints


def _unpack(frob):
    mult, unit, comult, counit = frob
    d = unit.dst_dim
    return mult, unit, comult, counit, d


def coinverse(frob, copoint: LinMap) -> LinMap:
    """The copoint ``v`` with ``(u (x) v) D = e = (v (x) u) D``."""
    mult, unit, comult, counit, d = _unpack(frob)
    I = identity(d)
    left = kron(copoint, I) @ comult  # v o left = e
    v = solve(left.T, counit.T)
    if v is None:
        raise NotCoinvertible("copoint has no convolution inverse")
    v = v.T
    if kron(v, copoint) @ comult != counit:
        raise NotCoinvertible("copoint has only a one-sided convolution inverse")
    return v


def form_from_element(frob, copoint: LinMap):
    """The Frobenius form ``u M`` and its inverse cap ``(id (x) v (x) id) D^2(1)``."""
    mult, unit, comult, counit, d = _unpack(frob)
    v = coinverse(frob, copoint)
    I = identity(d)
    cap = kron(I, v, I) @ kron(comult, I) @ comult @ unit
    return copoint @ mult, cap


def _is_form(frob, beta: LinMap, beta_inv: LinMap) -> bool:
    mult, unit, comult, counit, d = _unpack(frob)
    I = identity(d)
    if beta.shape != (1, d * d) or beta_inv.shape != (d * d, 1):
        return False
    if beta @ kron(mult, I) != beta @ kron(I, mult):
        return False
    return kron(I, beta) @ kron(beta_inv, I) == I and kron(beta, I) @ kron(I, beta_inv) == I


def element_from_form(frob, beta: LinMap, beta_inv: LinMap) -> LinMap:
    """The copoint ``beta (1 (x) -)`` of an invertible associative form."""
    mult, unit, comult, counit, d = _unpack(frob)
    if not _is_form(frob, beta, beta_inv):
        raise InvalidForm("form is not associative or has no inverse")
    return beta @ kron(unit, identity(d))


def green_frobenius(hf: HopfFrobeniusData):
    h = hf.green_hopf
    return (h.mult, h.unit, hf.green_comult, hf.pair.integral)


def red_frobenius(hf: HopfFrobeniusData):
    h = hf.green_hopf
    return (hf.red_mult, hf.pair.cointegral, h.comult, h.counit)


def is_special(frob) -> bool:
    mult, unit, comult, counit, d = _unpack(frob)
    return mult @ comult == identity(d)


def is_symmetric(frob) -> bool:
    mult, unit, comult, counit, d = _unpack(frob)
    form = counit @ mult
    return form == form @ swap(d, d)
