"""Drinfeld doubles, the red double and quasi-triangular structure.

Both doubles come from one construction.  Given Hopf algebras ``H`` and ``K``
and a Hopf pairing ``<,>: K (x) H -> k`` (``K`` acting as the dual of ``H``
with opposite multiplication), the double lives on ``H (x) K`` with
multiplication::

    (a (x) x)(b (x) y) = <x_1, b_1> <x_3, S(b_3)> a b_2 (x) x_2 y

the tensor-product comultiplication and R-matrix ``sum_i (1 (x) f_i) (x) (e_i (x) 1)``
over dual bases.  The classical double takes ``K`` to be the coordinate dual
of ``H``; the red double takes ``K`` to be the red Hopf algebra on ``H``
itself, paired through the red cup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency
from .hopfcore import HopfData, Report, dual_hopf, hopf_morphism_report, standard_cap, standard_cup
from .hopffrobenius import HopfFrobeniusData
from .tensorlin import LinMap, compose_kron, identity, invert_matrix, kron, kron_compose, swap


@dataclass(frozen=True)
class QuasiTriangularData:
    hopf: HopfData
    r_matrix: LinMap
    # dimensions of the two tensor factors of the carrier
    split: tuple

    def report(self) -> Report:
        return check_quasitriangular(self.hopf, self.r_matrix)


def _second_comult(D: LinMap, d: int):
    """``(D (x) id) D`` as one dict per column over flat triple indices."""
    out = []
    for col in D._cols:
        acc = {}
        for ij, c in col.items():
            i, j = divmod(ij, d)
            for kl, c2 in D.col(i).items():
                key = kl * d + j
                acc[key] = acc.get(key, 0) + c * c2
        out.append({k: v for k, v in acc.items() if v != 0})
    return out


def _pairing_table(pairing: LinMap, d: int) -> list:
    P = [[0] * d for _ in range(d)]
    for (_, idx), v in pairing.items():
        x, b = divmod(idx, d)
        P[x][b] = v
    return P


def double_from_pairing(H: HopfData, K: HopfData, pairing: LinMap, k_names=None) -> HopfData:
    """The double of ``H`` and ``K`` glued by ``pairing`` (``1 x d^2`` on ``K (x) H``)."""
    d = H.dim
    if K.dim != d or pairing.shape != (1, d * d):
        raise ValueError("K and the pairing must match the dimension of H")
    P1 = _pairing_table(pairing, d)
    P3 = _pairing_table(pairing @ kron(identity(d), H.antipode), d)
    Dx = _second_comult(K.comult, d)
    Db = _second_comult(H.comult, d)
    d2 = d * d
    # twist[x][b] = {(b_2, x_2): <x_1, b_1> <x_3, S b_3>}
    twist = []
    for x in range(d):
        row = []
        for b in range(d):
            acc = {}
            for xs, cx in Dx[x].items():
                x1, x2, x3 = xs // d2, (xs // d) % d, xs % d
                for bs, cb in Db[b].items():
                    b1, b2, b3 = bs // d2, (bs // d) % d, bs % d
                    c = P1[x1][b1]
                    if c:
                        c3 = P3[x3][b3]
                        if c3:
                            key = (b2, x2)
                            acc[key] = acc.get(key, 0) + cx * cb * c * c3
            row.append({k: v for k, v in acc.items() if v != 0})
        twist.append(row)
    MH, MK = H.mult, K.mult
    cols = []
    # column index of (a (x) x) (x) (b (x) y) is ((a d + x) d + b) d + y
    for a in range(d):
        for x in range(d):
            for b in range(d):
                for y in range(d):
                    acc = {}
                    for (b2, x2), c in twist[x][b].items():
                        for i, u in MH.col(a * d + b2).items():
                            for j, v in MK.col(x2 * d + y).items():
                                key = i * d + j
                                acc[key] = acc.get(key, 0) + c * u * v
                    cols.append({k: v for k, v in acc.items() if v != 0})
    mult = LinMap(d2, d2 * d2, cols, _trusted=True)
    I = identity(d)
    unit = kron(H.unit, K.unit)
    comult = kron_compose([I, swap(d, d), I], kron(H.comult, K.comult))
    counit = kron(H.counit, K.counit)
    # S(a (x) x) = (1 (x) S_K x)(S a (x) 1)
    antipode = compose_kron(mult, kron(H.unit, K.antipode), kron(H.antipode, K.unit)) @ swap(d, d)
    k_names = K.basis_names if k_names is None else k_names
    names = tuple(f"{p}⊗{q}" for p in H.basis_names for q in k_names)
    return HopfData.from_maps(mult, unit, comult, counit, antipode, basis_names=names, field=H.field)


def _r_matrix(H: HopfData, K: HopfData, dual_bases: LinMap) -> LinMap:
    """``sum_i (1 (x) f_i) (x) (e_i (x) 1)`` from ``dual_bases = sum_i f_i (x) e_i``."""
    return kron(H.unit, dual_bases, K.unit)


def coordinate_dual(h: HopfData) -> HopfData:
    """``H*`` with opposite multiplication, on the coordinate dual basis.

    Raises :class:`~hopffrob.errors.Singular` if the antipode is not invertible.
    """
    d = h.dim
    s_inv = invert_matrix(h.antipode)
    star = dual_hopf(h)
    return HopfData.from_maps(
        star.mult @ swap(d, d),
        star.unit,
        star.comult,
        star.counit,
        s_inv.T,
        basis_names=tuple(f"{n}*" for n in h.basis_names),
        field=h.field,
    )


def drinfeld_double(h: HopfData) -> HopfData:
    """``D(H)`` on ``H (x) H*`` with basis names ``b_i⊗b_j*``."""
    K = coordinate_dual(h)
    return double_from_pairing(h, K, standard_cup(h.dim))


def drinfeld_r_matrix(h: HopfData) -> LinMap:
    d = h.dim
    return _r_matrix(h, coordinate_dual(h), standard_cap(d))


def drinfeld_qt(h: HopfData) -> QuasiTriangularData:
    return QuasiTriangularData(drinfeld_double(h), drinfeld_r_matrix(h), (h.dim, h.dim))


def red_double(hf: HopfFrobeniusData) -> HopfData:
    """``D_r(H)`` on ``H (x) H``: the green Hopf algebra glued to the red one
    through the red cup."""
    K = hf.red_hopf
    names = tuple(f"{n}'" for n in hf.green_hopf.basis_names)
    return double_from_pairing(hf.green_hopf, K, hf.forms.gamma_red, k_names=names)


def red_r_matrix(hf: HopfFrobeniusData) -> LinMap:
    """``1 (x) (swap o red cap) (x) L``."""
    d = hf.dim
    return _r_matrix(hf.green_hopf, hf.red_hopf, swap(d, d) @ hf.forms.beta_red)


def red_qt(hf: HopfFrobeniusData) -> QuasiTriangularData:
    return QuasiTriangularData(red_double(hf), red_r_matrix(hf), (hf.dim, hf.dim))


def rho_iso(hf: HopfFrobeniusData):
    """``rho = (gamma_r (x) id)(id (x) cap)`` and its inverse ``(cup (x) id)(id (x) beta_r)``.

    ``rho`` is a Hopf map from the red Hopf algebra with swapped
    comultiplication to the planar dual of the green one.
    """
    d = hf.dim
    I = identity(d)
    rho = kron(hf.forms.gamma_red, I) @ kron(I, standard_cap(d))
    rho_inv = kron(standard_cup(d), I) @ kron(I, hf.forms.beta_red)
    if rho @ rho_inv != I or rho_inv @ rho != I:
        raise InternalInconsistency("rho and its candidate inverse do not compose to the identity")
    report = rho_report(hf, rho)
    if report:
        raise InternalInconsistency(f"rho is not a Hopf algebra map: {report}", report)
    return rho, rho_inv


def rho_report(hf: HopfFrobeniusData, rho: LinMap) -> Report:
    red = hf.red_hopf
    d = hf.dim
    red_sigma = red.replace(comult=swap(d, d) @ red.comult, antipode=invert_matrix(red.antipode))
    return hopf_morphism_report(rho, red_sigma, dual_hopf(hf.green_hopf, planar=True))


def rho_double_sides(hf: HopfFrobeniusData):
    """``mu_D o ((1 (x) rho) (x) (1 (x) rho))`` and ``(1 (x) rho) o mu_r``."""
    rho, _ = rho_iso(hf)
    phi = kron(identity(hf.dim), rho)
    classical = drinfeld_double(hf.green_hopf)
    red = red_double(hf)
    return compose_kron(classical.mult, phi, phi), phi @ red.mult


def double_iso_check(hf: HopfFrobeniusData) -> bool:
    """Whether ``1 (x) rho`` is a Hopf isomorphism ``D_r(H) -> D(H)`` carrying
    the red R-matrix to the classical one."""
    try:
        rho, _ = rho_iso(hf)
    except InternalInconsistency:
        return False
    d = hf.dim
    phi = kron(identity(d), rho)
    classical = drinfeld_double(hf.green_hopf)
    red = red_double(hf)
    if hopf_morphism_report(phi, red, classical):
        return False
    return kron(phi, phi) @ red_r_matrix(hf) == drinfeld_r_matrix(hf.green_hopf)


# ----------------------------------------------------------------------------
# quasi-triangularity


def _point_terms(R: LinMap, n: int):
    """Split a point of ``A (x) A`` as ``sum_p e_p (x) w_p``."""
    blocks = {}
    for idx, v in R.col(0).items():
        p, q = divmod(idx, n)
        blocks.setdefault(p, {})[q] = v
    return [(_basis(n, p), LinMap(n, 1, [w], _trusted=True)) for p, w in sorted(blocks.items())]


def _basis(n: int, i: int) -> LinMap:
    return LinMap(n, 1, [{i: 1}], _trusted=True)


def _times(M: LinMap, p: LinMap, q: LinMap) -> LinMap:
    return compose_kron(M, p, q)


def point_product(h: HopfData, X: LinMap, Y: LinMap) -> LinMap:
    """Product of two points of ``H (x) H`` in the tensor-square algebra."""
    n = h.dim
    out = LinMap.zero(n * n, 1)
    for x, x2 in _point_terms(X, n):
        for y, y2 in _point_terms(Y, n):
            out = out + kron(_times(h.mult, x, y), _times(h.mult, x2, y2))
    return out


def check_quasitriangular(h: HopfData, R: LinMap) -> Report:
    """Invertibility, quasi-commutativity and the two splitting laws of ``R``."""
    n = h.dim
    M, D = h.mult, h.comult
    I = identity(n)
    r = Report()
    if R.shape != (n * n, 1):
        raise ValueError(f"R must be a {n * n} x 1 point")
    terms = _point_terms(R, n)
    one = kron(h.unit, h.unit)
    R_inv = kron_compose([h.antipode, I], R)
    r.law("invertible_l", point_product(h, R, R_inv), one)
    r.law("invertible_r", point_product(h, R_inv, R), one)
    lhs = LinMap.zero(n * n, n)
    rhs = LinMap.zero(n * n, n)
    sw_D = swap(n, n) @ D
    for p, q in terms:
        lhs = lhs + kron_compose([compose_kron(M, I, p), compose_kron(M, I, q)], sw_D)
        rhs = rhs + kron_compose([compose_kron(M, p, I), compose_kron(M, q, I)], D)
    r.law("quasi_commutative", lhs, rhs)
    split_l = LinMap.zero(n ** 3, 1)
    split_r = LinMap.zero(n ** 3, 1)
    for p, q in terms:
        for p2, q2 in terms:
            # R13 R23 and R13 R12
            split_l = split_l + kron(p, p2, _times(M, q, q2))
            split_r = split_r + kron(_times(M, p, p2), q2, q)
    r.law("split_l", kron_compose([D, I], R), split_l)
    r.law("split_r", kron_compose([I, D], R), split_r)
    return r


def yang_baxter_check(h: HopfData, R: LinMap) -> bool:
    """``R12 R13 R23 = R23 R13 R12`` in ``H^(x)3``."""
    n = h.dim
    M = h.mult
    terms = _point_terms(R, n)
    lhs = LinMap.zero(n ** 3, 1)
    rhs = LinMap.zero(n ** 3, 1)
    for s, s2 in terms:
        for t, t2 in terms:
            st = _times(M, s, t)
            ts = _times(M, t, s)
            for u, u2 in terms:
                lhs = lhs + kron(st, _times(M, s2, u), _times(M, t2, u2))
                rhs = rhs + kron(ts, _times(M, u, s2), _times(M, u2, t2))
    return lhs == rhs
