"""Example Hopf algebras: group algebras, their duals, Taft algebras, presets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import NotAGroup, ParseError
from .hopfcore import BialgebraData, HopfData, dual_hopf
from .scalars import Field, invert, primitive_root
from .tensorlin import LinMap, identity, kron, swap


@dataclass(frozen=True)
class CayleyTable:
    """A finite group as a multiplication table on indices ``0..order-1``.

    ``table[a][b]`` is the index of the product ``a*b``.
    """

    order: int
    table: tuple
    identity_index: int
    names: tuple

    def __post_init__(self):
        n = self.order
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", tuple(self.names))
        if n < 1 or len(table) != n or any(len(r) != n for r in table):
            raise NotAGroup("table must be order x order")
        if len(self.names) != n:
            raise NotAGroup("need one name per element")
        if any(not (0 <= x < n) for r in table for x in r):
            raise NotAGroup("table entries out of range")
        e = self.identity_index
        if not 0 <= e < n:
            raise NotAGroup("identity index out of range")
        for a in range(n):
            if table[e][a] != a or table[a][e] != a:
                raise NotAGroup(f"{self.names[e]} is not an identity")
            if e not in table[a]:
                raise NotAGroup(f"{self.names[a]} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise NotAGroup("operation is not associative")

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity_index)

    @classmethod
    def from_elements(cls, elements, op, names, identity_element):
        elements = list(elements)
        index = {g: i for i, g in enumerate(elements)}
        try:
            table = [[index[op(a, b)] for b in elements] for a in elements]
        except KeyError as exc:
            raise NotAGroup("set is not closed under the operation") from exc
        return cls(len(elements), table, index[identity_element], names)


def _compose_perm(p, q):
    # (p q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(q)))


def cyclic_group(n: int) -> CayleyTable:
    if n < 1:
        raise NotAGroup("cyclic group order must be positive")
    names = ["e"] + [("g" if k == 1 else f"g^{k}") for k in range(1, n)]
    return CayleyTable(n, [[(a + b) % n for b in range(n)] for a in range(n)], 0, names)


def dihedral_group(n: int) -> CayleyTable:
    """Symmetries of the n-gon, elements ordered ``r^k`` then ``f r^k``."""
    if n < 1:
        raise NotAGroup("dihedral group needs n >= 1")
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((-i) % n for i in range(n))
    e = tuple(range(n))
    rots = [e]
    for _ in range(n - 1):
        rots.append(_compose_perm(rot, rots[-1]))
    elements = rots + [_compose_perm(flip, r) for r in rots]
    if n <= 2:
        # the permutation action on n points is not faithful; use (rot, flip) pairs
        elements = [(k, s) for s in (0, 1) for k in range(n)]

        def op(a, b):
            k1, s1 = a
            k2, s2 = b
            return ((k1 + (-k2 if s1 else k2)) % n, (s1 + s2) % 2)

        identity_element = (0, 0)
    else:
        op = _compose_perm
        identity_element = e

    def rname(k):
        return "e" if k == 0 else ("r" if k == 1 else f"r^{k}")

    names = [rname(k) for k in range(n)] + [("f" if k == 0 else "f" + rname(k)) for k in range(n)]
    return CayleyTable.from_elements(elements, op, names, identity_element)


def symmetric3() -> CayleyTable:
    """S_3 with the fixed element order (e, r, r^2, f, fr, fr^2)."""
    return dihedral_group(3)


def symmetric_group(n: int) -> CayleyTable:
    if n == 3:
        return symmetric3()
    perms = sorted(permutations(range(n)))
    names = ["".join(str(i) for i in p) for p in perms]
    return CayleyTable.from_elements(perms, _compose_perm, names, tuple(range(n)))


# ----------------------------------------------------------------------------
# group algebras and their duals


def group_algebra(t: CayleyTable, field: Field = Field(1)) -> HopfData:
    """k[G]: basis G, group product, every g grouplike."""
    n = t.order
    mult = LinMap(n, n * n, [{t.table[a][b]: 1} for a in range(n) for b in range(n)])
    unit = LinMap.column([1 if i == t.identity_index else 0 for i in range(n)])
    comult = LinMap(n * n, n, [{g * n + g: 1} for g in range(n)])
    counit = LinMap.row([1] * n)
    antipode = LinMap(n, n, [{t.inverse(g): 1} for g in range(n)])
    return HopfData(BialgebraData(n, mult, unit, comult, counit, t.names, field), antipode)


def function_algebra(t: CayleyTable, field: Field = Field(1)) -> HopfData:
    """Functions on G: pointwise product on deltas, ``D(d_g) = sum_{hk=g} d_h (x) d_k``."""
    n = t.order
    mult = LinMap(n, n * n, [({a: 1} if a == b else {}) for a in range(n) for b in range(n)])
    unit = LinMap.column([1] * n)
    entries = {}
    for h in range(n):
        for k in range(n):
            entries[(h * n + k, t.table[h][k])] = 1
    comult = LinMap.from_entries(n * n, n, entries)
    counit = LinMap.row([1 if i == t.identity_index else 0 for i in range(n)])
    antipode = LinMap(n, n, [{t.inverse(g): 1} for g in range(n)])
    names = tuple(f"d_{name}" for name in t.names)
    return HopfData(BialgebraData(n, mult, unit, comult, counit, names, field), antipode)


def trivial(field: Field = Field(1)) -> HopfData:
    one = LinMap.scalar(1)
    return HopfData(BialgebraData(1, one, one, one, one, ("1",), field), one)


# ----------------------------------------------------------------------------
# Taft algebras


def _taft_name(beta: int, alpha: int) -> str:
    g = "" if beta == 0 else ("g" if beta == 1 else f"g^{beta}")
    x = "" if alpha == 0 else ("x" if alpha == 1 else f"x^{alpha}")
    return (g + x) or "1"


def taft(n: int, q=None) -> HopfData:
    """The Taft algebra T_n over Q(zeta_n), basis ``g^b x^a`` at index ``b*n + a``.

    Generated by ``g, x`` with ``g^n = 1``, ``x^n = 0`` and ``g x = q x g``;
    ``q`` defaults to ``zeta_n^{-1}`` (so ``x g = zeta_n g x``).
    ``D(x) = 1 (x) x + x (x) g``, ``D(g) = g (x) g``, ``S(x) = -x g^{-1}``,
    ``S(g) = g^{-1}``.
    """
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    field = Field(n)
    z = primitive_root(n)
    if q is None:
        q = invert(z)
    field.check(q)
    if q ** n != 1 or any(q ** k == 1 for k in range(1, n)):
        raise ValueError("q must be a primitive n-th root of unity")
    d = n * n
    qinv = invert(q)

    def idx(beta, alpha):
        return (beta % n) * n + alpha

    # (g^a x^b)(g^c x^e) = q^{-bc} g^{a+c} x^{b+e}
    cols = []
    for i in range(d):
        a, b = divmod(i, n)
        for j in range(d):
            c, e = divmod(j, n)
            if b + e >= n:
                cols.append({})
            else:
                cols.append({idx(a + c, b + e): qinv ** (b * c)})
    mult = LinMap(d, d * d, cols)
    unit = LinMap.column([1 if i == 0 else 0 for i in range(d)])
    counit = LinMap.row([1 if i % n == 0 else 0 for i in range(d)])

    mult2 = kron(mult, mult) @ kron(identity(d), swap(d, d), identity(d))

    def times2(u, v):
        return mult2 @ kron(u, v)

    g = LinMap.column([1 if i == idx(1, 0) else 0 for i in range(d)])
    x = LinMap.column([1 if i == idx(0, 1) else 0 for i in range(d)])
    one = unit
    dg = kron(g, g)
    dx = kron(one, x) + kron(x, g)
    comult_cols = []
    for i in range(d):
        beta, alpha = divmod(i, n)
        v = kron(one, one)
        for _ in range(beta):
            v = times2(v, dg)
        for _ in range(alpha):
            v = times2(v, dx)
        comult_cols.append(v.col(0))
    comult = LinMap(d * d, d, comult_cols)

    def times(u, v):
        return mult @ kron(u, v)

    ginv = LinMap.column([1 if i == idx(n - 1, 0) else 0 for i in range(d)])
    s_x = -times(x, ginv)
    s_g = ginv
    # S is an anti-homomorphism: S(g^b x^a) = S(x)^a S(g)^b
    ant_cols = []
    for i in range(d):
        beta, alpha = divmod(i, n)
        v = one
        for _ in range(alpha):
            v = times(v, s_x)
        for _ in range(beta):
            v = times(v, s_g)
        ant_cols.append(v.col(0))
    antipode = LinMap(d, d, ant_cols)
    names = tuple(_taft_name(*divmod(i, n)) for i in range(d))
    return HopfData(BialgebraData(d, mult, unit, comult, counit, names, field), antipode)


# ----------------------------------------------------------------------------
# presets

PRESET_HELP = "trivial, cyclic:<n>, sym:3, dihedral:<n>, taft:<n>, dual:<preset>"


def _int_arg(name, arg):
    try:
        value = int(arg)
    except (TypeError, ValueError):
        raise ParseError(f"preset {name!r} needs an integer argument, got {arg!r}") from None
    return value


def preset(spec: str) -> HopfData:
    """Build a named example algebra (see ``PRESET_HELP``)."""
    spec = spec.strip()
    head, _, arg = spec.partition(":")
    if head == "trivial" and not arg:
        return trivial()
    if head == "cyclic":
        n = _int_arg(head, arg)
        if n < 1:
            raise ParseError("cyclic:<n> needs n >= 1")
        return group_algebra(cyclic_group(n))
    if head == "sym":
        n = _int_arg(head, arg)
        if n < 1 or n > 4:
            raise ParseError("sym:<n> supports 1 <= n <= 4")
        return group_algebra(symmetric_group(n))
    if head == "dihedral":
        n = _int_arg(head, arg)
        if n < 1:
            raise ParseError("dihedral:<n> needs n >= 1")
        return group_algebra(dihedral_group(n))
    if head == "taft":
        n = _int_arg(head, arg)
        if n < 2:
            raise ParseError("taft:<n> needs n >= 2")
        return taft(n)
    if head == "dual" and arg:
        inner_head = arg.partition(":")[0]
        if inner_head in ("cyclic", "sym", "dihedral"):
            inner_arg = arg.partition(":")[2]
            n = _int_arg(inner_head, inner_arg)
            table = {"cyclic": cyclic_group, "sym": symmetric_group, "dihedral": dihedral_group}[inner_head](n)
            return function_algebra(table)
        return dual_hopf(preset(arg))
    raise ParseError(f"unknown preset {spec!r}; expected one of {PRESET_HELP}")
