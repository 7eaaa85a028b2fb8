"""Bialgebras and Hopf algebras given by structure constants.

Every structure map is a :class:`~hopffrob.tensorlin.LinMap` between tensor
powers of the carrier: ``mult`` is ``d x d^2``, ``unit`` ``d x 1``, ``comult``
``d^2 x d``, ``counit`` ``1 x d`` and ``antipode`` ``d x d``.  The checkers
compare both sides of each law exactly and keep one differing entry as a
witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AntipodeOneSided, DimensionMismatch, NoAntipode, SnakeFailure
from .scalars import Field
from .tensorlin import (
    LinMap,
    compose_kron,
    identity,
    invert_matrix,
    kron,
    kron_compose,
    permute_factors,
    rank,
    solve,
    swap,
)

BIALGEBRA_LAWS = (
    "assoc",
    "unit_l",
    "unit_r",
    "coassoc",
    "counit_l",
    "counit_r",
    "copy",
    "cocopy",
    "bialg",
    "scalar",
)
HOPF_LAWS = ("hopf_l", "hopf_r")


@dataclass(frozen=True)
class Violation:
    law: str
    # (row, col, lhs value, rhs value) of the first differing entry
    witness: tuple

    def __str__(self):
        i, j, lhs, rhs = self.witness
        return f"{self.law}: entry ({i}, {j}) lhs={lhs} rhs={rhs}"


@dataclass
class Report:
    """Outcome of an axiom check: which laws were checked and which failed."""

    checked: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def violated(self) -> set:
        return {v.law for v in self.violations}

    def holds(self, law: str) -> bool:
        if law not in self.checked:
            raise KeyError(f"law {law!r} was not checked")
        return law not in self.violated

    def law(self, name, lhs: LinMap, rhs: LinMap):
        self.checked.append(name)
        diff = lhs.first_difference(rhs)
        if diff is not None:
            self.violations.append(Violation(name, diff))
        return diff is None

    def extend(self, other: "Report"):
        self.checked.extend(other.checked)
        self.violations.extend(other.violations)
        return self

    def __contains__(self, law):
        return law in self.violated

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __bool__(self):
        # truthy when something is wrong, like a non-empty list of violations
        return bool(self.violations)

    def __str__(self):
        if self.ok:
            return "ok (" + ", ".join(self.checked) + ")"
        return "; ".join(str(v) for v in self.violations)


def default_basis_names(d: int):
    return tuple(f"e{i}" for i in range(d))


@dataclass(frozen=True)
class BialgebraData:
    dim: int
    mult: LinMap
    unit: LinMap
    comult: LinMap
    counit: LinMap
    basis_names: tuple = None
    field: Field = Field(1)

    def __post_init__(self):
        d = self.dim
        expected = {
            "mult": (d, d * d),
            "unit": (d, 1),
            "comult": (d * d, d),
            "counit": (1, d),
        }
        for name, shape in expected.items():
            got = getattr(self, name).shape
            if got != shape:
                raise DimensionMismatch(f"{name} has shape {got}, expected {shape}")
        if self.basis_names is None:
            object.__setattr__(self, "basis_names", default_basis_names(d))
        else:
            object.__setattr__(self, "basis_names", tuple(self.basis_names))
        if len(self.basis_names) != d:
            raise DimensionMismatch("basis_names must have one name per basis vector")

    def replace(self, **changes) -> "BialgebraData":
        data = {k: getattr(self, k) for k in ("dim", "mult", "unit", "comult", "counit", "basis_names", "field")}
        data.update(changes)
        return BialgebraData(**data)

    def is_commutative(self) -> bool:
        return self.mult @ swap(self.dim, self.dim) == self.mult

    def is_cocommutative(self) -> bool:
        return swap(self.dim, self.dim) @ self.comult == self.comult


@dataclass(frozen=True)
class HopfData:
    bialgebra: BialgebraData
    antipode: LinMap

    def __post_init__(self):
        d = self.bialgebra.dim
        if self.antipode.shape != (d, d):
            raise DimensionMismatch(f"antipode has shape {self.antipode.shape}, expected {(d, d)}")

    dim = property(lambda self: self.bialgebra.dim)
    mult = property(lambda self: self.bialgebra.mult)
    unit = property(lambda self: self.bialgebra.unit)
    comult = property(lambda self: self.bialgebra.comult)
    counit = property(lambda self: self.bialgebra.counit)
    basis_names = property(lambda self: self.bialgebra.basis_names)
    field = property(lambda self: self.bialgebra.field)

    @classmethod
    def from_maps(cls, mult, unit, comult, counit, antipode, basis_names=None, field=Field(1)):
        b = BialgebraData(unit.dst_dim, mult, unit, comult, counit, basis_names, field)
        return cls(b, antipode)

    def replace(self, antipode=None, **changes) -> "HopfData":
        return HopfData(self.bialgebra.replace(**changes), self.antipode if antipode is None else antipode)

    def is_commutative(self) -> bool:
        return self.bialgebra.is_commutative()

    def is_cocommutative(self) -> bool:
        return self.bialgebra.is_cocommutative()


def _as_bialgebra(b):
    return b.bialgebra if isinstance(b, HopfData) else b


def check_bialgebra(b) -> Report:
    """Check the monoid, comonoid and compatibility laws."""
    b = _as_bialgebra(b)
    d = b.dim
    I = identity(d)
    M, u, D, e = b.mult, b.unit, b.comult, b.counit
    r = Report()
    r.law("assoc", compose_kron(M, M, I), compose_kron(M, I, M))
    r.law("unit_l", compose_kron(M, u, I), I)
    r.law("unit_r", compose_kron(M, I, u), I)
    r.law("coassoc", kron_compose([D, I], D), kron_compose([I, D], D))
    r.law("counit_l", kron_compose([e, I], D), I)
    r.law("counit_r", kron_compose([I, e], D), I)
    r.law("copy", D @ u, kron(u, u))
    r.law("cocopy", e @ M, kron(e, e))
    middle = kron_compose([I, swap(d, d), I], kron(D, D))
    r.law("bialg", D @ M, kron_compose([M, M], middle))
    r.law("scalar", e @ u, LinMap.scalar(1))
    return r


def convolution(f: LinMap, g: LinMap, b) -> LinMap:
    """Convolution product ``mult o (f (x) g) o comult`` of endomorphisms."""
    b = _as_bialgebra(b)
    d = b.dim
    if f.shape != (d, d) or g.shape != (d, d):
        raise DimensionMismatch(f"convolution needs {d}x{d} maps, got {f.shape} and {g.shape}")
    return b.mult @ kron_compose([f, g], b.comult)


def check_hopf(h: HopfData) -> Report:
    r = check_bialgebra(h.bialgebra)
    S = h.antipode
    I = identity(h.dim)
    ue = h.unit @ h.counit
    r.law("hopf_l", convolution(S, I, h), ue)
    r.law("hopf_r", convolution(I, S, h), ue)
    return r


def antipode_system(b, side: str = "left"):
    """Linear system ``(A, rhs)`` for the antipode entries.

    Unknown ``S[a, c]`` sits at column ``a*d + c``; row ``o*d + h`` is the
    ``(o, h)`` entry of the convolution identity.  ``side='left'`` encodes
    ``mult(S (x) id)comult = unit counit``, ``'right'`` the mirror law.
    """
    b = _as_bialgebra(b)
    d = b.dim
    M, D = b.mult, b.comult
    entries = {}
    for h in range(d):
        for jk, c in D.col(h).items():
            j, k = divmod(jk, d)
            # the antipode acts on leg j (left) or leg k (right)
            s_in, other = (j, k) if side == "left" else (k, j)
            for a in range(d):
                col = a * d + other if side == "left" else other * d + a
                for o, m in M.col(col).items():
                    key = (o * d + h, a * d + s_in)
                    entries[key] = entries.get(key, 0) + c * m
    A = LinMap.from_entries(d * d, d * d, entries)
    ue = b.unit @ b.counit
    rhs = LinMap.column([ue[o, h] for o in range(d) for h in range(d)])
    return A, rhs


def _unflatten(vec: LinMap, d: int) -> LinMap:
    entries = {}
    for idx, v in vec.col(0).items():
        a, c = divmod(idx, d)
        entries[(a, c)] = v
    return LinMap.from_entries(d, d, entries)


def solve_antipode(b) -> HopfData:
    """Solve for the antipode of a bialgebra and verify both Hopf laws."""
    b = _as_bialgebra(b)
    A, rhs = antipode_system(b, "left")
    x = solve(A, rhs)
    if x is None:
        raise NoAntipode("mult(S (x) id)comult = unit counit has no solution")
    S = _unflatten(x, b.dim)
    I = identity(b.dim)
    if convolution(I, S, b) != b.unit @ b.counit:
        raise AntipodeOneSided("left convolution inverse of id is not a right inverse")
    return HopfData(b, S)


def antipode_solution_dimension(b) -> int:
    """Dimension of the solution space of the left antipode system (0 when unique)."""
    A, _ = antipode_system(b, "left")
    return A.src_dim - rank(A)


def op_variant(h: HopfData) -> HopfData:
    """Same unit and counit, multiplication and comultiplication both reversed."""
    d = h.dim
    sw = swap(d, d)
    b = h.bialgebra.replace(mult=h.mult @ sw, comult=sw @ h.comult)
    return solve_antipode(b)


def sigma_variant(h) -> BialgebraData:
    """Reverse only the comultiplication; the result need not be Hopf."""
    b = _as_bialgebra(h)
    return b.replace(comult=swap(b.dim, b.dim) @ b.comult)


def antipode_order(h: HopfData, bound: int = 64):
    """Least ``k <= bound`` with ``S^k = id``, else ``None``."""
    I = identity(h.dim)
    power = h.antipode
    for k in range(1, bound + 1):
        if power == I:
            return k
        power = h.antipode @ power
    return None


def standard_cap(d: int) -> LinMap:
    """``sum_i e_i (x) e_i`` as a ``d^2 x 1`` column."""
    return LinMap.column([1 if i % (d + 1) == 0 else 0 for i in range(d * d)])


def standard_cup(d: int) -> LinMap:
    return standard_cap(d).T


def check_snakes(cap: LinMap, cup: LinMap, d: int) -> bool:
    """Whether ``cap: I -> H (x) B`` and ``cup: B (x) H -> I`` form a duality."""
    I = identity(d)
    left = kron(I, cup) @ kron(cap, I)
    right = kron(cup, I) @ kron(I, cap)
    return left == I and right == I


def _pairing_matrices(cap: LinMap, cup: LinMap, d: int):
    # C[b, h] = cup(e_b (x) e_h);  K[h, b] = coefficient of e_h (x) e_b in cap
    C = LinMap.from_entries(d, d, {divmod(idx, d): v for (_, idx), v in cup.items()})
    K = LinMap.from_entries(d, d, {divmod(idx, d): v for (idx, _), v in cap.items()})
    return C, K


def _reverse_legs(d: int, n: int) -> LinMap:
    if n <= 1:
        return identity(d ** n)
    return permute_factors([d] * n, list(range(n - 1, -1, -1)))


def dual_map(
    f: LinMap, cap: LinMap, cup: LinMap, d: int, n_in: int, n_out: int, planar: bool = False
) -> LinMap:
    """Transpose of ``f: H^(n_in) -> H^(n_out)`` through a duality pair.

    By default the legs of the dual are paired with legs of ``H`` in the same
    order, so with the standard cap and cup this is the plain matrix
    transpose.  With ``planar=True`` the wires are bent without crossing,
    which reverses the order of the tensor legs.
    """
    C, K = _pairing_matrices(cap, cup, d)
    Kt = kron(*([K.T] * n_in)) if n_in else LinMap.scalar(1)
    Ct = kron(*([C.T] * n_out)) if n_out else LinMap.scalar(1)
    core = f.T
    if planar:
        core = _reverse_legs(d, n_in) @ core @ _reverse_legs(d, n_out)
    return Kt @ core @ Ct


def dual_hopf(h: HopfData, cap: LinMap = None, cup: LinMap = None, planar: bool = False) -> HopfData:
    """The dual Hopf algebra, realised on the same coordinate space.

    Multiplication is the transposed comultiplication, comultiplication the
    transposed multiplication, unit and counit swap roles likewise.  The
    default pairs tensor legs in parallel, giving the usual ``H*``; the planar
    variant is its op-cop twin.
    """
    d = h.dim
    cap = standard_cap(d) if cap is None else cap
    cup = standard_cup(d) if cup is None else cup
    if cap.shape != (d * d, 1) or cup.shape != (1, d * d):
        raise DimensionMismatch("cap must be d^2 x 1 and cup 1 x d^2")
    if not check_snakes(cap, cup, d):
        raise SnakeFailure("cap and cup do not satisfy the snake equations")

    def t(f, n_in, n_out):
        return dual_map(f, cap, cup, d, n_in, n_out, planar)

    names = tuple(f"{n}*" for n in h.basis_names)
    b = BialgebraData(
        d,
        mult=t(h.comult, 1, 2),
        unit=t(h.counit, 1, 0),
        comult=t(h.mult, 2, 1),
        counit=t(h.unit, 0, 1),
        basis_names=names,
        field=h.field,
    )
    return HopfData(b, t(h.antipode, 1, 1))


def is_isomorphism(phi: LinMap, source: HopfData, target: HopfData) -> bool:
    """Whether ``phi`` is an invertible Hopf algebra map ``source -> target``."""
    try:
        invert_matrix(phi)
    except Exception:
        return False
    return not hopf_morphism_report(phi, source, target)


def hopf_morphism_report(phi: LinMap, source, target) -> Report:
    """Intertwining laws of ``phi`` with every structure map present."""
    src = _as_bialgebra(source)
    tgt = _as_bialgebra(target)
    r = Report()
    r.law("mult", phi @ src.mult, tgt.mult @ kron(phi, phi))
    r.law("unit", phi @ src.unit, tgt.unit)
    r.law("comult", kron(phi, phi) @ src.comult, tgt.comult @ phi)
    r.law("counit", tgt.counit @ phi, src.counit)
    if isinstance(source, HopfData) and isinstance(target, HopfData):
        r.law("antipode", phi @ source.antipode, target.antipode @ phi)
    return r


def alternate_bialgebra_sides(h: HopfData):
    """Both sides of the bialgebra rule rewritten with the antipode.

    ``(M (x) id) o (id (x) S (x) id) o (id (x) D)`` versus
    ``(id (x) M) o (D (x) id)`` after swapping legs appropriately: concretely
    ``a (x) b -> a_1 (x) S(a_2) b``, whose inverse is ``a (x) b -> a_1 (x) a_2 b``.
    Returns the two composites that must agree, namely the composite of the
    pair and the identity on ``H (x) H``.
    """
    d = h.dim
    I = identity(d)
    M, D, S = h.mult, h.comult, h.antipode
    galois = kron(I, M) @ kron(D, I)
    galois_inv = kron(I, M) @ kron(I, S, I) @ kron(D, I)
    return galois_inv @ galois, identity(d * d)
