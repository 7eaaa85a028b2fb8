"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` (or ``int``) values.  A
:class:`CycloScalar` holds a coefficient vector in the power basis of
``Q[t]/Phi_n(t)``.  Arithmetic that produces a rational value returns a
rational, so the common case (entries 0, 1, -1) stays cheap.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch, ParseError

Rational = Fraction

__all__ = [
    "Rational",
    "CycloScalar",
    "Field",
    "cyclotomic_poly",
    "primitive_root",
    "invert",
    "is_rational",
    "as_rational",
]


# --------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, lowest degree first)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    """Quotient and remainder of polynomials over Q (``b`` nonzero)."""
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1]
        if c == 0:
            continue
        if lead == -1:
            c = -c
        elif lead != 1:
            c = Fraction(c) / lead
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] -= c * y
    return _trim(q), _trim(r)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.

    Computed as (t^n - 1) divided by the product of Phi_d over proper divisors d.
    """
    if n < 1:
        raise ValueError("cyclotomic_poly requires n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    q, r = _poly_divmod(num, den)
    assert not r
    return tuple(int(c) for c in q)


@lru_cache(maxsize=None)
def _degree(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(order, coeffs):
    """Reduce a coefficient list modulo Phi_order (monic)."""
    phi = cyclotomic_poly(order)
    m = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, m - 1, -1):
        top = c[k]
        if top == 0:
            continue
        base = k - m
        for j in range(m):
            if phi[j]:
                c[base + j] -= top * phi[j]
        c[k] = 0
    c = c[:m]
    c.extend([0] * (m - len(c)))
    return c


def _normalize_rational(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def as_rational(x):
    """Return ``x`` as int/Fraction, or raise if it is not a rational value."""
    if is_rational(x):
        return x
    if isinstance(x, CycloScalar) and all(c == 0 for c in x.coeffs[1:]):
        return _normalize_rational(x.coeffs[0])
    raise TypeError(f"{x!r} is not rational")


def _make(order, coeffs):
    if all(c == 0 for c in coeffs[1:]):
        return _normalize_rational(coeffs[0])
    return CycloScalar(order, coeffs, _reduced=True)


class CycloScalar:
    """An element of Q(zeta_n) stored in the power basis modulo Phi_n."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs, _reduced: bool = False):
        if order < 1:
            raise ValueError("order must be positive")
        coeffs = list(coeffs)
        if not _reduced:
            coeffs = _reduce(order, [Fraction(c) if not isinstance(c, int) else c for c in coeffs])
        self.order = order
        self.coeffs = tuple(_normalize_rational(c) for c in coeffs)
        self._hash = None

    # -- coercion -----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, CycloScalar):
            if other.order != self.order:
                raise FieldMismatch(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other.coeffs
        if is_rational(other):
            return (other,) + (0,) * (len(self.coeffs) - 1)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _make(self.order, [a + b for a, b in zip(self.coeffs, o)])

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.order, [-a for a in self.coeffs], _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _make(self.order, [a - b for a, b in zip(self.coeffs, o)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _make(self.order, [b - a for a, b in zip(self.coeffs, o)])

    def __mul__(self, other):
        if is_rational(other):
            if other == 0:
                return 0
            return _make(self.order, [a * other for a in self.coeffs])
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _make(self.order, _reduce(self.order, _poly_mul(self.coeffs, o)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return _make(self.order, [Fraction(a) / other for a in self.coeffs])
        if self._lift(other) is None:
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        if self._lift(other) is None:
            return NotImplemented
        return invert(self) * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return invert(self) ** (-k)
        result = 1
        base = self
        while k:
            if k & 1:
                result = base * result
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            return self.order == other.order and self.coeffs == other.coeffs
        if is_rational(other):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if all(c == 0 for c in self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __repr__(self):
        return f"CycloScalar({self.order}, {format_poly(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs)


def primitive_root(n: int) -> CycloScalar:
    """The class of t in Q[t]/Phi_n, a primitive n-th root of unity."""
    if n < 1:
        raise ValueError("primitive_root requires n >= 1")
    return CycloScalar(n, [0, 1])


def invert(a):
    """Multiplicative inverse; raises ZeroDivisionError for zero."""
    if is_rational(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return _normalize_rational(Fraction(1) / a)
    if not isinstance(a, CycloScalar):
        raise TypeError(f"not a field scalar: {a!r}")
    if not a:
        raise ZeroDivisionError("inverse of zero")
    # extended Euclid: find s with s*a == 1 mod Phi
    r0, r1 = list(cyclotomic_poly(a.order)), _trim(a.coeffs)
    s0, s1 = [], [1]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = _poly_mul(q, s1)
        width = max(len(s0), len(qs))
        s_new = [(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(width)]
        s0, s1 = s1, _trim(s_new)
    unit = Fraction(r1[0])
    coeffs = [Fraction(c) / unit for c in s1]
    return _make(a.order, _reduce(a.order, coeffs))


# --------------------------------------------------------------------------
# text syntax

def _format_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(coeffs, var: str = "z") -> str:
    """Canonical text of a power-basis coefficient vector, lowest degree first."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        c = Fraction(c)
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _format_rational(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_format_rational(mag)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


_NUM = r"\d+(?:/\d+)?"
_SIGNED_TERM_RE = re.compile(r"(?P<sign>[+-]?)(?P<body>[^+-]+)")
_TERM_RE = re.compile(
    rf"^(?:(?P<coef>{_NUM})\s*(?:\*\s*)?)?(?P<var>z(?:\s*\^\s*(?P<exp>\d+))?)?$"
)


class Field:
    """The coefficient field: Q (order 1) or Q(zeta_order)."""

    __slots__ = ("order",)

    def __init__(self, order: int = 1):
        if order < 1:
            raise ValueError("field order must be >= 1")
        self.order = order

    @property
    def kind(self) -> str:
        return "rational" if self.order == 1 else "cyclotomic"

    @property
    def degree(self) -> int:
        return _degree(self.order)

    def __eq__(self, other):
        return isinstance(other, Field) and other.order == self.order

    def __hash__(self):
        return hash(("Field", self.order))

    def __repr__(self):
        return "Field(Q)" if self.order == 1 else f"Field(Q(zeta_{self.order}))"

    def zeta(self):
        return primitive_root(self.order)

    def contains(self, x) -> bool:
        if is_rational(x):
            return True
        return isinstance(x, CycloScalar) and x.order == self.order

    def check(self, x):
        if not self.contains(x):
            raise FieldMismatch(f"{x!r} does not lie in {self!r}")
        return x

    def parse(self, text: str):
        """Parse ``p``, ``p/q`` or a polynomial in ``z`` such as ``1 - z^2``."""
        if not isinstance(text, str):
            if isinstance(text, int) and not isinstance(text, bool):
                return text
            raise ParseError(f"scalar must be a string or integer, got {text!r}")
        s = text.strip()
        if not s:
            raise ParseError("empty scalar")
        compact = s.replace(" ", "")
        terms = list(_SIGNED_TERM_RE.finditer(compact))
        if not terms or "".join(t.group(0) for t in terms) != compact:
            raise ParseError(f"bad scalar {text!r}")
        coeffs = {}
        for i, t in enumerate(terms):
            if i > 0 and not t.group("sign"):
                raise ParseError(f"bad scalar {text!r}")
            m = _TERM_RE.match(t.group("body"))
            if not m or not (m.group("coef") or m.group("var")):
                raise ParseError(f"bad scalar {text!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if t.group("sign") == "-":
                coef = -coef
            exp = 0
            if m.group("var"):
                exp = int(m.group("exp")) if m.group("exp") else 1
            coeffs[exp] = coeffs.get(exp, 0) + coef
        if any(k > 0 for k in coeffs) and self.order == 1:
            raise FieldMismatch(f"{text!r} uses z but the field is Q")
        vec = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            vec[k] = c
        if len(vec) == 1:
            return _normalize_rational(vec[0])
        return _make(self.order, _reduce(self.order, vec))

    def format(self, x) -> str:
        self.check(x)
        if is_rational(x):
            return _format_rational(x)
        return format_poly(x.coeffs)
