"""Exact scalars: rationals and elements of a single quadratic extension.

Rationals are plain :class:`fractions.Fraction` values.  An element
``a + b*sqrt(D)`` of Q(sqrt(D)) is a :class:`QuadExt`; a ``QuadExt`` is only
ever constructed in canonical form (``b != 0`` and ``D`` not the square of a
rational), so every result that happens to be rational comes back as a
``Fraction``.  Use :func:`quad` to build elements without worrying about that.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

from .errors import DiscriminantMismatch, DivisionByZero

Rational = Fraction
FieldElement = Union[Fraction, "QuadExt"]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(x) -> Fraction:
    """Coerce ints, strings like ``"-3/4"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def _iroot(n: int, r: int) -> int:
    """Floor of the real r-th root of a nonnegative integer."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // r)  # upper bound
    while True:
        y = ((r - 1) * x + n // x ** (r - 1)) // r
        if y >= x:
            return x
        x = y


def rational_root(x, r: int) -> Optional[Fraction]:
    """Return the rational rho with ``rho**r == x``, or None if there is none.

    For even ``r`` the nonnegative root is returned.
    """
    if r < 1:
        raise ValueError("root degree must be positive")
    x = as_rational(x)
    if x < 0:
        if r % 2 == 0:
            return None
        pos = rational_root(-x, r)
        return None if pos is None else -pos
    p, q = x.numerator, x.denominator
    rp, rq = _iroot(p, r), _iroot(q, r)
    if rp ** r == p and rq ** r == q:
        return Fraction(rp, rq)
    return None


def _check_same_d(u: "QuadExt", v: "QuadExt") -> None:
    if u.D != v.D:
        raise DiscriminantMismatch(f"sqrt({u.D}) and sqrt({v.D}) in one expression")


@dataclass(frozen=True, slots=True)
class QuadExt:
    """``a + b*sqrt(D)`` with rational a, b, D; canonical by construction."""

    a: Fraction
    b: Fraction
    D: Fraction

    def __post_init__(self):
        for name in ("a", "b", "D"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.b == 0:
            raise ValueError("QuadExt with b == 0 must be a Fraction; use quad()")
        if rational_root(self.D, 2) is not None:
            raise ValueError(f"sqrt({self.D}) is rational; use quad()")

    # --- helpers -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            _check_same_d(self, other)
            return other.a, other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(other), ZERO
        return None

    def _new(self, a, b):
        return quad(a, b, self.D)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    # --- arithmetic ----------------------------------------------------
    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._new(self.a + c[0], self.b + c[1])

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._new(self.a - c[0], self.b - c[1])

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._new(c[0] - self.a, c[1] - self.b)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return self._new(self.a * a + self.D * self.b * b, self.a * b + self.b * a)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:  # only possible for a == b == 0, which is not canonical
            raise DivisionByZero("inverse of zero")
        return QuadExt(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if c[1] == 0:
            if c[0] == 0:
                raise DivisionByZero(f"{self} / 0")
            return self._new(self.a / c[0], self.b / c[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self.inverse() * quad(c[0], c[1], self.D)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result: FieldElement = ONE
        base: FieldElement = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return True

    # --- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            _check_same_d(self, other)
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(D); requires D > 0."""
        if self.D < 0:
            raise TypeError("elements of an imaginary quadratic field are unordered")
        return _sign_of(self.a, self.b, self.D)

    def _cmp(self, other) -> int:
        c = self._coerce(other)
        if c is None:
            raise TypeError(f"cannot compare QuadExt with {type(other).__name__}")
        if self.D < 0:
            raise TypeError("elements of an imaginary quadratic field are unordered")
        return _sign_of(self.a - c[0], self.b - c[1], self.D)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __str__(self):
        return to_str(self)

    def __repr__(self):
        return f"QuadExt({to_str(self)!r})"


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _sign_of(u: Fraction, v: Fraction, D: Fraction) -> int:
    """Sign of u + v*sqrt(D) for D >= 0, decided without approximation."""
    su, sv = _sgn(u), _sgn(v)
    if sv == 0 or D == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: compare u^2 with v^2 D
    return su * _sgn(u * u - v * v * D)


def quad(a, b, D) -> FieldElement:
    """Canonical element a + b*sqrt(D): a Fraction whenever that is possible."""
    a, b, D = as_rational(a), as_rational(b), as_rational(D)
    if b == 0:
        return a
    root = rational_root(D, 2)
    if root is not None:
        return a + b * root
    return QuadExt(a, b, D)


def sqrt(D) -> FieldElement:
    return quad(0, 1, D)


def normalize(x) -> FieldElement:
    """Canonical form of any supported scalar (idempotent)."""
    if isinstance(x, QuadExt):
        return quad(x.a, x.b, x.D)
    return as_rational(x)


def is_zero(x: FieldElement) -> bool:
    return not isinstance(x, QuadExt) and x == 0


def field_arith(lhs: FieldElement, op: str, rhs: FieldElement) -> FieldElement:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two scalars exactly."""
    lhs, rhs = normalize(lhs), normalize(rhs)
    if op == "add":
        return normalize(lhs + rhs)
    if op == "sub":
        return normalize(lhs - rhs)
    if op == "mul":
        return normalize(lhs * rhs)
    if op == "div":
        if is_zero(rhs):
            raise DivisionByZero(f"{to_str(lhs)} / 0")
        return normalize(lhs / rhs)
    raise ValueError(f"unknown operation {op!r}")


def power(x: FieldElement, e: int) -> FieldElement:
    """x**e with the convention 0**0 == 1; negative e of zero is an error."""
    if e == 0:
        return ONE
    if e < 0 and is_zero(x):
        raise DivisionByZero(f"0 ** {e}")
    return x ** e


# --- serialization ---------------------------------------------------------

def to_str(x: FieldElement) -> str:
    if isinstance(x, QuadExt):
        sign = "-" if x.b < 0 else "+"
        return f"{x.a}{sign}{abs(x.b)}*sqrt({x.D})"
    return str(as_rational(x))


_Q = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^(?:(?P<a>{_Q})(?=[+-]))?(?P<sign>[+-])?(?:(?P<b>\d+(?:/\d+)?)\*)?"
    rf"sqrt\((?P<D>{_Q})\)$"
)


def parse_field(s) -> FieldElement:
    """Inverse of :func:`to_str`; also accepts ints, Fractions, ``{"a","b","D"}``
    dicts and shorthand such as ``"sqrt(2)"`` or ``"-1/2*sqrt(5)"``."""
    if isinstance(s, (int, Fraction, QuadExt)) and not isinstance(s, bool):
        return normalize(s)
    if isinstance(s, dict):
        return quad(s.get("a", 0), s.get("b", 0), s["D"])
    if not isinstance(s, str):
        raise TypeError(f"cannot parse {s!r} as a field element")
    text = "".join(s.split())
    if "sqrt" not in text:
        return Fraction(text)
    m = _QUAD_RE.match(text)
    if m is None:
        raise ValueError(f"malformed field element {s!r}")
    a = Fraction(m["a"]) if m["a"] else ZERO
    b = Fraction(m["b"]) if m["b"] else ONE
    if m["sign"] == "-":
        b = -b
    return quad(a, b, Fraction(m["D"]))
