"""Monomials, sparse polynomials in x, y and monomial linear operators.

Exponents are integers.  In polynomial mode they must be nonnegative; in
Laurent mode they live in a finite window ``[-W, W]**2`` and anything leaving
the window raises :class:`ExponentOutOfWindow` instead of being dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional

from .errors import ExponentOutOfWindow
from .exactfield import ONE, FieldElement, QuadExt, is_zero, normalize, to_str


class Monomial(NamedTuple):
    """x**n * y**m."""

    n: int
    m: int

    @property
    def degree(self) -> int:
        return abs(self.n) + abs(self.m)

    def swap(self) -> "Monomial":
        return Monomial(self.m, self.n)

    def __mul__(self, other):  # tuple concatenation would be a trap here
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.n + other.n, self.m + other.m)

    def __str__(self):
        return format_monomial(self)


UNIT = Monomial(0, 0)
X = Monomial(1, 0)
Y = Monomial(0, 1)


class Term(NamedTuple):
    coeff: FieldElement
    mono: Monomial


@dataclass(frozen=True)
class Window:
    """Admissible exponents.  ``bound`` caps |n| and |m| in Laurent mode."""

    laurent: bool = False
    bound: Optional[int] = None

    def contains(self, mono: Monomial) -> bool:
        if not self.laurent:
            if mono.n < 0 or mono.m < 0:
                return False
            return self.bound is None or mono.degree <= self.bound
        return self.bound is None or (abs(mono.n) <= self.bound and abs(mono.m) <= self.bound)

    def check(self, mono: Monomial) -> Monomial:
        if not self.contains(mono):
            raise ExponentOutOfWindow(mono, self)
        return mono

    def __str__(self):
        if self.laurent:
            return f"Laurent window [-{self.bound}, {self.bound}]^2"
        return "polynomial window" + (f" (degree <= {self.bound})" if self.bound is not None else "")


POLYNOMIAL = Window()


def laurent_window(bound: int) -> Window:
    return Window(laurent=True, bound=bound)


def mono_mul(a: Monomial, b: Monomial, window: Window = POLYNOMIAL) -> Monomial:
    return window.check(Monomial(a.n + b.n, a.m + b.m))


def monomials_up_to(N: int, window: Window = POLYNOMIAL) -> list[Monomial]:
    """All monomials of total degree <= N inside ``window``, sorted by (n, m)."""
    if window.laurent:
        cand = (Monomial(n, m) for n in range(-N, N + 1) for m in range(-N, N + 1)
                if abs(n) + abs(m) <= N)
    else:
        cand = (Monomial(n, m) for n in range(N + 1) for m in range(N + 1 - n))
    return sorted(mono for mono in cand if window.contains(mono))


def pairs_up_to(N: int, window: Window = POLYNOMIAL) -> list[tuple[Monomial, Monomial]]:
    """Ordered pairs (a, b) with deg(a) + deg(b) <= N, sorted lexicographically."""
    monos = monomials_up_to(N, window)
    return [(a, b) for a, b in product(monos, monos) if a.degree + b.degree <= N]


# --- formatting --------------------------------------------------------------

def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def format_monomial(mono: Monomial) -> str:
    parts = [p for p in (_power("x", mono.n), _power("y", mono.m)) if p]
    return "*".join(parts) if parts else "1"


def _format_term(coeff: FieldElement, mono: Monomial, first: bool) -> str:
    body = format_monomial(mono)
    if isinstance(coeff, QuadExt):
        c = f"({to_str(coeff)})"
        sign = "" if first else " + "
        return sign + (c if mono == UNIT else f"{c}*{body}")
    negative = coeff < 0
    mag = -coeff if negative else coeff
    if mono == UNIT:
        text = to_str(mag)
    elif mag == 1:
        text = body
    else:
        text = f"{to_str(mag)}*{body}"
    if first:
        return ("-" if negative else "") + text
    return (" - " if negative else " + ") + text


class SparsePoly:
    """Finite map Monomial -> nonzero coefficient, immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, FieldElement] | Iterable = ()):
        acc: dict[Monomial, FieldElement] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = Monomial(*mono)
            acc[mono] = acc.get(mono, 0) + c
        self._terms = {m: normalize(c) for m, c in acc.items() if not is_zero(normalize(c))}
        self._hash = None

    @classmethod
    def monomial(cls, mono: Monomial, coeff: FieldElement = ONE) -> "SparsePoly":
        return cls({Monomial(*mono): coeff})

    @classmethod
    def _raw(cls, terms: dict) -> "SparsePoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping[Monomial, FieldElement]:
        return MappingProxyType(self._terms)

    def coeff(self, mono: Monomial) -> FieldElement:
        return self._terms.get(Monomial(*mono), 0)

    def __iter__(self) -> Iterator[tuple[Monomial, FieldElement]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @property
    def totaldeg(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(m.degree for m in self._terms)

    # --- arithmetic --------------------------------------------------------
    def scale(self, c: FieldElement) -> "SparsePoly":
        if is_zero(normalize(c)):
            return ZERO_POLY
        return SparsePoly._raw({m: normalize(v * c) for m, v in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return poly_combine(self, other, (ONE, ONE))

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return poly_combine(self, other, (ONE, -ONE))

    def __neg__(self):
        return self.scale(-ONE)

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            return poly_mul(self, other)
        try:
            return self.scale(normalize(other))
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __str__(self):
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), reverse=True)
        return "".join(_format_term(c, m, i == 0) for i, (m, c) in enumerate(ordered))

    def __repr__(self):
        return f"SparsePoly({str(self)!r})"


ZERO_POLY = SparsePoly()


def poly_combine(p: SparsePoly, q: SparsePoly,
                 scalars: tuple[FieldElement, FieldElement]) -> SparsePoly:
    """s*p + t*q with like terms collected and zeros purged."""
    s, t = normalize(scalars[0]), normalize(scalars[1])
    acc: dict[Monomial, FieldElement] = {}
    for m, c in p._terms.items():
        acc[m] = c * s
    for m, c in q._terms.items():
        acc[m] = acc.get(m, 0) + c * t
    return SparsePoly._raw({m: normalize(c) for m, c in acc.items() if not is_zero(normalize(c))})


def poly_mul(p: SparsePoly, q: SparsePoly, window: Window = POLYNOMIAL) -> SparsePoly:
    acc: dict[Monomial, FieldElement] = {}
    for ma, ca in p._terms.items():
        for mb, cb in q._terms.items():
            mono = mono_mul(ma, mb, window)
            acc[mono] = acc.get(mono, 0) + ca * cb
    return SparsePoly._raw({m: normalize(c) for m, c in acc.items() if not is_zero(normalize(c))})


# --- monomial operators ------------------------------------------------------

ImageFn = Callable[[Monomial], Optional[Term]]


@dataclass(frozen=True, eq=False)
class OperatorRule:
    """A monomial linear operator given by its values on monomials.

    ``image`` returns ``None`` for monomials in the kernel.  ``weight`` is the
    Rota-Baxter weight the constructor claims (None for operators that carry
    no weight, such as averaging operators).
    """

    image: ImageFn
    weight: Optional[FieldElement] = None
    provenance: Mapping = field(default_factory=dict)

    def term(self, mono: Monomial) -> Optional[Term]:
        t = self.image(Monomial(*mono))
        if t is None:
            return None
        coeff = normalize(t[0])
        if is_zero(coeff):
            return None
        return Term(coeff, Monomial(*t[1]))

    def __call__(self, p: SparsePoly, window: Window = POLYNOMIAL) -> SparsePoly:
        return apply_rule(self, p, window)

    def on(self, mono: Monomial, window: Window = POLYNOMIAL) -> SparsePoly:
        return apply_rule(self, SparsePoly.monomial(mono), window)


def apply_rule(R: OperatorRule, p: SparsePoly, window: Window = POLYNOMIAL) -> SparsePoly:
    """Linear extension of ``R.image`` to ``p``."""
    acc: dict[Monomial, FieldElement] = {}
    for mono, c in p._terms.items():
        window.check(mono)
        t = R.term(mono)
        if t is None:
            continue
        window.check(t.mono)
        acc[t.mono] = acc.get(t.mono, 0) + c * t.coeff
    return SparsePoly._raw({m: normalize(c) for m, c in acc.items() if not is_zero(normalize(c))})


def shaped_rule(coeff: Callable[[int, int], FieldElement],
                shape: Callable[[Monomial], Monomial],
                weight: Optional[FieldElement] = None,
                provenance: Optional[Mapping] = None) -> OperatorRule:
    """The operator x^n y^m -> coeff(n, m) * shape(x^n y^m)."""

    def image(mono: Monomial) -> Optional[Term]:
        c = coeff(mono.n, mono.m)
        if is_zero(normalize(c)):
            return None
        return Term(c, shape(mono))

    return OperatorRule(image, weight, dict(provenance or {}))


def identity_rule(scale: FieldElement = ONE, weight=None) -> OperatorRule:
    return OperatorRule(lambda mono: Term(scale, mono), weight, {"family": "scaled-identity", "scale": to_str(scale)})


def zero_rule(weight=None) -> OperatorRule:
    return OperatorRule(lambda mono: None, weight, {"family": "zero"})
