"""Constructors for the monomial Rota-Baxter operator families on F[x, y].

All weight-one families use the normalization R(y^l) = -y^l (l > 0); weight
-1 versions come from :func:`negate_rule`.  The r = 1 families write
R(x^k y^m) = alpha[k, m] y^(k+m) and differ only in how alpha is produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from ..averaging import AveragingSpec, build_averaging
from ..decomp import DecompositionSpec, splitting_rbo
from ..errors import ExponentOutOfWindow, InvalidFamilyParams
from ..exactfield import ONE, FieldElement, is_zero, parse_field, power, to_str
from ..monoalg import UNIT, Monomial, OperatorRule, Term
from . import coeffs
from .verify import parse_table

THETAS = (Fraction(0), Fraction(-1))


def _theta(value) -> Fraction:
    if value is None:
        raise InvalidFamilyParams("theta (the value R(1), 0 or -1) is required for this family")
    t = parse_field(value)
    if t not in THETAS:
        raise InvalidFamilyParams(f"theta must be 0 or -1, got {to_str(t)}")
    return t


def _field(value, name: str) -> FieldElement:
    if value is None:
        raise InvalidFamilyParams(f"missing parameter {name!r}")
    return parse_field(value)


def _set(obj, **values):
    for k, v in values.items():
        object.__setattr__(obj, k, v)


# --- family variants ---------------------------------------------------------

@dataclass(frozen=True)
class FromAveraging:
    spec: AveragingSpec
    name = "FromAveraging"

    def params(self) -> dict:
        return {"spec": self.spec.to_json()}


@dataclass(frozen=True)
class Splitting:
    decomp: DecompositionSpec
    lam: FieldElement = ONE
    name = "Splitting"

    def __post_init__(self):
        _set(self, lam=_field(self.lam, "lambda"))
        if is_zero(self.lam):
            raise InvalidFamilyParams("splitting operators need lambda != 0")

    def params(self) -> dict:
        return {"decomp": self.decomp.to_json(), "lambda": to_str(self.lam)}


@dataclass(frozen=True)
class Case1R0:
    beta: FieldElement
    gamma: FieldElement
    theta: FieldElement
    name = "Case1R0"

    def __post_init__(self):
        _set(self, beta=_field(self.beta, "beta"), gamma=_field(self.gamma, "gamma"),
             theta=_theta(self.theta))

    def params(self) -> dict:
        return {"beta": to_str(self.beta), "gamma": to_str(self.gamma), "theta": to_str(self.theta)}


@dataclass(frozen=True)
class Case1:
    r: int
    rho: FieldElement
    alpha10: FieldElement
    theta: FieldElement
    name = "Case1"

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 1:
            raise InvalidFamilyParams(f"Case1 needs an integer r >= 1, got {self.r!r}")
        _set(self, rho=_field(self.rho, "rho"), alpha10=_field(self.alpha10, "alpha10"),
             theta=_theta(self.theta))
        if is_zero(self.rho):
            raise InvalidFamilyParams("rho must be nonzero (alpha01 = -1/rho^r)")

    @property
    def alpha01(self) -> FieldElement:
        return -ONE / power(self.rho, self.r)

    def params(self) -> dict:
        return {"r": self.r, "rho": to_str(self.rho), "alpha10": to_str(self.alpha10),
                "theta": to_str(self.theta)}


@dataclass(frozen=True)
class Case5Const:
    alpha: FieldElement
    beta: FieldElement
    theta: FieldElement
    name = "Case5Const"

    def __post_init__(self):
        _set(self, alpha=_field(self.alpha, "alpha"), beta=_field(self.beta, "beta"),
             theta=_theta(self.theta))

    def params(self) -> dict:
        return {"alpha": to_str(self.alpha), "beta": to_str(self.beta), "theta": to_str(self.theta)}


def r1_family_for(q0, q1, q2, theta=-1):
    """The r = 1 family determined by the first three row values."""
    q0, q1, q2 = parse_field(q0), parse_field(q1), parse_field(q2)
    if q0 == q1 == q2:
        return R1Q0EqQ1(q0, theta)
    if q0 == q1:
        return R1Q0Run(q0, q2, 2, theta)
    if q0 == q2:
        return R1Q0EqQ2(q0, q1, theta)
    if q1 == q2:
        return R1Q1EqQ2(q0, q1, theta)
    return R1General(q0, q1, q2, theta)


@dataclass(frozen=True)
class R1General:
    q0: FieldElement
    q1: FieldElement
    q2: FieldElement
    theta: FieldElement
    name = "R1General"

    def __post_init__(self):
        q0, q1, q2 = (_field(v, n) for v, n in ((self.q0, "q0"), (self.q1, "q1"), (self.q2, "q2")))
        _set(self, q0=q0, q1=q1, q2=q2, theta=_theta(self.theta))
        if q0 == q1 or q0 == q2 or q1 == q2:
            other = r1_family_for(q0, q1, q2, self.theta)
            raise InvalidFamilyParams(
                f"R1General needs pairwise distinct q0, q1, q2; these values belong to {other.name}")
        if 2 * q1 == q0 + q2:
            raise InvalidFamilyParams("R1General excludes 2q1 = q0+q2")

    def params(self) -> dict:
        return {"q0": to_str(self.q0), "q1": to_str(self.q1), "q2": to_str(self.q2),
                "theta": to_str(self.theta)}


@dataclass(frozen=True)
class R1Q0EqQ1:
    q0: FieldElement
    theta: FieldElement = Fraction(-1)
    name = "R1Q0EqQ1"

    def __post_init__(self):
        _set(self, q0=_field(self.q0, "q0"), theta=_theta(self.theta))

    def params(self) -> dict:
        return {"q0": to_str(self.q0), "theta": to_str(self.theta)}


@dataclass(frozen=True)
class R1Q0Run:
    q0: FieldElement
    qn: FieldElement
    n: int
    theta: FieldElement
    name = "R1Q0Run"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidFamilyParams(f"R1Q0Run needs n >= 1, got {self.n!r}")
        _set(self, q0=_field(self.q0, "q0"), qn=_field(self.qn, "qn"), theta=_theta(self.theta))
        if self.q0 == self.qn:
            raise InvalidFamilyParams("R1Q0Run needs qn != q0 (otherwise use R1Q0EqQ1)")

    def params(self) -> dict:
        return {"q0": to_str(self.q0), "qn": to_str(self.qn), "n": self.n, "theta": to_str(self.theta)}


@dataclass(frozen=True)
class R1Q0EqQ2:
    q0: FieldElement
    q1: FieldElement
    theta: FieldElement = Fraction(-1)
    name = "R1Q0EqQ2"

    def __post_init__(self):
        _set(self, q0=_field(self.q0, "q0"), q1=_field(self.q1, "q1"), theta=_theta(self.theta))
        if self.q0 == self.q1:
            raise InvalidFamilyParams("R1Q0EqQ2 needs q0 != q1")

    def params(self) -> dict:
        return {"q0": to_str(self.q0), "q1": to_str(self.q1), "theta": to_str(self.theta)}


@dataclass(frozen=True)
class R1Q1EqQ2:
    q0: FieldElement
    q1: FieldElement
    theta: FieldElement
    name = "R1Q1EqQ2"

    def __post_init__(self):
        _set(self, q0=_field(self.q0, "q0"), q1=_field(self.q1, "q1"), theta=_theta(self.theta))
        if self.q0 == self.q1:
            raise InvalidFamilyParams("R1Q1EqQ2 needs q0 != q1")

    def params(self) -> dict:
        return {"q0": to_str(self.q0), "q1": to_str(self.q1), "theta": to_str(self.theta)}


@dataclass(frozen=True)
class Fibonacci:
    a: FieldElement
    b: FieldElement
    theta: FieldElement = Fraction(-1)
    name = "Fibonacci"

    def __post_init__(self):
        _set(self, a=_field(self.a, "a"), b=_field(self.b, "b"), theta=_theta(self.theta))
        if self.a == self.b:
            raise InvalidFamilyParams("Fibonacci needs a != b")

    def params(self) -> dict:
        return {"a": to_str(self.a), "b": to_str(self.b), "theta": to_str(self.theta)}


@dataclass(frozen=True)
class VieillardBaron:
    """R(x^n y^m) = m/(n+m) y^(n+m), R(1) = 1; weight -1."""

    name = "VieillardBaron"

    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class Custom:
    """An explicit coefficient table for a monomial operator.

    ``table`` maps monomials to ``(coeff, image)``.  Monomials missing from
    the table are an error unless ``base`` (an OperatorRule) supplies them,
    which lets a single entry of a known operator be overridden.
    """

    table: Mapping[Monomial, tuple]
    weight: FieldElement
    base: Optional[OperatorRule] = field(default=None, compare=False)
    name = "Custom"

    def __post_init__(self):
        _set(self, weight=_field(self.weight, "weight"),
             table={Monomial(*k): (parse_field(c), None if i is None else Monomial(*i))
                    for k, (c, i) in self.table.items()})

    def params(self) -> dict:
        return {"entries": len(self.table), "base": None if self.base is None else dict(self.base.provenance)}


RBFamily = Union[FromAveraging, Splitting, Case1R0, Case1, Case5Const, R1General, R1Q0EqQ1,
                 R1Q0Run, R1Q0EqQ2, R1Q1EqQ2, Fibonacci, VieillardBaron, Custom]

R1_FAMILIES = (R1General, R1Q0EqQ1, R1Q0Run, R1Q0EqQ2, R1Q1EqQ2, Fibonacci)


# --- building ------------------------------------------------------------------

def _polynomial(mono: Monomial) -> Monomial:
    if mono.n < 0 or mono.m < 0:
        raise ExponentOutOfWindow(mono, "the polynomial algebra F[x, y]")
    return mono


def r1_rule(coeff: coeffs.Coeff, theta: FieldElement, provenance: dict) -> OperatorRule:
    """alpha[k, m] y^(k+m) with alpha[0, m] = -1 (m > 0) and R(1) = theta."""

    def image(mono: Monomial) -> Optional[Term]:
        k, m = _polynomial(mono)
        if k == 0:
            c = theta if m == 0 else -ONE
        else:
            c = coeff(k, m)
        return Term(c, Monomial(0, k + m))

    return OperatorRule(image, ONE, provenance)


def r1_coeff(family) -> coeffs.Coeff:
    """alpha[k, m] for k >= 1, from the formula that defines the family."""
    if isinstance(family, R1General):
        return coeffs.R1Table([family.q0, family.q1, family.q2])
    if isinstance(family, R1Q0EqQ1):
        return coeffs.lemma_const_coeff(family.q0)
    if isinstance(family, R1Q0Run):
        return coeffs.lemma_run_coeff(family.q0, family.qn, family.n)
    if isinstance(family, R1Q0EqQ2):
        return coeffs.lemma_aba_coeff(family.q0, family.q1)
    if isinstance(family, R1Q1EqQ2):
        return coeffs.lemma_tail_coeff(family.q0, family.q1)
    if isinstance(family, Fibonacci):
        return coeffs.fibonacci_coeff(family.a, family.b)
    raise TypeError(f"{type(family).__name__} is not an r = 1 family")


def r1_prefix(family) -> list[FieldElement]:
    """The free first-row values that the recurrence starts from."""
    if isinstance(family, R1General):
        return [family.q0, family.q1, family.q2]
    if isinstance(family, R1Q0EqQ1):
        return [family.q0] * 3
    if isinstance(family, R1Q0Run):
        return [family.q0] * family.n + [family.qn] + ([family.q0] if family.n == 1 else [])
    if isinstance(family, R1Q0EqQ2):
        return [family.q0, family.q1, family.q0]
    if isinstance(family, R1Q1EqQ2):
        return [family.q0, family.q1, family.q1]
    if isinstance(family, Fibonacci):
        return [family.a, family.b, (family.a + family.b) / 2]
    raise TypeError(f"{type(family).__name__} is not an r = 1 family")


def case2_rule(coeff: Callable[[int, int], FieldElement], r: int,
               weight: FieldElement, provenance: Optional[dict] = None) -> OperatorRule:
    """R(x^n y^m) = coeff(n, m) y^(m + r n); integer exponents allowed."""

    def image(mono: Monomial) -> Optional[Term]:
        return Term(coeff(mono.n, mono.m), Monomial(0, mono.m + r * mono.n))

    return OperatorRule(image, parse_field(weight), dict(provenance or {"family": "case2", "r": r}))


def build_rbo(family: RBFamily) -> OperatorRule:
    prov = {"family": family.name, **family.params()}

    if isinstance(family, FromAveraging):
        T = build_averaging(family.spec)
        return OperatorRule(negate_rule(T).image, ONE, prov)

    if isinstance(family, Splitting):
        R = splitting_rbo(family.decomp, family.lam)
        return OperatorRule(R.image, family.lam, prov)

    if isinstance(family, Case1R0):
        beta, gamma, theta = family.beta, family.gamma, family.theta

        def image(mono):
            n, m = _polynomial(mono)
            if m > 0:
                return Term(-power(beta, n), Monomial(0, m))
            return Term(theta * power(gamma, n), UNIT)

        return OperatorRule(image, ONE, prov)

    if isinstance(family, Case1):
        r, rho, a10, theta = family.r, family.rho, family.alpha10, family.theta

        def image(mono):
            n, m = _polynomial(mono)
            if m > 0:
                # -(-alpha01)^((rm-n)/r) with the root fixed as rho
                return Term(-power(rho, n - r * m), Monomial(r * m, m))
            return Term(theta * power(a10, n), UNIT)

        return OperatorRule(image, ONE, prov)

    if isinstance(family, Case5Const):
        alpha, beta, theta = family.alpha, family.beta, family.theta

        def image(mono):
            n, m = _polynomial(mono)
            if (n, m) == (0, 0):
                return Term(theta, UNIT)
            return Term(-power(alpha, n) * power(beta, m), UNIT)

        return OperatorRule(image, ONE, prov)

    if isinstance(family, R1_FAMILIES):
        return r1_rule(r1_coeff(family), family.theta, prov)

    if isinstance(family, VieillardBaron):
        def image(mono):
            n, m = _polynomial(mono)
            if n + m == 0:
                return Term(ONE, UNIT)
            return Term(Fraction(m, n + m), Monomial(0, n + m))

        return OperatorRule(image, -ONE, prov)

    if isinstance(family, Custom):
        table, base = family.table, family.base

        def image(mono):
            if mono not in table:
                if base is None:
                    raise ExponentOutOfWindow(mono, "the Custom table")
                return base.term(mono)
            c, img = table[mono]
            return None if is_zero(c) else Term(c, img)

        return OperatorRule(image, family.weight, prov)

    raise TypeError(f"unknown family {family!r}")


def negate_rule(R: OperatorRule) -> OperatorRule:
    """-R, with the declared weight negated."""

    def image(mono: Monomial):
        t = R.term(mono)
        return None if t is None else Term(-t.coeff, t.mono)

    prov = dict(R.provenance)
    prov["negated"] = not prov.get("negated", False)
    return OperatorRule(image, None if R.weight is None else -R.weight, prov)


# --- JSON ------------------------------------------------------------------------

def family_from_json(data: dict, theta=None) -> RBFamily:
    """Parse {"family": name, ...}; ``theta`` fills in a missing "theta" key."""
    if not isinstance(data, dict) or "family" not in data:
        raise InvalidFamilyParams('family JSON must be an object with a "family" key')
    name = data["family"]
    get = data.get
    th = get("theta", theta)

    def with_theta(cls, *args):
        return cls(*args) if th is None else cls(*args, th)

    try:
        if name == "FromAveraging":
            return FromAveraging(AveragingSpec.from_json(data["spec"]))
        if name == "Splitting":
            return Splitting(DecompositionSpec.from_json(data["decomp"]), get("lambda"))
        if name == "Case1R0":
            return Case1R0(get("beta"), get("gamma"), th)
        if name == "Case1":
            return Case1(int(data["r"]), get("rho"), get("alpha10"), th)
        if name == "Case5Const":
            return Case5Const(get("alpha"), get("beta"), th)
        if name == "R1General":
            return R1General(get("q0"), get("q1"), get("q2"), th)
        if name == "R1Q0EqQ1":
            return with_theta(R1Q0EqQ1, get("q0"))
        if name == "R1Q0Run":
            return R1Q0Run(get("q0"), get("qn"), int(data["n"]), th)
        if name == "R1Q0EqQ2":
            return with_theta(R1Q0EqQ2, get("q0"), get("q1"))
        if name == "R1Q1EqQ2":
            return R1Q1EqQ2(get("q0"), get("q1"), th)
        if name == "Fibonacci":
            return with_theta(Fibonacci, get("a"), get("b"))
        if name == "VieillardBaron":
            return VieillardBaron()
        if name == "Custom":
            base = get("base")
            if base is not None:
                base = build_rbo(family_from_json(base))
            return Custom(parse_table(data["table"]), get("weight"), base)
    except KeyError as exc:
        raise InvalidFamilyParams(f"family {name} is missing parameter {exc.args[0]!r}") from None
    raise InvalidFamilyParams(f"unknown family {name!r}")


def family_to_json(family: RBFamily) -> dict:
    if isinstance(family, Custom):
        rows = [{"n": k.n, "m": k.m, "coeff": to_str(c),
                 "image": None if i is None else {"n": i.n, "m": i.m}}
                for k, (c, i) in sorted(family.table.items())]
        out = {"family": "Custom", "weight": to_str(family.weight), "table": rows}
        if family.base is not None:
            out["base"] = dict(family.base.provenance)
        return out
    out = {"family": family.name}
    out.update(family.params())
    return out
