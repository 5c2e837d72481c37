"""Decompositions of F[x, y] into two monomial subalgebras.

Cases, with part A holding x and part B holding y (before any swap):

* ``I``    A = span of all nonconstant monomials, B = F1
* ``II``   A = ideal (x), B = F[y]
* ``III``  A = ideal (x) + F1, B = span{y^l : l >= 1}
* ``IV``   A = {alpha k > l} + F1, B = {alpha k <= l},  alpha rational
* ``V``    A = {alpha k >= l} + F1, B = {alpha k < l},  alpha rational
* ``VI``   A = {alpha k > l} + F1, B = {alpha k < l},  alpha a quadratic irrational

For IV-VI the inequalities are stated for k, l >= 1; the pure powers x^k go
to A and the y^l go to B.  ``HalfPlane`` is an affine rule
``p k + q l + c > 0`` that is generally *not* a decomposition; it exists so
that negative controls can be expressed as specs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidFamilyParams, UnclassifiedMonomial
from .exactfield import FieldElement, QuadExt, as_rational, is_zero, parse_field, to_str
from .monoalg import (POLYNOMIAL, UNIT, Monomial, OperatorRule, Term, monomials_up_to,
                      pairs_up_to)
from .report import VerificationReport, Violation, run_checks

PART_A = "PartA"
PART_B = "PartB"

CASES = ("I", "II", "III", "IV", "V", "VI", "HalfPlane")

Slope = Union[Fraction, QuadExt]


@dataclass(frozen=True)
class DecompositionSpec:
    case: str
    slope: Optional[Slope] = None
    swapped: bool = False
    halfplane: Optional[tuple[int, int, int]] = None

    def __post_init__(self):
        if self.case not in CASES:
            raise InvalidFamilyParams(f"unknown decomposition case {self.case!r}")
        if self.case in ("IV", "V", "VI"):
            if self.slope is None:
                raise InvalidFamilyParams(f"case {self.case} needs a slope")
            slope = parse_field(self.slope)
            object.__setattr__(self, "slope", slope)
            if self.case == "VI":
                if not isinstance(slope, QuadExt) or slope.D < 0:
                    raise InvalidFamilyParams("case VI needs a real quadratic irrational slope")
            elif isinstance(slope, QuadExt):
                raise InvalidFamilyParams(f"case {self.case} needs a rational slope")
            if not slope > 0:
                raise InvalidFamilyParams("slope must be positive")
        elif self.slope is not None:
            raise InvalidFamilyParams(f"case {self.case} takes no slope")
        if self.case == "HalfPlane":
            if self.halfplane is None or len(self.halfplane) != 3:
                raise InvalidFamilyParams("HalfPlane needs integer coefficients (p, q, c)")
            object.__setattr__(self, "halfplane", tuple(int(v) for v in self.halfplane))

    def unswapped(self) -> "DecompositionSpec":
        return DecompositionSpec(self.case, self.slope, False, self.halfplane)

    def to_json(self) -> dict:
        out: dict = {"case": self.case}
        if isinstance(self.slope, QuadExt):
            out["slope"] = {"a": str(self.slope.a), "b": str(self.slope.b), "D": str(self.slope.D)}
        elif self.slope is not None:
            out["slope"] = to_str(self.slope)
        if self.halfplane is not None:
            out["k"], out["l"], out["c"] = self.halfplane
        out["swapped"] = self.swapped
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionSpec":
        hp = None
        if data["case"] == "HalfPlane":
            hp = (data["k"], data["l"], data["c"])
        return cls(data["case"], data.get("slope"), bool(data.get("swapped", False)), hp)


def _cmp_slope(alpha: Slope, k: int, l: int) -> int:
    """Sign of alpha*k - l, exactly."""
    diff = alpha * k - l
    if isinstance(diff, QuadExt):
        return diff.sign()
    return (diff > 0) - (diff < 0)


def _in_a(spec: DecompositionSpec, k: int, l: int) -> bool:
    unit = k == 0 and l == 0
    case = spec.case
    if case == "I":
        return not unit
    if case == "II":
        return k >= 1
    if case == "III":
        return k >= 1 or unit
    if case == "HalfPlane":
        p, q, c = spec.halfplane
        return p * k + q * l + c > 0
    if unit or (k >= 1 and l == 0):
        return True
    if k >= 1 and l >= 1:
        s = _cmp_slope(spec.slope, k, l)
        return s >= 0 if case == "V" else s > 0
    return False


def _in_b(spec: DecompositionSpec, k: int, l: int) -> bool:
    unit = k == 0 and l == 0
    case = spec.case
    if case == "I":
        return unit
    if case == "II":
        return k == 0
    if case == "III":
        return k == 0 and l >= 1
    if case == "HalfPlane":
        p, q, c = spec.halfplane
        return p * k + q * l + c <= 0
    if k == 0 and l >= 1:
        return True
    if k >= 1 and l >= 1:
        s = _cmp_slope(spec.slope, k, l)
        return s <= 0 if case == "IV" else s < 0
    return False


def _parts(spec: DecompositionSpec, mono: Monomial) -> tuple[bool, bool]:
    if mono.n < 0 or mono.m < 0:
        raise UnclassifiedMonomial(f"{mono} is not a polynomial monomial")
    if spec.swapped:
        mono = mono.swap()
    return _in_a(spec, mono.n, mono.m), _in_b(spec, mono.n, mono.m)


def classify_monomial(spec: DecompositionSpec, mono: Monomial) -> str:
    a, b = _parts(spec, Monomial(*mono))
    if a == b:
        where = "both parts" if a else "neither part"
        raise UnclassifiedMonomial(f"{Monomial(*mono)} lies in {where} of {spec.to_json()}")
    return PART_A if a else PART_B


def expected_unit_part(spec: DecompositionSpec) -> str:
    if spec.case in ("I", "II"):
        return PART_B
    if spec.case == "HalfPlane":
        return PART_A if spec.halfplane[2] > 0 else PART_B
    return PART_A


def check_decomposition(spec: DecompositionSpec, N: int, workers: int = 1) -> VerificationReport:
    """Partition, multiplicative closure and unit placement on degree <= N."""
    monos = monomials_up_to(N)
    violations: list[Violation] = []
    part: dict[Monomial, Optional[str]] = {}
    for mono in monos:
        a, b = _parts(spec, mono)
        if a == b:
            violations.append(Violation((mono,), "exactly one part", a, b))
            part[mono] = None
        else:
            part[mono] = PART_A if a else PART_B

    if part.get(UNIT) is not None and part[UNIT] != expected_unit_part(spec):
        violations.append(Violation((UNIT,), "unit placement", part[UNIT], expected_unit_part(spec)))
    if N >= 1 and not (PART_A in part.values() and PART_B in part.values()):
        violations.append(Violation((), "both parts nonzero", sorted(set(map(str, part.values()))), ""))

    def check(pair):
        x, y = pair
        px, py = part[x], part[y]
        if px is None or px != py:
            return []
        prod = x * y
        if part[prod] != px:
            return [Violation((x, y), f"closure of {px}", str(prod), str(part[prod]))]
        return []

    closure = run_checks(pairs_up_to(N), check, workers)
    return VerificationReport.build(closure.checked_pairs, violations + list(closure.violations),
                                    subject=f"decomposition {spec.case}")


def empirical_slopes(spec: DecompositionSpec, N: int) -> tuple[Fraction, Fraction]:
    """(max l/k over part A, max k/l over part B), over k, l >= 1 and degree <= N.

    An empty maximum is reported as 0.
    """
    if spec.case not in ("IV", "V", "VI"):
        raise InvalidFamilyParams(f"case {spec.case} has no boundary slope")
    alpha_hat = beta_hat = Fraction(0)
    for mono in monomials_up_to(N):
        k, l = mono.swap() if spec.swapped else mono
        if k < 1 or l < 1:
            continue
        if classify_monomial(spec, mono) == PART_A:
            alpha_hat = max(alpha_hat, Fraction(l, k))
        else:
            beta_hat = max(beta_hat, Fraction(k, l))
    return alpha_hat, beta_hat


def splitting_rbo(spec: DecompositionSpec, lam: FieldElement) -> OperatorRule:
    """R(a + b) = -lam * b for a in part A, b in part B; weight lam."""
    lam = parse_field(lam)
    if is_zero(lam):
        raise InvalidFamilyParams("splitting operators need a nonzero weight")

    def image(mono: Monomial):
        if classify_monomial(spec, mono) == PART_A:
            return None
        return Term(-lam, mono)

    return OperatorRule(image, lam, {"family": "Splitting", "decomp": spec.to_json(), "lambda": to_str(lam)})


def boundary_line_check(spec: DecompositionSpec, N: int) -> VerificationReport:
    """Monomials on the line l = alpha k (k, l >= 1) all share one part."""
    if spec.case not in ("IV", "V"):
        raise InvalidFamilyParams("boundary lines exist only for rational slopes")
    alpha = as_rational(spec.slope)
    k0, l0 = alpha.denominator, alpha.numerator
    base = Monomial(l0, k0) if spec.swapped else Monomial(k0, l0)
    ref = classify_monomial(spec, base)
    on_line = [Monomial(j * k0, j * l0) for j in range(1, N + 1) if j * (k0 + l0) <= N]
    if spec.swapped:
        on_line = [m.swap() for m in on_line]

    def check(mono):
        got = classify_monomial(spec, mono)
        return [] if got == ref else [Violation((mono,), "boundary line in one part", got, ref)]

    return run_checks(on_line, check, subject="boundary line")


def distinguishing_monomial(s1: DecompositionSpec, s2: DecompositionSpec,
                            max_degree: int) -> Optional[Monomial]:
    """Lowest-degree monomial classified differently by the two specs, if any."""
    for d in range(max_degree + 1):
        for n in range(d + 1):
            mono = Monomial(n, d - n)
            if classify_monomial(s1, mono) != classify_monomial(s2, mono):
                return mono
    return None
