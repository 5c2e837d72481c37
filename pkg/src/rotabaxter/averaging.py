"""Monomial homomorphic averaging operators on F[x, y].

There are five shapes up to the swap automorphism x <-> y:

====== =============================================
Case1  x^n y^m -> x^(r m) y^m
Case2  x^n y^m -> alpha^n y^(m + r n),  alpha != 0
Case3  identity
Case4  x^n y^m -> y^m if n == 0 else 0
Case5  x^n y^m -> alpha^n beta^m (n + m > 0),  1 -> 1
====== =============================================

Forgetting scalars, T is recorded by the exponent matrix ((a, b), (c, d))
with T(x) ~ x^a y^c and T(y) ~ x^b y^d; the homomorphic averaging laws force
this matrix to be idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InvalidFamilyParams
from .exactfield import ONE, FieldElement, is_zero, parse_field, power, to_str
from .monoalg import (POLYNOMIAL, UNIT, X, Y, Monomial, OperatorRule, SparsePoly, Term, Window,
                      monomials_up_to, pairs_up_to, poly_mul)
from .report import VerificationReport, Violation, run_checks

CASES = ("Case1", "Case2", "Case3", "Case4", "Case5")


@dataclass(frozen=True)
class AveragingSpec:
    case: str
    r: int = 0
    alpha: Optional[FieldElement] = None
    beta: Optional[FieldElement] = None
    swapped: bool = False

    def __post_init__(self):
        if self.case not in CASES:
            raise InvalidFamilyParams(f"unknown averaging case {self.case!r}")
        if not isinstance(self.r, int) or self.r < 0:
            raise InvalidFamilyParams(f"r must be a natural number, got {self.r!r}")
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, parse_field(v))
        if self.case == "Case2":
            if self.alpha is None or is_zero(self.alpha):
                raise InvalidFamilyParams("Case2 requires alpha != 0")
        if self.case == "Case5" and (self.alpha is None or self.beta is None):
            raise InvalidFamilyParams("Case5 requires both alpha and beta")

    def to_json(self) -> dict:
        out: dict = {"case": self.case}
        if self.case in ("Case1", "Case2"):
            out["r"] = self.r
        if self.case in ("Case2", "Case5"):
            out["alpha"] = to_str(self.alpha)
        if self.case == "Case5":
            out["beta"] = to_str(self.beta)
        out["swapped"] = self.swapped
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AveragingSpec":
        return cls(
            case=data["case"],
            r=int(data.get("r", 0)),
            alpha=data.get("alpha"),
            beta=data.get("beta"),
            swapped=bool(data.get("swapped", False)),
        )


def _base_image(spec: AveragingSpec):
    r, alpha, beta = spec.r, spec.alpha, spec.beta
    if spec.case == "Case1":
        return lambda mono: Term(ONE, Monomial(r * mono.m, mono.m))
    if spec.case == "Case2":
        return lambda mono: Term(power(alpha, mono.n), Monomial(0, mono.m + r * mono.n))
    if spec.case == "Case3":
        return lambda mono: Term(ONE, mono)
    if spec.case == "Case4":
        return lambda mono: Term(ONE, mono) if mono.n == 0 else None

    def case5(mono):
        if mono == UNIT:
            return Term(ONE, UNIT)
        c = power(alpha, mono.n) * power(beta, mono.m)
        return None if is_zero(c) else Term(c, UNIT)

    return case5


def build_averaging(spec: AveragingSpec) -> OperatorRule:
    rule = OperatorRule(_base_image(spec), None, {"family": "averaging", **spec.to_json()})
    if spec.swapped:
        return conjugate_swap(rule)
    return rule


def conjugate_swap(T: OperatorRule) -> OperatorRule:
    """psi^-1 T psi for the automorphism x <-> y."""

    def image(mono: Monomial):
        t = T.term(mono.swap())
        return None if t is None else Term(t.coeff, t.mono.swap())

    prov = dict(T.provenance)
    if "swapped" in prov:
        prov["swapped"] = not prov["swapped"]
    else:
        prov["conjugated_by_swap"] = not prov.get("conjugated_by_swap", False)
    return OperatorRule(image, T.weight, prov)


def check_averaging(T: OperatorRule, N: int, workers: int = 1,
                    window: Window = POLYNOMIAL) -> VerificationReport:
    """Check the averaging and homomorphism laws on monomial pairs of combined degree <= N."""
    if N < 0:
        raise ValueError("degree bound must be nonnegative")

    def check(pair):
        a, b = pair
        pa, pb = SparsePoly.monomial(a), SparsePoly.monomial(b)
        ta, tb = T(pa, window), T(pb, window)
        prod = poly_mul(ta, tb, window)
        left = T(poly_mul(ta, pb, window), window)
        right = T(poly_mul(pa, tb, window), window)
        hom = T(poly_mul(pa, pb, window), window)
        out = []
        for law, lhs, rhs in (
            ("T(a)T(b) = T(T(a)b)", prod, left),
            ("T(a)T(b) = T(aT(b))", prod, right),
            ("T(T(a)b) = T(aT(b))", left, right),
            ("T(ab) = T(a)T(b)", hom, prod),
        ):
            if lhs != rhs:
                out.append(Violation((a, b), law, lhs, rhs))
        return out

    return run_checks(pairs_up_to(N, window), check, workers, subject="averaging")


def check_idempotent(T: OperatorRule, N: int, window: Window = POLYNOMIAL) -> VerificationReport:
    """T(T(m)) == T(m) on every monomial of degree <= N."""
    def check(mono):
        once = T.on(mono, window)
        twice = T(once, window)
        return [] if once == twice else [Violation((mono,), "T(T(a)) = T(a)", twice, once)]

    return run_checks(monomials_up_to(N, window), check, subject="idempotence")


# --- exponent matrices -------------------------------------------------------

class ExponentMatrix(NamedTuple):
    """((a, b), (c, d)) with T(x) ~ x^a y^c and T(y) ~ x^b y^d."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, o: "ExponentMatrix") -> "ExponentMatrix":
        return ExponentMatrix(
            self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
        )

    def is_idempotent(self) -> bool:
        return self @ self == self

    def swapped(self) -> "ExponentMatrix":
        """Matrix of psi T psi when self is the matrix of T."""
        return ExponentMatrix(self.d, self.c, self.b, self.a)

    def degree_equations(self) -> tuple[int, int, int, int]:
        """Residuals of a(a-1)+bc, d(d-1)+bc, b(a+d-1), c(a+d-1)."""
        a, b, c, d = self
        return (a * (a - 1) + b * c, d * (d - 1) + b * c, b * (a + d - 1), c * (a + d - 1))


def enumerate_idempotents(bound: int) -> list[ExponentMatrix]:
    """Idempotent 2x2 matrices over N with entries <= bound, sorted.

    Besides 0 and 1, the degree equations leave exactly the trace-one
    matrices with a, d in {0, 1} and bc = 0.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    found = {ExponentMatrix(0, 0, 0, 0)}
    if bound >= 1:
        found.add(ExponentMatrix(1, 0, 0, 1))
        for k in range(bound + 1):
            found.update({
                ExponentMatrix(1, k, 0, 0), ExponentMatrix(1, 0, k, 0),
                ExponentMatrix(0, k, 0, 1), ExponentMatrix(0, 0, k, 1),
            })
    return sorted(found)


def matrix_to_averaging(M: ExponentMatrix, scalars: tuple) -> Optional[AveragingSpec]:
    """The averaging shape whose exponent matrix is M, or None if M is not idempotent.

    ``scalars`` supplies (alpha, beta); only Case2 (alpha) and Case5 (alpha,
    beta) consume them.
    """
    M = ExponentMatrix(*M)
    if not M.is_idempotent():
        return None
    alpha, beta = scalars
    if M == (0, 0, 0, 0):
        return AveragingSpec("Case5", alpha=alpha, beta=beta)
    if M == (1, 0, 0, 1):
        return AveragingSpec("Case3")
    swapped = M.a == 1
    base = M.swapped() if swapped else M
    # base is (0, b, 0, 1) or (0, 0, c, 1) with c >= 1
    if base.c == 0:
        return AveragingSpec("Case1", r=base.b, swapped=swapped)
    return AveragingSpec("Case2", r=base.c, alpha=alpha, swapped=swapped)


def exponent_matrix_of(T: OperatorRule) -> Optional[ExponentMatrix]:
    """Read the exponent matrix off T(x) and T(y); None if either vanishes."""
    tx, ty = T.term(X), T.term(Y)
    if tx is None or ty is None:
        return None
    return ExponentMatrix(tx.mono.n, ty.mono.n, tx.mono.m, ty.mono.m)

