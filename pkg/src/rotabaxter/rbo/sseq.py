"""The affine change s_i = alpha - beta * q_i and the resulting rational recurrence.

With alpha = q1 / (q0 - q1) and beta = 1 / (q0 - q1) one always has s_0 = -1
and s_1 = 0, and the first row of a weight-one operator satisfies

    s_{m+1} = (s_m + 1) / (1/s_2 - s_m).

Substituting y_m = s_m - 1/s_2 and y_m = x_{m+1}/x_m linearizes this to
s_2 x_{m+2} + (1 + s_2)(x_{m+1} + x_m) = 0, whence a closed form over
Q(sqrt(D)) with D = 1 - 2 s_2 - 3 s_2^2 = (1 + s_2)(1 - 3 s_2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import DegenerateDenominator, DivisionByZero, InvalidFamilyParams
from ..exactfield import ONE, FieldElement, QuadExt, is_zero, normalize, parse_field, quad, to_str
from ..report import VerificationReport, Violation, run_checks

RECURRENCE_EXCLUDED = (Fraction(0), Fraction(-1), Fraction(1))
# The closed form is stated for s2 != -1/3, although the discriminant only
# vanishes at s2 = 1/3; both restrictions are honoured (see the README).
CLOSED_FORM_EXCLUDED = RECURRENCE_EXCLUDED + (Fraction(-1, 3),)


@dataclass(frozen=True)
class SSequence:
    s2: Optional[FieldElement]
    values: tuple[FieldElement, ...]
    alpha: FieldElement
    beta: FieldElement

    def row(self) -> list[FieldElement]:
        """Invert the affine change: q_i = (alpha - s_i) / beta."""
        return [normalize((self.alpha - s) / self.beta) for s in self.values]


def _check_s2(s2, excluded) -> FieldElement:
    s2 = parse_field(s2)
    if s2 in excluded:
        raise InvalidFamilyParams(f"s2 = {to_str(s2)} is excluded (s2 must avoid "
                                  + ", ".join(to_str(v) for v in excluded) + ")")
    return s2


def s_transform(q0, q1, row: Sequence) -> SSequence:
    q0, q1 = parse_field(q0), parse_field(q1)
    if q0 == q1:
        raise InvalidFamilyParams("the s-transform needs q0 != q1")
    alpha = normalize(q1 / (q0 - q1))
    beta = normalize(ONE / (q0 - q1))
    values = tuple(normalize(alpha - beta * parse_field(q)) for q in row)
    if values and values[0] != -1:
        raise InvalidFamilyParams("row does not start with q0")
    if len(values) > 1 and values[1] != 0:
        raise InvalidFamilyParams("row does not continue with q1")
    s2 = values[2] if len(values) > 2 else None
    if s2 is not None:
        _check_s2(s2, RECURRENCE_EXCLUDED)
        inv = ONE / s2
        for i, s in enumerate(values):
            if s == inv:
                raise InvalidFamilyParams(f"s_{i} = 1/s2, impossible for a valid first row")
    return SSequence(s2, values, alpha, beta)


def s_recurrence(s2, M: int) -> list[FieldElement]:
    s2 = _check_s2(s2, RECURRENCE_EXCLUDED)
    inv = ONE / s2
    seq: list[FieldElement] = [Fraction(-1), Fraction(0), s2][:M + 1]
    while len(seq) <= M:
        m = len(seq) - 1
        sm = seq[m]
        if sm == inv:
            raise DegenerateDenominator(f"s_{m} = 1/s2", index=m)
        nxt = normalize((sm + 1) / (inv - sm))
        if nxt * (inv - sm) != sm + 1:
            raise DegenerateDenominator(f"start form fails at m = {m}", index=m)
        seq.append(nxt)
    return seq


def s_closed_form(s2, M: int) -> list[FieldElement]:
    """s_m from the characteristic roots, evaluated in Q(sqrt(D)) and demoted to Q."""
    s2 = _check_s2(s2, CLOSED_FORM_EXCLUDED)
    if isinstance(s2, QuadExt):
        raise InvalidFamilyParams("the closed form is implemented for rational s2")
    D = 1 - 2 * s2 - 3 * s2 * s2
    out: list[FieldElement] = [Fraction(-1), Fraction(0)][:M + 1]
    if D == 0:
        # double root lambda = -(1+s2)/(2 s2): x_m = (1 + c (m-2)) lambda^(m-2)
        lam = -(1 + s2) / (2 * s2)
        c = (s2 - 1 / s2) / lam - 1
        for m in range(2, M + 1):
            den = 1 + c * (m - 2)
            if den == 0:
                raise DivisionByZero(f"closed form denominator vanishes at m = {m}")
            out.append(1 / s2 + lam * (1 + c * (m - 1)) / den)
        return out
    root = quad(0, 1, D)
    mu_p, mu_m = -1 - s2 + root, -1 - s2 - root
    A = -1 + s2 + 2 * s2 * s2 + root
    B = 1 - s2 - 2 * s2 * s2 + root
    pw_p: FieldElement = ONE  # mu_+^(m-2)
    pw_m: FieldElement = ONE
    for m in range(2, M + 1):
        den = normalize(A * pw_p + B * pw_m)
        if is_zero(den):
            raise DivisionByZero(f"closed form denominator vanishes at m = {m}")
        num = normalize(A * pw_p * mu_p + B * pw_m * mu_m)
        val = normalize((1 + num / den / 2) / s2)
        if isinstance(val, QuadExt):
            raise ArithmeticError(f"closed form produced an irrational s_{m} = {to_str(val)}")
        out.append(val)
        pw_p, pw_m = normalize(pw_p * mu_p), normalize(pw_m * mu_m)
    return out


def s_identities_check(seq: SSequence | Sequence, M: int, s2=None) -> VerificationReport:
    """Both product identities for every m <= M and index pair."""
    values = list(seq.values if isinstance(seq, SSequence) else seq)
    s2 = parse_field(s2 if s2 is not None else values[2])
    if len(values) <= M:
        raise ValueError(f"need at least {M + 1} values")
    inv = ONE / s2
    items = [(m, k, t) for m in range(1, M + 1) for k in range(m) for t in range(-1, k + 1)]

    def check(item):
        m, k, t = item
        s = values
        if t == -1:
            lhs = s[k] * s[m - k - 1] - 1
            rhs = s[m] * (s[k] + s[m - k - 1] + 1 - inv)
            law = "s_k s_(m-k-1) - 1 = s_m (s_k + s_(m-k-1) + 1 - 1/s2)"
        else:
            lhs = (s[k] + s[m - k - 1] - s[t] - s[m - t - 1]) * s[m]
            rhs = s[k] * s[m - k - 1] - s[t] * s[m - t - 1]
            law = "(s_k + s_(m-k-1) - s_t - s_(m-t-1)) s_m = s_k s_(m-k-1) - s_t s_(m-t-1)"
        if normalize(lhs) != normalize(rhs):
            return [Violation(item, law, to_str(normalize(lhs)), to_str(normalize(rhs)))]
        return []

    return run_checks(items, check, subject="s identities")
