"""Brute-force Rota-Baxter verification and coefficient-table serialization."""

from __future__ import annotations

from typing import Optional

from ..exactfield import FieldElement, parse_field, to_str
from ..monoalg import (POLYNOMIAL, Monomial, OperatorRule, SparsePoly, Window, monomials_up_to,
                       pairs_up_to, poly_combine, poly_mul)
from ..report import VerificationReport, Violation, run_checks

RB_LAW = "R(a)R(b) = R(R(a)b + aR(b) + lambda ab)"


def rb_check(R: OperatorRule, lam: FieldElement, N: int, workers: int = 1,
             window: Window = POLYNOMIAL) -> VerificationReport:
    """The weight-lam identity on every ordered monomial pair with deg(a) + deg(b) <= N."""
    if N < 0:
        raise ValueError("degree bound must be nonnegative")
    lam = parse_field(lam)

    def check(pair):
        a, b = pair
        pa, pb = SparsePoly.monomial(a), SparsePoly.monomial(b)
        ra, rb = R(pa, window), R(pb, window)
        lhs = poly_mul(ra, rb, window)
        inner = poly_mul(ra, pb, window) + poly_mul(pa, rb, window)
        inner = poly_combine(inner, poly_mul(pa, pb, window), (1, lam))
        rhs = R(inner, window)
        return [] if lhs == rhs else [Violation((a, b), RB_LAW, lhs, rhs)]

    return run_checks(pairs_up_to(N, window), check, workers, subject="rota-baxter")


def splitting_criterion_check(R: OperatorRule, lam: FieldElement, N: int,
                              window: Window = POLYNOMIAL) -> VerificationReport:
    """R(R(a) + lam a) = 0 on every monomial of degree <= N."""
    lam = parse_field(lam)

    def check(mono: Monomial):
        p = SparsePoly.monomial(mono)
        value = R(poly_combine(R(p, window), p, (1, lam)), window)
        return [] if not value else [Violation((mono,), "R(R(a) + lambda a) = 0", value, SparsePoly())]

    return run_checks(monomials_up_to(N, window), check, subject="splitting criterion")


# --- tables ------------------------------------------------------------------

def table_rows(R: OperatorRule, monos) -> list[dict]:
    """One row per monomial, zero coefficients included, sorted by (n, m)."""
    rows = []
    for mono in sorted(Monomial(*m) for m in monos):
        t = R.term(mono)
        row = {"n": mono.n, "m": mono.m, "coeff": "0" if t is None else to_str(t.coeff)}
        row["image"] = None if t is None else {"n": t.mono.n, "m": t.mono.m}
        rows.append(row)
    return rows


def table_json(R: OperatorRule, monos, params: Optional[dict] = None) -> dict:
    prov = dict(R.provenance)
    family = prov.pop("family", "unknown")
    return {
        "family": family,
        "params": params if params is not None else prov,
        "weight": None if R.weight is None else to_str(R.weight),
        "table": table_rows(R, monos),
    }


def parse_table(rows) -> dict[Monomial, tuple[FieldElement, Optional[Monomial]]]:
    out = {}
    for row in rows:
        mono = Monomial(int(row["n"]), int(row["m"]))
        if mono in out:
            raise ValueError(f"duplicate table entry for {mono}")
        img = row.get("image")
        coeff = parse_field(row["coeff"])
        if img is None and coeff != 0:
            raise ValueError(f"nonzero entry for {mono} needs an image")
        out[mono] = (coeff, None if img is None else Monomial(int(img["n"]), int(img["m"])))
    return out
