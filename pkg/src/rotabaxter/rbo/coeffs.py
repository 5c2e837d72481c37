"""Coefficients of weight-one operators R(x^k y^m) = alpha[k, m] * y^(k+m).

The first row q_i = alpha[1, i] determines everything: later row entries come
from the pair equations

    (q_k + q_{m-k-1} - q_t - q_{m-t-1}) * q_m = q_k q_{m-k-1} - q_t q_{m-t-1}

(the pair k = 0, t = 1 is the usual workhorse) and the higher rows from

    alpha[k+1, m] = alpha[k, m] * (q_0 - q_{k+m}) - q_0 * alpha[k, m+1].

Closed forms for the special first rows live here too, so that they can be
compared entrywise with the recurrence.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from ..errors import DegenerateDenominator, InvalidFamilyParams
from ..exactfield import ONE, ZERO, FieldElement, is_zero, normalize, parse_field, power

Coeff = Callable[[int, int], FieldElement]


# --- first row ----------------------------------------------------------------

def _pair(row: Sequence[FieldElement], m: int, k: int, t: int):
    den = row[k] + row[m - k - 1] - row[t] - row[m - t - 1]
    num = row[k] * row[m - k - 1] - row[t] * row[m - t - 1]
    return normalize(den), normalize(num)


def _next_entry(row: list) -> FieldElement:
    m = len(row)
    den, num = _pair(row, m, 0, 1)
    if not is_zero(den):
        return normalize(num / den)
    if not is_zero(num):
        raise DegenerateDenominator(
            f"alpha[1,{m}]: the pair (0, 1) equation reads 0 = {num}", index=m)
    # scan every other pair equation that constrains q_m
    values = []
    for k in range(m):
        for t in range(k):
            den, num = _pair(row, m, k, t)
            if is_zero(den):
                if not is_zero(num):
                    raise DegenerateDenominator(
                        f"alpha[1,{m}]: the pair ({k}, {t}) equation reads 0 = {num}", index=m)
                continue
            v = normalize(num / den)
            if values and v != values[0]:
                raise DegenerateDenominator(
                    f"alpha[1,{m}]: pair equations disagree ({values[0]} vs {v})", index=m)
            values.append(v)
    if values:
        return values[0]
    if all(q == row[0] for q in row):
        return row[0]
    raise DegenerateDenominator(f"alpha[1,{m}] is not determined by the earlier entries", index=m)


def extend_row(prefix: Sequence, M: int) -> list[FieldElement]:
    """Continue a first row q_0, ..., q_{p-1} (p >= 3) up to index M."""
    row = [parse_field(q) for q in prefix]
    if len(row) < 3:
        raise InvalidFamilyParams("a first row needs at least q0, q1, q2")
    while len(row) <= M:
        row.append(_next_entry(row))
    return row[:M + 1]


def r1_alpha_row(q0, q1, q2, M: int) -> list[FieldElement]:
    """alpha[1, m] for m = 0..M from the three free values."""
    q0, q1, q2 = parse_field(q0), parse_field(q1), parse_field(q2)
    distinct = q0 != q1 and q0 != q2 and q1 != q2
    if distinct and 2 * q1 == q0 + q2:
        raise InvalidFamilyParams(
            "2q1 = q0+q2 with q0, q1, q2 pairwise distinct: no operator has this first row")
    if q0 == q1 == q2:
        return [q0] * (M + 1)
    return extend_row([q0, q1, q2], M)


def r1_extend(row: Sequence[FieldElement], q0, K: int, M: int) -> dict[tuple[int, int], FieldElement]:
    """alpha[k, m] for 1 <= k <= K, 0 <= m <= M; needs len(row) >= K + M."""
    q0 = parse_field(q0)
    if K < 1:
        return {}
    if len(row) < K + M:
        raise ValueError(f"row of length {len(row)} is too short for K={K}, M={M}")
    cur = [parse_field(q) for q in row[:K + M]]
    table = {(1, m): cur[m] for m in range(M + 1)}
    for k in range(1, K):
        cur = [normalize(cur[m] * (q0 - row[k + m]) - q0 * cur[m + 1]) for m in range(len(cur) - 1)]
        for m in range(M + 1):
            table[(k + 1, m)] = cur[m]
    return table


def alpha_sum_formula(row: Sequence[FieldElement], k: int, m: int) -> FieldElement:
    """alpha[k+1, m] as the signed binomial sum over increasing index tuples.

    For each leading index i1 the inner sum over i2 < ... < i_{s+1} is an
    elementary symmetric polynomial of q_{i1+1}, ..., q_{m+k}; those are
    accumulated right to left.
    """
    if len(row) < k + m + 1:
        raise ValueError("row too short")
    q0 = row[0]
    inner = [ZERO] * (k + 1)  # inner[s] = sum over tuples of length s+1
    esym = [ONE]  # elementary symmetric polynomials of the suffix
    for i1 in range(m + k, m - 1, -1):
        j = i1 - m
        weight = (-1) ** j * comb(k, j) * row[i1]
        for s, e in enumerate(esym):
            if s <= k:
                inner[s] = inner[s] + weight * e
        nxt = list(esym) + [ZERO]
        for s in range(len(esym), 0, -1):
            nxt[s] = nxt[s] + esym[s - 1] * row[i1]
        esym = nxt
    total: FieldElement = ZERO
    for s in range(k + 1):
        total = total + (-1) ** s * power(q0, k - s) * inner[s]
    return normalize(total)


# --- Fibonacci ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _fib_nonneg(m: int) -> int:
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def fibonacci(m: int) -> int:
    """f_0 = 0, f_1 = 1, extended to negative indices by f_{-m} = (-1)^(m+1) f_m."""
    if m >= 0:
        return _fib_nonneg(m)
    return (-1) ** (-m + 1) * _fib_nonneg(-m)


# --- closed forms (k >= 1 only; the k = 0 row is always -1, the unit theta) -----

def lemma_const_coeff(q0) -> Coeff:
    """Constant first row q0: alpha[k, m] = (-1)^(k+1) q0^k."""
    q0 = parse_field(q0)
    return lambda k, m: (-1) ** (k + 1) * power(q0, k)


def lemma_run_coeff(q0, qn, n: int) -> Coeff:
    """First row q0 repeated n times, then qn."""
    q0, qn = parse_field(q0), parse_field(qn)

    def coeff(k: int, m: int) -> FieldElement:
        val = -power(-q0, k)
        if (k + m) % (n + 1) == 0:
            val = val - power(-q0, k - 1) * Fraction(k * (n + 1), m + k) * (q0 - qn)
        return normalize(val)

    return coeff


def lemma_aba_coeff(q0, q1) -> Coeff:
    """First row q0, q1, q0, ... : parity of n - k - 1 decides the shape."""
    q0, q1 = parse_field(q0), parse_field(q1)

    def coeff(k: int, n: int) -> FieldElement:
        e = (n - k - 1) % 2
        base = ((n - k) * q0 + 2 * k * q1) / Fraction(n + k)
        return normalize((-1) ** (k + 1) * power(q0, k - e) * power(base, e))

    return coeff


def lemma_tail_coeff(q0, q1) -> Coeff:
    """First row q0, q1, q1, ...: -(-q1)^k for m > 0, (q0 - q1)^k - (-q1)^k for m = 0.

    The m = 0 entries solve alpha[k+1, 0] = alpha[k, 0](q0 - q1) + q0 (-q1)^k,
    alpha[1, 0] = q0.
    """
    q0, q1 = parse_field(q0), parse_field(q1)

    def coeff(k: int, m: int) -> FieldElement:
        if m == 0:
            return normalize(power(q0 - q1, k) - power(-q1, k))
        return normalize(-power(-q1, k))

    return coeff


def lemma_tail_coeff_uniform(q0, q1) -> Coeff:
    """The variant with -(-q1)^k also on the m = 0 entries k >= 2 (not an RB-operator)."""
    q0, q1 = parse_field(q0), parse_field(q1)
    return lambda k, m: q0 if (k, m) == (1, 0) else normalize(-power(-q1, k))


def fibonacci_coeff(a, b) -> Coeff:
    a, b = parse_field(a), parse_field(b)

    def coeff(k: int, m: int) -> FieldElement:
        total: FieldElement = ZERO
        for s in range(k + 1):
            total = total + comb(k, s) * power(a, k - s) * power(b, s) * fibonacci(m - k + s)
        sign = -1 if k % 2 == 0 else 1
        return normalize(sign * total / fibonacci(m + k))

    return coeff


def fibonacci_row_value(a, b, m: int) -> FieldElement:
    """alpha[1, m] = (f_{m-1} a + f_m b) / f_{m+1}."""
    a, b = parse_field(a), parse_field(b)
    return normalize((fibonacci(m - 1) * a + fibonacci(m) * b) / fibonacci(m + 1))


# --- lazily grown tables -------------------------------------------------------

class R1Table:
    """alpha[k, m] from a first-row prefix, grown on demand by total degree.

    The only mutable state of an operator; guarded by a lock so that a rule
    can be evaluated from several checker threads.
    """

    def __init__(self, prefix: Sequence):
        self._prefix = [parse_field(q) for q in prefix]
        self._row: list[FieldElement] = []
        self._levels: dict[tuple[int, int], FieldElement] = {}
        self._degree = -1
        self._lock = threading.Lock()
        self.ensure(len(self._prefix) - 1)

    @property
    def q0(self) -> FieldElement:
        return self._prefix[0]

    def ensure(self, degree: int) -> None:
        if degree <= self._degree:
            return
        with self._lock:
            if degree <= self._degree:
                return
            row = extend_row(self._prefix, max(degree, len(self._prefix) - 1))
            levels = dict(self._levels)
            q0 = row[0]
            for d in range(self._degree + 1, degree + 1):
                if d == 0:
                    continue
                levels[(1, d - 1)] = row[d - 1]
                for k in range(2, d + 1):
                    m = d - k
                    levels[(k, m)] = normalize(
                        levels[(k - 1, m)] * (q0 - row[k - 1 + m]) - q0 * levels[(k - 1, m + 1)])
            self._row = row
            self._levels = levels
            self._degree = degree

    def row(self, M: int) -> list[FieldElement]:
        self.ensure(M)
        return self._row[:M + 1]

    def __call__(self, k: int, m: int) -> FieldElement:
        """alpha[k, m] for k >= 1."""
        self.ensure(k + m)
        return self._levels[(k, m)]
