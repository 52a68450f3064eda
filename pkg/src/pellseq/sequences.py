"""Second-order integer recurrences and the named families built on them.

Every sequence here is defined on all of Z. The recurrence
``X_n = p X_{n-1} + q X_{n-2}`` is required to have ``|q| = 1`` so it can be
run backwards with integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .exact_arith import ALPHA, BETA, QuadRat


@dataclass(frozen=True)
class RecurrenceSpec:
    """``X_n = p*X_{n-1} + q*X_{n-2}`` with ``X_0 = seed0`` and ``X_1 = seed1``."""

    p: int
    q: int
    seed0: int
    seed1: int

    def __post_init__(self) -> None:
        if self.q not in (1, -1):
            raise ValueError(f"recurrence needs |q| = 1 to be invertible, got q={self.q}")

    @classmethod
    def pell(cls, r: int, s: int) -> RecurrenceSpec:
        """The seed ``A_0 = r, A_1 = s`` under ``A_n = 6A_{n-1} - A_{n-2}``."""
        return cls(6, -1, r, s)


class Family(str, enum.Enum):
    T = "T"
    L = "L"
    B = "B"
    C = "C"
    E = "E"
    NSW = "NSW"
    R = "R"

    def __str__(self) -> str:
        return self.value


FAMILY_SPECS: dict[Family, RecurrenceSpec] = {
    Family.T: RecurrenceSpec(6, -1, 0, 1),
    Family.L: RecurrenceSpec(6, -1, 2, 6),
    Family.B: RecurrenceSpec(6, -1, 1, 5),
    Family.C: RecurrenceSpec(6, -1, 2, 14),
    Family.E: RecurrenceSpec(6, -1, 4, 20),
    Family.R: RecurrenceSpec(2, 1, 1, 1),
}

# First ten terms of each family, produced by iterating the recurrence from
# the initial conditions above (not copied from OEIS). The OEIS ids are the
# ones the families are catalogued under.
OEIS_IDS: dict[Family, str] = {
    Family.T: "A001109",
    Family.L: "A003499",
    Family.B: "A001653",
    Family.C: "A077444",
    Family.E: "A077445",
    Family.NSW: "A002315",
    Family.R: "A001333",
}

PREFIX_TABLES: dict[Family, tuple[int, ...]] = {
    Family.T: (0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105),
    Family.L: (2, 6, 34, 198, 1154, 6726, 39202, 228486, 1331714, 7761798),
    Family.B: (1, 5, 29, 169, 985, 5741, 33461, 195025, 1136689, 6625109),
    Family.C: (2, 14, 82, 478, 2786, 16238, 94642, 551614, 3215042, 18738638),
    Family.E: (4, 20, 116, 676, 3940, 22964, 133844, 780100, 4546756, 26500436),
    Family.NSW: (1, 7, 41, 239, 1393, 8119, 47321, 275807, 1607521, 9369319),
    Family.R: (1, 1, 3, 7, 17, 41, 99, 239, 577, 1393),
}


def term(spec: RecurrenceSpec, n: int) -> int:
    """Return ``X_n`` by stepping the recurrence forwards or backwards."""
    p, q = spec.p, spec.q
    if n >= 0:
        x0, x1 = spec.seed0, spec.seed1
        for _ in range(n):
            x0, x1 = x1, p * x1 + q * x0
        return x0
    # X_{k-1} = (X_{k+1} - p X_k) / q, and 1/q == q for q = ±1
    x0, x1 = spec.seed0, spec.seed1
    for _ in range(-n):
        x0, x1 = q * (x1 - p * x0), x0
    return x0


_Mat = tuple[int, int, int, int]


def _mat_mul(m: _Mat, k: _Mat) -> _Mat:
    a, b, c, d = m
    e, f, g, h = k
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_pow(m: _Mat, e: int) -> _Mat:
    result: _Mat = (1, 0, 0, 1)
    while e:
        if e & 1:
            result = _mat_mul(result, m)
        m = _mat_mul(m, m)
        e >>= 1
    return result


def term_fast(spec: RecurrenceSpec, n: int) -> int:
    """Return ``X_n`` in O(log |n|) multiplications via the companion matrix.

    ``M = [[p, q], [1, 0]]`` maps ``(X_k, X_{k-1})`` to ``(X_{k+1}, X_k)``.
    Its determinant is ``-q = ±1``, so ``M⁻¹ = [[0, 1], [q, -p*q]]`` is
    integral and negative ``n`` needs no division.
    """
    if n == 0:
        return spec.seed0
    if n > 0:
        m = _mat_pow((spec.p, spec.q, 1, 0), n - 1)
        # (X_n, X_{n-1}) = M^{n-1} (X_1, X_0)
        return m[0] * spec.seed1 + m[1] * spec.seed0
    m = _mat_pow((0, 1, spec.q, -spec.p * spec.q), -n)
    # M⁻¹ maps (X_{k+1}, X_k) to (X_k, X_{k-1}); |n| steps from (X_1, X_0)
    # land on (X_{n+1}, X_n)
    return m[2] * spec.seed1 + m[3] * spec.seed0


@lru_cache(maxsize=65536)
def _cached_term(family: Family, n: int) -> int:
    if family is Family.NSW:
        c = term_fast(FAMILY_SPECS[Family.C], n)
        assert c % 2 == 0, f"C_{n} = {c} is odd"
        return c // 2
    return term_fast(FAMILY_SPECS[family], n)


def family_term(family: Family | str, n: int) -> int:
    """The ``n``-th term of a named family; NSW is ``C_n / 2``."""
    return _cached_term(Family(family), n)


def family_spec(family: Family | str) -> RecurrenceSpec:
    family = Family(family)
    if family is Family.NSW:
        raise ValueError("NSW is derived from C and has no seed of its own")
    return FAMILY_SPECS[family]


@dataclass(frozen=True)
class ClosedFormCoeffs:
    """``A_n = c1·α^n + c2·β^n``."""

    c1: QuadRat
    c2: QuadRat

    def evaluate(self, n: int) -> QuadRat:
        return self.c1 * ALPHA ** n + self.c2 * BETA ** n


def closed_form_coeffs(r: int, s: int) -> ClosedFormCoeffs:
    # c1 + c2 = r and c1·α + c2·β = s, with α - β = 4√2 ≠ 0
    diff = ALPHA - BETA
    c1 = (s - r * BETA) / diff
    c2 = (r * ALPHA - s) / diff
    return ClosedFormCoeffs(c1, c2)


def gf_prefix(r: int, s: int, count: int) -> list[int]:
    """Taylor coefficients of ``(r + (s-7r)x + (6r-s)x²) / ((1-x)(1-6x+x²))``.

    The denominator expands to ``1 - 7x + 7x² - x³``, so the coefficients obey
    ``g_k = num_k + 7g_{k-1} - 7g_{k-2} + g_{k-3}``.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    num = (r, s - 7 * r, 6 * r - s)
    den = (7, -7, 1)
    out: list[int] = []
    for k in range(count):
        g = num[k] if k < 3 else 0
        for i, d in enumerate(den, start=1):
            if k - i >= 0:
                g += d * out[k - i]
        out.append(g)
    return out


def recurrence_invariant(spec: RecurrenceSpec, n: int = 0) -> int:
    """``X_n² + X_{n+1}² - 6 X_n X_{n+1}``; constant in n for p=6, q=-1."""
    x, y = term_fast(spec, n), term_fast(spec, n + 1)
    return x * x + y * y - 6 * x * y


@dataclass(frozen=True)
class RelationFailure:
    relation: str
    n: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class RelationsReport:
    n_lo: int
    n_hi: int
    checked: int
    failure: Optional[RelationFailure] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


_Rel = Callable[[int], tuple[Fraction, Fraction]]


def _relations() -> list[tuple[str, _Rel]]:
    T = lambda k: family_term(Family.T, k)  # noqa: E731
    L = lambda k: family_term(Family.L, k)  # noqa: E731
    B = lambda k: family_term(Family.B, k)  # noqa: E731
    C = lambda k: family_term(Family.C, k)  # noqa: E731
    E = lambda k: family_term(Family.E, k)  # noqa: E731
    half = Fraction(1, 2)
    return [
        ("B_n = T_{n+1} - T_n", lambda n: (B(n), T(n + 1) - T(n))),
        ("E_n = (L_{n+1} + L_n)/2", lambda n: (E(n), half * (L(n + 1) + L(n)))),
        ("E_n = 4 B_n", lambda n: (E(n), 4 * B(n))),
        ("C_n = 2(T_{n+1} + T_n)", lambda n: (C(n), 2 * (T(n + 1) + T(n)))),
        ("C_n = (L_{n+1} - L_n)/2", lambda n: (C(n), half * (L(n + 1) - L(n)))),
        ("NSW_n = R_{2n+1}", lambda n: (family_term(Family.NSW, n),
                                         family_term(Family.R, 2 * n + 1))),
    ]


def cross_relations_check(n_range: Iterable[int]) -> RelationsReport:
    """Check the relations tying B, E, C, NSW and R back to T and L.

    Stops at the first failing (relation, n); any failure is a bug.
    """
    ns = list(n_range)
    lo, hi = (min(ns), max(ns)) if ns else (0, -1)
    checked = 0
    for n in ns:
        for name, rel in _relations():
            lhs, rhs = rel(n)
            checked += 1
            if lhs != rhs:
                return RelationsReport(lo, hi, checked,
                                       RelationFailure(name, n, Fraction(lhs), Fraction(rhs)))
    return RelationsReport(lo, hi, checked)
