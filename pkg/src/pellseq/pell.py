"""Which seeds ``(r, s)`` of ``A_n = 6A_{n-1} - A_{n-2}`` give generalized Pell
solutions, and how each reduces to a multiple of T, B, C or L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .sequences import Family, RecurrenceSpec, family_term, term_fast


@dataclass(frozen=True)
class SeedPair:
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r == 0 and self.s == 0:
            raise ValueError("seed (0, 0) generates the zero sequence")

    @property
    def spec(self) -> RecurrenceSpec:
        return RecurrenceSpec.pell(self.r, self.s)

    def term(self, n: int) -> int:
        return term_fast(self.spec, n)


SeedLike = Union[SeedPair, tuple[int, int]]


def _seed(seed: SeedLike) -> SeedPair:
    return seed if isinstance(seed, SeedPair) else SeedPair(*seed)


def invariant_q(seed: SeedLike) -> int:
    """``Q = r² + s² - 6rs``, equal to ``A_n² + A_{n+1}² - 6A_nA_{n+1}`` for all n."""
    seed = _seed(seed)
    r, s = seed.r, seed.s
    return r * r + s * s - 6 * r * s


def _L(n: int) -> int:
    return family_term(Family.L, n)


def _T(n: int) -> int:
    return family_term(Family.T, n)


@dataclass(frozen=True)
class EqualityReport:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.equal


def fundamental_check(seed: SeedLike, n: int) -> EqualityReport:
    """``32A_n² + 2(r²+s²-6rs)`` against ``(r²-s²)L_{2n-2} + (6s²-2rs)L_{2n-1}``."""
    seed = _seed(seed)
    r, s = seed.r, seed.s
    a_n = seed.term(n)
    lhs = 32 * a_n * a_n + 2 * invariant_q(seed)
    rhs = (r * r - s * s) * _L(2 * n - 2) + (6 * s * s - 2 * r * s) * _L(2 * n - 1)
    return EqualityReport(lhs, rhs)


def cascade(seed: SeedLike) -> RecurrenceSpec:
    """The auxiliary sequence ``a_0 = 2rs - 6s², a_1 = r² - s²`` under the same
    recurrence, extended to negative indices by inversion."""
    seed = _seed(seed)
    r, s = seed.r, seed.s
    return RecurrenceSpec.pell(2 * r * s - 6 * s * s, r * r - s * s)


def telescope_check(seed: SeedLike, m: int, n: int) -> EqualityReport:
    """``32A_n² + 2Q`` against ``a_{m+3}L_{2n+m} - a_{m+2}L_{2n+m+1}``.

    ``m = -2`` is the fundamental equation itself. Values below -2 use the
    backward extension of the cascade.
    """
    seed = _seed(seed)
    a = cascade(seed)
    a_n = seed.term(n)
    lhs = 32 * a_n * a_n + 2 * invariant_q(seed)
    rhs = term_fast(a, m + 3) * _L(2 * n + m) - term_fast(a, m + 2) * _L(2 * n + m + 1)
    return EqualityReport(lhs, rhs)


# --- classification ---------------------------------------------------------

CLASSIFY_FAMILIES = (Family.T, Family.B, Family.C, Family.L)

# Q evaluated on each family's own seed.
FAMILY_Q = {Family.T: 1, Family.B: -4, Family.C: 32, Family.L: -32}


@dataclass(frozen=True)
class Member:
    """``A_n = mu * F_{n+shift}`` for every integer n."""

    family: Family
    shift: int
    mu: Fraction

    @property
    def is_member(self) -> bool:
        return True


@dataclass(frozen=True)
class NotInFourFamilies:
    q: int

    @property
    def is_member(self) -> bool:
        return False


Classification = Union[Member, NotInFourFamilies]


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _shift_window(family: Family, bound: Fraction) -> range:
    # Every family grows geometrically in both directions, so past the
    # first index where both neighbours exceed the bound no match is left.
    j = 0
    while (abs(family_term(family, j)) <= bound or abs(family_term(family, -j)) <= bound
           or abs(family_term(family, j + 1)) <= bound
           or abs(family_term(family, -j + 1)) <= bound):
        j += 1
    return range(-j - 1, j + 2)


def _canonical_key(member: Member) -> tuple:
    return (CLASSIFY_FAMILIES.index(member.family), abs(member.shift), member.mu < 0,
            member.shift)


def classify(seed: SeedLike) -> Classification:
    """Reduce a seed to ``mu * F_{n+j}`` with F one of T, B, C, L, if possible.

    Since ``Q(mu*F_j, mu*F_{j+1}) = mu² Q_F``, membership in F forces
    ``Q / Q_F`` to be a rational square. That fixes ``|mu|``; the shift is
    then found by scanning the finite window where ``|F_j|`` can still equal
    ``max(|r|, |s|) / |mu|``.
    """
    seed = _seed(seed)
    r, s = seed.r, seed.s
    q = invariant_q(seed)
    if r == 0:
        return Member(Family.T, 0, Fraction(s))
    if s == 0:
        # (r, 0) = -r (T_{-1}, T_0)
        return Member(Family.T, -1, Fraction(-r))
    found: list[Member] = []
    for family in CLASSIFY_FAMILIES:
        mu_abs = _rational_sqrt(Fraction(q, FAMILY_Q[family]))
        if mu_abs is None:
            continue
        bound = max(abs(r), abs(s)) / mu_abs + 1
        for j in _shift_window(family, bound):
            f0, f1 = family_term(family, j), family_term(family, j + 1)
            if r * f1 != s * f0:
                continue
            mu = Fraction(r, f0) if f0 else Fraction(s, f1)
            if abs(mu) == mu_abs and mu * f0 == r and mu * f1 == s:
                found.append(Member(family, j, mu))
    if not found:
        return NotInFourFamilies(q)
    return min(found, key=_canonical_key)


def member_window_check(seed: SeedLike, member: Member, n_range: Iterable[int]) -> bool:
    seed = _seed(seed)
    return all(seed.term(n) == member.mu * family_term(member.family, n + member.shift)
               for n in n_range)


# --- certificates -----------------------------------------------------------

class CertificateError(RuntimeError):
    """A candidate (m, h) matched the cascade but failed verification."""


@dataclass(frozen=True)
class Certificate:
    """``32 A_n² + c = h L_{2n+m+2}`` for every n."""

    m: int
    h: int
    c: int

    def holds_at(self, seed: SeedLike, n: int) -> bool:
        a_n = _seed(seed).term(n)
        return 32 * a_n * a_n + self.c == self.h * _L(2 * n + self.m + 2)


def _match_h(a0: int, a1: int, t1: int, t0: int) -> Optional[int]:
    """Integer h with ``a0 = -t1*h`` and ``a1 = -t0*h``, if any."""
    if t1 == 0:
        if a0 != 0 or a1 % t0:
            return None
        return -a1 // t0
    if a0 % t1:
        return None
    h = -a0 // t1
    return h if a1 == -t0 * h else None


def certificate(seed: SeedLike, m_window: int = 10, n_check: int = 10) -> Optional[Certificate]:
    """Search ``m`` in ``[-m_window, m_window]`` for a nonzero integer h with
    ``a_0 = -T_{m+4} h`` and ``a_1 = -T_{m+3} h``.

    A hit means ``a_{m+2} = -6h`` and ``a_{m+3} = -h``, so the telescoped
    right-hand side collapses to ``h L_{2n+m+2}``. Each hit is verified on
    ``n = 1..n_check`` before it is returned.
    """
    seed = _seed(seed)
    a = cascade(seed)
    a0, a1 = a.seed0, a.seed1
    c = 2 * invariant_q(seed)
    for m in range(-m_window, m_window + 1):
        h = _match_h(a0, a1, _T(m + 4), _T(m + 3))
        if not h:
            continue
        cert = Certificate(m, h, c)
        bad = [n for n in range(1, n_check + 1) if not cert.holds_at(seed, n)]
        if bad:
            raise CertificateError(f"{cert} for {seed} fails at n={bad[0]}")
        return cert
    return None


@dataclass(frozen=True)
class HFormulaCase:
    sign: str  # "+" or "-"
    r: Optional[Fraction]
    s: int
    h_formula: Fraction
    certificate: Optional[Certificate] = None
    skipped: Optional[str] = None

    @property
    def consistent(self) -> bool:
        if self.skipped:
            return True
        return (self.certificate is not None
                and Fraction(self.certificate.h) == self.h_formula)


@dataclass(frozen=True)
class HFormulaReport:
    t0: int
    t1: int
    s: int
    cases: tuple[HFormulaCase, ...] = field(default_factory=tuple)

    @property
    def consistent(self) -> bool:
        return all(case.consistent for case in self.cases)


def h_formula_check(t0: int, t1: int, s: int, m_window: int = 10) -> HFormulaReport:
    """Audit the closed form ``h = 2(-s²t0 + 3s²t1 ± s²) / t1²``.

    The plus sign pairs with ``r = s(t0 - 1)/t1`` and the minus sign with
    ``r = s(t0 + 1)/t1``. Whenever r comes out integral, the certificate
    search on ``(r, s)`` must find exactly the formula's h.
    """
    if t1 == 0:
        raise ValueError("t1 = T_{m+4} must be nonzero")
    cases = []
    for sign, pm in (("+", 1), ("-", -1)):
        h = Fraction(2 * (-s * s * t0 + 3 * s * s * t1 + pm * s * s), t1 * t1)
        r = Fraction(s * (t0 - pm), t1)
        if r.denominator != 1:
            cases.append(HFormulaCase(sign, r, s, h, skipped="r is not an integer"))
            continue
        if r == 0 and s == 0:
            cases.append(HFormulaCase(sign, r, s, h, skipped="zero seed"))
            continue
        cert = certificate((int(r), s), m_window)
        cases.append(HFormulaCase(sign, r, s, h, cert))
    return HFormulaReport(t0, t1, s, tuple(cases))


# --- generalized Pell equations ---------------------------------------------

@dataclass(frozen=True)
class PellEquation:
    """``x² - D y² = N``."""

    d: int
    n: int

    def __post_init__(self) -> None:
        if self.d < 2 or math.isqrt(self.d) ** 2 == self.d:
            raise ValueError(f"D must be a nonsquare integer >= 2, got {self.d}")


@dataclass(frozen=True, order=True)
class PellSolution:
    x: int
    y: int


def _equation(eq: Union[PellEquation, tuple[int, int]]) -> PellEquation:
    return eq if isinstance(eq, PellEquation) else PellEquation(*eq)


def pell_brute(eq: Union[PellEquation, tuple[int, int]], y_max: int) -> list[PellSolution]:
    """All ``(x, y)`` with ``x, y >= 0`` and ``y <= y_max``, by exact isqrt."""
    eq = _equation(eq)
    if y_max < 0:
        raise ValueError("y_max must be nonnegative")
    d, n = eq.d, eq.n
    out = []
    isqrt = math.isqrt
    for y in range(y_max + 1):
        v = n + d * y * y
        if v < 0:
            continue
        x = isqrt(v)
        if x * x == v:
            out.append(PellSolution(x, y))
    return out


# (D, N) -> (x-family, x-divisor, y-family)
FAMILY_EQUATIONS: dict[tuple[int, int], tuple[Family, int, Family]] = {
    (8, 1): (Family.L, 2, Family.T),
    (2, -1): (Family.C, 2, Family.B),
    (2, 8): (Family.E, 1, Family.C),
    (32, 4): (Family.L, 1, Family.T),
}


def family_solutions(eq: Union[PellEquation, tuple[int, int]], y_max: int) -> list[PellSolution]:
    """Solutions read off the family parameterizations, for ``n >= 0`` while
    ``y <= y_max``."""
    eq = _equation(eq)
    try:
        xf, div, yf = FAMILY_EQUATIONS[(eq.d, eq.n)]
    except KeyError:
        forms = ", ".join(f"x^2-{d}y^2={n}" for d, n in FAMILY_EQUATIONS)
        raise ValueError(f"no family parameterization for x^2-{eq.d}y^2={eq.n}; "
                         f"supported: {forms}") from None
    out = []
    k = 0
    while (y := family_term(yf, k)) <= y_max:
        x = family_term(xf, k)
        assert x % div == 0
        out.append(PellSolution(x // div, y))
        k += 1
    return out
