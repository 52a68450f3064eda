import math
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pellseq.pell import (
    FAMILY_EQUATIONS,
    Certificate,
    Member,
    NotInFourFamilies,
    PellEquation,
    PellSolution,
    SeedPair,
    cascade,
    certificate,
    classify,
    family_solutions,
    fundamental_check,
    h_formula_check,
    invariant_q,
    member_window_check,
    pell_brute,
    telescope_check,
)
from pellseq.sequences import Family, RecurrenceSpec, family_term, term

seeds = st.tuples(st.integers(-100, 100), st.integers(-100, 100)).filter(lambda p: p != (0, 0))


def test_zero_seed_rejected():
    with pytest.raises(ValueError):
        SeedPair(0, 0)


def test_invariant_q_examples():
    assert invariant_q((0, 1)) == 1
    assert invariant_q((1, 1)) == -4
    assert invariant_q((1, 2)) == -7


@given(seeds, st.integers(-30, 30))
def test_invariant_q_is_constant(seed, n):
    spec = RecurrenceSpec.pell(*seed)
    x, y = term(spec, n), term(spec, n + 1)
    assert x * x + y * y - 6 * x * y == invariant_q(seed)


def test_fundamental_examples():
    rep = fundamental_check((0, 1), 1)
    assert (rep.lhs, rep.rhs) == (34, 34)
    rep = fundamental_check((1, 1), 1)
    assert (rep.lhs, rep.rhs) == (24, 24)
    rep = fundamental_check((1, 0), 1)
    assert (rep.lhs, rep.rhs) == (2, 2)


@given(seeds, st.integers(-40, 40))
def test_fundamental_holds(seed, n):
    assert fundamental_check(seed, n).equal


def test_telescope_examples():
    assert telescope_check((0, 1), -2, 1) == fundamental_check((0, 1), 1)
    # a = -6, -1, 0, 1, 6, ... so a_3 L_2 - a_2 L_3 = 1*34 - 0
    assert cascade((0, 1)).seed0 == -6
    assert [term(cascade((0, 1)), k) for k in range(4)] == [-6, -1, 0, 1]
    rep = telescope_check((0, 1), 0, 1)
    assert (rep.lhs, rep.rhs) == (34, 34)
    rep = telescope_check((1, 1), -1, 2)
    assert (rep.lhs, rep.rhs) == (792, 792)


@given(seeds, st.integers(-6, 6), st.integers(1, 20))
def test_telescope_holds_including_backward_extension(seed, m, n):
    assert telescope_check(seed, m, n).equal


# --- classification ---------------------------------------------------------

@pytest.mark.parametrize("seed,expected", [
    ((1, 1), Member(Family.B, -1, Fraction(1))),
    ((1, -1), Member(Family.C, -1, Fraction(-1, 2))),
    ((3, 1), Member(Family.L, -1, Fraction(1, 2))),
    ((1, 0), Member(Family.T, -1, Fraction(-1))),
    ((0, 1), Member(Family.T, 0, Fraction(1))),
])
def test_classify_examples(seed, expected):
    assert classify(seed) == expected
    assert member_window_check(seed, expected, range(-15, 16))


def test_classify_non_member():
    assert classify((1, 2)) == NotInFourFamilies(-7)


def test_classify_zero_component_shortcuts():
    assert classify((0, -7)) == Member(Family.T, 0, Fraction(-7))
    assert classify((5, 0)) == Member(Family.T, -1, Fraction(-5))


def _brute_membership(r, s, span=12):
    """Oracle: scan shifts directly without using Q."""
    hits = []
    for fam in (Family.T, Family.B, Family.C, Family.L):
        for j in range(-span, span + 1):
            f0, f1 = family_term(fam, j), family_term(fam, j + 1)
            if r * f1 == s * f0:
                mu = Fraction(r, f0) if f0 else Fraction(s, f1)
                hits.append((fam, j, mu))
    return hits


@given(st.integers(-60, 60), st.integers(-60, 60))
def test_classify_agrees_with_brute_membership(r, s):
    assume((r, s) != (0, 0))
    result = classify((r, s))
    hits = _brute_membership(r, s)
    if isinstance(result, Member):
        assert (result.family, result.shift, result.mu) in hits
        assert member_window_check((r, s), result, range(-10, 11))
    else:
        assert hits == []


@given(seeds, st.integers(-9, 9).filter(bool))
def test_scaling_covariance(seed, t):
    base = classify(seed)
    scaled = classify((t * seed[0], t * seed[1]))
    if isinstance(base, Member):
        assert scaled == Member(base.family, base.shift, base.mu * t)
    else:
        assert isinstance(scaled, NotInFourFamilies)


# --- certificates -----------------------------------------------------------

@pytest.mark.parametrize("seed,expected", [
    ((1, 0), Certificate(-4, 1, 2)),
    ((1, 1), Certificate(-3, 4, -8)),
    ((1, 7), Certificate(-1, 8, 16)),
])
def test_certificate_examples(seed, expected):
    assert certificate(seed, 10, 10) == expected


def test_certificate_none():
    assert certificate((1, 2), 10, 10) is None


def test_certificate_1_7_is_half_c():
    # A_n = C_n / 2 for (1, 7), so 4 A_n^2 + 2 = L_{2n+1}
    for n in range(0, 10):
        a_n = term(RecurrenceSpec.pell(1, 7), n)
        assert 2 * a_n == family_term(Family.C, n)
        assert 4 * a_n * a_n + 2 == family_term(Family.L, 2 * n + 1)


def test_certificate_small_window_misses_elementary_cases():
    # (1, 0) needs m = -4, outside a window of 3
    assert certificate((1, 0), 3) is None


@given(seeds)
def test_certificate_soundness(seed):
    cert = certificate(seed)
    if cert is None:
        return
    rng = random.Random(hash(seed))
    for n in (rng.randint(11, 200) for _ in range(20)):
        assert cert.holds_at(seed, n)
    assert cert.c == 2 * invariant_q(seed)


# --- h formula --------------------------------------------------------------

def test_h_formula_m0():
    rep = h_formula_check(35, 204, 6)
    plus, minus = rep.cases
    assert plus.r == 1 and plus.h_formula == 1
    assert plus.certificate == Certificate(0, 1, 2)
    assert minus.skipped
    assert rep.consistent


def test_h_formula_m_minus2():
    rep = h_formula_check(1, 6, 3)
    plus, minus = rep.cases
    assert (plus.r, plus.h_formula) == (0, 9)
    assert (minus.r, minus.h_formula) == (1, 8)
    assert minus.certificate == Certificate(-2, 8, -16)
    assert rep.consistent


def test_h_formula_recovers_s_equals_plus_minus_r():
    rep = h_formula_check(0, 1, 1)
    assert [c.r for c in rep.cases] == [-1, 1]
    assert rep.consistent


# k = -1 would put T_0 = 0 in the denominator
@pytest.mark.parametrize("k", [k for k in range(-4, 6) if k != -1])
@pytest.mark.parametrize("s", [1, 2, 6, 35, 204, -12])
def test_h_formula_consistent_along_t(k, s):
    t0, t1 = family_term(Family.T, k), family_term(Family.T, k + 1)
    assert h_formula_check(t0, t1, s).consistent


def test_h_formula_requires_nonzero_t1():
    with pytest.raises(ValueError):
        h_formula_check(-1, 0, 1)


# --- Pell equations ---------------------------------------------------------

def test_pell_equation_validation():
    with pytest.raises(ValueError):
        PellEquation(4, 1)
    with pytest.raises(ValueError):
        PellEquation(1, 1)


def _sols(pairs):
    return [PellSolution(x, y) for x, y in pairs]


def test_pell_brute_examples():
    assert pell_brute((8, 1), 40) == _sols([(1, 0), (3, 1), (17, 6), (99, 35)])
    assert pell_brute((2, -1), 30) == _sols([(1, 1), (7, 5), (41, 29)])
    assert pell_brute((2, 0), 10) == _sols([(0, 0)])


def test_family_solutions_examples():
    assert family_solutions((8, 1), 40) == _sols([(1, 0), (3, 1), (17, 6), (99, 35)])
    assert family_solutions((2, -1), 30) == _sols([(1, 1), (7, 5), (41, 29)])
    assert family_solutions((2, 8), 100) == _sols([(4, 2), (20, 14), (116, 82)])


def test_family_solutions_unsupported():
    with pytest.raises(ValueError, match="supported"):
        family_solutions((3, 1), 10)


@pytest.mark.parametrize("eq", list(FAMILY_EQUATIONS))
def test_family_solutions_satisfy_equation(eq):
    d, n = eq
    for sol in family_solutions(eq, 10**12):
        assert sol.x * sol.x - d * sol.y * sol.y == n


@given(st.integers(2, 50).filter(lambda d: math.isqrt(d) ** 2 != d), st.integers(-30, 30))
def test_pell_brute_solutions_valid(d, n):
    sols = pell_brute((d, n), 200)
    assert sols == sorted(sols, key=lambda p: p.y)
    for sol in sols:
        assert sol.x >= 0 and sol.x * sol.x - d * sol.y * sol.y == n
