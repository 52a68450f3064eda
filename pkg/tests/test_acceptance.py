"""Exit criteria. Every check is exact; runtimes are wall-clock ceilings.

Run ``pytest tests/test_acceptance.py -v`` and look for the
"acceptance criteria" section at the end of the report.
"""

import io
import json
import random
import time
from fractions import Fraction

import pytest

from pellseq.cli import main
from pellseq.pell import (
    FAMILY_EQUATIONS,
    Member,
    certificate,
    classify,
    family_solutions,
    fundamental_check,
    pell_brute,
    telescope_check,
)
from pellseq.sequences import (
    FAMILY_SPECS,
    PREFIX_TABLES,
    Family,
    RecurrenceSpec,
    cross_relations_check,
    family_term,
    term,
    term_fast,
)
from pellseq.symbolic import corpus, numeric_sweep

pytestmark = pytest.mark.acceptance

CORPUS_NAMES = ["sq1", "sq2", "sq3", "sq4", "p1", "p2", "p3", "tsq",
                "i9", "i10", "i13", "i14", "rel1", "rel2", "rel3", "rel4", "rel5"]


def test_ac1_corpus_proof():
    start = time.perf_counter()
    out = io.StringIO()
    code = main(["--format", "json-lines", "prove", "--all"], out=out)
    records = [json.loads(line) for line in out.getvalue().splitlines()]
    assert code == 0
    assert [r["name"] for r in records] == CORPUS_NAMES
    assert all(r["outcome"] == "proven" for r in records)
    for entry in corpus():
        assert numeric_sweep(entry.text, -20, 50) is None, entry.name
    assert time.perf_counter() - start < 5.0


def test_ac2_family_prefixes():
    for family in Family:
        generated = tuple(family_term(family, n) for n in range(10))
        assert generated == PREFIX_TABLES[family], family
    assert PREFIX_TABLES[Family.T][:2] == (0, 1)
    assert PREFIX_TABLES[Family.B][:2] == (1, 5)
    assert PREFIX_TABLES[Family.C][:2] == (2, 14)
    assert PREFIX_TABLES[Family.E][:2] == (4, 20)
    report = cross_relations_check(range(-10, 31))
    assert report.ok, report.failure


@pytest.mark.parametrize("seed,expected", [
    ((1, 1), Member(Family.B, -1, Fraction(1))),
    ((1, -1), Member(Family.C, -1, Fraction(-1, 2))),
    ((1, 0), Member(Family.T, -1, Fraction(-1))),
    ((3, 1), Member(Family.L, -1, Fraction(1, 2))),
])
def test_ac3_elementary_classifications(seed, expected):
    assert classify(seed) == expected


def test_ac4_classification_round_trip():
    start = time.perf_counter()
    checked = 0
    for family in (Family.T, Family.B, Family.C, Family.L):
        for j in range(-15, 16):
            f0, f1 = family_term(family, j), family_term(family, j + 1)
            for mu in map(Fraction, (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))):
                r, s = mu * f0, mu * f1
                if r.denominator != 1 or s.denominator != 1:
                    continue
                got = classify((int(r), int(s)))
                assert got == Member(family, j, mu), (family, j, mu, got)
                checked += 1
    assert checked >= 4 * 31 * 4
    assert time.perf_counter() - start < 10.0


def test_ac5_certificate_classification_equivalence():
    start = time.perf_counter()
    rng = random.Random(5)
    findings = []
    certified = 0
    for r in range(-60, 61):
        for s in range(-60, 61):
            if r == 0 and s == 0:
                continue
            member = classify((r, s)).is_member
            cert = certificate((r, s), 10, 10)
            if member != (cert is not None):
                findings.append(f"seed ({r}, {s}): member={member} certificate={cert}")
                continue
            if cert is not None:
                certified += 1
                for n in (rng.randint(11, 200) for _ in range(20)):
                    if not cert.holds_at((r, s), n):
                        findings.append(f"seed ({r}, {s}): {cert} fails at n={n}")
    assert findings == [], "\n".join(findings)
    assert certified > 0
    assert time.perf_counter() - start < 60.0


def test_ac6_fundamental_and_telescoping():
    start = time.perf_counter()
    rng = random.Random(6)
    seeds = []
    while len(seeds) < 1000:
        seed = (rng.randint(-100, 100), rng.randint(-100, 100))
        if seed != (0, 0):
            seeds.append(seed)
    for seed in seeds:
        for n in range(1, 41):
            assert fundamental_check(seed, n).equal, (seed, n)
            for m in range(-2, 7):
                assert telescope_check(seed, m, n).equal, (seed, m, n)
    assert time.perf_counter() - start < 30.0


@pytest.mark.parametrize("eq", [(8, 1), (2, -1), (2, 8), (32, 4)])
def test_ac7_pell_oracle_completeness(eq):
    assert eq in FAMILY_EQUATIONS
    start = time.perf_counter()
    brute = pell_brute(eq, 10**5)
    assert brute == family_solutions(eq, 10**5)
    assert brute
    assert time.perf_counter() - start < 30.0


def test_ac8_term_fast_performance():
    specs = [FAMILY_SPECS[Family.T], FAMILY_SPECS[Family.C], RecurrenceSpec.pell(17, -40)]
    for spec in specs:
        for n in (10**4, -10**4):
            start = time.perf_counter()
            value = term_fast(spec, n)
            assert time.perf_counter() - start < 0.050
            assert value == term(spec, n)
    rng = random.Random(8)
    for _ in range(20):
        spec = rng.choice(specs)
        n = rng.choice((1, -1)) * rng.randint(5000, 10**4)
        assert term_fast(spec, n) == term(spec, n)
