from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, count
from typing import Iterable, Optional, Union

from .dsl import Identity, Node, compile_expr, evaluate, parse_identity
from .expoly import ExpPoly, ep_eval


@dataclass(frozen=True)
class Proven:
    proven = True


@dataclass(frozen=True)
class Counterexample:
    n: int
    lhs_value: Fraction
    rhs_value: Fraction
    sides: tuple[int, int] = (0, 1)
    proven = False


ProofOutcome = Union[Proven, Counterexample]


def _witness_order() -> Iterable[int]:
    yield 0
    for k in count(1):
        yield k
        yield -k


def _find_witness(diff: ExpPoly) -> int:
    # A nonzero sum of K terms with distinct bases cannot vanish on K
    # consecutive integers (Vandermonde), so this loop terminates.
    for n in _witness_order():
        if ep_eval(diff, n):
            return n
    raise AssertionError("unreachable")


def prove(identity: Identity | str) -> ProofOutcome:
    """Decide an identity exactly by comparing canonical forms of its sides.

    Every pair of sides in a chain must agree. On failure the smallest
    witness in the order 0, 1, -1, 2, -2, ... is returned.
    """
    if isinstance(identity, str):
        identity = parse_identity(identity)
    polys = [compile_expr(side) for side in identity.sides]
    for i, j in combinations(range(len(polys)), 2):
        diff = polys[i] - polys[j]
        if diff:
            n = _find_witness(diff)
            return Counterexample(
                n,
                ep_eval(polys[i], n).rational_part(),
                ep_eval(polys[j], n).rational_part(),
                (i, j),
            )
    return Proven()


def numeric_sweep(identity: Identity | str, n_lo: int, n_hi: int) -> Optional[Counterexample]:
    """Evaluate every side on ``[n_lo, n_hi]`` from the integer recurrences.

    This path never touches the exponential-polynomial engine; it is the
    independent cross-check for :func:`prove`. Returns the first mismatch.
    """
    if isinstance(identity, str):
        identity = parse_identity(identity)
    for n in range(n_lo, n_hi + 1):
        values = [evaluate(side, n) for side in identity.sides]
        for i, j in combinations(range(len(values)), 2):
            if values[i] != values[j]:
                return Counterexample(n, values[i], values[j], (i, j))
    return None


@dataclass(frozen=True)
class NamedIdentity:
    name: str
    text: str
    group: str

    def parse(self) -> Identity:
        return parse_identity(self.text)

    def sides(self) -> tuple[Node, ...]:
        return self.parse().sides


_CORPUS = (
    NamedIdentity("sq1", "L(n)^2 == L(2n)+2", "hidden squares"),
    NamedIdentity("sq2", "(8T(n))^2 == 2(L(2n)-2)", "hidden squares"),
    NamedIdentity("sq3", "C(n)^2 == L(2n+1)-2", "hidden squares"),
    NamedIdentity("sq4", "E(n)^2 == 2(L(2n+1)+2)", "hidden squares"),
    NamedIdentity("p1", "4(8T(n)^2+1) == L(n)^2", "perfect squares"),
    NamedIdentity("p2", "2C(n)^2+8 == E(n)^2", "perfect squares"),
    NamedIdentity("p3", "4(2B(n)^2-1) == C(n)^2", "perfect squares"),
    NamedIdentity("tsq", "T(n)^2 - 6*T(n)*T(n+1) + T(n+1)^2 == 1", "T invariant"),
    NamedIdentity("i9", "T(2n+1)*B(n-1) == (1+T(2n))*B(n) == (C(3n)+C(n+1))/16",
                  "shift identities"),
    NamedIdentity("i10", "T(2n)*L(n-1) == (1+T(2n-1))*L(n) == T(3n-1)+T(n+1)",
                  "shift identities"),
    NamedIdentity("i13", "(T(2n)-1)*C(n) == T(2n+1)*C(n-1) == (B(3n)-B(n+1))/2",
                  "shift identities"),
    NamedIdentity("i14", "(T(2n+1)-1)*T(n+1) == T(n)*T(2n+2) == (L(3n+2)-L(n+2))/32",
                  "shift identities"),
    NamedIdentity("rel1", "B(n) == T(n+1)-T(n)", "family relations"),
    NamedIdentity("rel2", "E(n) == 4B(n)", "family relations"),
    NamedIdentity("rel3", "C(n) == 2(T(n+1)+T(n))", "family relations"),
    NamedIdentity("rel4", "2C(n) == L(n+1)-L(n)", "family relations"),
    NamedIdentity("rel5", "2E(n) == L(n+1)+L(n)", "family relations"),
)


def corpus() -> list[NamedIdentity]:
    return list(_CORPUS)


def corpus_entry(name: str) -> NamedIdentity:
    for entry in _CORPUS:
        if entry.name == name:
            return entry
    raise KeyError(name)
