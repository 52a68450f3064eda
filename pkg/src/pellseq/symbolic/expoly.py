"""Exponential polynomials ``n ↦ Σ c_k γ^{k n}`` with coefficients in Q(√2).

Distinct slopes give multiplicatively independent bases γ^k, so two
exponential polynomials are equal as functions of n exactly when their slope
maps are equal. That makes the slope map a canonical form.
"""

from __future__ import annotations

from typing import Iterator, Mapping, Union

from ..exact_arith import GAMMA, ONE, QuadRat, RationalLike, qr_pow
from ..sequences import Family, closed_form_coeffs, family_spec

Scalar = Union[QuadRat, RationalLike]


class ExpPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None) -> None:
        cleaned: dict[int, QuadRat] = {}
        for k, c in (terms or {}).items():
            c = QuadRat.coerce(c)
            if c:
                cleaned[int(k)] = c
        self._terms = dict(sorted(cleaned.items()))

    @classmethod
    def constant(cls, c: Scalar) -> ExpPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, QuadRat]:
        return dict(self._terms)

    def slopes(self) -> list[int]:
        return list(self._terms)

    def __iter__(self) -> Iterator[tuple[int, QuadRat]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {c}" for k, c in self._terms.items())
        return f"ExpPoly({{{inner}}})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExpPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __neg__(self) -> ExpPoly:
        return ExpPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other: ExpPoly | Scalar) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            other = ExpPoly.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return ExpPoly(out)

    __radd__ = __add__

    def __sub__(self, other: ExpPoly | Scalar) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            other = ExpPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> ExpPoly:
        return ExpPoly.constant(other) - self

    def __mul__(self, other: ExpPoly | Scalar) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            return self.scale(other)
        out: dict[int, QuadRat] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return ExpPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ExpPoly:
        if e < 0:
            raise ValueError("only nonnegative powers of an ExpPoly are defined")
        result = ExpPoly.constant(ONE)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> ExpPoly:
        c = QuadRat.coerce(c)
        return ExpPoly({k: v * c for k, v in self._terms.items()})

    def __call__(self, n: int) -> QuadRat:
        return ep_eval(self, n)


def ep_add(x: ExpPoly, y: ExpPoly | Scalar) -> ExpPoly:
    return x + y


def ep_mul(x: ExpPoly, y: ExpPoly | Scalar) -> ExpPoly:
    return x * y


def ep_scale(x: ExpPoly, c: Scalar) -> ExpPoly:
    return x.scale(c)


def ep_eval(x: ExpPoly, n: int) -> QuadRat:
    total = QuadRat(0)
    for k, c in x:
        total = total + c * qr_pow(GAMMA, k * n)
    return total


SYMBOLIC_FAMILIES = (Family.T, Family.L, Family.B, Family.C, Family.E)


def from_family(family: Family | str, a: int, b: int) -> ExpPoly:
    """The exponential polynomial of ``n ↦ F(a n + b)``.

    With ``F_m = c1 α^m + c2 β^m`` and α = γ², β = γ⁻², the term at index
    ``a n + b`` is ``c1 γ^{2b} · γ^{2a n} + c2 γ^{-2b} · γ^{-2a n}``. The
    constant offsets fold into the coefficients and the slopes are ±2a.
    """
    family = Family(family)
    if family not in SYMBOLIC_FAMILIES:
        raise ValueError(f"family {family} has no exponential form over powers of γ²")
    spec = family_spec(family)
    cf = closed_form_coeffs(spec.seed0, spec.seed1)
    pos = cf.c1 * qr_pow(GAMMA, 2 * b)
    neg = cf.c2 * qr_pow(GAMMA, -2 * b)
    return ExpPoly({2 * a: pos}) + ExpPoly({-2 * a: neg})
