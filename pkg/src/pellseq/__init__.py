"""Exact theory of the recurrence A_n = 6A_{n-1} - A_{n-2}.

Sequence families T, L, B, C, E, NSW and R; an exponential-polynomial prover
for identities among them; and the reduction of Pell-type seeds to a
constant times T, B, C or L.
"""

from .exact_arith import ALPHA, BETA, DELTA, GAMMA, QuadInt, QuadRat
from .pell import Certificate, Member, NotInFourFamilies, SeedPair, certificate, classify
from .sequences import Family, RecurrenceSpec, family_term, term, term_fast

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "DELTA",
    "GAMMA",
    "Certificate",
    "Family",
    "Member",
    "NotInFourFamilies",
    "QuadInt",
    "QuadRat",
    "RecurrenceSpec",
    "SeedPair",
    "certificate",
    "classify",
    "family_term",
    "term",
    "term_fast",
]
