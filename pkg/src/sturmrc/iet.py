"""Three-interval exchanges, the three-gap harness and the 3-iet criterion."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import InsufficientLength, MissingLetter, MixedRadicands, NoHits, NotTernary, OutOfDomain, RareTerm
from .exact import Number, QuadraticReal, floor_progression
from .morphisms import SIGMA, SIGMA_PRIME, apply
from .rcfact import RCFactorization, _ternary_split, partner_factorization, refine
from .words import SturmianReport, sturmian_prefix_check

__all__ = [
    "IETParams",
    "GapReport",
    "IETReport",
    "iet_step",
    "iet_inverse",
    "iet_word",
    "verify_3iet",
    "three_gap",
    "rc_as_3iet",
]


@dataclass(frozen=True)
class IETParams:
    """Exchange of ``[0, a)``, ``[a, a+b)``, ``[a+b, ell)`` under the permutation (321)."""

    alpha: QuadraticReal
    beta: QuadraticReal
    ell: QuadraticReal
    rho: QuadraticReal

    def __post_init__(self):
        for name in ("alpha", "beta", "ell", "rho"):
            object.__setattr__(self, name, QuadraticReal.coerce(getattr(self, name)))
        if not (self.alpha > 0 and self.beta > 0):
            raise OutOfDomain("alpha and beta must be positive")
        if not self.alpha + self.beta < self.ell:
            raise OutOfDomain("alpha + beta must be smaller than ell")
        if not 0 <= self.rho < self.ell:
            raise OutOfDomain("rho must lie in [0, ell)")
        fields = {getattr(self, k).d for k in ("alpha", "beta", "ell", "rho")} - {0}
        if len(fields) > 1:
            raise MixedRadicands(f"parameters use several radicands {sorted(fields)}; orbits need one field")

    @property
    def translations(self) -> Dict[str, QuadraticReal]:
        a, b, ell = self.alpha, self.beta, self.ell
        return {"a": ell - a, "b": ell - a * 2 - b, "c": -a - b}

    def to_dict(self) -> dict:
        return {k: getattr(self, k).to_text() for k in ("alpha", "beta", "ell", "rho")}


def _letter(p: IETParams, xi: QuadraticReal) -> str:
    if xi < p.alpha:
        return "a"
    if xi < p.alpha + p.beta:
        return "b"
    return "c"


def iet_step(p: IETParams, xi: Number) -> Tuple[QuadraticReal, str]:
    xi = QuadraticReal.coerce(xi)
    if not 0 <= xi < p.ell:
        raise OutOfDomain(f"{xi} is outside [0, {p.ell})")
    x = _letter(p, xi)
    return xi + p.translations[x], x


def iet_inverse(p: IETParams, eta: Number) -> QuadraticReal:
    """Preimage of ``eta`` under the exchange (images are c, b, a from left to right)."""
    eta = QuadraticReal.coerce(eta)
    if not 0 <= eta < p.ell:
        raise OutOfDomain(f"{eta} is outside [0, {p.ell})")
    t = p.translations
    if eta < p.ell - p.alpha - p.beta:
        return eta - t["c"]
    if eta < p.ell - p.alpha:
        return eta - t["b"]
    return eta - t["a"]


def iet_word(p: IETParams, n: int) -> str:
    """Coding of the first ``n`` points of the orbit of ``rho``."""
    xi = p.rho
    t = p.translations
    ab = p.alpha + p.beta
    out = []
    for _ in range(n):
        x = "a" if xi < p.alpha else "b" if xi < ab else "c"
        out.append(x)
        xi = xi + t[x]
    return "".join(out)


@dataclass
class IETReport:
    verdict: str  # PASS | FAIL | INCONCLUSIVE
    sigma: SturmianReport
    sigma_prime: SturmianReport
    letter_counts: Dict[str, int]
    identities: Optional[bool] = None  # rc_as_3iet only
    reasons: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "sigma": self.sigma.to_dict(),
                "sigma_prime": self.sigma_prime.to_dict(),
                "letter_counts": dict(self.letter_counts),
                "identities": self.identities, "reasons": list(self.reasons)}

    @classmethod
    def from_dict(cls, d: dict) -> "IETReport":
        return cls(d["verdict"], SturmianReport.from_dict(d["sigma"]),
                   SturmianReport.from_dict(d["sigma_prime"]), dict(d["letter_counts"]),
                   d["identities"], list(d["reasons"]))


def _combine(*verdicts: str) -> str:
    if "FAIL" in verdicts:
        return "FAIL"
    if all(v == "PASS" for v in verdicts):
        return "PASS"
    return "INCONCLUSIVE"


def default_max_n(length: int) -> int:
    return max(1, min(20, length // 25))


def verify_3iet(u: str, max_n: Optional[int] = None) -> IETReport:
    """Sturmian checks on the images of ``u`` under sigma and sigma'.

    With every letter present, a word on ``{a, b, c}`` is an aperiodic 3-iet
    word exactly when both images are Sturmian; here that is only tested on
    the finite prefix.
    """
    counts = Counter(u)
    missing = [x for x in "abc" if not counts.get(x)]
    if missing:
        raise MissingLetter(f"letters {missing} do not occur")
    s, s2 = apply(SIGMA, u), apply(SIGMA_PRIME, u)
    if max_n is None:
        max_n = default_max_n(len(s))
    r, r2 = sturmian_prefix_check(s, max_n), sturmian_prefix_check(s2, max_n)
    verdict = _combine(r.verdict, r2.verdict)
    reasons = []
    rare = [x for x in "abc" if counts[x] < 2]
    if rare and verdict == "PASS":
        verdict = "INCONCLUSIVE"
        reasons.append(f"letters {rare} occur only once")
    return IETReport(verdict, r, r2, {x: counts[x] for x in "abc"}, reasons=reasons)


@dataclass
class GapReport:
    gap_values: Tuple[int, ...]
    counts: Dict[int, int]
    sum_property: bool  # vacuously true with fewer than three values
    hits: int

    def to_dict(self) -> dict:
        return {"gaps": {str(k): v for k, v in sorted(self.counts.items())},
                "sum_property": self.sum_property, "hits": self.hits}

    @classmethod
    def from_dict(cls, d: dict) -> "GapReport":
        counts = {int(k): v for k, v in d["gaps"].items()}
        return cls(tuple(sorted(counts)), counts, d["sum_property"], d["hits"])


def three_gap(alpha: Number, beta: Number, N: int) -> GapReport:
    """Gaps between successive ``n < N`` with ``{n*alpha} < beta``.

    ``{x} < beta`` iff ``floor(x) - floor(x - beta) == 1``, so the scan is two
    exact floor progressions.
    """
    alpha, beta = QuadraticReal.coerce(alpha), QuadraticReal.coerce(beta)
    if not (alpha.is_irrational and 0 < alpha < 1):
        raise OutOfDomain("alpha must be irrational in (0, 1)")
    if not 0 < beta < QuadraticReal(1, 0, 2):
        raise OutOfDomain("beta must lie in (0, 1/2)")
    if N < 2:
        raise InsufficientLength("N must be at least 2")
    hi = floor_progression(0, alpha, N)
    lo = floor_progression(-beta, alpha, N)
    hits = [n for n in range(N) if hi[n] != lo[n]]
    if len(hits) < 2:
        raise NoHits(f"only {len(hits)} n < {N} with {{n*alpha}} < beta")
    counts = Counter(b - a for a, b in zip(hits, hits[1:]))
    values = tuple(sorted(counts))
    ok = len(values) < 3 or (len(values) == 3 and values[2] == values[0] + values[1])
    return GapReport(values, dict(counts), ok, len(hits))


def rc_as_3iet(f: RCFactorization, max_n: Optional[int] = None) -> IETReport:
    """View a ternary RC factorization as a word on ``{a, b, c}`` and test it.

    ``u -> a``, ``z -> b``, ``v -> c`` where ``z = uv`` is the longest term.
    Also checks that sigma/sigma' of the coding equal the refine-coded words
    of the factorization and of its partner.
    """
    alphabet = f.alphabet
    if len(alphabet) != 3:
        raise NotTernary(f"need three distinct terms, got {len(alphabet)}")
    split = _ternary_split(alphabet)
    if split is None:
        raise NotTernary("longest term is not a concatenation of the other two")
    u, v, z = split
    counts = f.counts
    rare = [x for x in alphabet if counts[x] < 2]
    if rare:
        raise RareTerm(f"terms occurring only once: {rare}")
    code = {u: "a", z: "b", v: "c"}
    dot = "".join(code[x] for x in f.words)
    report = verify_3iet(dot, max_n)
    _, hat = refine(f)
    _, hat2 = refine(partner_factorization(f), u[::-1], v[::-1])
    report.identities = apply(SIGMA, dot) == hat and apply(SIGMA_PRIME, dot) == hat2
    if not report.identities:
        report.verdict = "FAIL"
        report.reasons.append("sigma images differ from the refined codings")
    return report
