"""Reversible Christoffel (RC) factorizations obtained by Abelian comparison.

Two same-length prefixes ``w`` and ``w2`` are cut at every length ``i`` where
``w[:i]`` and ``w2[:i]`` hold the same number of 1s.  The segments of ``w``
between consecutive cuts are the terms; the corresponding segments of ``w2``
must be their reversals, and all terms are Christoffel words.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .christoffel import ChristoffelWord, _classify, classify_christoffel, is_christoffel
from .errors import (
    AbelianIncomparable,
    FirstTermIsV,
    KindMismatch,
    NoAdjacentPair,
    NotChristoffel,
    NotTernary,
    ReversalMismatch,
    SturmrcError,
)
from .exact import QuadraticReal, parse_number
from .words import MechanicalSpec, mechanical_prefix

__all__ = [
    "RCFactorization",
    "TheoremMainReport",
    "abelian_cuts",
    "abelian_compare",
    "compare_specs",
    "factorization_from_terms",
    "verify_theorem_main",
    "reconstruct_partner",
    "partner_factorization",
    "refine",
    "coarsen",
    "proximality_check",
    "rc_sweep",
    "SweepResult",
]

MIN_OCCURRENCES = 3


@dataclass
class RCFactorization:
    terms: Tuple[ChristoffelWord, ...]
    kind: str  # all-lower | all-upper | letters-only
    truncated: bool = False
    source_specs: Optional[Tuple[MechanicalSpec, MechanicalSpec]] = None
    beta: Optional[QuadraticReal] = None
    partner_source: Optional[str] = None  # the compared second word, if any

    @property
    def words(self) -> Tuple[str, ...]:
        return tuple(str(t) for t in self.terms)

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tuple(sorted(set(self.words), key=lambda s: (len(s), s)))

    @property
    def counts(self) -> Dict[str, int]:
        return dict(Counter(self.words))

    def word(self) -> str:
        return "".join(self.words)

    def __len__(self) -> int:
        return len(self.terms)

    def to_dict(self) -> dict:
        d = {"terms": list(self.words), "alphabet": list(self.alphabet),
             "kind": self.kind.replace("all-", ""), "truncated": self.truncated}
        if self.beta is not None:
            d["beta"] = self.beta.to_text()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RCFactorization":
        f = factorization_from_terms(d["terms"], d["truncated"])
        if f.kind.replace("all-", "") != d["kind"]:
            raise KindMismatch(f"stored kind {d['kind']!r} does not match the terms")
        if d.get("beta"):
            f.beta = parse_number(d["beta"])
        return f


def _kind_of(terms: Sequence[ChristoffelWord]) -> str:
    kinds = {t.kind for t in terms} - {"letter"}
    if len(kinds) > 1:
        raise KindMismatch("terms mix lower and upper Christoffel words")
    if not kinds:
        return "letters-only"
    return "all-" + kinds.pop()


def factorization_from_terms(words: Sequence[str], truncated: bool = False) -> RCFactorization:
    """Build a factorization from explicit terms, classifying each one."""
    terms = []
    for x in words:
        c = _classify(str(x))
        if c is None:
            raise NotChristoffel(f"term {str(x)!r} is not a Christoffel word")
        terms.append(c)
    return RCFactorization(tuple(terms), _kind_of(terms), truncated)


def abelian_cuts(w: str, w2: str) -> List[int]:
    """All ``i > 0`` where the length-``i`` prefixes have equal Parikh vectors."""
    diff = 0
    cuts = []
    for i, (x, y) in enumerate(zip(w, w2), 1):
        diff += (x == "1") - (y == "1")
        if diff == 0:
            cuts.append(i)
    return cuts


def abelian_compare(w: str, w2: str) -> RCFactorization:
    """Abelian comparison of two equal-length prefixes of same-language Sturmian words."""
    w, w2 = str(w), str(w2)
    if len(w) != len(w2):
        raise SturmrcError(f"prefix lengths differ: {len(w)} != {len(w2)}")
    cuts = abelian_cuts(w, w2)
    if w and not cuts:
        raise AbelianIncomparable(
            f"no Abelian equivalent nonempty prefixes within {len(w)} letters "
            "(suspected {0c, 1c} pair)")
    terms = []
    prev = 0
    for i in cuts:
        seg, seg2 = w[prev:i], w2[prev:i]
        if seg2 != seg[::-1]:
            raise ReversalMismatch(
                f"segment at {prev}: {seg[:30]!r} vs {seg2[:30]!r} are not mutual reversals")
        c = _classify(seg)
        if c is None:
            raise NotChristoffel(f"segment at {prev} ({seg[:30]!r}) is not a Christoffel word")
        terms.append(c)
        prev = i
    return RCFactorization(tuple(terms), _kind_of(terms), truncated=prev < len(w),
                           partner_source=w2[:prev])


def compare_specs(spec1: MechanicalSpec, spec2: MechanicalSpec, n: int) -> RCFactorization:
    w = mechanical_prefix(spec1, n)
    w2 = mechanical_prefix(spec2, n)
    f = abelian_compare(w, w2)
    f.source_specs = (spec1, spec2)
    f.beta = (spec2.intercept - spec1.intercept).fract()
    return f


def reconstruct_partner(f: RCFactorization) -> str:
    return "".join(w[::-1] for w in f.words)


def partner_factorization(f: RCFactorization) -> RCFactorization:
    """The RC factorization of the partner word, with all terms reversed."""
    return factorization_from_terms([w[::-1] for w in f.words], f.truncated)


@dataclass
class TheoremMainReport:
    alphabet_size: int
    alphabet: Tuple[str, ...]
    counts: Dict[str, int]
    longest_is_concatenation: Optional[bool]
    concat: Optional[str]  # e.g. "001=0*01"
    split: Optional[Tuple[str, str]]  # (u, v) with z = u·v
    reversal_ok: bool
    kind: str
    status: str  # PASS | FAIL | INCONCLUSIVE
    reasons: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"size": self.alphabet_size, "alphabet": list(self.alphabet),
                "counts": dict(self.counts),
                "longest_is_concatenation": self.longest_is_concatenation,
                "concat": self.concat, "split": list(self.split) if self.split else None,
                "reversal_ok": self.reversal_ok, "kind": self.kind,
                "status": self.status, "reasons": list(self.reasons)}

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremMainReport":
        return cls(d["size"], tuple(d["alphabet"]), dict(d["counts"]),
                   d["longest_is_concatenation"], d["concat"],
                   tuple(d["split"]) if d["split"] else None, d["reversal_ok"],
                   d["kind"], d["status"], list(d["reasons"]))


def _ternary_split(alphabet: Sequence[str]) -> Optional[Tuple[str, str, str]]:
    """For three terms return ``(u, v, z)`` with the longest ``z == u + v``."""
    z = max(alphabet, key=len)
    x, y = [a for a in alphabet if a != z]
    if z == x + y:
        return x, y, z
    if z == y + x:
        return y, x, z
    return None


def verify_theorem_main(f: RCFactorization) -> TheoremMainReport:
    """Check the term set of ``f``: two or three distinct terms, longest = concatenation.

    Size claims are INCONCLUSIVE unless every term occurs at least three
    times; more than three terms, a bad concatenation, a reversal mismatch or
    mixed kinds are definite failures.
    """
    alphabet = f.alphabet
    counts = f.counts
    reasons = []
    status = "PASS"

    reversal_ok = True
    if f.partner_source is not None:
        partner = reconstruct_partner(f)
        reversal_ok = f.partner_source[:len(partner)] == partner
    if not reversal_ok:
        status = "FAIL"
        reasons.append("partner segments are not reversals of the terms")

    try:
        kind = _kind_of(f.terms)
    except KindMismatch:
        kind = "mixed"
        status = "FAIL"
        reasons.append("terms mix lower and upper Christoffel words")

    concat_ok = None
    concat = split = None
    size = len(alphabet)
    if size > 3:
        status = "FAIL"
        reasons.append(f"{size} distinct terms")
    elif size == 3:
        s = _ternary_split(alphabet)
        concat_ok = s is not None
        if s:
            u, v, z = s
            split = (u, v)
            concat = f"{z}={u}*{v}"
        else:
            status = "FAIL"
            reasons.append("longest term is not a concatenation of the other two")
    if status != "FAIL":
        rare = [a for a in alphabet if counts[a] < MIN_OCCURRENCES]
        if size < 2:
            status = "INCONCLUSIVE"
            reasons.append("fewer than two distinct terms seen")
        elif rare:
            status = "INCONCLUSIVE"
            reasons.append(f"terms seen fewer than {MIN_OCCURRENCES} times: {rare}")
    return TheoremMainReport(size, alphabet, counts, concat_ok, concat, split,
                             reversal_ok, kind, status, reasons)


def refine(f: RCFactorization, u: Optional[str] = None,
           v: Optional[str] = None) -> Tuple[RCFactorization, str]:
    """Replace every occurrence of the longest term ``z`` by its two parts.

    The coded word uses ``0`` for ``u`` and ``1`` for ``v``.  By default
    ``(u, v)`` is the order with ``z == u + v``; passing them explicitly only
    changes the coding (``z`` may then equal ``v + u``), which is what the
    partner factorization needs.
    """
    alphabet = f.alphabet
    if len(alphabet) != 3:
        raise NotTernary(f"refine needs three distinct terms, got {len(alphabet)}")
    s = _ternary_split(alphabet)
    if s is None:
        raise NotTernary("longest term is not a concatenation of the other two")
    a, b, z = s
    if u is None or v is None:
        u, v = a, b
    elif {u, v} != {a, b}:
        raise SturmrcError(f"{u!r}, {v!r} are not the parts of {z!r}")
    out: List[str] = []
    for x in f.words:
        if x == z:
            out += [a, b]
        else:
            out.append(x)
    code = {u: "0", v: "1"}
    g = factorization_from_terms(out, f.truncated)
    return g, "".join(code[x] for x in out)


def _coarsen_pair(f: RCFactorization) -> Tuple[str, str]:
    alphabet = f.alphabet
    if len(alphabet) == 3:
        s = _ternary_split(alphabet)
        if s is None:
            raise NotTernary("longest term is not a concatenation of the other two")
        return s[0], s[1]
    if len(alphabet) != 2:
        raise SturmrcError(f"coarsen needs two or three distinct terms, got {len(alphabet)}")
    x, y = alphabet
    want = {"all-lower": "lower", "all-upper": "upper"}.get(f.kind, "lower")
    if is_christoffel(x + y, want) and classify_christoffel(x + y).kind == want:
        return x, y
    if is_christoffel(y + x, want) and classify_christoffel(y + x).kind == want:
        return y, x
    raise NoAdjacentPair(f"neither {x + y!r} nor {y + x!r} is a Christoffel word")


def coarsen(f: RCFactorization, u: Optional[str] = None,
            v: Optional[str] = None) -> Tuple[RCFactorization, str]:
    """Merge each adjacent pair ``u, v`` into ``z = uv`` (greedy, left to right).

    The result lives over ``{z, u}`` or ``{z, v}``; the coded word uses ``0``
    for ``z`` and ``1`` for the other term.  The terms always concatenate to
    the input word.  A final unmerged ``u`` whose ``v`` may lie past the
    truncation boundary stays in the terms but is left out of the coded word.
    """
    if u is None or v is None:
        u, v = _coarsen_pair(f)
    z = u + v
    words = f.words
    if words and words[0] == v:
        raise FirstTermIsV(f"first term equals v = {v!r}")
    out: List[str] = []
    merged = 0
    i = 0
    while i < len(words):
        if words[i] == u and i + 1 < len(words) and words[i + 1] == v:
            out.append(z)
            merged += 1
            i += 2
        else:
            out.append(words[i])
            i += 1
    if not merged:
        raise NoAdjacentPair(f"{u!r} is never followed by {v!r}")
    coded_terms = out
    if out[-1] == u and u != z:
        coded_terms = out[:-1]
    leftover = set(coded_terms) - {z}
    if len(leftover) > 1:
        raise SturmrcError(f"coarsening left both {u!r} and {v!r} in place")
    g = factorization_from_terms(out, f.truncated)
    return g, "".join("0" if x == z else "1" for x in coded_terms)


def proximality_check(w: str, w2: str, min_tail: Optional[int] = None) -> Optional[int]:
    """Smallest ``i`` with ``w[i:] == w2[i:]``.

    ``None`` when the agreeing tail is shorter than ``min_tail`` (default:
    half the length), i.e. the words still disagree too close to the end of
    the prefix to call them proximal.
    """
    w, w2 = str(w), str(w2)
    if len(w) != len(w2):
        raise SturmrcError("proximality check needs equal lengths")
    n = len(w)
    if min_tail is None:
        min_tail = n // 2
    last = -1
    for i in range(n - 1, -1, -1):
        if w[i] != w2[i]:
            last = i
            break
    agree_from = last + 1
    if last >= 0 and n - agree_from < min_tail:
        return None
    return agree_from


@dataclass
class SweepResult:
    reports: List[Optional[TheoremMainReport]]
    factorizations: List[Optional[RCFactorization]]
    errors: List[Optional[str]]

    @property
    def counts(self) -> Dict[str, int]:
        c = Counter(r.status if r else "ERROR" for r in self.reports)
        return {k: c.get(k, 0) for k in ("PASS", "FAIL", "INCONCLUSIVE", "ERROR")}


def _as_spec(slope: QuadraticReal, item) -> MechanicalSpec:
    if isinstance(item, MechanicalSpec):
        return item
    if isinstance(item, tuple):
        return MechanicalSpec(slope, item[0], item[1])
    return MechanicalSpec(slope, item, "lower")


def rc_sweep(slope: QuadraticReal, intercept_pairs: Sequence, prefix_len: int) -> SweepResult:
    """Run compare + verify for each intercept pair; per-item errors are collected.

    A pair item is ``(rho, rho2)`` where each side is an intercept (lower
    kind), an ``(intercept, kind)`` tuple or a :class:`MechanicalSpec`.
    """
    result = SweepResult([], [], [])
    for r1, r2 in intercept_pairs:
        try:
            f = compare_specs(_as_spec(slope, r1), _as_spec(slope, r2), prefix_len)
            result.factorizations.append(f)
            result.reports.append(verify_theorem_main(f))
            result.errors.append(None)
        except SturmrcError as exc:
            result.factorizations.append(None)
            result.reports.append(None)
            result.errors.append(f"{type(exc).__name__}: {exc}")
    return result
