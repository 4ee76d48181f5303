"""Finite binary words and exact prefixes of mechanical words.

Infinite words are always handled through an explicit finite prefix plus
the data that generated it.  Letter ``n`` of the lower mechanical word of
slope ``alpha`` and intercept ``rho`` is
``floor((n+1)*alpha + rho) - floor(n*alpha + rho)``; the upper word uses
ceilings instead.  Both are computed with :func:`floor_progression`, which
is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Tuple, Union

from .errors import (
    InsufficientLength,
    InvalidSpec,
    NotPalindromicPrefix,
    RationalSlope,
    SturmrcError,
)
from .exact import Number, QuadraticReal, floor_progression

__all__ = [
    "BinaryWord",
    "MechanicalSpec",
    "SturmianReport",
    "as_word",
    "mechanical_prefix",
    "characteristic_prefix",
    "singular_prefix",
    "is_balanced",
    "factor_complexity",
    "sturmian_prefix_check",
    "reversal",
    "is_palindrome",
    "smallest_period",
]

KINDS = ("lower", "upper")
SINGULAR_VARIANTS = ("zero-one", "one-zero", "plain-zero", "plain-one")


class BinaryWord(str):
    """A finite word over ``{0, 1}``.

    A ``str`` subclass, so slicing, hashing, ``find`` and comparison with
    plain strings all behave as expected.  Concatenation and slicing return
    :class:`BinaryWord` again.
    """

    def __new__(cls, letters: Union[str, Iterable[int]] = ""):
        if not isinstance(letters, str):
            letters = "".join("1" if x else "0" for x in letters)
        if letters.strip("01"):
            raise SturmrcError(f"not a binary word: {letters[:40]!r}")
        return super().__new__(cls, letters)

    @cached_property
    def parikh(self) -> Tuple[int, int]:
        ones = self.count("1")
        return (len(self) - ones, ones)

    @property
    def ones(self) -> int:
        return self.parikh[1]

    @property
    def zeros(self) -> int:
        return self.parikh[0]

    def __getitem__(self, key):
        return BinaryWord(str.__getitem__(self, key))

    def __add__(self, other: str) -> "BinaryWord":
        return BinaryWord(str.__add__(self, other))

    def __radd__(self, other: str) -> "BinaryWord":
        return BinaryWord(str.__add__(other, self))

    def __mul__(self, n: int) -> "BinaryWord":
        return BinaryWord(str.__mul__(self, n))

    def __repr__(self) -> str:
        return f"BinaryWord({str.__repr__(self)})"

    def reversed(self) -> "BinaryWord":
        return BinaryWord(str.__getitem__(self, slice(None, None, -1)))


def as_word(w: Union[str, Iterable[int]]) -> BinaryWord:
    return w if isinstance(w, BinaryWord) else BinaryWord(w)


def reversal(w: str) -> BinaryWord:
    return as_word(w).reversed()


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


@dataclass(frozen=True)
class MechanicalSpec:
    slope: QuadraticReal
    intercept: QuadraticReal
    kind: str = "lower"

    def __post_init__(self):
        object.__setattr__(self, "slope", QuadraticReal.coerce(self.slope))
        object.__setattr__(self, "intercept", QuadraticReal.coerce(self.intercept))
        if self.kind not in KINDS:
            raise InvalidSpec(f"kind must be 'lower' or 'upper', got {self.kind!r}")
        if not 0 < self.slope < 1:
            raise InvalidSpec(f"slope must lie in (0, 1), got {self.slope}")
        if not 0 <= self.intercept < 1:
            raise InvalidSpec(f"intercept must lie in [0, 1), got {self.intercept}")

    def to_dict(self) -> dict:
        return {"slope": self.slope.to_text(), "intercept": self.intercept.to_text(),
                "kind": self.kind}


def _mechanical_letters(slope: Number, intercept: Number, kind: str, n: int) -> str:
    # no irrationality check: rational slopes are needed for Christoffel words
    if n <= 0:
        return ""
    if kind == "lower":
        fl = floor_progression(intercept, slope, n + 1)
        return "".join("01"[fl[k + 1] - fl[k]] for k in range(n))
    if kind == "upper":
        # ceil(x) = -floor(-x)
        g = floor_progression(-QuadraticReal.coerce(intercept),
                              -QuadraticReal.coerce(slope), n + 1)
        return "".join("01"[g[k] - g[k + 1]] for k in range(n))
    raise InvalidSpec(f"unknown kind {kind!r}")


def mechanical_prefix(spec: MechanicalSpec, n: int) -> BinaryWord:
    """First ``n`` letters of the lower or upper mechanical word of ``spec``.

    Raises :class:`RationalSlope` for rational slopes; periodic words are
    handled by :func:`sturmrc.christoffel.christoffel_of_slope`.
    """
    if n < 0:
        raise InvalidSpec("length must be non-negative")
    if not spec.slope.is_irrational:
        raise RationalSlope(
            f"slope {spec.slope} is rational; use christoffel_of_slope for periodic words")
    return BinaryWord(_mechanical_letters(spec.slope, spec.intercept, spec.kind, n))


def characteristic_prefix(slope: QuadraticReal, n: int) -> BinaryWord:
    slope = QuadraticReal.coerce(slope)
    lower = mechanical_prefix(MechanicalSpec(slope, slope, "lower"), n)
    upper = mechanical_prefix(MechanicalSpec(slope, slope, "upper"), n)
    assert lower == upper, "lower and upper characteristic words disagree"
    return lower


def singular_prefix(slope: QuadraticReal, palindromic_prefix_length: int,
                    variant: str, n: int) -> BinaryWord:
    """Prefix of length ``n`` of ``p~01c``, ``p~10c``, ``0c`` or ``1c``.

    ``p`` is the prefix of the characteristic word ``c`` of the given length;
    it must be a palindrome (so ``p~ = p``).  The plain variants ignore it.
    """
    if variant not in SINGULAR_VARIANTS:
        raise InvalidSpec(f"unknown singular variant {variant!r}")
    if variant in ("plain-zero", "plain-one"):
        c = characteristic_prefix(slope, max(n - 1, 0))
        head = "0" if variant == "plain-zero" else "1"
        return BinaryWord((head + c)[:n])
    k = palindromic_prefix_length
    if k < 0:
        raise InvalidSpec("palindromic prefix length must be non-negative")
    c = characteristic_prefix(slope, max(n, k))
    p = c[:k]
    if not is_palindrome(p):
        raise NotPalindromicPrefix(f"prefix {p!r} of the characteristic word is not a palindrome")
    mid = "01" if variant == "zero-one" else "10"
    return BinaryWord((p + mid + c)[:n])


def is_balanced(w: str, max_factor_len: int) -> Tuple[bool, Optional[Tuple[str, str]]]:
    """Check the balance property for factor lengths ``1..max_factor_len``.

    Returns ``(True, None)`` or ``(False, (light, heavy))`` where the two
    witness factors have equal length and 1-counts differing by at least 2.
    """
    w = str(w)
    prefix = [0]
    for ch in w:
        prefix.append(prefix[-1] + (ch == "1"))
    n = len(w)
    for m in range(1, min(max_factor_len, n) + 1):
        counts = [prefix[i + m] - prefix[i] for i in range(n - m + 1)]
        lo, hi = min(counts), max(counts)
        if hi - lo > 1:
            i, j = counts.index(lo), counts.index(hi)
            return False, (w[i:i + m], w[j:j + m])
    return True, None


def factor_complexity(w: str, n: int) -> int:
    """Number of distinct factors of length ``n``."""
    w = str(w)
    if n > len(w):
        raise InsufficientLength(f"factor length {n} exceeds word length {len(w)}")
    return len({w[i:i + n] for i in range(len(w) - n + 1)})


def smallest_period(w: str) -> int:
    """Smallest ``q >= 1`` with ``w[i] == w[i+q]`` for all valid ``i``."""
    w = str(w)
    n = len(w)
    if n == 0:
        return 0
    # failure function of the KMP automaton; period = n - longest border
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


@dataclass
class SturmianReport:
    verdict: str  # PASS | FAIL | INCONCLUSIVE
    max_n: int
    length: int
    complexity: List[int] = field(default_factory=list)
    balanced: bool = True
    witness: Optional[Tuple[str, str]] = None
    failed_at: Optional[int] = None
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "max_n": self.max_n, "length": self.length,
                "complexity": list(self.complexity), "balanced": self.balanced,
                "witness": list(self.witness) if self.witness else None,
                "failed_at": self.failed_at, "reason": self.reason}

    @classmethod
    def from_dict(cls, d: dict) -> "SturmianReport":
        d = dict(d)
        if d.get("witness"):
            d["witness"] = tuple(d["witness"])
        return cls(**d)


MIN_LENGTH_FACTOR = 10


def sturmian_prefix_check(w: str, max_n: int) -> SturmianReport:
    """Necessary-condition test for Sturmianity on a finite prefix.

    FAIL is definitive when some ``complexity(n) > n + 1`` or the balance
    property breaks.  A complexity deficit (``complexity(n) < n + 1``) is
    reported as FAIL only if the whole prefix has an exact period no larger
    than ``max_n``, i.e. it already looks periodic; otherwise the prefix is
    simply too short and the verdict is INCONCLUSIVE.
    """
    w = str(w)
    if max_n < 0:
        raise InvalidSpec("max_n must be non-negative")
    if len(w) < MIN_LENGTH_FACTOR * max_n:
        raise InsufficientLength(
            f"need at least {MIN_LENGTH_FACTOR * max_n} letters for max_n={max_n}, got {len(w)}")
    report = SturmianReport("PASS", max_n, len(w))
    ok, witness = is_balanced(w, max_n)
    if not ok:
        report.balanced, report.witness = False, witness
        report.verdict = "FAIL"
        report.reason = f"unbalanced factors {witness[0]!r} and {witness[1]!r}"
    deficit_at = None
    for n in range(max_n + 1):
        p = factor_complexity(w, n)
        report.complexity.append(p)
        if p > n + 1 and report.failed_at is None:
            report.failed_at = n
            report.verdict = "FAIL"
            report.reason = report.reason or f"complexity({n}) = {p} > {n + 1}"
        elif p < n + 1 and deficit_at is None:
            deficit_at = n
    if report.verdict == "PASS" and deficit_at is not None:
        p = report.complexity[deficit_at]
        period = smallest_period(w)
        if period <= max_n and 2 * period <= len(w):
            report.verdict = "FAIL"
            report.failed_at = deficit_at
            report.reason = f"complexity({deficit_at}) = {p} with exact period {period}"
        else:
            report.verdict = "INCONCLUSIVE"
            report.failed_at = deficit_at
            report.reason = f"complexity({deficit_at}) = {p} < {deficit_at + 1}; prefix too short"
    return report
