"""Central words, Christoffel words and the Christoffel tree."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from .errors import NotChristoffel, NotComposable, NotCoprime, TrivialWord
from .words import BinaryWord, _mechanical_letters, as_word, is_palindrome

__all__ = [
    "ChristoffelWord",
    "ChristoffelPair",
    "TreeNode",
    "MixReport",
    "central_split",
    "is_central",
    "classify_christoffel",
    "is_christoffel",
    "christoffel_of_slope",
    "christoffel_tree",
    "iter_tree",
    "standard_factorization",
    "christoffel_mix",
]


@dataclass(frozen=True)
class ChristoffelWord:
    word: BinaryWord
    kind: str  # lower | upper | letter
    slope: Tuple[int, int]  # (ones, zeros), coprime

    def __str__(self) -> str:
        return str(self.word)

    def __len__(self) -> int:
        return len(self.word)

    @property
    def slope_fraction(self) -> Fraction:
        ones, zeros = self.slope
        return Fraction(ones, ones + zeros)


def central_split(u: str) -> Optional[Tuple[str, str]]:
    """Find palindromes ``p, q`` with ``u == p+'01'+q == q+'10'+p``.

    Returns ``None`` when no such split exists.  All split positions are
    tried, which is quadratic but fine for the word sizes used here.
    """
    u = str(u)
    i = u.find("01")
    while i != -1:
        p, q = u[:i], u[i + 2:]
        if u == q + "10" + p and is_palindrome(p) and is_palindrome(q):
            return p, q
        i = u.find("01", i + 1)
    return None


@lru_cache(maxsize=65536)
def _is_central(u: str) -> bool:
    if not is_palindrome(u):
        return False
    if u.count("0") in (0, len(u)):
        return True
    return central_split(u) is not None


def is_central(u: str) -> bool:
    """A palindrome in ``0* | 1*``, or of the form ``p01q = q10p``."""
    return _is_central(str(u))


@lru_cache(maxsize=65536)
def _classify(w: str) -> Optional[ChristoffelWord]:
    n = len(w)
    if n == 0:
        return None
    if n == 1:
        return ChristoffelWord(BinaryWord(w), "letter", (1, 0) if w == "1" else (0, 1))
    if w[0] == w[-1] or not _is_central(w[1:-1]):
        return None
    ones = w.count("1")
    zeros = n - ones
    # central interior guarantees primitivity, hence coprime counts
    assert math.gcd(ones, zeros) == 1
    return ChristoffelWord(BinaryWord(w), "lower" if w[0] == "0" else "upper", (ones, zeros))


def classify_christoffel(w: str) -> ChristoffelWord:
    """Classify ``w`` as a letter, a lower (``0u1``) or an upper (``1u0``) Christoffel word.

    Raises :class:`NotChristoffel` otherwise.
    """
    res = _classify(str(as_word(w)))
    if res is None:
        raise NotChristoffel(f"{str(w)!r} is not a Christoffel word")
    return res


def is_christoffel(w: str, kind: Optional[str] = None) -> bool:
    res = _classify(str(w))
    if res is None:
        return False
    return kind is None or res.kind in (kind, "letter")


def christoffel_of_slope(ones: int, zeros: int, kind: str = "lower") -> ChristoffelWord:
    """Christoffel word with ``ones`` 1s and ``zeros`` 0s, via the letter rule."""
    if ones < 0 or zeros < 0 or ones + zeros < 1 or math.gcd(ones, zeros) != 1:
        raise NotCoprime(f"({ones}, {zeros}) must be non-negative, coprime, not both zero")
    n = ones + zeros
    word = _mechanical_letters(Fraction(ones, n), 0, kind, n)
    return classify_christoffel(word)


@dataclass(frozen=True)
class ChristoffelPair:
    left: ChristoffelWord
    right: ChristoffelWord

    @property
    def product(self) -> str:
        return str(self.left) + str(self.right)

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


@dataclass
class TreeNode:
    pair: ChristoffelPair
    depth: int
    children: List["TreeNode"] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {"pair": [str(self.pair.left), str(self.pair.right)]}
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d

    def lines(self) -> Iterator[str]:
        yield "  " * self.depth + str(self.pair)
        for c in self.children:
            yield from c.lines()


def christoffel_tree(depth: int, root: Tuple[str, str] = ("0", "1")) -> TreeNode:
    """Tree of Christoffel pairs; node ``(u, v)`` has children ``(u, uv)`` and ``(uv, v)``.

    Use ``root=("1", "0")`` for upper pairs.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")

    def build(u: ChristoffelWord, v: ChristoffelWord, level: int) -> TreeNode:
        node = TreeNode(ChristoffelPair(u, v), level)
        if level < depth:
            uv = classify_christoffel(str(u) + str(v))
            node.children = [build(u, uv, level + 1), build(uv, v, level + 1)]
        return node

    return build(classify_christoffel(root[0]), classify_christoffel(root[1]), 0)


def iter_tree(node: TreeNode) -> Iterator[TreeNode]:
    yield node
    for c in node.children:
        yield from iter_tree(c)


def standard_factorization(z) -> Tuple[ChristoffelWord, ChristoffelWord]:
    """The unique split ``z = u·v`` into Christoffel words of the same kind as ``z``."""
    z = z if isinstance(z, ChristoffelWord) else classify_christoffel(z)
    if len(z) < 2:
        raise TrivialWord("a single letter has no standard factorization")
    w = str(z.word)
    found = []
    for i in range(1, len(w)):
        u, v = _classify(w[:i]), _classify(w[i:])
        if u and v and u.kind in (z.kind, "letter") and v.kind in (z.kind, "letter"):
            found.append((u, v))
    assert len(found) == 1, f"standard factorization of {w} not unique: {found}"
    return found[0]


@dataclass
class MixReport:
    u: str
    v: str
    u2v: str
    uv2: str
    u2v_christoffel: bool
    uv2_christoffel: bool
    relation: Optional[str]  # "u-prefix-of-v" | "v-suffix-of-u" | None for {0,1}
    factor_in_word: Optional[str] = None  # which of u2v / uv2 occurs in a sample word

    @property
    def ok(self) -> bool:
        letters = {self.u, self.v} == {"0", "1"}
        return self.u2v_christoffel and self.uv2_christoffel and (letters or self.relation is not None)


def christoffel_mix(u, v, w: Optional[str] = None) -> MixReport:
    """Check ``u^2 v`` and ``u v^2`` for a composable Christoffel pair.

    With a sample Sturmian prefix ``w`` containing ``uv``, also record which
    of the two occurs in it.
    """
    u, v = str(u), str(v)
    if _classify(u) is None or _classify(v) is None or _classify(u + v) is None:
        raise NotComposable(f"{u!r}·{v!r} is not a Christoffel word")
    u2v, uv2 = u + u + v, u + v + v
    relation = None
    if {u, v} != {"0", "1"}:
        if v.startswith(u) and len(u) < len(v):
            relation = "u-prefix-of-v"
        elif u.endswith(v) and len(v) < len(u):
            relation = "v-suffix-of-u"
    report = MixReport(u, v, u2v, uv2, _classify(u2v) is not None,
                       _classify(uv2) is not None, relation)
    if w is not None:
        w = str(w)
        a, b = u2v in w, uv2 in w
        report.factor_in_word = "both" if a and b else "u2v" if a else "uv2" if b else None
    return report
