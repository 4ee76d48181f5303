"""Monoid morphisms on finite words, Sturmian morphisms, return words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .christoffel import is_christoffel
from .errors import (
    AlphabetMismatch,
    InsufficientOccurrences,
    NotApplicable,
    PrefixMismatch,
    SturmrcError,
)

__all__ = [
    "Morphism",
    "binary_morphism",
    "parse_morphism",
    "apply",
    "compose",
    "conjugates",
    "is_conjugate_of_christoffel",
    "is_sturmian_morphism",
    "prefix_suffix_relation",
    "return_words",
    "derived_word",
    "E",
    "PHI",
    "PHI_TILDE",
    "IDENTITY",
    "SIGMA",
    "SIGMA_PRIME",
    "TEST_WORDS",
]


@dataclass(frozen=True)
class Morphism:
    """A non-erasing morphism given by the images of its source letters."""

    images: Tuple[Tuple[str, str], ...]
    name: str = ""

    def __post_init__(self):
        if not self.images:
            raise SturmrcError("a morphism needs at least one letter")
        for letter, image in self.images:
            if len(letter) != 1:
                raise SturmrcError(f"source letters must be single characters, got {letter!r}")
            if not image:
                raise SturmrcError(f"image of {letter!r} is empty; morphisms must be non-erasing")

    @classmethod
    def from_dict(cls, images: Dict[str, str], name: str = "") -> "Morphism":
        return cls(tuple(sorted((k, str(v)) for k, v in images.items())), name)

    @property
    def mapping(self) -> Dict[str, str]:
        return dict(self.images)

    @property
    def alphabet(self) -> frozenset:
        return frozenset(k for k, _ in self.images)

    @property
    def target_alphabet(self) -> frozenset:
        return frozenset("".join(v for _, v in self.images))

    def __getitem__(self, letter: str) -> str:
        return self.mapping[letter]

    def __call__(self, w: str) -> str:
        return apply(self, w)

    def __str__(self) -> str:
        return ",".join(f"{k}:{v}" for k, v in self.images)

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.images)


def binary_morphism(image0: str, image1: str, name: str = "") -> Morphism:
    return Morphism((("0", str(image0)), ("1", str(image1))), name)


def parse_morphism(text: str) -> Morphism:
    """Parse ``"0:01,1:0"``."""
    images = {}
    for item in text.split(","):
        letter, sep, image = item.strip().partition(":")
        if not sep or not letter:
            raise SturmrcError(f"bad morphism item {item!r}; expected 'letter:image'")
        images[letter] = image
    return Morphism.from_dict(images)


E = binary_morphism("1", "0", "E")
PHI = binary_morphism("01", "0", "phi")
PHI_TILDE = binary_morphism("10", "0", "phi~")
IDENTITY = binary_morphism("0", "1", "id")
SIGMA = Morphism((("a", "0"), ("b", "01"), ("c", "1")), "sigma")
SIGMA_PRIME = Morphism((("a", "0"), ("b", "10"), ("c", "1")), "sigma'")
TEST_WORDS = ("01", "001", "011")


def apply(m: Morphism, w: str) -> str:
    w = str(w)
    missing = set(w) - m.alphabet
    if missing:
        raise AlphabetMismatch(f"letters {sorted(missing)} are not in the source alphabet of {m}")
    return w.translate({ord(k): v for k, v in m.images})


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1 ∘ m2``: first apply ``m2``, then ``m1``."""
    if not m2.target_alphabet <= m1.alphabet:
        raise AlphabetMismatch(f"cannot compose {m1} after {m2}")
    name = f"{m1.name}∘{m2.name}" if m1.name and m2.name else ""
    return Morphism(tuple((k, apply(m1, v)) for k, v in m2.images), name)


def conjugates(w: str) -> set:
    w = str(w)
    return {w[i:] + w[:i] for i in range(len(w))} if w else {""}


def is_conjugate_of_christoffel(w: str) -> bool:
    return any(is_christoffel(r) for r in conjugates(w))


def is_sturmian_morphism(m: Morphism) -> Tuple[bool, Optional[str]]:
    """Images of ``01``, ``001`` and ``011`` must all be conjugates of Christoffel words.

    Returns ``(True, None)`` or ``(False, failing_image)``.
    """
    if m.alphabet != {"0", "1"} or not m.target_alphabet <= {"0", "1"}:
        raise AlphabetMismatch(f"{m} is not a morphism on {{0,1}}")
    for t in TEST_WORDS:
        image = apply(m, t)
        if not is_conjugate_of_christoffel(image):
            return False, image
    return True, None


def prefix_suffix_relation(m: Morphism) -> Optional[str]:
    """Which image is a proper prefix or suffix of the other, if any."""
    x, y = m["0"], m["1"]
    if m.is_identity() or (x, y) == ("1", "0"):
        raise NotApplicable("identity and E have no prefix/suffix relation")
    if len(x) < len(y) and y.startswith(x):
        return "image0-prefix-of-image1"
    if len(y) < len(x) and x.startswith(y):
        return "image1-prefix-of-image0"
    if len(x) < len(y) and y.endswith(x):
        return "image0-suffix-of-image1"
    if len(y) < len(x) and x.endswith(y):
        return "image1-suffix-of-image0"
    return None


def _occurrences(w: str, p: str) -> List[int]:
    out = []
    i = w.find(p)
    while i != -1:
        out.append(i)
        i = w.find(p, i + 1)
    return out


def _returns(w: str, p: str) -> List[str]:
    w, p = str(w), str(p)
    if not p or not w.startswith(p):
        raise PrefixMismatch(f"{p[:30]!r} is not a nonempty prefix of the word")
    occ = _occurrences(w, p)
    if len(occ) < 3:
        raise InsufficientOccurrences(
            f"prefix of length {len(p)} occurs {len(occ)} times; at least 3 needed")
    # the tail after the last occurrence is an incomplete return and is dropped
    return [w[i:j] for i, j in zip(occ, occ[1:])]


def return_words(w: str, p: str) -> Tuple[str, ...]:
    """Distinct right return words to the prefix ``p``, in order of first occurrence."""
    return tuple(dict.fromkeys(_returns(w, p)))


def derived_word(w: str, p: str) -> Tuple[str, Morphism]:
    """Code the sequence of returns to ``p``: 0 for the first return word seen, 1 for the other.

    Returns ``(w_p, f_p)`` with ``apply(f_p, w_p)`` equal to the scanned part of ``w``.
    """
    seq = _returns(w, p)
    distinct = tuple(dict.fromkeys(seq))
    if len(distinct) != 2:
        raise SturmrcError(f"expected exactly 2 return words, found {len(distinct)}")
    code = {distinct[0]: "0", distinct[1]: "1"}
    return "".join(code[r] for r in seq), binary_morphism(distinct[0], distinct[1], f"f_{p[:8]}")
