import random
from itertools import product

import pytest

from sturmrc.christoffel import christoffel_tree, iter_tree
from sturmrc.errors import (
    AlphabetMismatch,
    InsufficientOccurrences,
    NotApplicable,
    PrefixMismatch,
)
from sturmrc.exact import QuadraticReal
from sturmrc.morphisms import (
    E,
    IDENTITY,
    PHI,
    PHI_TILDE,
    SIGMA,
    apply,
    binary_morphism,
    compose,
    conjugates,
    derived_word,
    is_sturmian_morphism,
    parse_morphism,
    prefix_suffix_relation,
    return_words,
)
from sturmrc.words import characteristic_prefix, sturmian_prefix_check

ALPHA = QuadraticReal(3, -1, 2, 5)
FIB = characteristic_prefix(ALPHA, 10_000)
GENERATORS = (E, PHI, PHI_TILDE)


def composite(seq):
    m = IDENTITY
    for g in seq:
        m = compose(m, g)
    return m


def test_apply_examples():
    assert apply(PHI, "01") == "010"
    assert apply(E, apply(E, "0110")) == "0110"
    assert apply(PHI_TILDE, apply(PHI_TILDE, "0")) == "010"
    assert apply(SIGMA, "abc") == "0011"
    with pytest.raises(AlphabetMismatch):
        apply(PHI, "012")


def test_compose_examples():
    assert compose(E, E).is_identity()
    assert compose(PHI_TILDE, PHI_TILDE).mapping == {"0": "010", "1": "10"}
    assert compose(PHI, E).mapping == {"0": "0", "1": "01"}
    with pytest.raises(AlphabetMismatch):
        compose(SIGMA, PHI)


def test_parse_morphism():
    m = parse_morphism("0:01,1:0")
    assert m == binary_morphism("01", "0")
    assert str(m) == "0:01,1:0"
    with pytest.raises(ValueError):
        parse_morphism("0:,1:0")
    with pytest.raises(ValueError):
        parse_morphism("001")


def test_conjugates():
    assert conjugates("01") == {"01", "10"}
    assert conjugates("000") == {"000"}
    assert conjugates("001") == {"001", "010", "100"}


def test_sturmian_morphism_examples():
    assert is_sturmian_morphism(PHI) == (True, None)
    assert is_sturmian_morphism(E) == (True, None)
    assert is_sturmian_morphism(binary_morphism("01", "10")) == (False, "0110")


def test_prefix_suffix_examples():
    assert prefix_suffix_relation(PHI) == "image1-prefix-of-image0"
    assert prefix_suffix_relation(PHI_TILDE) == "image1-suffix-of-image0"
    assert prefix_suffix_relation(compose(PHI, PHI)) == "image1-prefix-of-image0"
    with pytest.raises(NotApplicable):
        prefix_suffix_relation(E)
    with pytest.raises(NotApplicable):
        prefix_suffix_relation(IDENTITY)


def test_monoid_closure_and_prefix_suffix_lemma():
    seen = 0
    for n in range(1, 7):
        for seq in product(GENERATORS, repeat=n):
            m = composite(seq)
            assert is_sturmian_morphism(m)[0], [g.name for g in seq]
            if m.is_identity() or m.mapping == E.mapping:
                continue
            assert prefix_suffix_relation(m) is not None
            seen += 1
    assert seen > 1000


def test_tree_pairs_give_sturmian_morphisms():
    for node in iter_tree(christoffel_tree(6)):
        u, v = node.pair.left, node.pair.right
        assert is_sturmian_morphism(binary_morphism(u, v))[0]
        assert is_sturmian_morphism(binary_morphism(v, u))[0]


def test_non_sturmian_morphisms_are_rejected():
    for images in [("01", "10"), ("0", "0"), ("00", "11"), ("011", "0"), ("0", "11")]:
        ok, witness = is_sturmian_morphism(binary_morphism(*images))
        assert not ok and witness is not None


def test_phi_of_periodic_words_is_not_sturmian():
    rng = random.Random(3)
    for _ in range(20):
        period = "".join(rng.choice("01") for _ in range(rng.randint(1, 6)))
        w = (period * 400)[:2000]
        assert sturmian_prefix_check(apply(PHI, w), 20).verdict == "FAIL"
        assert sturmian_prefix_check(apply(PHI_TILDE, w), 20).verdict == "FAIL"


def test_return_word_examples():
    assert set(return_words(FIB, "0")) == {"0", "01"}
    assert set(return_words(FIB, "01")) == {"01", "010"}
    assert return_words("01" * 50, "01") == ("01",)
    with pytest.raises(PrefixMismatch):
        return_words(FIB, "1")
    with pytest.raises(InsufficientOccurrences):
        return_words("0100", "0100")


def test_derived_word_examples():
    wp, fp = derived_word(FIB, "0")
    assert wp.startswith("01001")
    assert FIB.startswith(apply(fp, wp))
    wp, fp = derived_word(FIB, "01")
    assert sturmian_prefix_check(wp, 15).verdict == "PASS"
    with pytest.raises(InsufficientOccurrences):
        derived_word("010", "010")


@pytest.mark.parametrize("slope", [ALPHA, QuadraticReal(-1, 1, 1, 2), QuadraticReal(2, -1, 1, 3)])
def test_derived_word_round_trip(slope):
    c = characteristic_prefix(slope, 5000)
    for k in range(1, 16):
        p = c[:k]
        wp, fp = derived_word(c, p)
        image = apply(fp, wp)
        # everything up to the last occurrence of p is covered
        assert image == c[:c.rfind(p)]
        assert len(return_words(c, p)) == 2


@pytest.mark.parametrize("head", ["01", "10"])
def test_phi_tilde_squared_fixes_singular_fibonacci_words(head):
    w = head + FIB[:3000]
    m = compose(PHI_TILDE, PHI_TILDE)
    for n in (10, 100, 1000, 2000):
        image = apply(m, w[:n])
        overlap = min(len(image), len(w))
        assert image[:overlap] == w[:overlap]
