from itertools import product
from math import gcd

import pytest

from sturmrc.christoffel import (
    central_split,
    christoffel_mix,
    christoffel_of_slope,
    christoffel_tree,
    classify_christoffel,
    is_central,
    is_christoffel,
    iter_tree,
    standard_factorization,
)
from sturmrc.errors import NotChristoffel, NotComposable, NotCoprime, TrivialWord
from sturmrc.exact import QuadraticReal
from sturmrc.words import characteristic_prefix, is_palindrome, reversal


def all_words(max_len):
    for n in range(1, max_len + 1):
        for t in product("01", repeat=n):
            yield "".join(t)


def palindromes(n):
    half = n // 2
    for t in product("01", repeat=half):
        left = "".join(t)
        if n % 2:
            for mid in "01":
                yield left + mid + left[::-1]
        else:
            yield left + left[::-1]


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_central_examples():
    assert is_central("00")
    assert is_central("010")
    assert central_split("010") == ("", "0")
    assert not is_central("01")
    assert is_central("")
    assert is_central("010010")


def test_classify_examples():
    c = classify_christoffel("001")
    assert (c.kind, c.slope) == ("lower", (1, 2))
    c = classify_christoffel("10")
    assert (c.kind, c.slope) == ("upper", (1, 1))
    assert classify_christoffel("0").kind == "letter"
    with pytest.raises(NotChristoffel):
        classify_christoffel("0110")


def test_christoffel_of_slope_examples():
    assert str(christoffel_of_slope(1, 2)) == "001"
    assert str(christoffel_of_slope(1, 1)) == "01"
    assert str(christoffel_of_slope(1, 0)) == "1"
    assert str(christoffel_of_slope(2, 3, "upper")) == "10100"
    with pytest.raises(NotCoprime):
        christoffel_of_slope(2, 4)


def test_slope_round_trip():
    for p in range(0, 31):
        for q in range(0, 31 - p):
            if p + q == 0 or gcd(p, q) != 1:
                continue
            for kind in ("lower", "upper"):
                c = classify_christoffel(str(christoffel_of_slope(p, q, kind)))
                assert c.slope == (p, q)
                if p + q > 1:
                    assert c.kind == kind


def test_reversal_duality():
    for w in all_words(15):
        assert is_christoffel(w, "lower") == is_christoffel(reversal(w), "upper")


def test_christoffel_words_are_primitive_and_shaped():
    for w in all_words(12):
        if len(w) > 1 and is_christoffel(w):
            assert not any(w == w[:k] * (len(w) // k) for k in range(1, len(w)) if len(w) % k == 0)
            assert is_central(w[1:-1]) and w[0] != w[-1]


def test_tree_examples():
    root = christoffel_tree(1)
    assert [str(ch.pair) for ch in root.children] == ["(0,01)", "(01,1)"]
    assert str(christoffel_tree(2).children[0].children[0].pair) == "(0,001)"
    node = christoffel_tree(3).children[0].children[1].children[1]
    assert str(node.pair) == "(00101,01)"
    assert list(christoffel_tree(0).lines()) == ["(0,1)"]


def test_tree_products_are_christoffel_and_complete():
    depth = 10
    products = set()
    for node in iter_tree(christoffel_tree(depth)):
        z = node.pair.product
        assert classify_christoffel(z).kind == "lower"
        products.add(z)
    # every lower Christoffel word of length n sits within depth n - 2
    brute = {w for w in all_words(depth + 2) if len(w) > 1 and is_christoffel(w, "lower")}
    assert brute <= products
    assert {z for z in products if len(z) <= depth + 2} == brute


def test_standard_factorization_examples():
    assert tuple(map(str, standard_factorization("01"))) == ("0", "1")
    assert tuple(map(str, standard_factorization("00101"))) == ("001", "01")
    assert tuple(map(str, standard_factorization("011"))) == ("01", "1")
    with pytest.raises(TrivialWord):
        standard_factorization("0")


def test_standard_factorization_inverts_tree():
    for node in iter_tree(christoffel_tree(10)):
        u, v = node.pair.left, node.pair.right
        su, sv = standard_factorization(node.pair.product)
        assert (str(su), str(sv)) == (str(u), str(v))


def test_mix_examples():
    r = christoffel_mix("0", "01")
    assert (r.u2v, r.uv2) == ("0001", "00101") and r.ok
    assert r.relation == "u-prefix-of-v"
    r = christoffel_mix("0", "1")
    assert r.u2v_christoffel and r.uv2_christoffel and r.relation is None
    r = christoffel_mix("01", "011")
    assert r.relation == "u-prefix-of-v"
    assert is_christoffel("01011011")
    with pytest.raises(NotComposable):
        christoffel_mix("01", "0")


def test_mix_over_tree_and_factor_choice():
    c = characteristic_prefix(QuadraticReal(3, -1, 2, 5), 3000)
    assert christoffel_mix("0", "01", c).factor_in_word == "uv2"
    for node in iter_tree(christoffel_tree(6)):
        r = christoffel_mix(node.pair.left, node.pair.right)
        assert r.ok
        if {r.u, r.v} != {"0", "1"}:
            assert r.relation in ("u-prefix-of-v", "v-suffix-of-u")


def test_central_counts_match_totient():
    for n in range(0, 21):
        count = sum(1 for w in palindromes(n) if is_central(w))
        assert count == euler_phi(n + 2), n


def test_palindromic_prefix_branching_in_central_words():
    for n in range(3, 21):
        for u in palindromes(n):
            if not is_central(u):
                continue
            for k in range(1, n):
                v = u[:k]
                if not is_palindrome(v) or set(v) != {"0", "1"}:
                    continue
                assert u.startswith(v + "01") != u.startswith(v + "10")


@pytest.mark.parametrize("slope", [QuadraticReal(3, -1, 2, 5), QuadraticReal(-1, 1, 1, 2)])
def test_palindromic_prefixes_of_characteristic_words_are_central(slope):
    c = characteristic_prefix(slope, 2000)
    pals = [c[:k] for k in range(2001) if is_palindrome(c[:k])]
    assert len(pals) > 8
    assert all(is_central(p) for p in pals)
