import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from sturmrc.errors import (
    InsufficientLength,
    InvalidSpec,
    NotPalindromicPrefix,
    RationalSlope,
)
from sturmrc.exact import QuadraticReal, qr_floor
from sturmrc.sampling import random_intercept, random_irrational
from sturmrc.words import (
    BinaryWord,
    MechanicalSpec,
    characteristic_prefix,
    factor_complexity,
    is_balanced,
    is_palindrome,
    mechanical_prefix,
    reversal,
    singular_prefix,
    smallest_period,
    sturmian_prefix_check,
)

ALPHA = QuadraticReal(3, -1, 2, 5)
SQRT2M1 = QuadraticReal(-1, 1, 1, 2)
FIB60 = "010010100100101001010010010100100101001010010010100101001001"
# lower letters of slope sqrt2 - 1 and intercept sqrt2 - 1 at 400-bit precision
SQRT2_CHAR40 = "0101001010010101001010010101001010010100"


def oracle_letters(alpha, rho, n, kind="lower"):
    with mpmath.workprec(400):
        a = mpmath.mpf(alpha.a) + alpha.b * mpmath.sqrt(alpha.d)
        a /= alpha.c
        r = (mpmath.mpf(rho.a) + rho.b * mpmath.sqrt(rho.d)) / rho.c
        step = mpmath.floor if kind == "lower" else mpmath.ceil
        return "".join(str(int(step((k + 1) * a + r) - step(k * a + r))) for k in range(n))


def oracle_shifted(alpha, k, n, kind):
    """Letters for intercept {-(k+1)alpha}, written so the boundary hit at j = k+1 is exact."""
    with mpmath.workprec(400):
        a = (mpmath.mpf(alpha.a) + alpha.b * mpmath.sqrt(alpha.d)) / alpha.c
        m = mpmath.ceil((k + 1) * a)
        step = mpmath.floor if kind == "lower" else mpmath.ceil
        x = [(j - k - 1) * a + m for j in range(n + 1)]
        return "".join(str(int(step(x[j + 1]) - step(x[j]))) for j in range(n))


def test_binary_word_parikh():
    w = BinaryWord("0010")
    assert w.parikh == (3, 1)
    assert BinaryWord([0, 1, 1]) == "011"
    assert BinaryWord("").parikh == (0, 0)
    with pytest.raises(ValueError):
        BinaryWord("012")
    assert isinstance(w[1:], BinaryWord)


def test_fibonacci_prefix():
    assert mechanical_prefix(MechanicalSpec(ALPHA, ALPHA), 60) == FIB60
    assert mechanical_prefix(MechanicalSpec(ALPHA, ALPHA), 0) == ""
    assert mechanical_prefix(MechanicalSpec(ALPHA, QuadraticReal(4, 0, 5)), 10) == "1001010010"


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        MechanicalSpec(QuadraticReal(1), ALPHA)
    with pytest.raises(InvalidSpec):
        MechanicalSpec(ALPHA, QuadraticReal(1))
    with pytest.raises(InvalidSpec):
        MechanicalSpec(ALPHA, ALPHA, "middle")
    with pytest.raises(RationalSlope):
        mechanical_prefix(MechanicalSpec(QuadraticReal(1, 0, 3), QuadraticReal(0)), 5)


def test_boundary_convention_at_zero():
    # {0*alpha + 0} = 0 is the only boundary hit
    lower = mechanical_prefix(MechanicalSpec(ALPHA, QuadraticReal(0), "lower"), 30)
    upper = mechanical_prefix(MechanicalSpec(ALPHA, QuadraticReal(0), "upper"), 30)
    assert lower[0] == "0" and upper[0] == "1"
    assert lower[1:] == upper[1:]
    assert lower[1:] == FIB60[:29]


def test_characteristic_prefix():
    assert characteristic_prefix(ALPHA, 12) == "010010100100"
    assert characteristic_prefix(ALPHA, 0) == ""
    assert characteristic_prefix(SQRT2M1, 40) == SQRT2_CHAR40
    assert oracle_letters(SQRT2M1, SQRT2M1, 40) == SQRT2_CHAR40


def test_singular_prefixes():
    c = characteristic_prefix(ALPHA, 50)
    assert singular_prefix(ALPHA, 0, "plain-zero", 10) == "0010010100"
    assert singular_prefix(ALPHA, 0, "plain-one", 1) == "1"
    assert singular_prefix(ALPHA, 1, "zero-one", 5) == "00101"
    assert singular_prefix(ALPHA, 1, "one-zero", 12) == "010010010100"
    assert singular_prefix(ALPHA, 3, "zero-one", 20) == ("010" + "01" + c)[:20]
    with pytest.raises(NotPalindromicPrefix):
        singular_prefix(ALPHA, 2, "zero-one", 10)


@pytest.mark.parametrize("slope", [ALPHA, SQRT2M1, QuadraticReal(2, -1, 1, 3)])
def test_singular_words_match_mechanical_oracle(slope):
    # p~01c and p~10c are the upper and lower words of intercept {-(|p|+1) alpha}
    c = characteristic_prefix(slope, 3000)
    pals = [k for k in range(0, 60) if is_palindrome(c[:k])]
    assert len(pals) > 4
    for k in pals:
        assert singular_prefix(slope, k, "zero-one", 400) == oracle_shifted(slope, k, 400, "upper")
        assert singular_prefix(slope, k, "one-zero", 400) == oracle_shifted(slope, k, 400, "lower")
    zero = QuadraticReal(0)
    assert singular_prefix(slope, 0, "plain-zero", 200) == oracle_letters(slope, zero, 200, "lower")
    assert singular_prefix(slope, 0, "plain-one", 200) == oracle_letters(slope, zero, 200, "upper")


def test_balance_examples():
    assert is_balanced(FIB60, 30) == (True, None)
    ok, witness = is_balanced("0011", 2)
    assert not ok and set(witness) == {"00", "11"}
    assert is_balanced("010010", 6)[0]


def test_balance_against_brute_force():
    words = ["0101101", "010010", "00100100", "0110", "1001001001", "0001000"]
    for w in words:
        brute = all(abs(x.count("1") - y.count("1")) <= 1
                    for m in range(1, len(w) + 1)
                    for x in (w[i:i + m] for i in range(len(w) - m + 1))
                    for y in (w[i:i + m] for i in range(len(w) - m + 1)))
        assert is_balanced(w, len(w))[0] == brute


def test_factor_complexity_examples():
    assert factor_complexity(FIB60, 1) == 2
    assert factor_complexity(FIB60, 2) == 3
    assert factor_complexity("0000", 2) == 1
    assert factor_complexity("0101", 0) == 1
    with pytest.raises(InsufficientLength):
        factor_complexity("01", 3)


def test_smallest_period():
    assert smallest_period("010101") == 2
    assert smallest_period("0100101") == 5
    assert smallest_period("0") == 1


def test_prefix_check_examples():
    fib = characteristic_prefix(ALPHA, 5000)
    rep = sturmian_prefix_check(fib, 30)
    assert rep.verdict == "PASS" and rep.complexity == list(range(1, 32))
    per = sturmian_prefix_check("01" * 2500, 3)
    assert per.verdict == "FAIL" and per.failed_at == 2 and per.complexity[2] == 2
    bad = sturmian_prefix_check("0011" + "01" * 20, 2)
    assert bad.verdict == "FAIL" and not bad.balanced
    with pytest.raises(InsufficientLength):
        sturmian_prefix_check("0101", 1)


def test_prefix_check_inconclusive_when_period_is_long():
    # complexity stalls at n = 3 but the word has no short period
    w = "0" * 300 + "1"
    rep = sturmian_prefix_check(w, 20)
    assert rep.verdict == "INCONCLUSIVE"


def test_report_round_trip():
    rep = sturmian_prefix_check("01" * 100, 5)
    assert type(rep).from_dict(rep.to_dict()) == rep


def test_reversal():
    assert reversal("001") == "100"
    assert reversal("") == ""
    assert reversal("010010") == "010010"


@given(st.text(alphabet="01", max_size=60))
def test_reversal_involution_and_parikh(w):
    r = reversal(w)
    assert reversal(r) == w
    assert BinaryWord(r).parikh == BinaryWord(w).parikh
    assert sum(BinaryWord(w).parikh) == len(w)


@st.composite
def specs(draw):
    rng = random.Random(draw(st.integers(0, 10**6)))
    d = draw(st.sampled_from([2, 3, 5, 7, 13]))
    return MechanicalSpec(random_irrational(rng, d), random_intercept(rng, d),
                          draw(st.sampled_from(["lower", "upper"])))


@settings(max_examples=40, deadline=None)
@given(specs(), st.integers(1, 400))
def test_parikh_matches_floor_count(spec, n):
    w = mechanical_prefix(spec, n)
    exact = qr_floor(spec.slope * n + spec.intercept) - qr_floor(spec.intercept)
    assert w.ones in (exact - 1, exact, exact + 1)
    if spec.kind == "lower":
        assert w.ones == exact


@settings(max_examples=40, deadline=None)
@given(specs())
def test_lower_and_upper_differ_in_at_most_one_place(spec):
    lo = mechanical_prefix(MechanicalSpec(spec.slope, spec.intercept, "lower"), 500)
    up = mechanical_prefix(MechanicalSpec(spec.slope, spec.intercept, "upper"), 500)
    diffs = [i for i in range(500) if lo[i] != up[i]]
    # a boundary hit at k flips the pair at k-1, k (only letter 0 when k = 0)
    assert diffs in ([], [0]) or (len(diffs) == 2 and diffs[1] == diffs[0] + 1)


@settings(max_examples=25, deadline=None)
@given(specs())
def test_generated_prefixes_are_balanced_with_low_complexity(spec):
    w = mechanical_prefix(spec, 1200)
    assert is_balanced(w, 40)[0]
    for n in range(1, 41):
        assert factor_complexity(w, n) <= n + 1


@pytest.mark.parametrize("slope", [ALPHA, SQRT2M1])
def test_characteristic_prefixes_are_left_special(slope):
    c = characteristic_prefix(slope, 10_000)
    for k in range(1, 21):
        p = c[:k]
        assert ("0" + p) in c and ("1" + p) in c
