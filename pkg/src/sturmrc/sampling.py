"""Seeded sampling of quadratic irrationals and sweep inputs."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Tuple

from .exact import QuadraticReal

RADICANDS = (2, 3, 5, 7, 13)


def random_irrational(rng: random.Random, d: int, lo: Fraction = Fraction(0),
                      hi: Fraction = Fraction(1)) -> QuadraticReal:
    """A number ``(a + b*sqrt(d))/c`` with small coefficients, reduced into ``(lo, hi)``."""
    while True:
        b = rng.choice([-3, -2, -1, 1, 2, 3])
        a = rng.randint(-9, 9)
        c = rng.randint(1, 9)
        x = QuadraticReal(a, b, c, d).fract()
        if lo < x < hi:
            return x


def random_intercept(rng: random.Random, d: int) -> QuadraticReal:
    if rng.random() < 0.5:
        q = rng.randint(2, 30)
        return QuadraticReal(rng.randrange(q), 0, q)
    return random_irrational(rng, d)


def sample_triples(seed: int, count: int, min_beta: Fraction = Fraction(1, 20),
                   radicands=RADICANDS) -> List[Tuple[QuadraticReal, QuadraticReal, QuadraticReal]]:
    """``(alpha, rho, rho2)`` with ``{rho2 - rho}`` kept away from 0 and 1.

    Radicands are cycled so every field is covered.
    """
    rng = random.Random(seed)
    out = []
    lo, hi = Fraction(1, 50), Fraction(49, 50)
    for i in range(count):
        d = radicands[i % len(radicands)]
        alpha = random_irrational(rng, d, lo, hi)
        while True:
            rho, rho2 = random_intercept(rng, d), random_intercept(rng, d)
            beta = (rho2 - rho).fract()
            if min_beta <= beta <= 1 - min_beta:
                break
        out.append((alpha, rho, rho2))
    return out


def sample_gap_pairs(seed: int, count: int, radicands=RADICANDS):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        d = radicands[i % len(radicands)]
        alpha = random_irrational(rng, d)
        q = rng.randint(3, 60)
        beta = QuadraticReal(rng.randint(1, (q - 1) // 2), 0, q)
        if rng.random() < 0.3:
            beta = random_irrational(rng, d, Fraction(1, 100), Fraction(1, 2))
        out.append((alpha, beta))
    return out


def _near_rational(x: QuadraticReal, max_q: int, min_dist: Fraction) -> bool:
    for q in range(1, max_q + 1):
        r = (x * q).fract()
        if r < min_dist or r > 1 - min_dist:
            return True
    return False


def sample_iet_params(seed: int, count: int, radicands=RADICANDS, max_q: int = 20,
                      min_dist: Fraction = Fraction(1, 100)):
    """Exchanges of ``[0, 1)`` with irrational ``alpha`` and rational ``beta``.

    A rational ``beta`` keeps ``(alpha + beta) / (1 + beta)`` irrational, so
    the induced rotation, and hence the coding, is aperiodic. Parameters whose
    sigma-image slope sits within ``min_dist`` of a fraction with denominator
    at most ``max_q`` are redrawn: their codings repeat a short period for
    hundreds of letters and no finite prefix check can tell them apart from
    periodic words.
    """
    from .iet import IETParams

    rng = random.Random(seed)
    out = []
    for i in range(count):
        d = radicands[i % len(radicands)]
        alpha = random_irrational(rng, d, Fraction(1, 20), Fraction(1, 2))
        while True:
            beta = QuadraticReal(rng.randint(1, 9), 0, 20)
            if alpha + beta < 1:
                slope = (1 - alpha) * (1 / (1 + beta.as_fraction()))
                if not _near_rational(slope, max_q, min_dist):
                    break
                alpha = random_irrational(rng, d, Fraction(1, 20), Fraction(1, 2))
        out.append(IETParams(alpha, beta, QuadraticReal(1), random_irrational(rng, d)))
    return out
