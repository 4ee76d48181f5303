"""Batch verification sweeps over seeded random inputs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import AbelianIncomparable, FirstTermIsV, RareTerm, SturmrcError
from .exact import QuadraticReal
from .iet import rc_as_3iet, three_gap, verify_3iet, iet_word
from .morphisms import apply, derived_word, return_words
from .rcfact import coarsen, compare_specs, abelian_compare, refine, verify_theorem_main
from .sampling import sample_gap_pairs, sample_iet_params, sample_triples
from .words import MechanicalSpec, characteristic_prefix, sturmian_prefix_check

PROPERTIES = ("theorem_main", "three_gap", "refine_coarsen", "return_words", "rc_3iet", "iet_words")


@dataclass
class SweepSummary:
    seed: int
    samples: int
    length: int
    properties: Dict[str, Dict[str, int]] = field(default_factory=dict)
    exceptions: Dict[str, str] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(p.get("fail", 0) for p in self.properties.values())

    def tally(self, prop: str, outcome: str, detail: Optional[str] = None) -> None:
        bucket = self.properties.setdefault(
            prop, {"pass": 0, "fail": 0, "inconclusive": 0, "skipped": 0})
        bucket[outcome] += 1
        if outcome == "fail" and detail:
            self.failures.append(f"{prop}: {detail}")

    def to_dict(self) -> dict:
        return {"seed": self.seed, "samples": self.samples, "length": self.length,
                "properties": self.properties, "exceptions": self.exceptions,
                "failures": self.failures}

    @classmethod
    def from_dict(cls, d: dict) -> "SweepSummary":
        return cls(d["seed"], d["samples"], d["length"], d["properties"],
                   d["exceptions"], d["failures"])


_OUTCOME = {"PASS": "pass", "FAIL": "fail", "INCONCLUSIVE": "inconclusive"}


def _triple_item(args):
    """Everything that depends on one (alpha, rho, rho2) triple; picklable results only."""
    alpha, rho, rho2, length = args
    out = []
    label = f"alpha={alpha.to_text()} rho={rho.to_text()} rho2={rho2.to_text()}"
    try:
        f = compare_specs(MechanicalSpec(alpha, rho), MechanicalSpec(alpha, rho2), length)
    except AbelianIncomparable as exc:
        return [("theorem_main", "fail", f"{label}: unexpected incomparable ({exc})")]
    except SturmrcError as exc:
        return [("theorem_main", "fail", f"{label}: {type(exc).__name__}: {exc}")]
    rep = verify_theorem_main(f)
    out.append(("theorem_main", _OUTCOME[rep.status], f"{label}: {rep.reasons}"))
    if rep.alphabet_size != 3 or not rep.longest_is_concatenation:
        return out
    _, hat = refine(f)
    word = f.word()
    checks = [sturmian_prefix_check(hat, 20).verdict]
    try:
        g, bar = coarsen(f)
        checks.append(sturmian_prefix_check(bar, 20).verdict)
        conserved = g.word() == word
    except FirstTermIsV:
        conserved = True
    verdict = "FAIL" if "FAIL" in checks or not conserved else (
        "PASS" if all(c == "PASS" for c in checks) else "INCONCLUSIVE")
    out.append(("refine_coarsen", _OUTCOME[verdict], label))
    try:
        r = rc_as_3iet(f)
        out.append(("rc_3iet", _OUTCOME[r.verdict], f"{label}: {r.reasons}"))
    except RareTerm:
        out.append(("rc_3iet", "skipped", None))
    return out


def verify_sweep(samples: int = 50, length: int = 10_000, seed: int = 0,
                 gap_samples: Optional[int] = None, gap_n: int = 10_000,
                 include_exception: bool = False, workers: int = 1) -> SweepSummary:
    """Aggregate pass/fail/inconclusive counts for the structural properties.

    ``samples`` triples drive the RC factorization checks; ``gap_samples``
    (default ``2 * samples``) pairs drive the three-gap check.
    """
    summary = SweepSummary(seed, samples, length)
    if gap_samples is None:
        gap_samples = 2 * samples
    triples = sample_triples(seed, samples)
    items = [(a, r, r2, length) for a, r, r2 in triples]
    if workers > 1 and items:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_triple_item, items))
    else:
        results = [_triple_item(x) for x in items]
    for res in results:
        for prop, outcome, detail in res:
            summary.tally(prop, outcome, detail)

    for alpha, beta in sample_gap_pairs(seed, gap_samples):
        rep = three_gap(alpha, beta, gap_n)
        ok = len(rep.gap_values) <= 3 and rep.sum_property
        summary.tally("three_gap", "pass" if ok else "fail",
                      f"alpha={alpha.to_text()} beta={beta.to_text()} gaps={rep.counts}")

    slopes = list(dict.fromkeys(a for a, _, _ in triples))[:10]
    for alpha in slopes:
        c = characteristic_prefix(alpha, length)
        for k in range(1, 11):
            p = c[:k]
            try:
                rets = return_words(c, p)
                wp, fp = derived_word(c, p)
            except SturmrcError as exc:
                summary.tally("return_words", "fail", f"alpha={alpha.to_text()} |p|={k}: {exc}")
                continue
            if len(rets) != 2 or not c.startswith(apply(fp, wp)):
                summary.tally("return_words", "fail", f"alpha={alpha.to_text()} |p|={k}")
                continue
            max_n = min(15, len(wp) // 10)
            summary.tally("return_words", _OUTCOME[sturmian_prefix_check(wp, max_n).verdict],
                          f"alpha={alpha.to_text()} |p|={k}")

    for params in sample_iet_params(seed, min(samples, 10)):
        rep = verify_3iet(iet_word(params, 500))
        summary.tally("iet_words", _OUTCOME[rep.verdict], str(params.to_dict()))

    if include_exception:
        alpha = QuadraticReal(3, -1, 2, 5)
        c = characteristic_prefix(alpha, length)
        try:
            abelian_compare(("0" + c)[:length], ("1" + c)[:length])
            summary.exceptions["0c/1c"] = "comparable"
            summary.failures.append("0c/1c: expected incomparable")
            summary.tally("theorem_main", "fail")
        except AbelianIncomparable:
            summary.exceptions["0c/1c"] = "expected-incomparable"
    return summary
