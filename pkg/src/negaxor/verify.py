"""Two independent checks of

    double_bar(((b+1)n) ⊖_b n) == n ⊕_{-b} (-n)

``check_identity`` compares both sides as integers, using only
:mod:`negaxor.numeral`.  ``machine_proof`` rebuilds the machine for each
side and checks that they are the same machine up to relabeling, which
covers every ``n`` for that radix at once.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .machines import (conv_n_to_negabase, conv_neg_n_to_negabase,
                       lemma1_machine, theorem_machine)
from .numeral import check_radix, double_bar, ominus, oplus_neg
from .transducer import IsomorphismWitness, isomorphic, minimize, product


def lhs(n: int, b: int) -> int:
    return double_bar(ominus((b + 1) * n, n, b), b)


def rhs(n: int, b: int) -> int:
    return oplus_neg(n, -n, b)


@dataclass
class SweepReport:
    b_range: tuple
    n_range: tuple
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: SweepReport) -> SweepReport:
        """Combine reports over adjacent or overlapping ranges."""
        return SweepReport(
            (min(self.b_range[0], other.b_range[0]),
             max(self.b_range[1], other.b_range[1])),
            (min(self.n_range[0], other.n_range[0]),
             max(self.n_range[1], other.n_range[1])),
            self.checked + other.checked,
            sorted(self.failures + other.failures),
        )

    def to_dict(self) -> dict:
        return {
            "b_range": list(self.b_range),
            "n_range": list(self.n_range),
            "checked": self.checked,
            "passed": self.passed,
            "failures": [dict(zip(("b", "n", "lhs", "rhs"), f))
                         for f in self.failures],
        }

    def render(self) -> str:
        head = (f"identity sweep b={self.b_range[0]}..{self.b_range[1]} "
                f"n={self.n_range[0]}..{self.n_range[1]}: "
                f"{self.checked} checked, {len(self.failures)} failures")
        lines = [head]
        for b, n, left, right in self.failures[:20]:
            lines.append(f"  FAIL b={b} n={n}: lhs={left} rhs={right}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)


def _sweep(b_lo, b_hi, n_lo, n_hi):
    report = SweepReport((b_lo, b_hi), (n_lo, n_hi))
    for b in range(b_lo, b_hi + 1):
        for n in range(n_lo, n_hi + 1):
            left, right = lhs(n, b), rhs(n, b)
            if left != right:
                report.failures.append((b, n, left, right))
            report.checked += 1
    return report


def check_identity(b_max: int, n_max: int, *, b_min: int = 2, n_min: int = 0,
                   workers: int | None = None, chunk: int = 5000) -> SweepReport:
    """Compare both sides for every ``b_min <= b <= b_max``,
    ``n_min <= n <= n_max``.  Counterexamples are collected, not raised.

    With ``workers`` the n-range is split into chunks checked in separate
    processes; the result is identical to the serial sweep.
    """
    check_radix(b_min)
    if b_max < b_min or n_max < n_min or n_min < 0:
        raise ValueError("empty or negative sweep range")
    if not workers or workers <= 1:
        return _sweep(b_min, b_max, n_min, n_max)
    bounds = [(lo, min(lo + chunk - 1, n_max))
              for lo in range(n_min, n_max + 1, chunk)]
    with ProcessPoolExecutor(workers) as pool:
        parts = list(pool.map(_sweep, *zip(*[(b_min, b_max, lo, hi)
                                             for lo, hi in bounds])))
    report = parts[0]
    for part in parts[1:]:
        report = report.merge(part)
    return report


@dataclass
class ProofRecord:
    radix: int
    product_states: int
    minimized_states: int
    theorem_match: object
    lemma_match: object

    @property
    def passed(self) -> bool:
        return (self.product_states == 6 and self.minimized_states == 3
                and isinstance(self.theorem_match, IsomorphismWitness)
                and isinstance(self.lemma_match, IsomorphismWitness))

    def to_dict(self) -> dict:
        def match(m):
            if isinstance(m, IsomorphismWitness):
                return {"isomorphic": True, "mapping": list(m.mapping)}
            return {"isomorphic": False, **asdict(m)}
        return {
            "radix": self.radix,
            "product_states": self.product_states,
            "minimized_states": self.minimized_states,
            "theorem_machine": match(self.theorem_match),
            "lemma1_machine": match(self.lemma_match),
            "passed": self.passed,
        }


def machine_proof(b: int) -> ProofRecord:
    """Product of the two negabase converters -> minimize -> compare with the
    minimized theorem machine and with the three-state lemma machine."""
    b = check_radix(b)
    p = product(conv_n_to_negabase(b), conv_neg_n_to_negabase(b),
                lambda x, y: (x + y) % b)
    m = minimize(p)
    return ProofRecord(
        b, p.size, m.size,
        isomorphic(m, minimize(theorem_machine(b))),
        isomorphic(m, lemma1_machine(b)),
    )


@dataclass
class ProofReport:
    records: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "records": [r.to_dict() for r in self.records]}

    def render(self) -> str:
        lines = []
        for r in self.records:
            status = "ok" if r.passed else "FAIL"
            lines.append(
                f"b={r.radix:<3} product {r.product_states} states, "
                f"minimized {r.minimized_states}, "
                f"theorem {'iso' if r.theorem_match else 'differs'}, "
                f"lemma1 {'iso' if r.lemma_match else 'differs'}  {status}")
            for m in (r.theorem_match, r.lemma_match):
                if not m:
                    lines.append(f"    {m.kind}: {m.detail}")
        return "\n".join(lines)


def prove_range(b_max: int, b_min: int = 2) -> ProofReport:
    check_radix(b_min)
    return ProofReport([machine_proof(b) for b in range(b_min, b_max + 1)])


def a178729(count: int) -> list:
    """First ``count`` terms, starting at n = 1, of n ⊕_{-2} (-n)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [oplus_neg(n, -n, 2) for n in range(1, count + 1)]


def report_json(*reports) -> str:
    """One JSON document holding the given sweep/proof reports."""
    doc = {}
    for r in reports:
        doc["sweep" if isinstance(r, SweepReport) else "proof"] = r.to_dict()
    doc["passed"] = all(r.passed for r in reports)
    return json.dumps(doc, indent=2)
