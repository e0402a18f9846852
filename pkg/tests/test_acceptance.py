"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary (``pytest tests/test_acceptance.py``)."""

import random
import time
from contextlib import contextmanager

import pytest

from negaxor import machines, serialize
from negaxor.numeral import (double_bar, from_base, from_negabase, ominus,
                             oplus_neg, render, to_base, to_negabase)
from negaxor.transducer import isomorphic, minimize, run
from negaxor.verify import a178729, check_identity, machine_proof

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance

N_MAX = 10 ** 4
B_SWEEP = range(2, 11)
B_PROOF = range(2, 17)


@contextmanager
def criterion(number, title, time_limit=None):
    """Record PASS/FAIL for one criterion; enforce its time limit."""
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        if time_limit is not None:
            assert elapsed < time_limit, f"took {elapsed:.2f}s, limit {time_limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        limit = f" (limit {time_limit:g}s)" if time_limit else ""
        ACCEPTANCE_LINES.append(
            f"[{number}] {status}  {title}  {elapsed:.2f}s{limit}")
        print(ACCEPTANCE_LINES[-1])


def test_1_sequence_golden():
    with criterion(1, "A178729 first ten terms", time_limit=1.0):
        assert a178729(10) == [2, 4, 10, 8, 10, 20, 18, 16, 18, 20]


# rows as printed in the paper: n, n_2, (3n)_2, n_-2, (-n)_-2, ((3n) xor n)_2, value
PAPER_TABLE = [
    ("10", "1010", "011110", "11110", "001010", "010100", "20"),
    ("11", "1011", "100001", "11111", "110101", "101010", "42"),
    ("12", "1100", "100100", "11100", "110100", "101000", "40"),
    ("13", "1101", "100111", "11101", "110111", "101010", "42"),
    ("14", "1110", "101010", "10010", "110110", "100100", "36"),
]


def test_2_table_golden():
    with criterion(2, "expansion table rows n=10..14, b=2"):
        for row in PAPER_TABLE:
            n = int(row[0])
            widths = [len(cell) for cell in row[1:6]]
            got = (
                str(n),
                render(to_base(n, 2), widths[0]),
                render(to_base(3 * n, 2), widths[1]),
                render(to_negabase(n, 2), widths[2]),
                render(to_negabase(-n, 2), widths[3]),
                render(to_base(ominus(3 * n, n, 2), 2), widths[4]),
                str(oplus_neg(n, -n, 2)),
            )
            assert got == row
            # the last column is both sides of the identity
            assert double_bar(ominus(3 * n, n, 2), 2) == int(row[6])


def test_3_theorem_sweep():
    with criterion(3, "identity sweep 2<=b<=10, 0<=n<=10^4, zero failures",
                   time_limit=60.0):
        report = check_identity(10, N_MAX)
        assert report.checked == len(B_SWEEP) * (N_MAX + 1)
        assert report.failures == []


def test_4_machine_reproof():
    with criterion(4, "product 6 -> minimized 3 -> isomorphic, 2<=b<=16",
                   time_limit=5.0):
        for b in B_PROOF:
            rec = machine_proof(b)
            assert rec.product_states == 6, b
            assert rec.minimized_states == 3, b
            assert rec.theorem_match, (b, rec.theorem_match)
            assert rec.lemma_match, (b, rec.lemma_match)


def test_5_corollary():
    with criterion(5, "digits of n xorneg -n are 0/1, 2<=b<=10, n<=10^4"):
        for b in B_SWEEP:
            for n in range(N_MAX + 1):
                assert set(to_base(oplus_neg(n, -n, b), b)) <= {0, 1}, (b, n)


ORACLES = {
    "conv_n_to_negabase": lambda n, b: to_negabase(n, b),
    "conv_neg_n_to_negabase": lambda n, b: to_negabase(-n, b),
    "lemma1_machine": lambda n, b: to_base(oplus_neg(n, -n, b), b),
    "mult_by_b_plus_1": lambda n, b: to_base((b + 1) * n, b),
    "ominus_mult_machine": lambda n, b: to_base(ominus((b + 1) * n, n, b), b),
    "theorem_machine":
        lambda n, b: to_base(double_bar(ominus((b + 1) * n, n, b), b), b),
}


@pytest.mark.parametrize("name", list(ORACLES))
def test_6_oracle_equivalence(name):
    with criterion(6, f"{name} == integer oracle, 2<=b<=10, n<=10^4"):
        oracle = ORACLES[name]
        for b in B_SWEEP:
            t = machines.MACHINES[name](b)
            for n in range(N_MAX + 1):
                assert run(t, to_base(n, b)).output == oracle(n, b), (b, n)


def test_7_round_trips():
    with criterion(7, "codec round-trips and JSON export/import isomorphism"):
        for b in B_SWEEP:
            for n in range(N_MAX + 1):
                assert from_base(to_base(n, b)) == n
                assert from_negabase(to_negabase(n, b)) == n
                assert from_negabase(to_negabase(-n, b)) == -n
        for b in (2, 3, 10, 16):
            for name, ctor in machines.MACHINES.items():
                t = ctor(b)
                back = serialize.loads(serialize.dumps(t))
                assert isomorphic(minimize(back), minimize(t)), (name, b)


def test_8_minimization_semantics():
    with criterion(8, "run(minimize(t)) == run(t), 200 random inputs each"):
        rng = random.Random(20100)
        mismatches = 0
        for name, ctor in machines.MACHINES.items():
            for b in B_SWEEP:
                t = ctor(b)
                m = minimize(t)
                for _ in range(200):
                    w = [rng.randrange(b) for _ in range(rng.randint(0, 12))]
                    if run(m, w).output != run(t, w).output:
                        mismatches += 1
        assert mismatches == 0
