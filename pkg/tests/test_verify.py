import json

import pytest

from negaxor.machines import lemma1_machine, theorem_machine
from negaxor.transducer import IsomorphismWitness
from negaxor.verify import (ProofReport, SweepReport, a178729, check_identity,
                            lhs, machine_proof, prove_range, report_json, rhs)

from oracles import xor3


def test_identity_examples():
    assert lhs(10, 2) == rhs(10, 2) == 20
    assert lhs(11, 2) == rhs(11, 2) == 42
    for b in range(2, 12):
        assert lhs(0, b) == rhs(0, b) == 0


def test_check_identity_small():
    rep = check_identity(4, 300)
    assert rep.passed
    assert rep.checked == 3 * 301
    assert rep.b_range == (2, 4) and rep.n_range == (0, 300)


def test_check_identity_trivial_case():
    rep = check_identity(2, 0)
    assert rep.checked == 1 and rep.passed


def test_check_identity_rejects_bad_ranges():
    with pytest.raises(ValueError):
        check_identity(1, 10)
    with pytest.raises(ValueError):
        check_identity(3, -1)


def test_parallel_sweep_matches_serial():
    serial = check_identity(5, 2500)
    parallel = check_identity(5, 2500, workers=2, chunk=700)
    assert parallel == serial


def test_failures_are_collected(monkeypatch):
    import negaxor.verify as v
    monkeypatch.setattr(v, "rhs", lambda n, b: v.oplus_neg(n, -n, b) + (n == 7))
    rep = v.check_identity(3, 10)
    assert not rep.passed
    assert [f[:2] for f in rep.failures] == [(2, 7), (3, 7)]
    assert "FAIL b=2 n=7" in rep.render()


def test_sweep_merge_is_associative():
    a = check_identity(3, 99)
    b = check_identity(3, 199, n_min=100)
    c = check_identity(3, 299, n_min=200)
    assert a.merge(b).merge(c) == a.merge(b.merge(c)) == check_identity(3, 299)


@pytest.mark.parametrize("b", [2, 3, 16])
def test_machine_proof(b):
    rec = machine_proof(b)
    assert rec.product_states == 6
    assert rec.minimized_states == 3
    assert isinstance(rec.theorem_match, IsomorphismWitness)
    assert isinstance(rec.lemma_match, IsomorphismWitness)
    assert rec.passed


def test_proof_report_render_and_json():
    rep = prove_range(4)
    assert rep.passed
    assert len(rep.records) == 3
    assert rep.render().count(" ok") == 3
    doc = json.loads(report_json(check_identity(4, 20), rep))
    assert doc["passed"] is True
    assert doc["proof"]["records"][0]["lemma1_machine"]["isomorphic"] is True
    assert doc["sweep"]["checked"] == 3 * 21


def test_proof_record_reports_mismatch():
    from negaxor.verify import ProofRecord
    from negaxor.transducer import isomorphic
    rec = ProofRecord(3, 6, 3, isomorphic(lemma1_machine(3), lemma1_machine(4)),
                      isomorphic(lemma1_machine(3), lemma1_machine(3)))
    assert not rec.passed
    assert rec.to_dict()["theorem_machine"]["kind"] == "radix"
    assert "radix" in ProofReport([rec]).render()


def test_a178729():
    assert a178729(10) == [2, 4, 10, 8, 10, 20, 18, 16, 18, 20]
    assert a178729(14)[13] == 36
    with pytest.raises(ValueError):
        a178729(0)


def test_a178729_is_xor3():
    terms = a178729(10 ** 5)
    assert all(t == xor3(n) for n, t in enumerate(terms, start=1))


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_levels_agree(b):
    tm, lm = theorem_machine(b), lemma1_machine(b)
    for n in range(1001):
        assert tm(n) == lhs(n, b)
        assert lm(n) == rhs(n, b)
