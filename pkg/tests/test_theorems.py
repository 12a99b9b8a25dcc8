import pytest
from hypothesis import given, settings, strategies as st

from partitionkit import theorems
from partitionkit.counting import partition_number, q_count, s_sum, v_count
from partitionkit.partitions import q_count_brute
from partitionkit.theorems import (
    CongruenceClaim,
    Counterexample,
    OracleMismatch,
    VerificationReport,
    builtin_claims,
    induced_q_claim,
    ramanujan_claims,
    scan_for_C,
    verify_congruence,
    verify_elder,
    verify_stanley,
    verify_theorem1,
    verify_theorem2,
)


def test_stanley():
    assert verify_stanley(40).passed
    assert verify_stanley(0).passed
    assert s_sum(5) == q_count(1, 5) == 12


def test_elder():
    rep = verify_elder(40, 10)
    assert rep.passed and rep.checks == 41 * 10
    assert verify_elder(5, 6).passed


def test_theorem1_instances():
    assert q_count(2, 5) + q_count(2, 6) == 4 + 8 == s_sum(5)
    assert verify_theorem1(200, 12).passed


def test_theorem2_instances():
    assert q_count(4, 6) == 2 and q_count(4, 8) == 6
    assert q_count(4, 6) + q_count(4, 8) == v_count(2, 6) == 8
    assert verify_theorem2(100, 6, 5).passed


def test_degenerate_parameters_agree():
    assert verify_theorem1(40, 1).passed == verify_stanley(40).passed
    assert verify_theorem2(40, 10, 1).passed == verify_elder(40, 10).passed


def test_report_flags_counterexamples_and_caps_them():
    rep = VerificationReport("x", (0, 30))
    for n in range(15):
        rep.record(Counterexample(n, n, 1))
    assert not rep.passed
    assert len(rep.counterexamples) == theorems.MAX_COUNTEREXAMPLES
    assert rep.failures == 15
    d = rep.to_dict()
    assert d == {
        "claim": "x",
        "range": [0, 30],
        "passed": False,
        "counterexamples": [{"n": n, "value": n, "residue": 1} for n in range(10)],
    }


def test_oracle_mismatch_detected(monkeypatch):
    monkeypatch.setattr(theorems, "s_sum", lambda n: s_sum(n) + (n == 7))
    with pytest.raises(OracleMismatch):
        verify_stanley(10)
    # without the oracle the identity check itself flags it
    rep = verify_stanley(10, oracle=False)
    assert [c.n for c in rep.counterexamples] == [7]


class TestCongruence:
    def test_q5(self):
        claim = CongruenceClaim("Q", 5, 4, 5, C=5)
        assert q_count(5, 9) == 5 and q_count(5, 14) == 35
        assert verify_congruence(claim, 200).passed

    def test_p7(self):
        assert verify_congruence(CongruenceClaim("P", 7, 5, 7), 200).passed

    def test_q5_mod25_fails_at_zero(self):
        # brute enumeration of Q_5(24), then the paper's expansion
        assert q_count_brute(5, 24) == 660
        assert partition_number(19) + partition_number(14) + partition_number(9) + partition_number(4) == 660
        rep = verify_congruence(CongruenceClaim("Q", 25, 24, 25, C=5), 10)
        assert not rep.passed
        first = rep.counterexamples[0]
        assert (first.n, first.value, first.residue) == (0, 660, 10)

    def test_invalid_claims(self):
        for bad in [
            dict(statistic="R", A=5, B=4, m=5),
            dict(statistic="Q", A=5, B=4, m=5),
            dict(statistic="P", A=5, B=4, m=5, C=2),
            dict(statistic="P", A=0, B=4, m=5),
            dict(statistic="P", A=5, B=-1, m=5),
            dict(statistic="P", A=5, B=4, m=1),
        ]:
            with pytest.raises(ValueError):
                CongruenceClaim(**bad)
        with pytest.raises(ValueError):
            verify_congruence(CongruenceClaim("P", 5, 4, 5), -1)

    def test_parse(self):
        assert CongruenceClaim.parse("Q,5,5,4,5") == CongruenceClaim("Q", 5, 4, 5, C=5)
        assert CongruenceClaim.parse("p, 7, 5, 7") == CongruenceClaim("P", 7, 5, 7)
        for bad in ["Q,5,5,4", "P,x,1,2", "", "Z,1,2,3"]:
            with pytest.raises(ValueError):
                CongruenceClaim.parse(bad)

    def test_builtin_catalogue(self):
        claims = {(c.statistic, c.C, c.A, c.B, c.m): c for c in builtin_claims()}
        for key in [("Q", 5, 5, 4, 5), ("Q", 7, 7, 5, 7), ("Q", 11, 11, 6, 11)]:
            assert claims[key].source == "paper-theorem"
        assert claims[("Q", 5, 25, 24, 25)].source == "paper-asserted"
        assert claims[("Q", 5, 125, 99, 125)].source == "paper-asserted"
        assert claims[("Q", 25, 25, 24, 25)].source == "derived-repair"
        assert claims[("Q", 125, 125, 99, 125)].source == "derived-repair"

    def test_builtin_expected_status_holds(self):
        for c in builtin_claims():
            n_max = 40 if c.A <= 25 else 20
            rep = verify_congruence(c, n_max)
            assert rep.passed == (c.expected == "pass"), c.label

    def test_induced_claims_pass(self):
        for c in ramanujan_claims():
            assert verify_congruence(c, 150).passed
            assert verify_congruence(induced_q_claim(c), 150).passed
        with pytest.raises(ValueError):
            induced_q_claim(builtin_claims()[0])


class TestScan:
    def test_finds_c5(self):
        survivors = scan_for_C(5, 4, 5, 6, 100)
        assert 5 in [c for c, _ in survivors]
        assert 1 not in [c for c, _ in survivors]
        assert q_count_brute(1, 4) == 7

    def test_q7(self):
        assert 7 in [c for c, _ in scan_for_C(7, 5, 7, 8, 100)]

    def test_empty(self):
        assert scan_for_C(5, 4, 5, 0, 100) == []

    def test_reports_all_pass(self):
        assert all(rep.passed for _, rep in scan_for_C(11, 6, 11, 12, 60))

    def test_deterministic_and_order_independent(self):
        a = scan_for_C(5, 4, 5, 12, 80)
        b = scan_for_C(5, 4, 5, 12, 80)
        assert [(c, r.to_dict()) for c, r in a] == [(c, r.to_dict()) for c, r in b]
        piecewise = [
            (C, verify_congruence(CongruenceClaim("Q", 5, 4, 5, C=C), 80))
            for C in reversed(range(1, 13))
        ]
        survivors = sorted((C, r.to_dict()) for C, r in piecewise if r.passed)
        assert survivors == [(c, r.to_dict()) for c, r in a]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 20), st.integers(2, 13))
def test_passing_p_claim_induces_passing_q_claim(A, B, m):
    claim = CongruenceClaim("P", A, B, m)
    if verify_congruence(claim, 30).passed:
        assert verify_congruence(induced_q_claim(claim), 30).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 30), st.integers(2, 11), st.integers(1, 8))
def test_report_consistency(A, B, m, C):
    rep = verify_congruence(CongruenceClaim("Q", A, B, m, C=C), 25)
    assert rep.passed == (rep.failures == 0) == (not rep.counterexamples)
    for cx in rep.counterexamples:
        assert cx.residue == q_count(C, A * cx.n + B) % m != 0
