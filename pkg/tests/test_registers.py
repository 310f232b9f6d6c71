import math
from fractions import Fraction

import numpy as np
import pytest

from selfdual.errors import GuardExceeded, PreconditionError
from selfdual.registers import (
    CountReport,
    RegisterSpec,
    ccr,
    count_ccr_by_period,
    count_ccr_formula,
    count_mccr_formula,
    cycle_report,
    fsr_cycles,
    kernel_poly_cycles,
    sd_count,
    verify_count_identity,
    verify_mccr_identity,
)
from selfdual.zmseq import CyclicSeq, enumerate_sds, is_self_dual, period


def strs(cycles):
    return [str(c) for c in cycles]


def burnside_count(m, n):
    """Cycles of the m-CCR_n as orbits of the cyclic group generated by its state map."""
    size = m**n
    states = np.arange(size)
    succ = (states % (size // m)) * m + (states // (size // m) + 1) % m
    order = m * n
    fixed = 0
    cur = states.copy()
    for _ in range(order):
        fixed += int(np.count_nonzero(cur == states))
        cur = succ[cur]
    assert fixed % order == 0
    return fixed // order


def test_fsr_cycles_examples():
    assert strs(fsr_cycles(ccr(3))) == ["01", "000111"]
    assert strs(fsr_cycles(ccr(1))) == ["01"]
    cycles = fsr_cycles(ccr(3, 3))
    assert len(cycles) == 3 and all(len(c) == 9 for c in cycles)


def test_fsr_cycles_partition_and_structure():
    for m, n in [(2, 7), (3, 4), (4, 3), (5, 2), (2, 10)]:
        cycles = fsr_cycles(ccr(n, m))
        assert sum(len(c) for c in cycles) == m**n
        for c in cycles:
            assert is_self_dual(c, block_form=False)
            assert (m * n) % period(c) == 0 and n % period(c) != 0


def test_fsr_rejects_non_permutation_and_guard():
    spec = RegisterSpec(3, 2, lambda x: np.zeros(len(x), dtype=int), "zero")
    with pytest.raises(PreconditionError):
        fsr_cycles(spec)
    with pytest.raises(GuardExceeded):
        fsr_cycles(ccr(24))
    with pytest.raises(PreconditionError):
        ccr(3, 4, r=2)


def test_register_cycles_need_not_have_block_form():
    c = CyclicSeq(3, (0, 0, 2, 2, 1, 1))
    assert c in fsr_cycles(ccr(4, 3))
    assert is_self_dual(c, block_form=False) and not is_self_dual(c)


def test_other_feedback_constants():
    # r = 2 over Z_3 is another permutation with the same cycle count
    assert len(fsr_cycles(ccr(4, 3, r=2))) == count_mccr_formula(3, 4)


@pytest.mark.parametrize("n,expected", [(3, 2), (6, 6), (5, 4), (1, 1)])
def test_count_ccr_formula_examples(n, expected):
    assert count_ccr_formula(n) == expected


def test_count_mccr_examples():
    assert count_mccr_formula(3, 3) == 3
    assert count_mccr_formula(3, 9) == 729
    for n in range(1, 15):
        assert count_mccr_formula(2, n) == count_ccr_formula(n)


def test_congruent_rule_is_not_integral():
    assert count_mccr_formula(3, 2, "congruent") == Fraction(3, 2)
    assert count_mccr_formula(3, 2) == 2 == len(fsr_cycles(ccr(2, 3)))
    with pytest.raises(PreconditionError):
        count_mccr_formula(3, 2, "other")


@pytest.mark.parametrize("m,n", [(2, 9), (3, 4), (3, 6), (4, 4), (5, 3), (6, 4), (6, 3)])
def test_three_routes_agree(m, n):
    assert count_mccr_formula(m, n) == len(fsr_cycles(ccr(n, m))) == burnside_count(m, n)


def test_sd_count_examples():
    assert sd_count(2, 4) == 1
    assert sd_count(2, 6) == 1
    assert sd_count(2, 3) == 0
    assert sd_count(2, 12) == 5


@pytest.mark.parametrize("n", [1, 3, 6])
def test_count_identity_examples(n):
    rep = verify_count_identity(n)
    assert rep.passed
    assert "PASS" in rep.to_text()


def test_count_identity_terms():
    rep = verify_count_identity(6)
    assert rep.terms == {4: 1, 12: 5}
    assert verify_count_identity(3).terms == {2: 1, 6: 1}


def test_mccr_identity_reports():
    rep = verify_mccr_identity(3, 3)
    assert rep.cycle_count == 3 and rep.stated_sum == 3
    assert "stated" in rep.matches
    assert verify_mccr_identity(2, 3).cycle_count == 2
    rep = verify_mccr_identity(3, 2)
    assert rep.cycle_count == 2
    assert "m=3 n=2" in rep.to_text()


def test_plain_divisor_set_counts_cycles_for_prime_modulus():
    # every cycle is an SDS whose period divides mn but not n
    for m, n in [(3, 1), (3, 2), (3, 4), (5, 2)]:
        assert "plain" in verify_mccr_identity(m, n).matches


@pytest.mark.parametrize(
    "i,p,buckets", [(1, 3, {4: 1, 12: 5}), (2, 3, {8: 2, 24: 170}), (1, 5, {4: 1, 20: 51})]
)
def test_period_buckets(i, p, buckets):
    formula = count_ccr_by_period(i, p)
    assert formula.by_period == buckets
    assert formula.total_cycles == count_ccr_formula(2**i * p)
    assert count_ccr_by_period(i, p, "brute").by_period == buckets


def test_count_report_text_roundtrip():
    rep = cycle_report(ccr(6))
    assert CountReport.from_text(rep.to_text()) == rep
    assert rep.to_text() == "m=2 n=6 total=6 periods={4:1,12:5} source=brute"
    with pytest.raises(PreconditionError):
        CountReport.from_text("garbage")
    with pytest.raises(PreconditionError):
        CountReport(2, 3, 5, {6: 1}, "brute")


def test_kernel_cycles():
    assert strs(kernel_poly_cycles(0)) == ["01"]
    assert strs(kernel_poly_cycles(1)) == ["0011"]
    assert strs(kernel_poly_cycles(2)) == ["00001111", "00101101"]
    for k in range(3):
        full = [c for c in fsr_cycles(ccr(2**k)) if len(c) == 2 ** (k + 1)]
        assert kernel_poly_cycles(k) == enumerate_sds(2, 2 ** (k + 1)) == full
    with pytest.raises(GuardExceeded):
        kernel_poly_cycles(4)


def test_big_integers_are_exact():
    rep = count_ccr_by_period(4, 7)
    assert rep.by_period[2**5 * 7] == (2 ** (16 * 7) - 2**16) // (2**5 * 7)
    assert math.gcd(rep.total_cycles, 1) == 1
