"""
Cycles of the complemented cycling register
===========================================

The register of order n over Z_m shifts its state left and feeds back
x_1 + 1.  Every cycle it produces is a self-dual sequence, and the number
of cycles has a closed form.  This script walks a few registers, compares
the counts, and lifts the order-3 cycles to order 6 with the block inverse.
"""

from selfdual import ccr, count_ccr_formula, count_mccr_formula, fsr_cycles
from selfdual.operators import recurse_ccr_sds
from selfdual.registers import count_ccr_by_period, cycle_report, verify_count_identity

# The binary register of order 3 has two cycles: [01] and [000111].
for c in fsr_cycles(ccr(3)):
    print(c, "period", len(c))

# Closed form against brute force, binary and ternary.
for n in range(1, 11):
    print(n, count_ccr_formula(n), len(fsr_cycles(ccr(n))), count_mccr_formula(3, n), len(fsr_cycles(ccr(n, 3))))

# Each cycle count is a sum of self-dual sequence counts over the right divisors.
print(verify_count_identity(6).to_text())

# Periods of the order-12 register split into two buckets.
print(count_ccr_by_period(2, 3).to_text())
print(cycle_report(ccr(12)).to_text())

# Lifting: every cycle of the order-6 register comes from an order-3 cycle.
lifted = recurse_ccr_sds(fsr_cycles(ccr(3)), 3)
print([str(c) for c in lifted])
assert lifted == fsr_cycles(ccr(6))
