"""
Codes of length m and period m^m from difference words
======================================================

A self-dual sequence of length m^2 is fixed by its first m + 1 digits
0 x_2 ... x_m 1, hence by their m differences, which sum to 1.  Ordering the
m^(m-2) rotation classes of such difference words so that neighbours share
a run of m - 2 digits gives sequences one step apart, and the windowing
construction turns them into a single-track Gray code.
"""

from selfdual.stgc import (
    build_diff_ordering,
    construct_thm7,
    covers_all_words,
    difference_classes,
    sds_to_diff,
    verify_stgc,
)
from selfdual.worked import run_worked

print(len(difference_classes(4)), "difference classes for m = 4")

order = build_diff_ordering(4)
for s in order.seqs[:4]:
    print(s, sds_to_diff(s).digits)
print("closing shift", order.ell)

code = construct_thm7(order)
print(verify_stgc(code).to_text())
print("every word once:", covers_all_words(code))

# The stored reference arrays are regenerated digit for digit.
print(run_worked(4).text)

# m = 5 has no stored order; the ordering is found by search.
code5 = construct_thm7(build_diff_ordering(5))
print(code5.period, verify_stgc(code5).passed, covers_all_words(code5))
