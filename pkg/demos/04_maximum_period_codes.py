"""
Maximum-period codes
====================

Binary length-p codes of period 2^p - 2 come from ordering all full-period
necklaces of length p.  Ternary codes of length 9 and period 3^9 come from
lifting the length-3 code: each choice of free words turns the level-one
ordering into a chain (a component), and the components are merged into one
cyclic order.
"""

import time

import numpy as np

from selfdual.stgc import (
    build_diff_ordering,
    build_recursive_stgc,
    components,
    covers_all_words,
    is_max_period,
    search_thm3_max_period,
    verify_stgc,
)

for p in (3, 5, 7):
    code = search_thm3_max_period(p)
    print(p, code.period, verify_stgc(code).passed, is_max_period(2, p, code.period))

comps = components(3, build_diff_ordering(3))
print(len(comps), "components of", len(comps[0]), "tracks")

start = time.perf_counter()
code = build_recursive_stgc(3, 2)
print(f"built in {time.perf_counter() - start:.1f}s")
rep = verify_stgc(code)
print(rep.to_text())
print("every word once:", covers_all_words(code))

# How often each coordinate changes: equal, as single-track codes require.
changed = (code.rows != np.roll(code.rows, -1, axis=0)).argmax(axis=1)
print(np.bincount(changed))
