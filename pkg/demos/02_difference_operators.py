"""
Difference operators and the prime recursion
============================================

D is the cyclic forward difference.  Over Z_p its p^k-th power is the block
difference with block length p^k, which is what the recursions invert: a
self-dual sequence [X, X+1, ..., X+p-1] of period p^n is lifted to one of
period p^(n+1), with Pascal's triangle mod p supplying the coefficients.
"""

import itertools

from selfdual import CyclicSeq, apply_D, apply_D_inv, apply_D_pow, delta, delta_inv, necklace
from selfdual.operators import general_p_recursion, pascal_rows, z3_recursion
from selfdual.zmseq import enumerate_sds

s = CyclicSeq.from_str("0011")
print("D  ", apply_D(s), " D^2", apply_D_pow(s, 2))

# An odd-weight binary sequence has one preimage, and it is self-dual of twice the length.
print(apply_D_inv(CyclicSeq.from_str("10")))

# Block inverse on [000111] with Y = 000 and 001.
for y in [(0, 0, 0), (0, 0, 1)]:
    lifted = delta_inv(CyclicSeq.from_str("000111"), 3, y)
    print(y, lifted, "->", delta(lifted, 3))

# The block difference really is a power of D over Z_p.
t = CyclicSeq.from_str("012022110", 3)
print(delta(t, 3) == apply_D_pow(t, 3))

print(pascal_rows(5).rows)

# Lifting the three ternary sequences of period 9 with every Z (leading zero) and Y
sources = [c.elems[:3] for c in enumerate_sds(3, 9)]
words = list(itertools.product(range(3), repeat=3))
out = {necklace(z3_recursion(x, z, y)) for x in sources for z in words if z[0] == 0 for y in words}
print(len(out), "classes of period 27")

# The same rule for p = 7
print(general_p_recursion(7, (0,), (0,), [(1,), (0,), (0,), (0,), (0,)]))
