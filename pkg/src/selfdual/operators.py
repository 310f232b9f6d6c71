"""Difference operators and recursive SDS constructions.

``D = E - 1`` is the cyclic forward difference.  Over Z_p the power
``D^(p^k)`` collapses to ``E^(p^k) - 1``, i.e. the block difference
:func:`delta` with block length ``p^k``; the recursions below invert it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .zmseq import CyclicSeq, Word, is_self_dual, necklace

# ---------------------------------------------------------------------------
# D and its inverse


def apply_D(s: CyclicSeq) -> CyclicSeq:
    """``D[s_1..s_k] = [s_2 - s_1, ..., s_1 - s_k]`` modulo m."""
    e, m = s.elems, s.modulus
    return CyclicSeq(m, tuple((e[(i + 1) % len(e)] - e[i]) % m for i in range(len(e))))


def apply_D_pow(s: CyclicSeq, r: int) -> CyclicSeq:
    if r < 0:
        raise PreconditionError("power must be >= 0")
    for _ in range(r):
        s = apply_D(s)
    return s


@dataclass(frozen=True)
class PreimageResult:
    """A set of preimages under D (or under a block difference)."""

    kind: str  # "single_period" | "sds_doubled" | "family"
    sequences: tuple[CyclicSeq, ...]
    parameter_arity: int

    def __post_init__(self) -> None:
        lengths = {len(s) for s in self.sequences}
        moduli = {s.modulus for s in self.sequences}
        if len(lengths) > 1 or len(moduli) > 1:
            raise PreconditionError("preimages must share length and modulus")
        if self.kind == "sds_doubled" and not all(map(is_self_dual, self.sequences)):
            raise PreconditionError("sds_doubled preimages must be self-dual")


def _running_sum(elems: Sequence[int], start: int, runs: int, m: int) -> tuple[int, ...]:
    out = []
    acc = start
    for _ in range(runs):
        for x in elems:
            out.append(acc)
            acc = (acc + x) % m
    return tuple(out)


def apply_D_inv(s: CyclicSeq) -> PreimageResult:
    """All running-sum preimages of ``s``.

    With ``t = sum(s) mod m`` and ``e = m / gcd(t, m)`` the preimage has
    length ``e * len(s)``; starting values ``0 .. gcd(t, m) - 1`` give one
    sequence per rotation class.  ``apply_D`` of each result is ``s``
    repeated ``e`` times, aligned.
    """
    m = s.modulus
    t = sum(s.elems) % m
    g = math.gcd(t, m)
    e = m // g
    seqs = tuple(CyclicSeq(m, _running_sum(s.elems, a, e, m)) for a in range(g))
    if e == 1:
        kind = "single_period" if m == 2 else "family"
    elif e == m and all(map(is_self_dual, seqs)):
        kind = "sds_doubled"
    else:
        kind = "family"
    return PreimageResult(kind, seqs, 1 if g > 1 else 0)


def apply_D_inv_pow(s: CyclicSeq, r: int) -> PreimageResult:
    """``D^(-r)``: zero-leading preimages at intermediate levels, full family at the last."""
    if r < 1:
        raise PreconditionError("power must be >= 1")
    for _ in range(r - 1):
        s = apply_D_inv(s).sequences[0]
    return apply_D_inv(s)


# ---------------------------------------------------------------------------
# block operators


def _blocks(s: CyclicSeq, block_len: int) -> list[tuple[int, ...]]:
    if block_len < 1 or len(s) % block_len:
        raise PreconditionError(f"block length {block_len} does not divide {len(s)}")
    e = s.elems
    return [e[i : i + block_len] for i in range(0, len(e), block_len)]


def delta(s: CyclicSeq, block_len: int) -> CyclicSeq:
    """Blockwise cyclic difference ``[X_2 - X_1, X_3 - X_2, ..., X_1 - X_r]``."""
    m = s.modulus
    blocks = _blocks(s, block_len)
    r = len(blocks)
    out: list[int] = []
    for i in range(r):
        out.extend((y - x) % m for x, y in zip(blocks[i], blocks[(i + 1) % r]))
    return CyclicSeq(m, tuple(out))


def delta_inv(s: CyclicSeq, block_len: int, y) -> CyclicSeq:
    """``[Y, Y + X_1, Y + X_1 + X_2, ...]``, continued until the offset returns to zero.

    If the blocks of ``s`` sum to ``Z != 0`` the pattern repeats with offsets
    ``Z, 2Z, ...`` for as many rounds as the order of ``Z``; in the binary
    case that doubles the length.  ``delta(delta_inv(s, b, y), b)`` is ``s``
    repeated accordingly.
    """
    m = s.modulus
    blocks = _blocks(s, block_len)
    y = tuple(y)
    if len(y) != block_len:
        raise PreconditionError(f"Y has length {len(y)}, expected {block_len}")
    z = [sum(col) % m for col in zip(*blocks)]
    rounds = m // math.gcd(m, *z)
    acc = [v % m for v in y]
    out: list[int] = []
    for _ in range(rounds):
        for blk in blocks:
            out.extend(acc)
            acc = [(a + x) % m for a, x in zip(acc, blk)]
    return CyclicSeq(m, tuple(out))


def recurse_ccr_sds(sds_set: Iterable[CyclicSeq], n: int) -> list[CyclicSeq]:
    """Apply ``delta_inv`` at block length ``n`` with every ``Y`` to the cycles of CCR_n.

    Inputs may be given at any length dividing ``2n`` (they are repeated up
    to ``2n``).  Returns the deduplicated canonical classes, which are the
    cycles of CCR_2n.
    """
    found = set()
    for s in sds_set:
        if (s.modulus * n) % len(s):
            raise PreconditionError(f"length of {s} does not divide {s.modulus * n}")
        if not is_self_dual(s):
            raise PreconditionError(f"{s} is not self-dual")
        full = CyclicSeq(s.modulus, s.elems * ((s.modulus * n) // len(s)))
        for y in itertools.product(range(s.modulus), repeat=n):
            found.add(necklace(delta_inv(full, n, y)))
    return sorted(found, key=lambda c: (len(c), c.elems))


# ---------------------------------------------------------------------------
# prime-p recursions


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class PascalRows:
    prime: int
    rows: tuple[tuple[int, ...], ...]


def pascal_rows(p: int) -> PascalRows:
    """Rows ``0 .. p-1`` of Pascal's triangle reduced mod ``p``."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if p > 23:
        raise PreconditionError("pascal_rows limited to p <= 23")
    return PascalRows(p, tuple(tuple(math.comb(r, j) % p for j in range(r + 1)) for r in range(p)))


def _as_tuple(w) -> tuple[int, ...]:
    return tuple(w.elems) if isinstance(w, (Word, CyclicSeq)) else tuple(w)


def _is_power(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


def general_p_recursion(p: int, x, z, ys: Sequence) -> CyclicSeq:
    """Lift a period-``p^n`` SDS ``[X, X+1, ..., X+p-1]`` to period ``p^(n+1)``.

    Returns ``[V, V+1, ..., V+p-1]`` where block ``j`` of ``V`` is
    ``sum_k C(j, k) U_k`` with ``U_0 = Z``, ``U_k = Y_(p-1-k)`` for
    ``1 <= k <= p-2`` and ``U_(p-1) = X``.  The blocks of ``V`` sum to ``X``,
    so ``p - 1`` block differences of length ``p^(n-1)`` recover the source.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    x, z = _as_tuple(x), _as_tuple(z)
    ys = [_as_tuple(y) for y in ys]
    if len(ys) != p - 2:
        raise PreconditionError(f"need {p - 2} free words, got {len(ys)}")
    b = len(x)
    if any(len(w) != b for w in [z, *ys]) or not _is_power(b, p):
        raise PreconditionError(f"all words must share a length that is a power of {p}")
    if z[0] != 0:
        raise PreconditionError("Z must start with zero")
    # [X, X+1, ...] always has full period p*b here: a period dividing b
    # would make X+1 = X.
    us = [z, *reversed(ys), x]
    v: list[int] = []
    for j in range(p):
        row = [math.comb(j, k) % p for k in range(j + 1)]
        v.extend(sum(row[k] * us[k][i] for k in range(j + 1)) % p for i in range(b))
    return CyclicSeq(p, tuple((a + c) % p for c in range(p) for a in v))


def z3_recursion(x, z, y) -> CyclicSeq:
    """``[V, V+1, V+2]`` with ``V = (Z, Z+Y, Z+2Y+X)`` over Z_3."""
    return general_p_recursion(3, x, z, [y])


def z5_recursion(x, z, y1, y2, y3) -> CyclicSeq:
    """``[V, ..., V+4]`` with ``V = (Z, Z+Y3, Z+2Y3+Y2, Z+3Y3+3Y2+Y1, Z+4Y3+Y2+4Y1+X)``."""
    return general_p_recursion(5, x, z, [y1, y2, y3])
