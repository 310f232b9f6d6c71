"""Maximum-period codes of length ``p^t`` over Z_p, built level by level.

Level ``t + 1`` tracks come from level ``t`` tracks through the prime-p
recursion.  Fixing the free words ``(Z, Y_1, ..., Y_(p-2))`` and running the
level-``t`` ordering through it gives a *component*: a chain of tracks in
which neighbours differ in one coordinate of the last block.  Two
components join wherever a window of one is a single-coordinate change of a
window of the other, which happens when their free words differ in one
position and the ``X`` terms compensate.  The merge is a rotation-extension
search that treats each component as an unbreakable segment.
"""
from __future__ import annotations

import itertools

from ..errors import GuardExceeded, PreconditionError
from ..operators import general_p_recursion
from .code import Stgc
from .construct import construct_thm7
from .difference import build_diff_ordering
from .ordering import SdsOrdering, TrackSpace, find_cyclic_order, ordering_from_windows

#: Largest code period built by :func:`build_recursive_stgc`.
PERIOD_GUARD = 10**6


def components(p: int, level: SdsOrdering) -> list[list[tuple[int, ...]]]:
    """Windows of every component over the aligned tracks of ``level``."""
    b = level.track_length // p
    xs = [s.elems[:b] for s in level.seqs]
    words = list(itertools.product(range(p), repeat=b))
    zs = [w for w in words if w[0] == 0]
    out = []
    for z in zs:
        for ys in itertools.product(words, repeat=p - 2):
            chain = [general_p_recursion(p, x, z, ys).elems[: p * b] for x in xs]
            out.append(chain)
    return out


def build_recursive_ordering(p: int, t: int, *, seed: int = 0) -> SdsOrdering:
    if p not in (3, 5):
        raise PreconditionError("recursive construction is limited to p in {3, 5}")
    if t < 1:
        raise PreconditionError("t must be >= 1")
    n = p**t
    if p**n > PERIOD_GUARD:
        raise GuardExceeded(f"period {p}^{n} exceeds guard {PERIOD_GUARD}")
    if t == 1:
        return build_diff_ordering(p, seed=seed)
    level = build_recursive_ordering(p, t - 1, seed=seed)
    space = TrackSpace(p, n, p)
    flat, ell = find_cyclic_order(space, components(p, level), seed=seed, max_steps=500_000)
    return ordering_from_windows(space, flat, ell)


def build_recursive_stgc(p: int, t: int, *, seed: int = 0) -> Stgc:
    """Length ``p^t``, period ``p^(p^t)`` code containing every word once."""
    return construct_thm7(build_recursive_ordering(p, t, seed=seed))
