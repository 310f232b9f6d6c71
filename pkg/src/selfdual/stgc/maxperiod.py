"""Maximum-period codes: the criterion and the small binary searches."""
from __future__ import annotations

import itertools
from typing import Optional

from ..errors import PreconditionError, SearchFailure
from ..zmseq import CyclicSeq, necklace, period_of

from .code import Stgc
from .construct import construct_thm3
from .ordering import TrackSpace, find_cyclic_order


def is_max_period(m: int, n: int, P: int) -> bool:
    """Whether ``P`` is a maximum period for length-``n`` codes over Z_m.

    Binary: ``2n | P`` and ``2^n - P < 2n``; for prime ``n`` this is
    ``P = 2^n - 2``.  Non-binary: the code uses every word, ``P = m^n``.

    Binary lengths ``2^t`` with ``t > 1`` always give ``False``: the only
    period meeting the inequality is ``2^n`` itself, and it is known that no
    code of that length reaches it.  That is a cited result, not something
    checked here.
    """
    if m < 2 or n < 1 or P < 1:
        raise PreconditionError("need m >= 2, n >= 1, P >= 1")
    if m == 2:
        if n > 2 and n & (n - 1) == 0:
            return False
        return P % (2 * n) == 0 and 2**n - P < 2 * n
    return P == m**n


def search_thm3_max_period(p: int, *, seed: int = 0, max_steps: int = 200_000) -> Optional[Stgc]:
    """Length-``p``, period ``2^p - 2`` binary code from all full-period necklaces, or ``None``."""
    if p not in (3, 5, 7):
        raise PreconditionError("search is limited to p in {3, 5, 7}")
    reps = sorted(
        {necklace(CyclicSeq(2, w)).elems for w in itertools.product((0, 1), repeat=p) if period_of(w) == p}
    )
    space = TrackSpace(2, p, 1)
    try:
        flat, ell = find_cyclic_order(space, [[w] for w in reps], seed=seed, max_steps=max_steps)
    except SearchFailure:
        return None
    return construct_thm3([CyclicSeq(2, w) for w in flat], ell)
