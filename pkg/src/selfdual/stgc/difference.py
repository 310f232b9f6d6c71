"""Length-``m``, period-``m^m`` codes from difference words.

A self-dual sequence of length ``m^2`` over Z_m is ``[V, V+1, ..., V+m-1]``
with ``V`` of length ``m``; the first ``m + 1`` digits ``0 x_2 ... x_m 1`` of
the representative starting with zero determine it.  Their ``m`` successive
differences sum to 1, and rotating the difference word rotates the
sequence by one place.  So the ``m^(m-2)`` rotation classes of difference
words index the sequences, and every length-``m`` word appears in exactly
one of them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import PreconditionError
from ..tables import QUATERNARY_DIFFS, TERNARY_ARRAY, columns
from ..zmseq import CyclicSeq, canonical_elems
from .code import Stgc
from .construct import construct_thm7
from .ordering import (
    SdsOrdering,
    TrackSpace,
    closing_shift,
    find_cyclic_order,
    ordering_from_windows,
)


@dataclass(frozen=True)
class DiffSeq:
    modulus: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(int(x) % self.modulus for x in self.digits))
        if len(self.digits) != self.modulus:
            raise PreconditionError(f"a difference word over Z_{self.modulus} has length {self.modulus}")
        if sum(self.digits) % self.modulus != 1 % self.modulus:
            raise PreconditionError(f"differences {self.digits} do not sum to 1 mod {self.modulus}")

    def window(self) -> tuple[int, ...]:
        """The determining word ``0, x_2, ..., x_m`` (running sums)."""
        out = [0]
        for d in self.digits[:-1]:
            out.append((out[-1] + d) % self.modulus)
        return tuple(out)


def diff_to_sds(d: DiffSeq) -> CyclicSeq:
    m = d.modulus
    v = d.window()
    return CyclicSeq(m, tuple((x + j) % m for j in range(m) for x in v))


def sds_to_diff(s: CyclicSeq) -> DiffSeq:
    """Differences of the first ``m + 1`` digits (any alignment of the sequence)."""
    m = s.modulus
    if len(s) != m * m:
        raise PreconditionError(f"expected length {m * m}, got {len(s)}")
    e = s.elems
    return DiffSeq(m, tuple((e[i + 1] - e[i]) % m for i in range(m)))


def difference_classes(m: int) -> list[DiffSeq]:
    """Least rotation of each class of difference words summing to 1, in lexicographic order."""
    if m < 2:
        raise PreconditionError("m must be >= 2")
    reps = set()
    for head in itertools.product(range(m), repeat=m - 1):
        word = head + ((1 - sum(head)) % m,)
        reps.add(canonical_elems(word))
    return [DiffSeq(m, w) for w in sorted(reps)]


def align_tracks(diffs: list[DiffSeq]) -> list[CyclicSeq]:
    """Shift each sequence by whole blocks to sit ``m`` coordinates from its predecessor.

    Only block shifts (adding a constant) are used, so every aligned track
    still starts with the window its difference word determines, up to the
    constant.  The smallest working constant is taken.
    """
    m = diffs[0].modulus
    out = [diff_to_sds(diffs[0])]
    for i, d in enumerate(diffs[1:], 1):
        t = diff_to_sds(d).elems
        prev = out[-1].elems
        for c in range(m):
            cand = t[c * m :] + t[: c * m]
            if sum(x != y for x, y in zip(prev, cand)) == m:
                out.append(CyclicSeq(m, cand))
                break
        else:
            raise PreconditionError(f"difference word {i} cannot follow word {i - 1}")
    return out


def _seed_diffs(m: int) -> list[DiffSeq] | None:
    if m == 3:
        tracks = columns(TERNARY_ARRAY)[:3]
        return [sds_to_diff(CyclicSeq(3, t)) for t in tracks]
    if m == 4:
        return [DiffSeq(4, c) for c in columns(QUATERNARY_DIFFS)]
    return None


def ordering_from_diffs(diffs: list[DiffSeq]) -> SdsOrdering:
    m = diffs[0].modulus
    tracks = align_tracks(diffs)
    space = TrackSpace(m, m, m)
    ell = closing_shift(space, tracks[0].elems[:m], tracks[-1].elems[:m])
    if ell is None:
        raise PreconditionError("the last sequence cannot be closed onto the first")
    return SdsOrdering(m, tracks, ell)


def build_diff_ordering(m: int, *, seeded: bool = True, seed: int = 0) -> SdsOrdering:
    """Ordering of the ``m^(m-2)`` sequences of length ``m^2``.

    For ``m = 3, 4`` and ``seeded=True`` the stored reference order is used;
    otherwise the order is searched for.
    """
    if not 3 <= m <= 5:
        raise PreconditionError("difference construction is limited to 3 <= m <= 5")
    diffs = _seed_diffs(m) if seeded else None
    if diffs is not None:
        return ordering_from_diffs(diffs)
    space = TrackSpace(m, m, m)
    segments = [[d.window()] for d in difference_classes(m)]
    flat, ell = find_cyclic_order(space, segments, seed=seed)
    return ordering_from_windows(space, flat, ell)


def build_diff_stgc(m: int, *, seeded: bool = True, seed: int = 0) -> Stgc:
    return construct_thm7(build_diff_ordering(m, seeded=seeded, seed=seed))
