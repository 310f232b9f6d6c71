"""Cyclic orderings of rotation classes with single-coordinate transitions.

Every construction in this package reduces to the same combinatorial problem.
Each codeword ``v`` of length ``n`` lives on a *track*: the plain cyclic word
``v`` itself (length ``n``), or the self-dual sequence
``[v, v+1, ..., v+(m-1)]`` of length ``mn``.  Rotating the track moves the
window ``v`` along it, and that rotation is a coordinate permutation (plus a
constant on one coordinate), so Hamming distance between windows is
unchanged when both are rotated by the same amount.

We need one aligned representative per track class, listed so that
consecutive windows differ in one coordinate and the last differs in one
coordinate from the first rotated by a unit ``ell``.  On tracks this is the
"differ in exactly ``copies`` coordinates" condition.

The search is a Posa-style rotation-extension walk over *segments* (paths of
classes that must stay together).  When the walk gets stuck, a neighbour of
the current end found at the exit of an earlier segment becomes a pivot: the
tail after the pivot is reversed and rigidly rotated so that it attaches
there.  Rigid rotation keeps every internal transition valid.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..errors import PreconditionError, SearchFailure
from ..zmseq import CyclicSeq, canonical_elems, is_self_dual, period

Window = tuple[int, ...]


@dataclass(frozen=True)
class TrackSpace:
    """Windows of length ``length`` over Z_modulus on tracks of ``copies`` blocks."""

    modulus: int
    length: int
    copies: int

    @property
    def track_length(self) -> int:
        return self.length * self.copies

    def track(self, v: Sequence[int]) -> tuple[int, ...]:
        m = self.modulus
        return tuple((x + j) % m for j in range(self.copies) for x in v)

    def rotate(self, v: Window, a: int) -> Window:
        t = self.track(v)
        a %= len(t)
        return (t[a:] + t[:a])[: self.length]

    def offset(self, v: Window, w: Window) -> int:
        """The ``a`` with ``rotate(v, a) == w``."""
        t = self.track(v) * 2
        n = self.length
        for a in range(self.track_length):
            if t[a : a + n] == w:
                return a
        raise PreconditionError(f"{w} is not a window of the track of {v}")

    def key(self, v: Window) -> tuple[int, ...]:
        return canonical_elems(self.track(v))

    def neighbours(self, v: Window) -> list[Window]:
        m = self.modulus
        out = []
        for c, x in enumerate(v):
            for d in range(1, m):
                out.append(v[:c] + ((x + d) % m,) + v[c + 1 :])
        return out

    def units(self) -> list[int]:
        g = self.track_length
        return [a for a in range(1, g) if math.gcd(a, g) == 1] or [1]


def hamming1(a: Window, b: Window) -> bool:
    return sum(x != y for x, y in zip(a, b)) == 1


@dataclass
class SdsOrdering:
    """Aligned tracks ``seqs`` in order, closed by the shift ``ell``.

    ``step_distance`` is the number of aligned coordinates in which
    consecutive tracks must differ: ``m`` for self-dual tracks of length
    ``mn``, 1 for plain words.
    """

    modulus: int
    seqs: list[CyclicSeq]
    ell: int
    step_distance: int = field(default=0)

    def __post_init__(self) -> None:
        if not self.seqs:
            raise PreconditionError("an ordering needs at least one sequence")
        if not self.step_distance:
            self.step_distance = self.modulus

    @property
    def track_length(self) -> int:
        return len(self.seqs[0])


def check_ordering(o: SdsOrdering, self_dual: bool = True) -> None:
    """Raise :class:`PreconditionError` naming the first violated condition."""
    k = o.track_length
    keys = set()
    for i, s in enumerate(o.seqs):
        if s.modulus != o.modulus or len(s) != k:
            raise PreconditionError(f"sequence {i}: expected length {k} over Z_{o.modulus}")
        if period(s) != k:
            raise PreconditionError(f"sequence {i}: period {period(s)} is not the full length {k}")
        if self_dual and not is_self_dual(s):
            raise PreconditionError(f"sequence {i} is not self-dual")
        key = canonical_elems(s.elems)
        if key in keys:
            raise PreconditionError(f"sequence {i} repeats an earlier rotation class")
        keys.add(key)
    if math.gcd(o.ell, k) != 1:
        raise PreconditionError(f"ell={o.ell} is not a unit modulo {k}")
    d = o.step_distance
    for i in range(len(o.seqs) - 1):
        h = _dist(o.seqs[i].elems, o.seqs[i + 1].elems)
        if h != d:
            raise PreconditionError(f"sequences {i} and {i + 1} differ in {h} coordinates, need {d}")
    first = o.seqs[0].elems
    shifted = first[o.ell % k :] + first[: o.ell % k]
    h = _dist(o.seqs[-1].elems, shifted)
    if h != d:
        raise PreconditionError(
            f"last sequence and first shifted by ell={o.ell} differ in {h} coordinates, need {d}"
        )


def _dist(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


def closing_shift(space: TrackSpace, first: Window, last: Window) -> Optional[int]:
    """Smallest unit ``ell`` with ``last`` one step from ``first`` rotated by ``ell``."""
    for ell in space.units():
        if hamming1(last, space.rotate(first, ell)):
            return ell
    return None


# ---------------------------------------------------------------------------
# the search


class _Walk:
    def __init__(self, space: TrackSpace, segments: list[list[Window]], rng: random.Random):
        self.space = space
        self.segments = segments
        self.rng = rng
        self._keys: dict[Window, tuple] = {}
        self.owner: dict[tuple, tuple[int, int]] = {}
        for si, seg in enumerate(segments):
            for pos, v in enumerate(seg):
                k = self.key(v)
                if k in self.owner:
                    raise PreconditionError(f"segments {self.owner[k][0]} and {si} share a class")
                self.owner[k] = (si, pos)
        self._nbrs: dict[Window, list[Window]] = {}

    def key(self, v: Window) -> tuple:
        k = self._keys.get(v)
        if k is None:
            k = self._keys[v] = self.space.key(v)
        return k

    def neighbours(self, v: Window) -> list[Window]:
        out = self._nbrs.get(v)
        if out is None:
            out = self._nbrs[v] = [w for w in self.space.neighbours(v) if self.key(w) in self.owner]
        return out

    def entry(self, w: Window) -> Optional[tuple[int, list[Window]]]:
        """Segment whose endpoint class contains ``w``, oriented and aligned to start at ``w``."""
        si, pos = self.owner[self.key(w)]
        seg = self.segments[si]
        if pos == 0:
            oriented = seg
        elif pos == len(seg) - 1:
            oriented = seg[::-1]
        else:
            return None
        a = self.space.offset(oriented[0], w)
        return si, [self.space.rotate(x, a) for x in oriented]


def find_cyclic_order(
    space: TrackSpace,
    segments: Iterable[Sequence[Window]],
    *,
    seed: int = 0,
    max_steps: int = 200_000,
) -> tuple[list[Window], int]:
    """Order all segments into one path and close it with a unit shift.

    Returns the aligned windows and ``ell``.  Raises :class:`SearchFailure`
    after ``max_steps`` extension/rotation moves.

    Every coordinate of the resulting code changes somewhere: the row at
    offset ``k*ell`` moves the changed coordinate by ``-k*ell`` modulo ``n``,
    and a unit ``ell`` reaches every residue.
    """
    segs = [list(map(tuple, s)) for s in segments]
    if not segs or any(not s for s in segs):
        raise PreconditionError("segments must be non-empty")
    for si, seg in enumerate(segs):
        for j in range(len(seg) - 1):
            if not hamming1(seg[j], seg[j + 1]):
                raise PreconditionError(f"segment {si} breaks at position {j}")
    rng = random.Random(seed)
    walk = _Walk(space, segs, rng)
    total = len(segs)

    path: list[list[Window]] = [segs[0]]
    placed = {0: 0}  # segment id -> index in path
    seg_id = [0]
    for step in range(max_steps):
        end = path[-1][-1]
        if len(path) == total:
            ell = closing_shift(space, path[0][0], end)
            if ell is not None:
                return [v for s in path for v in s], ell
            if rng.random() < 0.5:
                path = [s[::-1] for s in path[::-1]]
                seg_id.reverse()
                placed = {s: i for i, s in enumerate(seg_id)}
                continue
        else:
            options = []
            for w in walk.neighbours(end):
                si = walk.owner[walk.key(w)][0]
                if si in placed:
                    continue
                hit = walk.entry(w)
                if hit is None:
                    continue
                tail = hit[1][-1]
                free = sum(1 for x in walk.neighbours(tail) if walk.owner[walk.key(x)][0] not in placed)
                options.append((free, rng.random(), hit))
            if options:
                _, _, (si, aligned) = min(options, key=lambda o: o[:2])
                placed[si] = len(path)
                seg_id.append(si)
                path.append(aligned)
                continue

        # rotation: attach the end to the exit of an earlier segment
        pivots = []
        for w in walk.neighbours(end):
            si, _ = walk.owner[walk.key(w)]
            j = placed.get(si)
            if j is None or j >= len(path) - 1:
                continue
            exit_ = path[j][-1]
            if walk.key(exit_) == walk.key(w):
                pivots.append((j, space.offset(exit_, w)))
        if not pivots:
            # no pivot at all: restart from a random segment
            start = rng.randrange(total)
            path, seg_id, placed = [segs[start]], [start], {start: 0}
            continue
        j, a = rng.choice(pivots)
        tail = [[space.rotate(x, -a) for x in s[::-1]] for s in path[j + 1 :][::-1]]
        path = path[: j + 1] + tail
        seg_id = seg_id[: j + 1] + seg_id[j + 1 :][::-1]
        placed = {s: i for i, s in enumerate(seg_id)}
    raise SearchFailure(
        f"no closed ordering of {total} segments within {max_steps} steps "
        f"(last path covered {len(path)} segments)"
    )



def ordering_from_windows(space: TrackSpace, windows: Sequence[Window], ell: int) -> SdsOrdering:
    seqs = [CyclicSeq(space.modulus, space.track(v)) for v in windows]
    return SdsOrdering(space.modulus, seqs, ell, step_distance=space.copies)


def full_order_windows(m: int, n: int) -> list[Window]:
    """One window per rotation class of self-dual sequences of period exactly ``m*n``."""
    from ..zmseq import enumerate_sds

    return [s.elems[:n] for s in enumerate_sds(m, m * n)]


def find_sds_ordering(m: int, n: int, *, seed: int = 0, max_steps: int = 200_000) -> SdsOrdering:
    """Search for an ordering of all full-order SDSs of length ``m*n``.

    Not every ``(m, n)`` admits one; failure raises :class:`SearchFailure`.
    """
    space = TrackSpace(m, n, m)
    windows = full_order_windows(m, n)
    if not windows:
        raise PreconditionError(f"no self-dual sequences of period {m * n} over Z_{m}")
    flat, ell = find_cyclic_order(space, [[v] for v in windows], seed=seed, max_steps=max_steps)
    return ordering_from_windows(space, flat, ell)
