"""The three ordering-based code constructions.

Rows are laid out ``k``-major: for ``k = 0, 1, ...`` the windows at offset
``k * ell`` of every track in order.  Consecutive tracks differ in one
coordinate of each window, and the last track of one block differs from
the first track shifted by ``ell`` the same way, which links the blocks.
"""
from __future__ import annotations

import numpy as np

from ..errors import PreconditionError, VerificationFailure
from ..zmseq import CyclicSeq
from .code import Stgc, verify_stgc
from .ordering import SdsOrdering, check_ordering


def _rows(tracks: np.ndarray, ell: int, n: int) -> np.ndarray:
    r, g = tracks.shape
    offsets = (np.arange(g) * ell) % g
    idx = (offsets[:, None] + np.arange(n)) % g  # (g, n)
    return tracks[:, idx].transpose(1, 0, 2).reshape(g * r, n)


def _checked(code: Stgc) -> Stgc:
    report = verify_stgc(code)
    if not report.passed:
        raise VerificationFailure("construction produced an invalid code:\n" + report.to_text())
    return code


def construct_thm3(seqs: list[CyclicSeq], ell: int) -> Stgc:
    """Length ``n``, period ``n*r`` code from ``r`` full-period words of length ``n``.

    Consecutive words must differ in one aligned coordinate, as must the last
    word and the first shifted by ``ell``.
    """
    if not seqs:
        raise PreconditionError("need at least one sequence")
    order = SdsOrdering(seqs[0].modulus, list(seqs), ell, step_distance=1)
    check_ordering(order, self_dual=False)
    tracks = np.array([s.elems for s in seqs], dtype=np.uint8)
    return _checked(Stgc(order.modulus, _rows(tracks, ell, tracks.shape[1])))


def construct_thm7(ordering: SdsOrdering) -> Stgc:
    """Length ``n``, period ``m*n*r`` code from ``r`` aligned self-dual tracks of length ``m*n``."""
    m = ordering.modulus
    if ordering.step_distance != m:
        raise PreconditionError(f"tracks over Z_{m} must step by {m} coordinates")
    check_ordering(ordering)
    g = ordering.track_length
    if g % m:
        raise PreconditionError(f"track length {g} is not a multiple of {m}")
    tracks = np.array([s.elems for s in ordering.seqs], dtype=np.uint8)
    return _checked(Stgc(m, _rows(tracks, ordering.ell, g // m)))


def construct_thm4(ordering: SdsOrdering) -> Stgc:
    """The binary case of :func:`construct_thm7`: tracks of length ``2n`` stepping by two."""
    if ordering.modulus != 2:
        raise PreconditionError("construct_thm4 is the binary construction; use construct_thm7")
    return construct_thm7(ordering)
