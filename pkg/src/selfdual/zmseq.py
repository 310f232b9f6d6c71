"""Cyclic sequences and words over Z_m.

A :class:`CyclicSeq` stores one concrete rotation of a cyclic sequence.  The
stored alignment matters for coordinatewise comparisons (:func:`hamming`);
rotation-insensitive comparisons go through :func:`canonical`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded, PreconditionError

#: Upper bound on candidate sequences examined by :func:`enumerate_sds`.
ENUMERATION_GUARD = 10**7

# Above this many candidates the "auto" strategy switches to the block form.
_EXHAUSTIVE_AUTO_LIMIT = 1 << 14


def _check_elems(modulus: int, elems: tuple[int, ...]) -> None:
    if modulus < 2:
        raise PreconditionError(f"modulus must be >= 2, got {modulus}")
    if not elems:
        raise PreconditionError("sequence must have length >= 1")
    for x in elems:
        if not 0 <= x < modulus:
            raise PreconditionError(f"element {x} out of range for Z_{modulus}")


@dataclass(frozen=True, order=True)
class CyclicSeq:
    """A sequence over Z_m regarded up to rotation, stored at a fixed alignment."""

    modulus: int
    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elems", tuple(int(x) for x in self.elems))
        _check_elems(self.modulus, self.elems)

    @classmethod
    def from_str(cls, text: str, modulus: int = 2) -> "CyclicSeq":
        """Parse a digit string such as ``"000 111"`` (whitespace ignored)."""
        return cls(modulus, _parse_digits(text, modulus))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __str__(self) -> str:
        return "".join(str(x) for x in self.elems)


@dataclass(frozen=True, order=True)
class Word:
    """A fixed-length (non-cyclic) word over Z_m."""

    modulus: int
    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elems", tuple(int(x) for x in self.elems))
        _check_elems(self.modulus, self.elems)

    @classmethod
    def from_str(cls, text: str, modulus: int = 2) -> "Word":
        return cls(modulus, _parse_digits(text, modulus))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __str__(self) -> str:
        return "".join(str(x) for x in self.elems)


def _parse_digits(text: str, modulus: int) -> tuple[int, ...]:
    if modulus > 10:
        raise PreconditionError("text format supports only m <= 10")
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if not ch.isdigit():
            raise PreconditionError(f"invalid character {ch!r}")
        d = int(ch)
        if d >= modulus:
            raise PreconditionError(f"digit {d} out of range for Z_{modulus}")
        out.append(d)
    return tuple(out)


# ---------------------------------------------------------------------------
# basic operations


def shift(s: CyclicSeq, k: int) -> CyclicSeq:
    """Cyclic left shift by ``k``: ``E^k [s_1 ... s_n] = [s_{k+1} ... s_k]``."""
    n = len(s.elems)
    k %= n
    return CyclicSeq(s.modulus, s.elems[k:] + s.elems[:k])


def _failure(elems: Sequence[int]) -> list[int]:
    fail = [0] * len(elems)
    k = 0
    for i in range(1, len(elems)):
        while k and elems[i] != elems[k]:
            k = fail[k - 1]
        if elems[i] == elems[k]:
            k += 1
        fail[i] = k
    return fail


def period_of(elems: Sequence[int]) -> int:
    """Smallest ``d`` dividing ``len(elems)`` with ``elems`` a repetition of its first ``d`` items."""
    n = len(elems)
    d = n - _failure(elems)[-1]
    return d if n % d == 0 else n


def period(s: CyclicSeq) -> int:
    return period_of(s.elems)


def primitive(s: CyclicSeq) -> CyclicSeq:
    """The same cyclic sequence stored at its period length."""
    return CyclicSeq(s.modulus, s.elems[: period(s)])


def expand(s: CyclicSeq, length: int) -> CyclicSeq:
    """Repeat ``s`` cyclically up to ``length``; requires ``len(s)`` to divide it."""
    if length % len(s) != 0:
        raise PreconditionError(f"length {length} is not a multiple of {len(s)}")
    return CyclicSeq(s.modulus, s.elems * (length // len(s)))


def add_const(s: CyclicSeq, c: int) -> CyclicSeq:
    m = s.modulus
    return CyclicSeq(m, tuple((x + c) % m for x in s.elems))


def least_rotation(elems: Sequence[int]) -> int:
    """Booth's algorithm: index of the lexicographically least rotation."""
    ss = list(elems) * 2
    n2 = len(ss)
    f = [-1] * n2
    k = 0
    for j in range(1, n2):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:  # here i == -1
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_elems(elems: Sequence[int]) -> tuple[int, ...]:
    t = tuple(elems)
    k = least_rotation(t) % len(t)
    return t[k:] + t[:k]


def canonical(s: CyclicSeq) -> CyclicSeq:
    """Lexicographically least rotation of ``s`` (same stored length)."""
    return CyclicSeq(s.modulus, canonical_elems(s.elems))


def necklace(s: CyclicSeq) -> CyclicSeq:
    """Rotation-class representative at period length; use this for set comparisons."""
    return canonical(primitive(s))


def is_self_dual(s: CyclicSeq, block_form: bool = True) -> bool:
    """True iff ``s`` has the block form ``[X, X+1, ..., X+(m-1)]``.

    Equivalently ``add_const(s, 1) == shift(s, period(s) // m)``.  For m = 2
    this is the usual "equal to its complement up to rotation".  With
    ``block_form=False`` any rotation is accepted, so ``[X, X+2, X+1]`` over
    Z_3 also qualifies; cycles of the m-ary complemented cycling register
    satisfy only this weaker form in general.
    """
    m = s.modulus
    d = period(s)
    if not block_form:
        t = add_const(s, 1).elems[:d]
        return any(s.elems[k:d] + s.elems[:k] == t for k in range(d))
    if d % m:
        return False
    return add_const(s, 1) == shift(s, d // m)


def hamming(a, b) -> int:
    """Number of aligned coordinates where two equal-length words differ."""
    if a.modulus != b.modulus:
        raise PreconditionError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    if len(a.elems) != len(b.elems):
        raise PreconditionError(f"length mismatch: {len(a.elems)} vs {len(b.elems)}")
    return sum(x != y for x, y in zip(a.elems, b.elems))


# ---------------------------------------------------------------------------
# brute-force enumeration


def enumerate_sds(m: int, n: int, method: str = "auto") -> list[CyclicSeq]:
    """All rotation classes of self-dual sequences of period exactly ``n`` over Z_m.

    ``method="exhaustive"`` filters all ``m**n`` sequences; ``"structured"``
    only visits sequences of the block form ``[X, X+1, ..., X+m-1]`` (every
    SDS has this form, so the candidate set is complete).  Results are
    canonical representatives in sorted order.
    """
    if m < 2 or n < 1:
        raise PreconditionError("need m >= 2 and n >= 1")
    if n % m:
        return []
    if method == "auto":
        method = "exhaustive" if m**n <= _EXHAUSTIVE_AUTO_LIMIT else "structured"
    found: set[tuple[int, ...]] = set()
    if method == "exhaustive":
        if m**n > ENUMERATION_GUARD:
            raise GuardExceeded(f"{m}^{n} candidates exceed guard {ENUMERATION_GUARD}")
        for elems in itertools.product(range(m), repeat=n):
            s = CyclicSeq(m, elems)
            if period(s) == n and is_self_dual(s):
                found.add(canonical_elems(elems))
    elif method == "structured":
        b = n // m
        if m**b > ENUMERATION_GUARD:
            raise GuardExceeded(f"{m}^{b} candidates exceed guard {ENUMERATION_GUARD}")
        for x in itertools.product(range(m), repeat=b):
            elems = tuple((v + j) % m for j in range(m) for v in x)
            if period_of(elems) == n:
                found.add(canonical_elems(elems))
    else:
        raise PreconditionError(f"unknown method {method!r}")
    return [CyclicSeq(m, e) for e in sorted(found)]


# ---------------------------------------------------------------------------
# text format


def format_seqs(seqs: Iterable, modulus: int | None = None, header: bool = True) -> str:
    """One sequence per line, optionally preceded by ``# m=<m>``."""
    seqs = list(seqs)
    if modulus is None:
        modulus = seqs[0].modulus if seqs else 2
    if modulus > 10:
        raise PreconditionError("text format supports only m <= 10")
    lines = [f"# m={modulus}"] if header else []
    lines += [str(s) for s in seqs]
    return "\n".join(lines) + "\n"


def parse_seqs(text: str, modulus: int | None = None) -> list[CyclicSeq]:
    """Inverse of :func:`format_seqs`.  A header overrides the default modulus 2."""
    seqs = []
    m = modulus
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("m="):
                try:
                    hm = int(body[2:])
                except ValueError:
                    raise PreconditionError(f"line {lineno}: bad header {line!r}") from None
                if m is not None and hm != m:
                    raise PreconditionError(f"line {lineno}: header m={hm} conflicts with m={m}")
                m = hm
            continue
        try:
            seqs.append(CyclicSeq.from_str(line, m if m is not None else 2))
        except PreconditionError as exc:
            raise PreconditionError(f"line {lineno}: {exc}") from None
    return seqs
