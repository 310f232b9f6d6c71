"""The single-track Gray code container, its verifier and its file format."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

import numpy as np

from ..errors import PreconditionError
from ..zmseq import CyclicSeq, Word


@dataclass
class Stgc:
    """``P`` codewords of length ``n`` over Z_m, one per row of ``rows``."""

    modulus: int
    rows: np.ndarray

    def __post_init__(self) -> None:
        self.rows = np.asarray(self.rows, dtype=np.uint8)
        if self.rows.ndim != 2 or self.rows.shape[0] < 1 or self.rows.shape[1] < 1:
            raise PreconditionError("rows must be a non-empty P x n array")
        if self.rows.max() >= self.modulus:
            raise PreconditionError(f"entries out of range for Z_{self.modulus}")

    @classmethod
    def from_words(cls, words: Iterable, modulus: int) -> "Stgc":
        return cls(modulus, np.array([tuple(w) for w in words], dtype=np.uint8))

    @property
    def length(self) -> int:
        return self.rows.shape[1]

    @property
    def period(self) -> int:
        return self.rows.shape[0]

    def words(self) -> list[Word]:
        return [Word(self.modulus, tuple(r)) for r in self.rows.tolist()]

    def column(self, c: int) -> CyclicSeq:
        return CyclicSeq(self.modulus, tuple(self.rows[:, c].tolist()))

    def rotate(self, k: int) -> "Stgc":
        """The same cyclic list started at row ``k``."""
        return Stgc(self.modulus, np.roll(self.rows, -k, axis=0))

    # -- text format -------------------------------------------------------

    def iter_lines(self) -> Iterator[str]:
        if self.modulus > 10:
            raise PreconditionError("text format supports only m <= 10")
        yield f"STGC m={self.modulus} n={self.length} P={self.period}"
        digits = (self.rows + ord("0")).astype(np.uint8)
        for row in digits:
            yield row.tobytes().decode("ascii")

    def to_text(self) -> str:
        return "\n".join(self.iter_lines()) + "\n"


def parse_stgc(text: str) -> Stgc:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PreconditionError("empty STGC file")
    head = lines[0].split()
    try:
        if head[0] != "STGC":
            raise ValueError
        fields = dict(item.split("=", 1) for item in head[1:])
        m, n, P = int(fields["m"]), int(fields["n"]), int(fields["P"])
    except (ValueError, KeyError, IndexError):
        raise PreconditionError(f"bad STGC header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != P:
        raise PreconditionError(f"header says P={P} but file has {len(body)} rows")
    rows = np.zeros((P, n), dtype=np.uint8)
    for i, line in enumerate(body):
        if len(line) != n or not line.isdigit():
            raise PreconditionError(f"row {i}: expected {n} digits, got {line!r}")
        vals = np.frombuffer(line.encode("ascii"), dtype=np.uint8) - ord("0")
        if vals.max() >= m:
            raise PreconditionError(f"row {i}: digit out of range for Z_{m}")
        rows[i] = vals
    return Stgc(m, rows)


def write_stgc(code: Stgc, path) -> None:
    with open(path, "w") as fh:
        for line in code.iter_lines():
            fh.write(line + "\n")


def read_stgc(path) -> Stgc:
    return parse_stgc(Path(path).read_text())


# ---------------------------------------------------------------------------
# verification


@dataclass
class StgcReport:
    modulus: int
    length: int
    period: int
    distinct: bool
    duplicate: Optional[tuple[int, int]]
    gray: bool
    gray_violation: Optional[int]
    single_track: bool
    column_shifts: list[Optional[int]]
    divisibility: Optional[bool]
    period_mod_mn: int
    toggled: list[bool] = field(default_factory=list)

    @property
    def coverage(self) -> bool:
        return all(self.toggled)

    @property
    def passed(self) -> bool:
        return (
            self.distinct
            and self.gray
            and self.single_track
            and self.divisibility is not False
            and self.coverage
        )

    def to_text(self) -> str:
        flag = lambda ok: "PASS" if ok else "FAIL"  # noqa: E731
        lines = [f"STGC-REPORT m={self.modulus} n={self.length} P={self.period}"]
        dup = f" first_duplicate_rows={self.duplicate}" if self.duplicate else ""
        lines.append(f"distinct: {flag(self.distinct)}{dup}")
        gv = f" first_violation_row={self.gray_violation}" if self.gray_violation is not None else ""
        lines.append(f"gray: {flag(self.gray)}{gv}")
        shifts = ",".join("-" if k is None else str(k) for k in self.column_shifts)
        bad = [c for c, k in enumerate(self.column_shifts) if k is None]
        bc = f" first_bad_column={bad[0]}" if bad else ""
        lines.append(f"single_track: {flag(self.single_track)} shifts=[{shifts}]{bc}")
        div = "n/a" if self.divisibility is None else flag(self.divisibility)
        lines.append(f"divisibility: {div} P_mod_mn={self.period_mod_mn}")
        missing = [i for i, t in enumerate(self.toggled) if not t]
        mc = f" untoggled={missing}" if missing else ""
        lines.append(f"coverage: {flag(self.coverage)}{mc}")
        lines.append(f"result: {flag(self.passed)}")
        return "\n".join(lines) + "\n"


def verify_stgc(code: Stgc) -> StgcReport:
    """Check distinctness, the cyclic Gray property, the single-track property,
    ``2n | P`` for binary codes, and that every coordinate changes somewhere."""
    rows = code.rows
    P, n = rows.shape
    m = code.modulus

    _, first_idx, inverse = np.unique(rows, axis=0, return_index=True, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    duplicate = None
    if first_idx.size != P:
        seen: dict[int, int] = {}
        for i, u in enumerate(inverse.tolist()):
            if u in seen:
                duplicate = (seen[u], i)
                break
            seen[u] = i

    changed = rows != np.roll(rows, -1, axis=0)
    dist = changed.sum(axis=1)
    bad = np.flatnonzero(dist != 1)
    gray_violation = int(bad[0]) if bad.size else None

    col0 = rows[:, 0].tobytes()
    doubled = col0 + col0
    shifts: list[Optional[int]] = []
    for c in range(n):
        k = doubled.find(rows[:, c].tobytes())
        shifts.append(k if 0 <= k < P else None)

    return StgcReport(
        modulus=m,
        length=n,
        period=P,
        distinct=duplicate is None,
        duplicate=duplicate,
        gray=gray_violation is None,
        gray_violation=gray_violation,
        single_track=all(k is not None for k in shifts),
        column_shifts=shifts,
        divisibility=(P % (2 * n) == 0) if m == 2 else None,
        period_mod_mn=P % (m * n),
        toggled=changed.any(axis=0).tolist(),
    )


def covers_all_words(code: Stgc) -> bool:
    """True iff every word of Z_m^n occurs exactly once among the rows."""
    m, n = code.modulus, code.length
    if code.period != m**n:
        return False
    weights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    idx = code.rows.astype(np.int64) @ weights
    return np.unique(idx).size == m**n


def window_F(s: CyclicSeq, j: int, n: int) -> Word:
    """The length-``n`` window of ``s`` starting at offset ``j`` (cyclic)."""
    k = len(s)
    if not 1 <= n <= k:
        raise PreconditionError(f"window length {n} must be in 1..{k}")
    return Word(s.modulus, tuple(s.elems[(j + i) % k] for i in range(n)))
