"""Feedback shift registers over Z_m and the cycle-count formulas.

States are encoded as integers in base ``m`` with ``x_1`` as the most
significant digit, so the successor of a state is
``(state mod m^(n-1)) * m + f(state)``.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import GuardExceeded, PreconditionError
from .operators import apply_D_pow
from .zmseq import CyclicSeq, canonical_elems, enumerate_sds, necklace

#: Largest state space :func:`fsr_cycles` will walk.
STATE_GUARD = 10**7

Feedback = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class RegisterSpec:
    """An order-``n`` feedback shift register over Z_m.

    ``feedback`` receives a ``(N, n)`` array whose rows are states
    ``(x_1, ..., x_n)`` and returns the ``N`` feedback values.
    """

    order: int
    modulus: int
    feedback: Feedback = field(compare=False)
    name: str = ""


def ccr(n: int, m: int = 2, r: int = 1) -> RegisterSpec:
    """The (m-ary) complemented cycling register with feedback ``x_1 + r``."""
    if n < 1 or m < 2:
        raise PreconditionError("need n >= 1 and m >= 2")
    if math.gcd(r, m) != 1:
        raise PreconditionError(f"feedback constant r={r} must be coprime to m={m}")
    name = f"CCR_{n}" if m == 2 else f"{m}-CCR_{n}"
    return RegisterSpec(n, m, lambda x: (x[:, 0] + r) % m, name)


def _digits(states: np.ndarray, n: int, m: int) -> np.ndarray:
    out = np.empty((states.size, n), dtype=np.int64)
    rest = states.copy()
    for i in range(n - 1, -1, -1):
        out[:, i] = rest % m
        rest //= m
    return out


def fsr_cycles(spec: RegisterSpec) -> list[CyclicSeq]:
    """Cycles of the register's state permutation as canonical sequences.

    Each cycle is returned at its own length, which equals the period of the
    generated sequence.  Output is sorted by (length, elements).
    """
    n, m = spec.order, spec.modulus
    size = m**n
    if size > STATE_GUARD:
        raise GuardExceeded(f"{m}^{n} states exceed guard {STATE_GUARD}")
    states = np.arange(size, dtype=np.int64)
    fb = np.asarray(spec.feedback(_digits(states, n, m)), dtype=np.int64)
    if fb.shape != (size,) or fb.min() < 0 or fb.max() >= m:
        raise PreconditionError("feedback must return one value in [0, m) per state")
    succ = (states % (size // m)) * m + fb
    if np.unique(succ).size != size:
        raise PreconditionError(f"feedback of {spec.name or 'register'} is not a permutation")

    succ_l = succ.tolist()
    seen = bytearray(size)
    cycles = []
    for start in range(size):
        if seen[start]:
            continue
        out = []
        s = start
        while not seen[s]:
            seen[s] = 1
            s = succ_l[s]
            out.append(s % m)  # newest digit x_{n+1}
        cycles.append(canonical_elems(out))
    cycles.sort(key=lambda e: (len(e), e))
    return [CyclicSeq(m, e) for e in cycles]


# ---------------------------------------------------------------------------
# counting formulas


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def totient(n: int) -> int:
    result, k = n, n
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def count_ccr_formula(n: int) -> int:
    """Number of cycles of the binary CCR_n, summing over odd divisors of n."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    total = sum(totient(d) * 2 ** (n // d) for d in divisors(n) if d % 2)
    q, r = divmod(total, 2 * n)
    assert r == 0, (n, total)
    return q


def count_mccr_formula(m: int, n: int, divisor_rule: str = "coprime"):
    """Number of cycles of the m-CCR_n.

    The default ``divisor_rule="coprime"`` sums ``phi(d) m^(n/d)`` over
    divisors ``d`` of ``n`` with ``gcd(d, m) = 1`` and is exact for every
    ``(m, n)``.  ``"congruent"`` restricts to ``d = 1 (mod m)``; it agrees
    for m = 2 but can be non-integral otherwise (e.g. m=3, n=2), so it
    returns a :class:`~fractions.Fraction`.
    """
    if m < 2 or n < 1:
        raise PreconditionError("need m >= 2 and n >= 1")
    if divisor_rule == "coprime":
        keep = lambda d: math.gcd(d, m) == 1  # noqa: E731
    elif divisor_rule == "congruent":
        keep = lambda d: d % m == 1 % m  # noqa: E731
    else:
        raise PreconditionError(f"unknown divisor rule {divisor_rule!r}")
    total = sum(totient(d) * m ** (n // d) for d in divisors(n) if keep(d))
    if divisor_rule == "congruent":
        return Fraction(total, m * n)
    q, r = divmod(total, m * n)
    assert r == 0, (m, n, total)
    return q


def sd_count(m: int, n: int) -> int:
    """Number of SDS rotation classes of period exactly ``n`` over Z_m (brute force)."""
    return len(enumerate_sds(m, n))


# ---------------------------------------------------------------------------
# reports


@dataclass
class CountReport:
    modulus: int
    order: int
    total_cycles: int
    by_period: dict[int, int]
    source: str  # "formula" | "brute"

    def __post_init__(self) -> None:
        if sum(self.by_period.values()) != self.total_cycles:
            raise PreconditionError("period buckets do not sum to the total")

    def to_text(self) -> str:
        periods = ",".join(f"{d}:{c}" for d, c in sorted(self.by_period.items()))
        return (
            f"m={self.modulus} n={self.order} total={self.total_cycles} "
            f"periods={{{periods}}} source={self.source}"
        )

    _PATTERN = re.compile(
        r"m=(\d+) n=(\d+) total=(\d+) periods=\{([0-9:,]*)\} source=(formula|brute)$"
    )

    @classmethod
    def from_text(cls, text: str) -> "CountReport":
        match = cls._PATTERN.match(text.strip())
        if not match:
            raise PreconditionError(f"not a count record: {text!r}")
        m, n, total, periods, source = match.groups()
        buckets = {}
        for item in filter(None, periods.split(",")):
            d, c = item.split(":")
            buckets[int(d)] = int(c)
        return cls(int(m), int(n), int(total), buckets, source)


def cycle_report(spec: RegisterSpec) -> CountReport:
    """Brute-force :class:`CountReport` of a register's cycles bucketed by period."""
    cycles = fsr_cycles(spec)
    by_period = dict(sorted(Counter(len(c) for c in cycles).items()))
    return CountReport(spec.modulus, spec.order, len(cycles), by_period, "brute")


@dataclass
class IdentityReport:
    """Both sides of a cycle-count identity and the divisor terms behind it."""

    modulus: int
    order: int
    cycle_count: int
    formula_count: int
    terms: dict[int, int]
    divisor_sum: int

    @property
    def passed(self) -> bool:
        return self.cycle_count == self.divisor_sum == self.formula_count

    def to_text(self) -> str:
        terms = " + ".join(f"SD({d})={c}" for d, c in sorted(self.terms.items()))
        flag = "PASS" if self.passed else "FAIL"
        return (
            f"m={self.modulus} n={self.order} cycles={self.cycle_count} "
            f"formula={self.formula_count} sum={self.divisor_sum} [{terms}] {flag}"
        )


def verify_count_identity(n: int) -> IdentityReport:
    """Check the binary CCR_n cycle count against the sum of SD(d) over d | 2n, d not dividing n.

    Both sides are computed by exhaustion: the left by walking the register,
    the right by enumerating self-dual sequences of each period.
    """
    cycles = len(fsr_cycles(ccr(n)))
    terms = {d: sd_count(2, d) for d in divisors(2 * n) if n % d}
    return IdentityReport(2, n, cycles, count_ccr_formula(n), terms, sum(terms.values()))


@dataclass
class MccrIdentityReport:
    modulus: int
    order: int
    cycle_count: int
    stated_terms: dict[int, int]
    plain_terms: dict[int, int]

    @property
    def stated_sum(self) -> int:
        return sum(self.stated_terms.values())

    @property
    def plain_sum(self) -> int:
        return sum(self.plain_terms.values())

    @property
    def matches(self) -> list[str]:
        out = []
        if self.stated_sum == self.cycle_count:
            out.append("stated")
        if self.plain_sum == self.cycle_count:
            out.append("plain")
        return out

    def to_text(self) -> str:
        return (
            f"m={self.modulus} n={self.order} cycles={self.cycle_count} "
            f"stated_sum={self.stated_sum} plain_sum={self.plain_sum} "
            f"matches={','.join(self.matches) or 'none'}"
        )


def verify_mccr_identity(m: int, n: int) -> MccrIdentityReport:
    """Compare the m-CCR_n cycle count with two candidate divisor sums of SD_m(d).

    ``stated``: d | mn, d not dividing n, m | d and d | n - d/m.
    ``plain``: d | mn and d not dividing n.
    Neither is assumed correct; the report records which agrees.
    """
    cycles = len(fsr_cycles(ccr(n, m)))
    plain = [d for d in divisors(m * n) if n % d]
    stated = [d for d in plain if d % m == 0 and (n - d // m) % d == 0]
    sd = {d: sd_count(m, d) for d in plain}
    return MccrIdentityReport(m, n, cycles, {d: sd[d] for d in stated}, sd)


def count_ccr_by_period(i: int, p: int, mode: str = "formula") -> CountReport:
    """Cycles of CCR_n, n = 2^i p, split into periods 2^(i+1) and 2^(i+1) p."""
    if i < 0 or p < 3 or p % 2 == 0:
        raise PreconditionError("need i >= 0 and p an odd prime")
    n = 2**i * p
    if mode == "brute":
        return cycle_report(ccr(n))
    if mode != "formula":
        raise PreconditionError(f"unknown mode {mode!r}")
    short = 2 ** (2**i - i - 1)
    num = 2 ** (2**i * p) - 2 ** (2**i)
    q, r = divmod(num, 2 ** (i + 1) * p)
    assert r == 0
    return CountReport(2, n, short + q, {2 ** (i + 1): short, 2 ** (i + 1) * p: q}, "formula")


def kernel_poly_cycles(n_exp: int) -> list[CyclicSeq]:
    """Binary cyclic sequences killed by D^(2^n_exp + 1) but not by D^(2^n_exp).

    Candidates are all binary words of length 2^(n_exp+1), which contains
    every period such sequences can have.  Returned as canonical classes at
    period length.
    """
    length = 2 ** (n_exp + 1)
    if n_exp < 0 or length > 24:
        raise GuardExceeded("kernel enumeration limited to length <= 24")
    k = 2**n_exp
    found = set()
    for elems in itertools.product((0, 1), repeat=length):
        s = CyclicSeq(2, elems)
        low = apply_D_pow(s, k)
        if any(low.elems) and not any(apply_D_pow(low, 1).elems):
            found.add(necklace(s))
    return sorted(found, key=lambda c: (len(c), c.elems))
