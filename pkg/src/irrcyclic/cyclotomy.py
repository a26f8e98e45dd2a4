"""Cyclotomic classes, cyclotomic numbers, and exact Gaussian periods.

Values living in Z[zeta_p] are carried as integer count vectors over the
p-th roots of unity, so everything here is exact; complex floats appear only
in the numeric cross-check helpers.

Period sets verify two classical identities at construction time: the sum of
all periods is -1 (always, exactly), and the shifted product sum equals
r*theta_k - n.  The product identity is checked exactly: via integer FFTs
when all periods are integers, via a 2D convolution of the trace histogram
when they are not (the cap covers every extension field up to 2^12), and via
a structural argument over prime fields, where the histogram is forced to be
a class indicator and the identity follows by a change of variable.  The
checked flag records whether any of these ran.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import EvenCharacteristic, NotADivisor, SizeBudgetExceeded
from .fields import DEFAULT_ENUM_BUDGET, FieldElement, FieldTower

PRODUCT_RULE_CAP = 1 << 18


class RootOfUnitySum:
    """Integer combination sum(counts[t] * zeta_p**t), canonical counts[p-1] = 0.

    Canonicalization uses 1 + zeta + ... + zeta^(p-1) = 0, which makes the
    representation unique and equality meaningful.
    """

    __slots__ = ("p", "counts")

    def __init__(self, p: int, counts):
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError(f"need exactly {p} coordinates")
        last = counts[-1]
        if last:
            counts = [c - last for c in counts]
        self.p = p
        self.counts = tuple(counts)

    @classmethod
    def from_integer(cls, p: int, n: int) -> "RootOfUnitySum":
        return cls(p, (n,) + (0,) * (p - 1))

    def _coerce(self, other) -> "RootOfUnitySum":
        if isinstance(other, int):
            return RootOfUnitySum.from_integer(self.p, other)
        if isinstance(other, RootOfUnitySum):
            if other.p != self.p:
                raise ValueError("mixed root orders")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RootOfUnitySum(self.p, [a + b for a, b in zip(self.counts, other.counts)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RootOfUnitySum(self.p, [a - b for a, b in zip(self.counts, other.counts)])

    def __neg__(self):
        return RootOfUnitySum(self.p, [-a for a in self.counts])

    def __mul__(self, other):
        if isinstance(other, int):
            return RootOfUnitySum(self.p, [a * other for a in self.counts])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod = [0] * self.p
        for i, a in enumerate(self.counts):
            if a:
                for j, b in enumerate(other.counts):
                    if b:
                        prod[(i + j) % self.p] += a * b
        return RootOfUnitySum(self.p, prod)

    __rmul__ = __mul__

    def rotate(self, t: int) -> "RootOfUnitySum":
        """Multiply by zeta_p**t."""
        t %= self.p
        return RootOfUnitySum(self.p, [self.counts[(i - t) % self.p] for i in range(self.p)])

    @property
    def is_integer(self) -> bool:
        return not any(self.counts[1:])

    def as_integer(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.counts[0]

    def evaluate(self) -> complex:
        return sum(
            c * cmath.exp(2j * cmath.pi * t / self.p) for t, c in enumerate(self.counts) if c
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_integer and self.counts[0] == other
        return (
            isinstance(other, RootOfUnitySum)
            and self.p == other.p
            and self.counts == other.counts
        )

    def __hash__(self) -> int:
        return hash((self.p, self.counts))

    def __repr__(self) -> str:
        if self.is_integer:
            return f"RootOfUnitySum({self.p}, {self.counts[0]})"
        return f"RootOfUnitySum({self.p}, counts={self.counts})"


def dlog_of_minus_one(p: int, r: int) -> int:
    """Discrete log of -1 relative to any primitive element."""
    return 0 if p == 2 else (r - 1) // 2


@dataclass(frozen=True)
class GaussianPeriodSet:
    """Exact Gaussian periods of order N over GF(r), indexed by class."""

    r: int
    N: int
    p: int
    values: tuple[RootOfUnitySum, ...]
    integer_values: tuple[int, ...] | None
    product_rule_checked: bool

    def __len__(self) -> int:
        return self.N

    def numeric(self) -> np.ndarray:
        return np.array([v.evaluate() for v in self.values], dtype=complex)


def _theta_flags(p: int, r: int, N: int) -> np.ndarray:
    """theta[k] = 1 iff -1 lies in the k-th cyclotomic class of order N."""
    theta = np.zeros(N, dtype=np.int64)
    theta[dlog_of_minus_one(p, r) % N] = 1
    return theta


def _check_sum_rule(p: int, tr_hist: np.ndarray) -> None:
    total = RootOfUnitySum(p, tr_hist)
    assert total == -1, "period sum identity failed"


def _int_autocorrelation(a: np.ndarray) -> np.ndarray | None:
    """Exact circular autocorrelation of an integer vector, or None if the
    float path cannot guarantee exact rounding."""
    n = len(a)
    if np.abs(a).max(initial=0) < (1 << 19):
        bound = int(np.dot(a, a))
    else:
        bound = sum(int(x) * int(x) for x in a)
    if bound * (math.log2(n or 1) + 4) >= 2**50:
        return None
    f = np.fft.rfft(a.astype(np.float64))
    corr = np.fft.irfft(f * f.conj(), n)
    return np.rint(corr).astype(np.int64)


def _check_product_rule_int(values: np.ndarray, r: int, N: int, theta: np.ndarray) -> bool:
    n = (r - 1) // N
    corr = _int_autocorrelation(values)
    if corr is None:
        corr = np.array(
            [sum(int(values[i]) * int(values[(i + k) % N]) for i in range(N)) for k in range(N)],
            dtype=object,
        )
    target = r * theta - n
    assert (corr == target).all(), "period product identity failed"
    return True


def _check_product_rule_table(
    hist: np.ndarray, r: int, N: int, p: int, theta: np.ndarray, cap: int = PRODUCT_RULE_CAP
) -> bool:
    """Exact product check for non-integer periods via a 2D convolution:
    correlate over the class axis, convolve over the root-of-unity axis."""
    if N * p > cap:
        return False
    total = int(hist.sum())
    if total * total * (math.log2(N * p) + 4) >= 2**50:
        return False
    f = np.fft.fft2(hist.astype(np.float64))
    rev = f[(-np.arange(N)) % N, :]
    conv = np.fft.ifft2(rev * f)
    table = np.rint(conv.real).astype(np.int64)
    target = r * theta - (r - 1) // N
    for k in range(N):
        row = RootOfUnitySum(p, table[k])
        assert row == int(target[k]), "period product identity failed"
    return True


def _check_product_rule_prime_field(hist: np.ndarray, core, N: int) -> bool:
    """Exact product check over a prime field, where traces are the elements
    themselves.  The histogram must be the indicator hist[i, c] =
    [dlog(c) = i mod N] for c != 0; once that shape is verified, writing
    b = u*a turns sum_i eta_i*eta_{i+k} into sum over u in C_k of
    sum_{a != 0} zeta^{a(1+u)}, which is p - 1 when u = -1 and -1 otherwise,
    i.e. exactly r*theta_k - n with theta placed at dlog(-1) mod N."""
    p = core.p
    if not (hist.sum(axis=0)[1:] == 1).all() or hist[:, 0].any():
        raise AssertionError("prime-field trace histogram must be a class indicator")
    log = core.log_table()
    cols = np.arange(1, p, dtype=np.int64)
    if not (hist[log[cols] % N, cols] == 1).all():
        raise AssertionError("prime-field trace histogram must follow the class index")
    return True


def gaussian_periods_exact(
    tower: FieldTower,
    N: int,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
    product_rule_cap: int = PRODUCT_RULE_CAP,
) -> GaussianPeriodSet:
    """All N Gaussian periods of order N over the top field, exactly.

    Period k is the character sum over the coset alpha^k * <alpha^N>.
    """
    r, p = tower.r, tower.p
    if N < 1 or (r - 1) % N:
        raise NotADivisor(f"{N} does not divide r - 1 = {r - 1}")
    if r > budget:
        raise SizeBudgetExceeded(f"period enumeration at r = {r} exceeds budget {budget}")
    core = tower.core
    key = ("periods", N, product_rule_cap)
    hit = core.cache.get(key)
    if hit is not None:
        return hit
    tr = core.trace_by_log()
    idx = np.arange(r - 1, dtype=np.int64) % N
    hist = np.bincount(idx * p + tr, minlength=N * p).reshape(N, p)
    _check_sum_rule(p, hist.sum(axis=0))
    values = tuple(RootOfUnitySum(p, row) for row in hist)
    theta = _theta_flags(p, r, N)
    if all(v.is_integer for v in values):
        ints = tuple(v.as_integer() for v in values)
        checked = _check_product_rule_int(np.array(ints, dtype=np.int64), r, N, theta)
    else:
        ints = None
        if core.d == 1:
            checked = _check_product_rule_prime_field(hist, core, N)
        else:
            checked = _check_product_rule_table(hist, r, N, p, theta, product_rule_cap)
    out = GaussianPeriodSet(r, N, p, values, ints, checked)
    core.cache[key] = out
    return out


@dataclass(frozen=True)
class CyclotomicTable:
    """Cyclotomic numbers (i, j) of order N: counts of x in C_i with x + 1 in C_j."""

    r: int
    N: int
    counts: tuple[tuple[int, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.counts[i % self.N][j % self.N]


def cyclotomic_numbers(
    tower: FieldTower, N: int, *, budget: int = DEFAULT_ENUM_BUDGET
) -> CyclotomicTable:
    r, p = tower.r, tower.p
    if N < 1 or (r - 1) % N:
        raise NotADivisor(f"{N} does not divide r - 1 = {r - 1}")
    if r > budget:
        raise SizeBudgetExceeded(f"cyclotomic table at r = {r} exceeds budget {budget}")
    core = tower.core
    slog = core.succ_log()
    k = np.arange(r - 1, dtype=np.int64)
    valid = slog >= 0
    key = (k[valid] % N) * N + (slog[valid] % N)
    counts = np.bincount(key, minlength=N * N).reshape(N, N)
    n = (r - 1) // N
    theta = _theta_flags(p, r, N)
    assert (counts.sum(axis=1) == n - theta).all(), "cyclotomic row sums failed"
    assert counts.sum() == r - 2
    return CyclotomicTable(r, N, tuple(tuple(int(c) for c in row) for row in counts))


def cyclotomic_class(tower: FieldTower, N: int, i: int) -> Iterator[FieldElement]:
    """The coset alpha^i * <alpha^N>, lazily, as (r-1)/N field elements."""
    r = tower.r
    if N < 1 or (r - 1) % N:
        raise NotADivisor(f"{N} does not divide r - 1 = {r - 1}")
    step = tower.alpha**N
    x = tower.alpha ** (i % (r - 1))
    for _ in range((r - 1) // N):
        yield x
        x = x * step


def gauss_sum_numeric(
    tower: FieldTower, N: int, j: int = 1, *, budget: int = DEFAULT_ENUM_BUDGET
) -> complex:
    """Float Gauss sum for the order-N multiplicative character to the power j.

    The character sends alpha^k to exp(2 pi i j k / N); the additive character
    is the canonical one through the absolute trace.
    """
    r, p = tower.r, tower.p
    if N < 1 or (r - 1) % N:
        raise NotADivisor(f"{N} does not divide r - 1 = {r - 1}")
    if r > budget:
        raise SizeBudgetExceeded(f"Gauss sum at r = {r} exceeds budget {budget}")
    tr = tower.core.trace_by_log()
    k = np.arange(r - 1, dtype=np.int64)
    phase = 2 * np.pi * (((j % N) * k % N) / N + tr / p)
    return complex(np.exp(1j * phase).sum())


def quadratic_char_sum(
    tower: FieldTower,
    a2: FieldElement,
    a1: FieldElement,
    a0: FieldElement,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> RootOfUnitySum:
    """Exact character sum of a quadratic polynomial over the whole field:
    sum over c in GF(r) of zeta_p^Tr(a2 c^2 + a1 c + a0), with a2 nonzero."""
    r, p = tower.r, tower.p
    if p == 2:
        raise EvenCharacteristic("quadratic character sums need odd characteristic")
    if a2.is_zero:
        raise ValueError("leading coefficient must be nonzero")
    if r > budget:
        raise SizeBudgetExceeded(f"character sum at r = {r} exceeds budget {budget}")
    tr = tower.core.trace_by_log()
    t = np.arange(r - 1, dtype=np.int64)
    la2 = tower.discrete_log(a2)
    vals = tr[(2 * t + la2) % (r - 1)]
    if not a1.is_zero:
        la1 = tower.discrete_log(a1)
        vals = vals + tr[(t + la1) % (r - 1)]
    t0 = int(tower.trace(a0, "r->p").coeffs[0])
    hist = np.bincount((vals + t0) % p, minlength=p)
    hist[t0] += 1  # the c = 0 term
    return RootOfUnitySum(p, hist)
