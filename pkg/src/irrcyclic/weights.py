"""Weight distributions of irreducible cyclic codes.

The code attached to (p, s, m, N) lives over GF(q), q = p^s, inside GF(r),
r = q^m, and has length n = (r - 1) / N.  Its nonzero weights come from the
Gaussian periods of order N1 = gcd((r-1)/(q-1), N): the dispatcher tries the
closed forms in a fixed order and falls back to exact period enumeration.

Class weights are computed per beta-class and then pushed through a common
finalizer that merges equal weights, strips the zero-weight kernel classes of
degenerate codes, and divides the beta counts by the kernel size.  Every
distribution is checked against the divisibility and bound theorems at
construction time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import closed_forms, cyclotomy, numtheory
from .errors import (
    EvenPrime,
    IrrationalPeriod,
    NonIntegralWeight,
    NotADivisor,
    NotIndexTwo,
    NotPrime,
    OrderNotPrimePower,
    SizeBudgetExceeded,
    Unsupported,
)
from .fields import DEFAULT_ENUM_BUDGET, build_tower

METHOD_TAGS = ("thm16", "thm18", "thm19", "thm21", "thm22", "thm23", "thm24", "brute")


@dataclass(frozen=True)
class CodeSpec:
    """Validated parameters of one irreducible cyclic code, plus derived facts."""

    p: int
    s: int
    m: int
    N: int
    q: int
    r: int
    n: int
    N1: int
    m0: int
    kernel_size: int

    @property
    def degenerate(self) -> bool:
        return self.m0 < self.m

    def __repr__(self) -> str:
        return f"CodeSpec(p={self.p}, s={self.s}, m={self.m}, N={self.N})"


def code_params(p: int, s: int, m: int, N: int) -> CodeSpec:
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    q = p**s
    r = q**m
    if N < 1 or (r - 1) % N:
        raise NotADivisor(f"N = {N} does not divide r - 1 = {r - 1}")
    n = (r - 1) // N
    N1 = math.gcd((r - 1) // (q - 1), N)
    # the true dimension divides m, so only divisors need checking
    m0 = numtheory.mult_order(q, n, divisor_of=m)
    assert N1 * (N1 - 1) >= r or m0 == m, "small N1 forces a nondegenerate code"
    return CodeSpec(p, s, m, N, q, r, n, N1, m0, q ** (m - m0))


def weight_from_period(spec: CodeSpec, eta: int) -> int:
    """Weight of every codeword whose beta lies in the class with period eta."""
    w = Fraction((spec.q - 1) * (spec.r - 1 - spec.N1 * eta), spec.q * spec.N)
    if w.denominator != 1 or not 0 <= w <= spec.n:
        raise NonIntegralWeight(f"period {eta} gives weight {w} for {spec}")
    return int(w)


def index2_weight(spec: CodeSpec, i: int, params: closed_forms.IndexTwoParams) -> int:
    """Weight of the codewords whose beta sits in index-two class i.

    The class sum collapses to a telescoping series in the exact Gauss-sum
    ingredients; the result must come out a nonnegative integer.
    """
    if params.N1 != spec.N1:
        raise NotIndexTwo(f"parameters are for order {params.N1}, spec has N1 = {spec.N1}")
    w = Fraction(spec.q - 1, spec.N * spec.q) * (spec.r - params.class_sum(i))
    if w.denominator != 1 or not 0 <= w <= spec.n:
        raise NonIntegralWeight(f"index-two class {i} gives weight {w} for {spec}")
    return int(w)


def divisibility(spec: CodeSpec) -> int:
    """Every nonzero weight is divisible by (q-1)/gcd(q-1, N/N1)."""
    return (spec.q - 1) // math.gcd(spec.q - 1, spec.N // spec.N1)


def bounds(spec: CodeSpec) -> tuple[int, int]:
    """Closed interval guaranteed to contain every nonzero weight.

    The square root is floored before the outer division is rounded, keeping
    both endpoints exact integers.
    """
    radius = math.isqrt((spec.N1 - 1) ** 2 * spec.r)
    den = spec.q * spec.N
    num_lo = (spec.q - 1) * (spec.r - radius)
    num_hi = (spec.q - 1) * (spec.r + radius)
    return -(-num_lo // den), num_hi // den


def is_constant_weight(spec: CodeSpec) -> bool:
    """True when all nonzero codewords share one weight.

    N1 = 1 is the classical criterion; one-dimensional degenerate codes are
    scalar multiples of a single word and are constant-weight as well.
    """
    return spec.N1 == 1 or spec.m0 == 1


@dataclass(frozen=True)
class PeriodCheck:
    """Outcome of the three structural checks on a set of order-N1 periods."""

    integral: bool
    congruent: bool
    bounded: bool

    @property
    def all_pass(self) -> bool:
        return self.integral and self.congruent and self.bounded


def check_period_properties(spec: CodeSpec, periods) -> PeriodCheck:
    """Check integrality, N1*eta = -1 (mod q), and the sqrt(r) bound.

    periods may be a GaussianPeriodSet or a plain sequence; it must contain
    exactly N1 values for the order-N1 classes of the code.
    """
    if isinstance(periods, cyclotomy.GaussianPeriodSet):
        if periods.N != spec.N1:
            raise ValueError("period set order differs from N1")
        if periods.integer_values is None:
            return PeriodCheck(False, False, False)
        values = periods.integer_values
    else:
        values = []
        for v in periods:
            if isinstance(v, cyclotomy.RootOfUnitySum):
                if not v.is_integer:
                    return PeriodCheck(False, False, False)
                v = v.as_integer()
            values.append(int(v))
        if len(values) != spec.N1:
            raise ValueError(f"expected {spec.N1} periods, got {len(values)}")
    congruent = all((spec.N1 * eta + 1) % spec.q == 0 for eta in values)
    radius = math.isqrt((spec.N1 - 1) ** 2 * spec.r)
    bounded = all(abs(spec.N1 * eta + 1) <= radius for eta in values)
    return PeriodCheck(True, congruent, bounded)


@dataclass(frozen=True)
class WeightDistribution:
    """Nonzero weights with codeword counts, ascending by weight."""

    spec: CodeSpec
    entries: tuple[tuple[int, int], ...]
    method: str

    def __post_init__(self):
        spec = self.spec
        last = 0
        total = 0
        div = divisibility(spec)
        for w, count in self.entries:
            assert w > last and count > 0, "entries must be ascending with positive counts"
            assert w <= spec.n, "weight exceeds the code length"
            assert w % div == 0, "weight violates the divisibility theorem"
            last = w
            total += count
        assert total == spec.q**spec.m0 - 1, "counts must cover all nonzero codewords"
        if self.entries:
            lo, hi = bounds(spec)
            assert lo <= self.entries[0][0] and self.entries[-1][0] <= hi, (
                "weights violate the bound theorem"
            )

    def counts_by_weight(self) -> dict[int, int]:
        return dict(self.entries)

    def total_nonzero(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def minimum_distance(self) -> int:
        return self.entries[0][0]

    def enumerator_text(self) -> str:
        parts = ["1"]
        for w, count in self.entries:
            head = "" if count == 1 else str(count)
            parts.append(f"{head}x^{w}")
        return " + ".join(parts)


def distribution_from_beta_weights(spec: CodeSpec, pairs, method: str) -> WeightDistribution:
    """Merge per-beta-class (weight, beta_count) pairs into a distribution.

    Weight-zero classes are exactly the nonzero kernel of the degenerate map
    beta -> codeword; each surviving weight count collapses by the kernel size.
    """
    merged: dict[int, int] = {}
    for w, count in pairs:
        merged[w] = merged.get(w, 0) + count
    assert sum(merged.values()) == spec.r - 1, "classes must cover all nonzero beta"
    zero = merged.pop(0, 0)
    assert zero == spec.kernel_size - 1, "zero-weight classes must match the kernel"
    entries = []
    for w in sorted(merged):
        count = merged[w]
        assert count % spec.kernel_size == 0, "kernel size must divide each weight count"
        entries.append((w, count // spec.kernel_size))
    return WeightDistribution(spec, tuple(entries), method)


# ---------------------------------------------------------------------------
# the closed-form dispatcher


def _index2_attempt(spec: CodeSpec):
    fac = numtheory.factorize(spec.N1)
    if len(fac) != 1:
        return None
    (l, lam), = fac.items()
    if l % 4 != 3 or l == 3 or l == spec.p:
        return None
    if numtheory.mult_order(spec.p, l) != (l - 1) // 2:
        return None
    f = (l - 1) * l ** (lam - 1) // 2
    d = spec.s * spec.m
    if d % f:
        return None
    return closed_forms.index2_params(spec.p, l, lam, d // f)


def _prime_power_attempt(spec: CodeSpec):
    """Prime-power shape: n an odd prime power t^jj with q = 1 (mod t), m = t^d."""
    if spec.n == 1:
        return None
    fac = numtheory.factorize(spec.n)
    if len(fac) != 1:
        return None
    (t, jj), = fac.items()
    if t == 2 or spec.q % t != 1:
        return None
    mfac = numtheory.factorize(spec.m) if spec.m > 1 else {}
    if spec.m > 1 and (len(mfac) != 1 or t not in mfac):
        return None
    d = mfac.get(t, 0)
    v = numtheory.valuation(spec.q - 1, t)
    ell = d + v
    assert numtheory.mult_order(spec.q, t**ell, divisor_of=spec.m) == spec.m
    assert jj <= ell, "length valuation bound must hold"
    return t, jj, d, ell


def _prime_power_entries(spec: CodeSpec, t: int, jj: int, d: int, ell: int):
    if jj <= ell - d:
        assert spec.m0 == 1
        return ((spec.n, spec.q - 1),)
    big_t = t ** (jj - ell + d)
    assert spec.m0 == big_t, "dimension must match the theorem"
    scale = t ** (ell - d)
    return tuple(
        (scale * w, math.comb(big_t, w) * (spec.q - 1) ** w) for w in range(1, big_t + 1)
    )


def _closed_form(spec: CodeSpec) -> WeightDistribution | None:
    p, r, N1 = spec.p, spec.r, spec.N1
    count = (r - 1) // N1

    if N1 == 1:
        assert not spec.degenerate, "N1 = 1 codes are never degenerate"
        return distribution_from_beta_weights(
            spec, [(weight_from_period(spec, -1), r - 1)], "thm16"
        )

    if N1 == 2:
        eta0, eta1 = closed_forms.periods_order2(p, spec.s, spec.m)
        pairs = [(weight_from_period(spec, eta0), count), (weight_from_period(spec, eta1), count)]
        return distribution_from_beta_weights(spec, pairs, "thm18")

    j = numtheory.semiprimitive_j(p, N1)
    if j is not None:
        d = spec.s * spec.m
        assert d % (2 * j) == 0, "the class order divides the extension degree"
        periods = closed_forms.semiprimitive_periods(p, j, d // (2 * j), N1)
        pairs = [(weight_from_period(spec, eta), count) for eta in periods.as_list()]
        return distribution_from_beta_weights(spec, pairs, "thm24")

    if N1 == 3 and p % 3 == 1:
        poly = closed_forms.period_poly_order3(p, spec.s, spec.m)
        assert poly.roots is not None, "N1 = 3 with p = 1 (mod 3) forces 3 | sm"
        pairs = [
            (weight_from_period(spec, eta), count * mult) for eta, mult in poly.roots
        ]
        return distribution_from_beta_weights(spec, pairs, "thm19")

    if N1 == 4 and p % 4 == 1:
        poly = closed_forms.period_poly_order4(p, spec.s, spec.m)
        assert poly.roots is not None, "N1 = 4 with p = 1 (mod 4) forces 4 | sm"
        pairs = [
            (weight_from_period(spec, eta), count * mult) for eta, mult in poly.roots
        ]
        return distribution_from_beta_weights(spec, pairs, "thm21")

    params = _index2_attempt(spec)
    if params is not None:
        pairs = [(index2_weight(spec, i, params), count) for i in range(N1)]
        return distribution_from_beta_weights(spec, pairs, "thm22")

    shape = _prime_power_attempt(spec)
    if shape is not None:
        return WeightDistribution(spec, _prime_power_entries(spec, *shape), "thm23")

    return None


def _brute(spec: CodeSpec, budget: int) -> WeightDistribution:
    tower = build_tower(spec.p, spec.s, spec.m)
    periods = cyclotomy.gaussian_periods_exact(tower, spec.N1, budget=budget)
    if periods.integer_values is None:
        raise IrrationalPeriod(
            f"order-{spec.N1} periods must be integers when N1 divides (r-1)/(q-1)"
        )
    count = (spec.r - 1) // spec.N1
    pairs = [(weight_from_period(spec, eta), count) for eta in periods.integer_values]
    return distribution_from_beta_weights(spec, pairs, "brute")


def weight_distribution(
    spec: CodeSpec,
    method: str = "auto",
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
    threads: int = 1,
) -> WeightDistribution:
    """Weight distribution via closed forms, exact enumeration, or both.

    method "auto" tries closed forms then falls back to enumeration within
    budget; "closed" insists on a closed form; "brute" skips closed forms.
    threads is accepted for interface symmetry with the oracle.
    """
    del threads  # the period walk is a single vectorized pass
    if method not in ("auto", "closed", "brute"):
        raise ValueError(f"unknown method {method!r}")
    if method in ("auto", "closed"):
        out = _closed_form(spec)
        if out is not None:
            return out
        if method == "closed":
            raise Unsupported(f"no closed form applies to {spec}")
    if spec.r > budget:
        if method == "brute":
            raise SizeBudgetExceeded(f"r = {spec.r} exceeds the enumeration budget {budget}")
        raise Unsupported(f"no closed form applies to {spec} and r = {spec.r} is out of budget")
    return _brute(spec, budget)


def prime_power_distribution(q: int, t: int, ell: int, jj: int) -> WeightDistribution:
    """Distribution of the length-t^jj code over GF(q) from the prime-power form.

    q is a prime power with multiplicative order t^d modulo t^ell for some d
    (anything else raises OrderNotPrimePower); the code is C(q^m - 1, N) with
    m that order and N = (q^m - 1) / t^jj.
    """
    qfac = numtheory.factorize(q)
    if len(qfac) != 1:
        raise NotPrime(f"q = {q} is not a prime power")
    (p, s), = qfac.items()
    if t == 2:
        raise EvenPrime("the length prime t must be odd")
    if not numtheory.is_prime(t):
        raise NotPrime(f"{t} is not prime")
    if ell < 1 or not 1 <= jj <= ell:
        raise ValueError("need ell >= 1 and 1 <= jj <= ell")
    order = numtheory.mult_order(q, t**ell)
    d = numtheory.valuation(order, t)
    if t**d != order:
        raise OrderNotPrimePower(f"ord(q mod t^ell) = {order} is not a power of {t}")
    m = order
    N = (q**m - 1) // t**jj
    spec = code_params(p, s, m, N)
    shape = _prime_power_attempt(spec)
    assert shape is not None, "validated parameters must fit the prime-power form"
    return WeightDistribution(spec, _prime_power_entries(spec, *shape), "thm23")
