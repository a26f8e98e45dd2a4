"""Closed forms for Gauss sums and Gaussian periods.

Every value here is exact.  Quadratic irrationalities are carried as
(x + y*sqrt(D))/2 pairs; period polynomials carry integer coefficients and,
when the theory pins them down, their integer root multisets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import numtheory
from .errors import (
    EvenPrime,
    IrrationalPeriod,
    NotDivisible,
    NotIndexTwo,
    NotPrime,
    NotSemiprimitive,
)


class QuadraticValue:
    """Exact (half_x + half_y * sqrt(D)) / 2 with integer halves.

    For D = 1 (mod 4) the ring of integers allows both halves odd, but they
    must share parity; otherwise both must be even.  Closed under + and *.
    """

    __slots__ = ("half_x", "half_y", "D")

    def __init__(self, half_x: int, half_y: int, D: int):
        if D % 4 == 1:
            if (half_x - half_y) % 2:
                raise ValueError("halves must share parity when D = 1 (mod 4)")
        elif half_x % 2 or half_y % 2:
            raise ValueError("halves must be even when D != 1 (mod 4)")
        self.half_x = half_x
        self.half_y = half_y
        self.D = D

    @classmethod
    def from_integer(cls, n: int, D: int) -> "QuadraticValue":
        return cls(2 * n, 0, D)

    @classmethod
    def sqrt_of(cls, D: int) -> "QuadraticValue":
        return cls(0, 2, D)

    def _coerce(self, other):
        if isinstance(other, int):
            return QuadraticValue.from_integer(other, self.D)
        if isinstance(other, QuadraticValue):
            if other.D != self.D:
                raise ValueError("mixed discriminants")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticValue(self.half_x + other.half_x, self.half_y + other.half_y, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticValue(self.half_x - other.half_x, self.half_y - other.half_y, self.D)

    def __neg__(self):
        return QuadraticValue(-self.half_x, -self.half_y, self.D)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadraticValue(self.half_x * other, self.half_y * other, self.D)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        x = self.half_x * other.half_x + self.D * self.half_y * other.half_y
        y = self.half_x * other.half_y + self.half_y * other.half_x
        assert x % 2 == 0 and y % 2 == 0
        return QuadraticValue(x // 2, y // 2, self.D)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QuadraticValue":
        if e < 0:
            raise ValueError("negative powers not supported")
        out = QuadraticValue.from_integer(1, self.D)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "QuadraticValue":
        return QuadraticValue(self.half_x, -self.half_y, self.D)

    def norm(self) -> Fraction:
        """self * conjugate(self), always rational."""
        return Fraction(self.half_x**2 - self.D * self.half_y**2, 4)

    @property
    def is_rational(self) -> bool:
        return self.half_y == 0

    def as_integer(self) -> int:
        if self.half_y or self.half_x % 2:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.half_x // 2

    def value(self) -> complex:
        root = math.sqrt(self.D) if self.D >= 0 else 1j * math.sqrt(-self.D)
        return (self.half_x + self.half_y * root) / 2

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.half_y == 0 and self.half_x == 2 * other
        if not isinstance(other, QuadraticValue):
            return NotImplemented
        if self.half_y == 0 and other.half_y == 0:
            return self.half_x == other.half_x
        return (self.half_x, self.half_y, self.D) == (other.half_x, other.half_y, other.D)

    def __hash__(self) -> int:
        if self.half_y == 0:
            return hash(("QV", self.half_x))
        return hash(("QV", self.half_x, self.half_y, self.D))

    def __repr__(self) -> str:
        return f"({self.half_x} + {self.half_y}*sqrt({self.D}))/2"


def quadratic_gauss_sum(p: int, s: int) -> QuadraticValue:
    """Exact Gauss sum of the quadratic character of GF(p^s), odd p.

    Real +-sqrt(q) or imaginary +-sqrt(-q) depending on p mod 4 and the
    parity of s; imaginary values are expressed over sqrt(-p).
    """
    if p == 2:
        raise EvenPrime("the quadratic character needs odd characteristic")
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    sign = (-1) ** (s - 1)
    if p % 4 == 3:
        # the extra factor is (sqrt(-1))**s
        if s % 2 == 0:
            sign *= (-1) ** (s // 2)
        else:
            sign *= (-1) ** ((s - 1) // 2)
    if s % 2 == 0:
        return QuadraticValue.from_integer(sign * p ** (s // 2), p)
    root = p if p % 4 == 1 else -p
    return QuadraticValue(0, 2 * sign * p ** ((s - 1) // 2), root)


def periods_order2(p: int, s: int, m: int) -> tuple[int, int]:
    """The two Gaussian periods of order 2 over GF(p^(s*m)), odd p.

    eta_0 sums the additive character over the nonzero squares.  Integral
    only in even total degree; odd degrees raise IrrationalPeriod.
    """
    if p == 2:
        raise EvenPrime("order-2 periods need odd characteristic")
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    d = s * m
    if d % 2:
        raise IrrationalPeriod(f"order-2 periods over GF({p}^{d}) are irrational")
    root = p ** (d // 2)
    if p % 4 == 3 and (d // 2) % 2 == 1:
        eta0 = (-1 + root) // 2
    else:
        eta0 = (-1 - root) // 2
    return eta0, -1 - eta0


@dataclass(frozen=True)
class PeriodPolynomial:
    """Monic integer polynomial whose roots are the order-N Gaussian periods.

    coeffs is ascending (constant first, leading 1 last).  roots, when the
    closed form determines them, is a tuple of (value, multiplicity) pairs.
    """

    N: int
    r: int
    coeffs: tuple[int, ...]
    roots: tuple[tuple[int, int], ...] | None

    def __post_init__(self):
        assert len(self.coeffs) == self.N + 1 and self.coeffs[-1] == 1
        if self.roots is not None:
            assert sum(mult for _, mult in self.roots) == self.N
            poly = [1]
            for value, mult in self.roots:
                for _ in range(mult):
                    poly = [0] + poly
                    for i in range(len(poly) - 1):
                        poly[i] -= value * poly[i + 1]
            assert tuple(poly) == self.coeffs, "roots do not expand to the coefficients"

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise AssertionError(f"{what} = {num}/{den} is not an integer")
    return num // den


def period_poly_order3(p: int, s: int, m: int) -> PeriodPolynomial:
    """Period polynomial of order 3, with roots when the degree allows them."""
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    d = s * m
    r = p**d
    if (r - 1) % 3:
        raise NotDivisible(f"3 does not divide r - 1 = {r - 1}")
    c, dd = numtheory.solve_c27d(r, p)
    coeffs = (
        -_exact_div((c + 3) * r - 1, 27, "constant term"),
        -_exact_div(r - 1, 3, "linear term"),
        1,
        1,
    )
    roots: tuple | None = None
    if p % 3 == 2:
        # here d is even, else 3 would not divide r - 1
        root = p ** (d // 2)
        if (d // 2) % 2:
            roots = ((_exact_div(-1 + 2 * root, 3, "root"), 1), (_exact_div(-1 - root, 3, "root"), 2))
        else:
            roots = ((_exact_div(-1 - 2 * root, 3, "root"), 1), (_exact_div(-1 + root, 3, "root"), 2))
    elif d % 3 == 0:
        cube = p ** (d // 3)
        c1, d1 = numtheory.solve_c27d(cube, p)
        half_plus = _exact_div(c1 + 9 * d1, 2, "conjugate pair")
        half_minus = _exact_div(c1 - 9 * d1, 2, "conjugate pair")
        raw = [
            _exact_div(-1 + c1 * cube, 3, "root"),
            _exact_div(-1 - half_plus * cube, 3, "root"),
            _exact_div(-1 - half_minus * cube, 3, "root"),
        ]
        grouped: dict[int, int] = {}
        for v in raw:
            grouped[v] = grouped.get(v, 0) + 1
        roots = tuple(sorted(grouped.items()))
    return PeriodPolynomial(3, r, coeffs, roots)


def period_poly_order4(p: int, s: int, m: int) -> PeriodPolynomial:
    """Period polynomial of order 4, with roots when the degree allows them."""
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    d = s * m
    r = p**d
    if (r - 1) % 4:
        raise NotDivisible(f"4 does not divide r - 1 = {r - 1}")
    u, v = numtheory.solve_u4v(r, p)
    n = (r - 1) // 4
    if n % 2 == 0:
        coeffs = (
            _exact_div(r * r - (4 * u * u - 8 * u + 6) * r + 1, 256, "constant term"),
            _exact_div((2 * u - 3) * r + 1, 16, "linear term"),
            -_exact_div(3 * r - 3, 8, "quadratic term"),
            1,
            1,
        )
    else:
        coeffs = (
            _exact_div(9 * r * r - (4 * u * u - 8 * u - 2) * r + 1, 256, "constant term"),
            _exact_div((2 * u + 1) * r + 1, 16, "linear term"),
            _exact_div(r + 3, 8, "quadratic term"),
            1,
            1,
        )
    roots: tuple | None = None
    if p % 4 == 3:
        # 4 | r - 1 forces even degree here
        root = p ** (d // 2)
        if (d // 2) % 2:
            roots = ((_exact_div(-1 + 3 * root, 4, "root"), 1), (_exact_div(-1 - root, 4, "root"), 3))
        else:
            roots = ((_exact_div(-1 - 3 * root, 4, "root"), 1), (_exact_div(-1 + root, 4, "root"), 3))
    elif d % 4 == 0:
        half = p ** (d // 2)
        quarter = p ** (d // 4)
        u1, v1 = numtheory.solve_u4v(half, p)
        raw = [
            _exact_div(-1 - half - 2 * quarter * u1, 4, "root"),
            _exact_div(-1 - half + 2 * quarter * u1, 4, "root"),
            _exact_div(-1 + half - 4 * quarter * v1, 4, "root"),
            _exact_div(-1 + half + 4 * quarter * v1, 4, "root"),
        ]
        grouped: dict[int, int] = {}
        for w in raw:
            grouped[w] = grouped.get(w, 0) + 1
        roots = tuple(sorted(grouped.items()))
    return PeriodPolynomial(4, r, coeffs, roots)


# ---------------------------------------------------------------------------
# semiprimitive family


def _require_semiprimitive(p: int, j: int, N: int) -> None:
    if N < 3:
        raise NotSemiprimitive("orders below 3 are handled by dedicated forms")
    if pow(p, j, N) != N - 1:
        raise NotSemiprimitive(f"{p}^{j} is not -1 mod {N}")


def semiprimitive_gauss_sums(p: int, j: int, gamma: int, N: int) -> list[int]:
    """G(psi^i) for i = 1..N-1 over GF(p^(2*j*gamma)), all rational integers.

    psi is an order-N character; with p^j = -1 (mod N) every such Gauss sum
    is +-sqrt(r).
    """
    _require_semiprimitive(p, j, N)
    root = p ** (j * gamma)
    alternating = N % 2 == 0 and p % 2 == 1 and gamma % 2 == 1 and ((p**j + 1) // N) % 2 == 1
    if alternating:
        return [(-1) ** i * root for i in range(1, N)]
    return [(-1) ** (gamma - 1) * root] * (N - 1)


@dataclass(frozen=True)
class SemiprimitivePeriods:
    """Order-N periods in the semiprimitive case: one special class, rest equal.

    Unpacks as (special_value, special_index, common_value).
    """

    N: int
    special_index: int
    special_value: int
    common_value: int

    def __iter__(self):
        return iter((self.special_value, self.special_index, self.common_value))

    def as_list(self) -> list[int]:
        out = [self.common_value] * self.N
        out[self.special_index] = self.special_value
        return out


def semiprimitive_periods(p: int, j: int, gamma: int, N: int) -> SemiprimitivePeriods:
    _require_semiprimitive(p, j, N)
    root = p ** (j * gamma)
    alternating = p % 2 == 1 and gamma % 2 == 1 and ((p**j + 1) // N) % 2 == 1
    if alternating:
        # N is even here since p^j + 1 is even
        special = _exact_div((N - 1) * root - 1, N, "special period")
        common = _exact_div(-(root + 1), N, "common period")
        return SemiprimitivePeriods(N, N // 2, special, common)
    sign = (-1) ** gamma
    special = _exact_div(-sign * (N - 1) * root - 1, N, "special period")
    common = _exact_div(sign * root - 1, N, "common period")
    return SemiprimitivePeriods(N, 0, special, common)


# ---------------------------------------------------------------------------
# index-two family: N1 = l^lam for a prime l = 3 (mod 4), l > 3, with p of
# order (l-1)/2 mod l


@dataclass(frozen=True)
class IndexTwoParams:
    """Everything needed to evaluate the index-two weight formula.

    P, A, B are indexed 0..lam+1; entries 0 and lam+1 are zero by convention
    so the telescoping class sums can reference one slot past each end.
    gauss_sum(t) = P[t] * (A[t] + B[t] * sqrt(-l)) for t = 1..lam.
    """

    p: int
    l: int
    lam: int
    s: int
    N1: int
    f: int
    h: int
    a: int
    b: int
    P: tuple[int, ...]
    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def gauss_sum(self, t: int) -> QuadraticValue:
        x = 2 * self.A[t] * self.P[t]
        y = 2 * self.B[t] * self.P[t]
        assert x.denominator == 1 and y.denominator == 1
        return QuadraticValue(int(x), int(y), -self.l)

    def class_sum(self, i: int) -> int:
        """The exact character-sum correction S_i entering the weight of class i."""
        if not 0 <= i < self.N1:
            raise ValueError("class index out of range")
        if i == 0:
            depth, unit = self.lam, 0
        else:
            depth = numtheory.valuation(i, self.l)
            unit = i // self.l**depth
        total = Fraction(0)
        for t in range(depth + 1):
            total += self.l**t * (self.A[t] * self.P[t] - self.A[t + 1] * self.P[t + 1])
        total += (
            numtheory.legendre(unit, self.l)
            * self.l ** (depth + 1)
            * self.P[depth + 1]
            * self.B[depth + 1]
        )
        assert total.denominator == 1
        return int(total)


def index2_params(p: int, l: int, lam: int, s: int) -> IndexTwoParams:
    """Validate the index-two hypotheses and assemble the exact ingredients.

    s is the ratio (total degree) / f where f = phi(l^lam) / 2 is the degree
    attached to the full order l^lam; the caller checks that ratio is integral.
    """
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not numtheory.is_prime(l):
        raise NotPrime(f"{l} is not prime")
    if l % 4 != 3 or l == 3:
        raise NotIndexTwo(f"l = {l} is not 3 (mod 4) above 3")
    if lam < 1 or s < 1:
        raise ValueError("lam and s must be positive")
    if p == l:
        raise NotIndexTwo("p must differ from l")
    if numtheory.mult_order(p, l) != (l - 1) // 2:
        raise NotIndexTwo(f"{p} does not have order (l-1)/2 mod {l}")
    if numtheory.legendre(p, l) != 1:
        raise NotIndexTwo(f"{p} is not a quadratic residue mod {l}")
    N1 = l**lam
    f = (l - 1) * l ** (lam - 1) // 2
    h = numtheory.class_number(l)
    a, b = numtheory.solve_alb(p, l, h)
    P = [0] * (lam + 2)
    A = [Fraction(0)] * (lam + 2)
    B = [Fraction(0)] * (lam + 2)
    base = QuadraticValue(a, b, -l)
    for t in range(1, lam + 1):
        exponent = s * (f - h * l ** (lam - t))
        assert exponent >= 0 and exponent % 2 == 0, "Gauss sum magnitude must be integral"
        P[t] = (-1) ** (s - 1) * p ** (exponent // 2)
        power = base ** (s * l ** (lam - t))
        A[t] = Fraction(power.half_x, 2)
        B[t] = Fraction(power.half_y, 2)
        assert A[t] ** 2 + l * B[t] ** 2 == p ** (s * h * l ** (lam - t))
    return IndexTwoParams(p, l, lam, s, N1, f, h, a, b, tuple(P), tuple(A), tuple(B))


def index2_periods(params: IndexTwoParams) -> list[int]:
    """The N1 Gaussian periods implied by the index-two class sums."""
    out = []
    for i in range(params.N1):
        num = params.class_sum(i) - 1
        assert num % params.N1 == 0, "index-two period must be integral"
        out.append(num // params.N1)
    return out
