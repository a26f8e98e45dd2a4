"""Elementary number theory used by the closed-form weight formulas.

Everything here is exact integer arithmetic.  The diophantine solvers return
the canonical representative demanded by the formulas that consume them
(sign congruences pin the solution down uniquely); the optional ``*_sign``
keywords exist so tests can exercise the documented sign invariance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadDiscriminant, NoRepresentation, NotCoprime, NotPrime

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs we use."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n <= 0:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    # trial divide with a 2,4 wheel up to ~2**20, then rho for what remains
    step = 4
    while f * f <= n and f < (1 << 20):
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += step
        step = 6 - step
    while n > 1:
        if is_prime(n):
            out[n] = out.get(n, 0) + 1
            break
        d = _pollard_rho(n)
        while not is_prime(d):
            d = _pollard_rho(d)
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def mult_order(a: int, modulus: int, *, divisor_of: int | None = None) -> int:
    """Multiplicative order of a modulo modulus.

    When the order is known to divide some D (for instance the degree of a
    field extension), pass divisor_of=D to search only divisors of D.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if modulus == 1:
        return 1
    a %= modulus
    if math.gcd(a, modulus) != 1:
        raise NotCoprime(f"{a} shares a factor with {modulus}")
    if divisor_of is not None:
        for d in divisors(divisor_of):
            if pow(a, d, modulus) == 1:
                return d
        raise ValueError(f"order of {a} mod {modulus} does not divide {divisor_of}")
    # reduce the group exponent prime by prime
    phi = 1
    for p, e in factorize(modulus).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for p in factorize(phi):
        while order % p == 0 and pow(a, order // p, modulus) == 1:
            order //= p
    return order


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p."""
    t = pow(a % p, (p - 1) // 2, p)
    if t == 0:
        return 0
    return 1 if t == 1 else -1


def semiprimitive_j(p: int, N: int) -> int | None:
    """Least j with p**j = -1 (mod N), or None when no such j exists.

    Exists iff the order e of p mod N is even with p**(e/2) = -1; then j = e/2.
    """
    if N <= 2:
        # -1 = 1 mod N, so j = order works; callers only use N >= 3
        return mult_order(p, N) if N > 0 else None
    e = mult_order(p, N)
    if e % 2 == 0 and pow(p, e // 2, N) == N - 1:
        return e // 2
    return None


def class_number(l: int) -> int:
    """Class number h(-l) for a prime l = 3 (mod 4), l > 3.

    Counts reduced binary quadratic forms (A, B, C) of discriminant -l:
    B^2 - 4AC = -l with |B| <= A <= C, and B >= 0 when |B| = A or A = C.
    """
    if not is_prime(l):
        raise NotPrime(f"{l} is not prime")
    if l % 4 != 3 or l == 3:
        raise BadDiscriminant(f"-{l} is outside the supported family")
    h = 0
    b = 1
    while 3 * b * b <= l:
        m4 = b * b + l
        if m4 % 4 == 0:
            m = m4 // 4
            a = b
            while a * a <= m:
                if m % a == 0:
                    c = m // a
                    h += 1 if (a == b or a == c) else 2
                a += 1
        b += 2
    return h


@dataclass(frozen=True)
class DiophantineRep:
    """A point on one of the quadratic diophantine curves used here.

    note records which sign ambiguity was fixed and how.
    """

    kind: str
    first: int
    second: int
    note: str = ""

    def __iter__(self):
        return iter((self.first, self.second))


def solve_c27d(m: int, p: int, *, d_sign: int = 1) -> DiophantineRep:
    """The unique (c, d) with 4m = c^2 + 27 d^2, c = 1 (mod 3), d >= 0.

    When p = 1 (mod 3) the solution with gcd(c, p) = 1 is selected.  d_sign
    flips the sign of the returned d (the two signs are conjugate solutions).
    """
    target = 4 * m
    hits = []
    d = 0
    while 27 * d * d <= target:
        rest = target - 27 * d * d
        c = math.isqrt(rest)
        if c * c == rest:
            for cc in {c, -c}:
                if cc % 3 == 1:
                    if p % 3 == 1 and math.gcd(cc, p) != 1:
                        continue
                    hits.append((cc, d))
        d += 1
    if len(hits) != 1:
        raise NoRepresentation(f"4*{m} = c^2 + 27 d^2 has {len(hits)} admissible solutions")
    c, d = hits[0]
    note = "d >= 0" if d_sign >= 0 else "d <= 0"
    return DiophantineRep("c27d", c, d_sign * d, note)


def solve_u4v(m: int, p: int, *, v_sign: int = 1) -> DiophantineRep:
    """The unique (u, v) with m = u^2 + 4 v^2, u = 1 (mod 4), v >= 0.

    When p = 1 (mod 4) the solution with gcd(u, p) = 1 is selected.
    """
    hits = []
    v = 0
    while 4 * v * v <= m:
        rest = m - 4 * v * v
        u = math.isqrt(rest)
        if u * u == rest:
            for uu in {u, -u}:
                if uu % 4 == 1:
                    if p % 4 == 1 and math.gcd(uu, p) != 1:
                        continue
                    hits.append((uu, v))
        v += 1
    if len(hits) != 1:
        raise NoRepresentation(f"{m} = u^2 + 4 v^2 has {len(hits)} admissible solutions")
    u, v = hits[0]
    note = "v >= 0" if v_sign >= 0 else "v <= 0"
    return DiophantineRep("u4v", u, v_sign * v, note)


def solve_alb(p: int, l: int, h: int, *, b_sign: int = 1) -> DiophantineRep:
    """(a, b) with a^2 + l b^2 = 4 p^h, a = -2 p^((l-1+2h)/4) (mod l), b > 0.

    The congruence fixes the sign of a; h is the class number of -l, which is
    odd for the primes l = 3 (mod 4) handled here, making the exponent integral.
    """
    if (l - 1 + 2 * h) % 4 != 0:
        raise NoRepresentation(f"(l-1+2h)/4 is not an integer for l={l}, h={h}")
    need = (-2 * pow(p, (l - 1 + 2 * h) // 4, l)) % l
    target = 4 * p**h
    b = 1
    while l * b * b <= target:
        rest = target - l * b * b
        a = math.isqrt(rest)
        if a * a == rest:
            for aa in (a, -a):
                if aa % l == need:
                    note = "a pinned mod l, " + ("b > 0" if b_sign >= 0 else "b < 0")
                    return DiophantineRep("alb", aa, b_sign * b, note)
        b += 1
    raise NoRepresentation(f"a^2 + {l} b^2 = 4*{p}^{h} has no admissible solution")
