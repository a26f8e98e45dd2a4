"""Finite field towers GF(p) <= GF(q) <= GF(r) with exact arithmetic.

Elements are polynomial residues modulo a fixed irreducible polynomial over
the prime field.  Each tower fixes a distinguished primitive element alpha
of the top field; discrete logs, traces and whole-field enumeration are all
expressed relative to alpha.  Two towers with the same characteristic and
top degree share the heavy per-field data (modulus, alpha, orbit, log table)
through a small cache, so sweeping over subfield structures is cheap.

Coefficient tuples are ascending: coeffs[i] multiplies x**i.  The integer
encoding of an element is sum(coeffs[i] * p**i), and "smallest" modulus or
primitive element always means smallest under that encoding.
"""

from __future__ import annotations

import math
from collections import OrderedDict
from typing import Iterator

import numpy as np

from . import kernels, numtheory
from .errors import NotPrime, SizeBudgetExceeded, ZeroHasNoLog

DEFAULT_LOG_TABLE_BUDGET = 1 << 24
DEFAULT_ENUM_BUDGET = 1 << 22
DEFAULT_TOWER_BUDGET = 1 << 26

_CHUNK = 1 << 18


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p); residues are tuples of length d


def _pmul(a: tuple, b: tuple, modulus: tuple, p: int) -> tuple:
    d = len(a)
    if d == 1:
        return ((a[0] * b[0]) % p,)
    prod = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    for i in range(2 * d - 2, d - 1, -1):
        c = prod[i] % p
        if c:
            # x^i = -x^(i-d) * modulus[<d] since the modulus is monic
            for j in range(d):
                if modulus[j]:
                    prod[i - d + j] -= c * modulus[j]
        prod[i] = 0
    return tuple(v % p for v in prod[:d])


def _ppow(a: tuple, e: int, modulus: tuple, p: int) -> tuple:
    d = len(a)
    out = (1,) + (0,) * (d - 1)
    base = a
    while e:
        if e & 1:
            out = _pmul(out, base, modulus, p)
        base = _pmul(base, base, modulus, p)
        e >>= 1
    return out


def _pstrip(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pgcd_is_const(a: list, b: list, p: int) -> bool:
    """True when gcd(a, b) over GF(p) has degree zero."""
    a = _pstrip([x % p for x in a])
    b = _pstrip([x % p for x in b])
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            top = a[-1] * inv % p
            off = len(a) - len(b)
            if top:
                for i, c in enumerate(b):
                    a[off + i] = (a[off + i] - top * c) % p
            else:
                a.pop()
                continue
            _pstrip(a)
        a, b = b, a
    return len(a) == 1


def _is_irreducible(modulus: tuple, p: int) -> bool:
    """Rabin's test for a monic polynomial given as its full coefficient tuple."""
    d = len(modulus) - 1
    if d == 1:
        return True
    x = (0, 1) + (0,) * (d - 2)
    checkpoints = {d // ell for ell in numtheory.factorize(d)}
    cur = x
    for k in range(1, d + 1):
        cur = _ppow(cur, p, modulus, p)
        if k in checkpoints:
            diff = [(cur[i] - x[i]) % p for i in range(d)]
            if not _pgcd_is_const(list(modulus), diff, p):
                return False
    return cur == x


def _digits(n: int, p: int, d: int) -> tuple:
    out = []
    for _ in range(d):
        out.append(n % p)
        n //= p
    return tuple(out)


def _find_modulus(p: int, d: int) -> tuple:
    """Smallest irreducible monic polynomial of degree d over GF(p)."""
    if d == 1:
        return (0, 1)
    for enc in range(p**d):
        if enc % p == 0:
            continue  # x divides it
        cand = _digits(enc, p, d) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # impossible


# ---------------------------------------------------------------------------
# shared per-(p, degree) data


class _Core:
    """Everything about GF(p^d) that does not depend on the subfield split."""

    def __init__(self, p: int, d: int, modulus: tuple | None = None):
        self.p = p
        self.d = d
        self.r = p**d
        self.modulus = tuple(c % p for c in modulus) if modulus else _find_modulus(p, d)
        if len(self.modulus) != d + 1 or self.modulus[d] != 1:
            raise ValueError("modulus must be monic of the tower degree")
        if modulus and not _is_irreducible(self.modulus, p):
            raise ValueError("modulus is reducible")
        self.alpha_coeffs = self._find_primitive()
        self.mult_matrix = self._mult_matrix(self.alpha_coeffs)
        self.trace_form = self._trace_form()
        self._orbit: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._trace_by_log: np.ndarray | None = None
        self._succ_log: np.ndarray | None = None
        self.cache: dict = {}

    # -- construction helpers

    def _find_primitive(self) -> tuple:
        one = (1,) + (0,) * (self.d - 1)
        if self.r == 2:
            return one
        checks = [(self.r - 1) // ell for ell in numtheory.factorize(self.r - 1)]
        for enc in range(2, self.r):
            cand = _digits(enc, self.p, self.d)
            if all(_ppow(cand, e, self.modulus, self.p) != one for e in checks):
                return cand
        raise AssertionError("no primitive element found")  # impossible

    def _mult_matrix(self, g: tuple) -> np.ndarray:
        cols = []
        basis = (1,) + (0,) * (self.d - 1)
        cur = basis
        for _ in range(self.d):
            cols.append(_pmul(g, cur, self.modulus, self.p))
            cur = _pmul(cur, (0, 1) + (0,) * (self.d - 2), self.modulus, self.p) if self.d > 1 else cur
        return np.array(cols, dtype=np.int64).T % self.p

    def _frobenius_matrix(self) -> np.ndarray:
        cols = []
        for j in range(self.d):
            basis_j = tuple(1 if i == j else 0 for i in range(self.d))
            cols.append(_ppow(basis_j, self.p, self.modulus, self.p))
        return np.array(cols, dtype=np.int64).T

    def _trace_form(self) -> np.ndarray:
        """Row vector w with Tr(x) = (w @ coeffs) mod p down to GF(p)."""
        frob = self._frobenius_matrix()
        acc = np.eye(self.d, dtype=np.int64)
        total = np.zeros((self.d, self.d), dtype=np.int64)
        for _ in range(self.d):
            total = (total + acc) % self.p
            acc = (frob @ acc) % self.p
        assert not total[1:].any(), "trace must land in the prime field"
        return total[0].copy()

    # -- enumeration products, all lazy

    def orbit(self) -> np.ndarray:
        """Encodings of alpha^0 .. alpha^(r-2)."""
        if self._orbit is None:
            self._orbit = kernels.alpha_orbit(self.p, self.d, self.mult_matrix, self.r - 1)
        return self._orbit

    def log_table(self, budget: int = DEFAULT_LOG_TABLE_BUDGET) -> np.ndarray:
        """table[encoding] = discrete log, -1 for zero."""
        if self._log is None:
            if self.r > budget:
                raise SizeBudgetExceeded(f"log table for r={self.r} exceeds budget {budget}")
            table = np.full(self.r, -1, dtype=np.int64)
            table[self.orbit()] = np.arange(self.r - 1, dtype=np.int64)
            self._log = table
        return self._log

    def coeff_chunks(self) -> Iterator[tuple[int, np.ndarray]]:
        """Yields (offset, coefficient matrix) blocks decoded from the orbit."""
        orbit = self.orbit()
        for off in range(0, len(orbit), _CHUNK):
            enc = orbit[off : off + _CHUNK]
            mat = np.empty((len(enc), self.d), dtype=np.int64)
            rest = enc.copy()
            for i in range(self.d):
                mat[:, i] = rest % self.p
                rest //= self.p
            yield off, mat

    def apply_forms(self, forms: np.ndarray) -> np.ndarray:
        """(n_forms, r-1) matrix of (forms @ coeffs(alpha^k)) mod p."""
        forms = np.atleast_2d(np.asarray(forms, dtype=np.int64))
        out = np.empty((forms.shape[0], self.r - 1), dtype=np.int64)
        for off, mat in self.coeff_chunks():
            out[:, off : off + mat.shape[0]] = (mat @ forms.T).T % self.p
        return out

    def trace_by_log(self) -> np.ndarray:
        """Absolute trace Tr(alpha^k) down to GF(p), indexed by k."""
        if self._trace_by_log is None:
            self._trace_by_log = self.apply_forms(self.trace_form)[0]
        return self._trace_by_log

    def succ_log(self) -> np.ndarray:
        """dlog(alpha^k + 1) indexed by k, with -1 where alpha^k = -1."""
        if self._succ_log is None:
            orbit = self.orbit()
            c0 = orbit % self.p
            bumped = np.where(c0 == self.p - 1, orbit - (self.p - 1), orbit + 1)
            self._succ_log = self.log_table()[bumped]
        return self._succ_log


_CORE_CACHE: OrderedDict[tuple, _Core] = OrderedDict()
_CORE_CACHE_SIZE = 8


def _core_for(p: int, d: int) -> _Core:
    key = (p, d)
    if key in _CORE_CACHE:
        _CORE_CACHE.move_to_end(key)
        return _CORE_CACHE[key]
    # a cached tower may still hold this core even after eviction here;
    # reuse it so towers over the same field always share one core
    for tower in _TOWER_CACHE.values():
        if tower.core.p == p and tower.core.d == d:
            core = tower.core
            break
    else:
        core = _Core(p, d)
    _CORE_CACHE[key] = core
    while len(_CORE_CACHE) > _CORE_CACHE_SIZE:
        _CORE_CACHE.popitem(last=False)
    return core


# ---------------------------------------------------------------------------
# public element and tower types


class FieldElement:
    """An element of the top field of some tower."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: "FieldTower", coeffs: tuple):
        self.tower = tower
        self.coeffs = coeffs

    def _check(self, other: "FieldElement") -> None:
        if self.tower.core is not other.tower.core:
            raise ValueError("elements live in different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.tower.p
        return FieldElement(self.tower, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.tower.p
        return FieldElement(self.tower, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.tower.p
        return FieldElement(self.tower, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        core = self.tower.core
        return FieldElement(self.tower, _pmul(self.coeffs, other.coeffs, core.modulus, core.p))

    def __pow__(self, e: int) -> "FieldElement":
        core = self.tower.core
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("inverse of zero")
            e %= core.r - 1
        return FieldElement(self.tower, _ppow(self.coeffs, e, core.modulus, core.p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.tower.core is other.tower.core
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.tower.core), self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def encoding(self) -> int:
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.tower.p + c
        return enc

    def __repr__(self) -> str:
        if self.is_zero:
            body = "0"
        else:
            terms = []
            for i, c in enumerate(self.coeffs):
                if not c:
                    continue
                if i == 0:
                    terms.append(str(c))
                else:
                    head = "" if c == 1 else f"{c}*"
                    terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
            body = " + ".join(terms)
        return f"<{body} in GF({self.tower.p}^{self.tower.degree})>"


class FieldTower:
    """GF(p) <= GF(q) <= GF(r) with q = p^s and r = q^m."""

    def __init__(self, p: int, s: int, m: int, core: _Core):
        self.p = p
        self.s = s
        self.m = m
        self.q = p**s
        self.r = core.r
        self.degree = s * m
        self.core = core
        self.subfield_embedding = (self.r - 1) // (self.q - 1)
        self.alpha = FieldElement(self, core.alpha_coeffs)
        # powers of the subfield generator give a GF(p)-basis of GF(q)
        g = _ppow(core.alpha_coeffs, self.subfield_embedding, core.modulus, p)
        self.subfield_generator = FieldElement(self, g)
        self._zero_forms: np.ndarray | None = None
        self._traceq_zero: np.ndarray | None = None

    # -- constructors

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError(f"need {self.degree} coefficients")
        return FieldElement(self, coeffs)

    def from_encoding(self, enc: int) -> FieldElement:
        if not 0 <= enc < self.r:
            raise ValueError("encoding out of range")
        return FieldElement(self, _digits(enc, self.p, self.degree))

    def scalar(self, c: int) -> FieldElement:
        return FieldElement(self, (c % self.p,) + (0,) * (self.degree - 1))

    @property
    def zero(self) -> FieldElement:
        return self.scalar(0)

    @property
    def one(self) -> FieldElement:
        return self.scalar(1)

    def element_from_log(self, k: int) -> FieldElement:
        return self.alpha ** (k % (self.r - 1))

    def elements(self) -> Iterator[FieldElement]:
        """All r elements, zero first then powers of alpha."""
        yield self.zero
        x = self.one
        for _ in range(self.r - 1):
            yield x
            x = x * self.alpha

    # -- traces and logs

    def frobenius(self, x: FieldElement, times: int = 1) -> FieldElement:
        return x ** (self.p**times)

    def trace(self, x: FieldElement, level: str = "r->q") -> FieldElement:
        if x.tower.core is not self.core:
            raise ValueError("element belongs to a different field")
        if level == "r->p":
            steps, power = self.degree, self.p
        elif level == "r->q":
            steps, power = self.m, self.q
        elif level == "q->p":
            if x ** self.q != x:
                raise ValueError("element is not in the middle field GF(q)")
            steps, power = self.s, self.p
        else:
            raise ValueError(f"unknown trace level {level!r}")
        acc = x
        cur = x
        for _ in range(steps - 1):
            cur = cur**power
            acc = acc + cur
        return acc

    def discrete_log(self, x: FieldElement, *, budget: int = DEFAULT_LOG_TABLE_BUDGET) -> int:
        if x.is_zero:
            raise ZeroHasNoLog("zero is not a power of alpha")
        if self.r <= budget:
            return int(self.core.log_table(budget)[x.encoding])
        return self._bsgs(x)

    def _bsgs(self, x: FieldElement) -> int:
        n = self.r - 1
        step = math.isqrt(n - 1) + 1
        baby = {}
        cur = self.one
        for j in range(step):
            baby.setdefault(cur.coeffs, j)
            cur = cur * self.alpha
        giant = self.alpha ** (n - step)  # alpha^(-step)
        cur = x
        for i in range(step + 1):
            j = baby.get(cur.coeffs)
            if j is not None:
                return (i * step + j) % n
            cur = cur * giant
        raise AssertionError("discrete log search failed")  # impossible for x != 0

    # -- vectorized whole-field views

    def zero_forms(self) -> np.ndarray:
        """s x degree matrix W: Tr(x) to GF(q) vanishes iff W @ coeffs = 0 mod p."""
        if self._zero_forms is None:
            core = self.core
            mg = core._mult_matrix(self.subfield_generator.coeffs)
            rows = []
            row = core.trace_form.copy()
            for _ in range(self.s):
                rows.append(row)
                row = (row @ mg) % self.p
            self._zero_forms = np.array(rows, dtype=np.int64)
        return self._zero_forms

    def traceq_zero_by_log(self) -> np.ndarray:
        """Boolean array z with z[k] true iff Tr(alpha^k) to GF(q) is zero."""
        if self._traceq_zero is None:
            if self.s == 1:
                self._traceq_zero = self.core.trace_by_log() == 0
            else:
                vals = self.core.apply_forms(self.zero_forms())
                self._traceq_zero = ~vals.any(axis=0)
        return self._traceq_zero

    def __repr__(self) -> str:
        return f"FieldTower(GF({self.p}^{self.s})^{self.m}, r={self.r})"


_TOWER_CACHE: OrderedDict[tuple, FieldTower] = OrderedDict()
_TOWER_CACHE_SIZE = 16


def build_tower(
    p: int,
    s: int,
    m: int,
    *,
    modulus: tuple | None = None,
    budget: int = DEFAULT_TOWER_BUDGET,
) -> FieldTower:
    """Construct (or fetch from cache) the tower GF(p) <= GF(p^s) <= GF(p^(s*m)).

    The modulus override exists so independence tests can rebuild the same
    field on a different basis; overridden towers bypass the cache.
    """
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    d = s * m
    if p**d > budget:
        raise SizeBudgetExceeded(f"r = {p}^{d} exceeds the tower budget {budget}")
    if modulus is not None:
        return FieldTower(p, s, m, _Core(p, d, modulus))
    key = (p, s, m)
    if key in _TOWER_CACHE:
        _TOWER_CACHE.move_to_end(key)
        return _TOWER_CACHE[key]
    tower = FieldTower(p, s, m, _core_for(p, d))
    _TOWER_CACHE[key] = tower
    while len(_TOWER_CACHE) > _TOWER_CACHE_SIZE:
        _TOWER_CACHE.popitem(last=False)
    return tower
