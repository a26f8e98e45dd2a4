"""Pure-numpy fallback for the field orbit kernel.

Walks the orbit in stripes: a d x L block of consecutive power columns is
advanced by the precomputed matrix M^L, so the python-level loop runs
count/L times instead of count times.
"""

from __future__ import annotations

import numpy as np

_STRIPE = 4096


def _matpow(m: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.eye(m.shape[0], dtype=np.int64)
    base = m % p
    while e:
        if e & 1:
            out = (out @ base) % p
        base = (base @ base) % p
        e >>= 1
    return out


def alpha_orbit(p: int, d: int, mult, count: int) -> np.ndarray:
    """Base-p encodings of alpha^0 .. alpha^(count-1).

    mult is the d x d matrix over GF(p) of multiplication by alpha acting on
    coefficient columns; entry k of the result encodes alpha^k as
    sum(coeff[i] * p**i).
    """
    m = np.asarray(mult, dtype=np.int64) % p
    powers = p ** np.arange(d, dtype=np.int64)
    stripe = min(_STRIPE, count)
    block = np.zeros((d, stripe), dtype=np.int64)
    col = np.zeros(d, dtype=np.int64)
    col[0] = 1
    for k in range(stripe):
        block[:, k] = col
        col = (m @ col) % p
    advance = _matpow(m, stripe, p)
    out = np.empty(count, dtype=np.int64)
    done = 0
    while done < count:
        take = min(stripe, count - done)
        out[done : done + take] = powers @ block[:, :take]
        done += take
        if done < count:
            block = (advance @ block) % p
    return out
