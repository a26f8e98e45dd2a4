"""Exhaustive weight-distribution oracle, independent of the closed forms.

The fast path never touches period formulas: it marks which powers of alpha
have vanishing trace to GF(q) and sums those marks along each codeword's
index set {c + N*j}.  Two codewords built from beta with equal discrete log
mod N share that index set exactly, so one pass of length r - 1 yields every
codeword weight.  The per-codeword literal mode recomputes traces element by
element and exists to cross-check the vectorized path.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SizeBudgetExceeded
from .fields import DEFAULT_ENUM_BUDGET, FieldElement, FieldTower, build_tower
from .weights import CodeSpec, WeightDistribution, distribution_from_beta_weights


@dataclass(frozen=True)
class Codeword:
    """One literal codeword: entries are traces of beta * theta^j down to GF(q)."""

    spec: CodeSpec
    beta: FieldElement
    entries: tuple[FieldElement, ...]

    @property
    def weight(self) -> int:
        return sum(1 for e in self.entries if not e.is_zero)


def codeword(spec: CodeSpec, tower: FieldTower, beta: FieldElement) -> Codeword:
    """Build the codeword of beta entry by entry; meant for small fields."""
    theta = tower.alpha**spec.N
    entries = []
    x = beta
    for _ in range(spec.n):
        entries.append(tower.trace(x, "r->q"))
        x = x * theta
    return Codeword(spec, beta, tuple(entries))


def _class_weights(spec: CodeSpec, tower: FieldTower) -> np.ndarray:
    """weights[c] = weight of every codeword with dlog(beta) = c (mod N)."""
    nonzero = ~tower.traceq_zero_by_log()
    weights = nonzero.reshape(spec.n, spec.N).sum(axis=0, dtype=np.int64)
    # scaling beta by GF(q)* and multiplying by theta only move the log by
    # multiples of N1, so weights must be constant on classes mod N1
    folded = weights.reshape(spec.N // spec.N1, spec.N1)
    assert (folded == folded[0]).all(), "weights must be constant on classes mod N1"
    return weights


def brute_weight_distribution(
    spec: CodeSpec,
    tower: FieldTower | None = None,
    *,
    literal: bool = False,
    threads: int = 1,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> WeightDistribution:
    """Exact distribution by enumerating the field, within the size budget."""
    if spec.r > budget:
        raise SizeBudgetExceeded(f"oracle at r = {spec.r} exceeds budget {budget}")
    if tower is None:
        tower = build_tower(spec.p, spec.s, spec.m)
    if literal:
        return _literal_distribution(spec, tower, threads)
    weights = _class_weights(spec, tower)
    pairs = [(int(w), spec.n) for w in weights]
    return distribution_from_beta_weights(spec, pairs, "brute")


def _literal_distribution(spec: CodeSpec, tower: FieldTower, threads: int) -> WeightDistribution:
    def weigh_range(bounds: tuple[int, int]) -> Counter:
        lo, hi = bounds
        out: Counter = Counter()
        beta = tower.alpha**lo
        for _ in range(lo, hi):
            out[codeword(spec, tower, beta).weight] += 1
            beta = beta * tower.alpha
        return out

    total = spec.r - 1
    if threads <= 1:
        merged = weigh_range((0, total))
    else:
        step = -(-total // threads)
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counters = list(pool.map(weigh_range, ranges))
        merged = Counter()
        for c in counters:
            merged.update(c)
    pairs = [(w, count) for w, count in sorted(merged.items())]
    return distribution_from_beta_weights(spec, pairs, "brute")


def count_Z(
    spec: CodeSpec,
    tower: FieldTower,
    a: FieldElement,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> int:
    """Number of x in GF(r) with Tr(a * x^N) = 0 down to GF(q), by enumeration."""
    if spec.r > budget:
        raise SizeBudgetExceeded(f"solution count at r = {spec.r} exceeds budget {budget}")
    if a.is_zero:
        return spec.r
    zero = tower.traceq_zero_by_log()
    da = tower.discrete_log(a)
    idx = (da + spec.N * np.arange(spec.r - 1, dtype=np.int64)) % (spec.r - 1)
    return 1 + int(zero[idx].sum())
