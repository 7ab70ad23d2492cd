"""Timing the quadratic EMD formula against the single-pass version."""

from __future__ import annotations

import gc
import random
import time
from dataclasses import dataclass

from .distribution import Distribution, domain_of
from .emd import emd_definition, emd_efficient


@dataclass
class BenchRow:
    m: int
    reps: int
    naive_s: float | None  # mean seconds per evaluation, None when skipped
    naive_best_s: float | None
    efficient_s: float
    efficient_best_s: float

    @property
    def ratio(self) -> float | None:
        """Best efficient time over best naive time; shrinks with m if naive is quadratic."""
        if self.naive_best_s is None:
            return None
        return self.efficient_best_s / self.naive_best_s


def random_pair(m: int, rng: random.Random, max_weight: int = 1000):
    """Two random distributions over a shared ``m``-value domain."""
    domain = domain_of(m)
    out = []
    for _ in range(2):
        w = [rng.randint(0, max_weight) for _ in range(m)]
        if not any(w):
            w[rng.randrange(m)] = 1
        out.append(Distribution(domain, tuple(w), sum(w)))
    return out[0], out[1]


def _time(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return time.perf_counter() - t0, value


def run_benchmark(sizes, reps: int = 3, naive: bool = True, seed: int = 0) -> list[BenchRow]:
    rng = random.Random(seed)
    rows = []
    for m in sizes:
        if m < 2:
            raise ValueError("benchmark sizes must be >= 2")
        naive_total = eff_total = 0.0
        naive_best = eff_best = float("inf")
        for _ in range(reps):
            p, q = random_pair(m, rng)
            dt, fast = _time(emd_efficient, p, q)
            eff_total += dt
            eff_best = min(eff_best, dt)
            if naive:
                dt, slow = _time(emd_definition, p, q)
                naive_total += dt
                naive_best = min(naive_best, dt)
                if slow != fast:
                    raise AssertionError(f"EMD mismatch at m={m}: {slow} != {fast}")
        rows.append(BenchRow(
            m, reps,
            naive_total / reps if naive else None,
            naive_best if naive else None,
            eff_total / reps,
            eff_best,
        ))
    return rows


def efficient_scaling(sizes, rounds: int = 9, seed: int = 0) -> dict[int, float]:
    """Best-of-``rounds`` time of :func:`emd_efficient` for each size.

    Sizes are visited round-robin with the garbage collector paused, so a burst
    of background load hits every size rather than skewing one of them.
    """
    rng = random.Random(seed)
    pairs = {m: random_pair(m, rng) for m in sizes}
    best = dict.fromkeys(pairs, float("inf"))
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(rounds):
            for m, (p, q) in pairs.items():
                dt, _ = _time(emd_efficient, p, q)
                best[m] = min(best[m], dt)
    finally:
        if was_enabled:
            gc.enable()
    return best


def format_rows(rows: list[BenchRow]) -> str:
    lines = [f"{'m':>9}  {'naive (s)':>12}  {'efficient (s)':>14}  {'best (s)':>10}  {'eff/naive':>10}"]
    for r in rows:
        naive = f"{r.naive_s:12.6f}" if r.naive_s is not None else f"{'-':>12}"
        ratio = f"{r.ratio:10.5f}" if r.ratio is not None else f"{'-':>10}"
        lines.append(f"{r.m:>9}  {naive}  {r.efficient_s:14.6f}  {r.efficient_best_s:10.6f}  {ratio}")
    return "\n".join(lines) + "\n"
