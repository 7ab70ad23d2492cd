"""Earth mover's distance between aligned distributions.

Four routes to a distance, all exact:

* :func:`emd_definition` evaluates the prefix-sum formula literally, re-adding
  every prefix from scratch (quadratic in ``m``).
* :func:`emd_efficient` carries a running prefix sum (one pass, linear).
* :func:`build_transport_plan` constructs an optimal sequence of mass moves and
  sums their weighted ordered distances.
* :func:`emd_variational` is half the L1 distance, used for categorical values.

Ground distance between indices ``i`` and ``j`` is ``|i - j| / (m - 1)``.
A one-value domain has distance 0 by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .distribution import Distribution
from .errors import IndexOutOfRange, InputError, LengthMismatch


def _check_aligned(p: Distribution, q: Distribution) -> None:
    if len(p) != len(q):
        raise LengthMismatch(len(p), len(q))
    if p.domain is not q.domain and p.domain.values != q.domain.values:
        raise InputError("distributions are defined over different domains")


def _scaled_differences(p: Distribution, q: Distribution) -> tuple[list[int], int]:
    """Return ``(d, den)`` with ``p_i - q_i == d[i] / den``."""
    if p.total == q.total:
        return [a - b for a, b in zip(p.weights, q.weights)], p.total
    den = p.total * q.total
    return [a * q.total - b * p.total for a, b in zip(p.weights, q.weights)], den


def ordered_distance(i: int, j: int, m: int) -> Fraction:
    """Distance between 1-based positions ``i`` and ``j`` in a domain of size ``m``."""
    if m < 2:
        raise IndexOutOfRange(f"ordered distance needs m >= 2, got m={m}")
    if not (1 <= i <= m and 1 <= j <= m):
        raise IndexOutOfRange(f"indices ({i}, {j}) outside 1..{m}")
    return Fraction(abs(i - j), m - 1)


def emd_definition(p: Distribution, q: Distribution) -> Fraction:
    _check_aligned(p, q)
    m = len(p)
    if m == 1:
        return Fraction(0)
    d, den = _scaled_differences(p, q)
    total = 0
    for i in range(m):
        prefix = 0
        for j in range(i + 1):
            prefix += d[j]
        total += abs(prefix)
    return Fraction(total, den * (m - 1))


def emd_efficient(p: Distribution, q: Distribution) -> Fraction:
    _check_aligned(p, q)
    m = len(p)
    if m == 1:
        return Fraction(0)
    if p.total == q.total:
        cp = cq = 1
        den = p.total
    else:
        cp, cq = q.total, p.total
        den = p.total * q.total
    running = 0
    acc = 0
    for a, b in zip(p.weights, q.weights):
        running += a * cp - b * cq
        acc += abs(running)
    return Fraction(acc, den * (m - 1))


@dataclass(frozen=True)
class TransportMove:
    from_index: int
    to_index: int
    mass: Fraction

    def __post_init__(self):
        if self.from_index == self.to_index or self.mass <= 0:
            raise InputError(f"degenerate move {self}")


@dataclass(frozen=True)
class TransportPlan:
    moves: tuple[TransportMove, ...]
    m: int

    @property
    def total_cost(self) -> Fraction:
        if not self.moves:
            return Fraction(0)
        return sum(
            (mv.mass * ordered_distance(mv.from_index, mv.to_index, self.m) for mv in self.moves),
            Fraction(0),
        )

    def apply(self, probs: Sequence) -> tuple[Fraction, ...]:
        """Carry out every move on ``probs`` and return the result."""
        out = [Fraction(x) for x in probs]
        for mv in self.moves:
            out[mv.from_index - 1] -= mv.mass
            out[mv.to_index - 1] += mv.mass
        return tuple(out)

    def __len__(self):
        return len(self.moves)


def build_transport_plan(p: Distribution, q: Distribution) -> TransportPlan:
    """Optimal plan moving the mass of ``p`` onto ``q``.

    Surpluses and deficits are paired monotonically: the leftmost unresolved
    surplus always feeds the leftmost unresolved deficit. In one dimension
    this pairing is optimal, so the plan's cost equals the EMD.
    """
    _check_aligned(p, q)
    m = len(p)
    d, den = _scaled_differences(p, q)
    sources = [[i, x] for i, x in enumerate(d) if x > 0]
    sinks = [[j, -x] for j, x in enumerate(d) if x < 0]

    moves = []
    si = ti = 0
    while si < len(sources):
        src, snk = sources[si], sinks[ti]
        w = min(src[1], snk[1])
        moves.append(TransportMove(src[0] + 1, snk[0] + 1, Fraction(w, den)))
        src[1] -= w
        snk[1] -= w
        if src[1] == 0:
            si += 1
        if snk[1] == 0:
            ti += 1
    moves.sort(key=lambda mv: (mv.from_index, mv.to_index))
    return TransportPlan(tuple(moves), m)


def emd_transport(p: Distribution, q: Distribution) -> Fraction:
    return build_transport_plan(p, q).total_cost


def emd_variational(p: Distribution, q: Distribution) -> Fraction:
    _check_aligned(p, q)
    d, den = _scaled_differences(p, q)
    return Fraction(sum(abs(x) for x in d), 2 * den)


METHODS = {
    "definition": emd_definition,
    "efficient": emd_efficient,
    "transport": emd_transport,
    "variational": emd_variational,
}
NUMERIC_METHODS = ("definition", "efficient", "transport")
