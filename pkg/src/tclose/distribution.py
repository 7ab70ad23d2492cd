"""Value domains and exact probability distributions over them.

A :class:`Distribution` stores integer weights over a shared denominator
rather than a list of :class:`~fractions.Fraction` objects. Every
probability that arises here is a ratio of record counts, so this is still
exact rational arithmetic; it just lets the distance routines run on plain
ints and only build a ``Fraction`` at the end.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, NonNumericValue, ValueOutsideDomain


class OrderingPolicy(enum.Enum):
    VALUE_ASCENDING = "value"
    FREQUENCY_DESCENDING = "freq-desc"
    FIRST_APPEARANCE = "appearance"


def parse_number(text: str) -> Fraction:
    """Parse ``text`` as an exact finite number.

    Accepts integers and decimals, optionally followed by ``k``/``K`` meaning
    thousands (``"11k"`` -> 11000).
    """
    s = text.strip()
    scale = 1
    if s[-1:] in ("k", "K"):
        s, scale = s[:-1], 1000
    try:
        d = Decimal(s)
    except InvalidOperation:
        raise NonNumericValue(text) from None
    if not d.is_finite():
        raise NonNumericValue(text)
    return Fraction(d) * scale


@dataclass(frozen=True)
class Domain:
    """Ordered distinct values of a sensitive attribute."""

    values: tuple[str, ...]
    policy: OrderingPolicy
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.values:
            raise InputError("a domain needs at least one value")
        index = {v: i for i, v in enumerate(self.values)}
        if len(index) != len(self.values):
            raise InputError("domain values must be distinct")
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.values)

    def index(self, value: str) -> int:
        """0-based position of ``value``."""
        try:
            return self._index[value]
        except KeyError:
            raise ValueOutsideDomain(value) from None

    def __contains__(self, value):
        return value in self._index


def build_domain(values: Sequence[str], policy: OrderingPolicy) -> Domain:
    if not values:
        raise InputError("cannot build a domain from an empty multiset")
    counts = Counter(values)  # insertion order == first appearance
    distinct = list(counts)
    if policy is OrderingPolicy.VALUE_ASCENDING:
        keys = {v: parse_number(v) for v in distinct}
        # sort is stable, so numerically equal labels ("10", "10.0") keep first-appearance order
        distinct.sort(key=keys.__getitem__)
    elif policy is OrderingPolicy.FREQUENCY_DESCENDING:
        distinct.sort(key=lambda v: -counts[v])
    elif policy is not OrderingPolicy.FIRST_APPEARANCE:
        raise ValueError(f"unknown ordering policy {policy!r}")
    return Domain(tuple(distinct), policy)


@dataclass(frozen=True)
class Distribution:
    """Probabilities ``weights[i] / total`` aligned to ``domain.values``."""

    domain: Domain
    weights: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.weights) != len(self.domain):
            raise InputError(
                f"{len(self.weights)} weights for a domain of size {len(self.domain)}")
        if self.total <= 0 or any(w < 0 for w in self.weights) or sum(self.weights) != self.total:
            raise InputError("weights must be non-negative and sum to total")

    @classmethod
    def from_probs(cls, domain: Domain, probs: Iterable) -> Distribution:
        """Build from explicit rational probabilities (which must sum to 1)."""
        fr = [Fraction(p) for p in probs]
        if sum(fr) != 1:
            raise InputError(f"probabilities sum to {sum(fr)}, not 1")
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        return cls(domain, tuple(f.numerator * (den // f.denominator) for f in fr), den)

    def __len__(self):
        return len(self.weights)

    @property
    def probs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.total) for w in self.weights)

    def __getitem__(self, i) -> Fraction:
        return Fraction(self.weights[i], self.total)


def build_distribution(values: Sequence[str], domain: Domain) -> Distribution:
    if not values:
        raise InputError("cannot build a distribution from an empty multiset")
    weights = [0] * len(domain)
    for v in values:
        weights[domain.index(v)] += 1
    return Distribution(domain, tuple(weights), len(values))


def domain_of(probs_len: int) -> Domain:
    """A throwaway domain ``("1", ..., "m")`` for working with bare probability vectors."""
    return Domain(tuple(str(i + 1) for i in range(probs_len)), OrderingPolicy.FIRST_APPEARANCE)


def distribution(probs: Sequence, domain: Domain | None = None) -> Distribution:
    """Shorthand for ``Distribution.from_probs`` over an index-labelled domain."""
    return Distribution.from_probs(domain or domain_of(len(probs)), probs)
