"""Table-level privacy metrics: k-anonymity, distinct l-diversity, t-closeness."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import emd
from .distribution import OrderingPolicy, build_distribution, build_domain
from .errors import MethodRoleMismatch, NoClasses, UnknownAttribute
from .table import AttributeRole, EquivalenceClass, Table, partition_classes

METHOD_CHOICES = ("definition", "efficient", "transport", "variational", "auto")

DEFAULT_ORDERING = {
    AttributeRole.SENSITIVE_NUMERIC: OrderingPolicy.VALUE_ASCENDING,
    AttributeRole.SENSITIVE_CATEGORICAL: OrderingPolicy.FIRST_APPEARANCE,
}


@dataclass(frozen=True)
class AttributeReport:
    name: str
    role: AttributeRole
    method: str
    ordering: OrderingPolicy
    t: Fraction
    per_class: tuple[tuple[tuple[str, ...], Fraction], ...]
    argmax: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class PrivacyReport:
    k: int | None = None
    l: int | None = None
    attributes: tuple[AttributeReport, ...] = field(default_factory=tuple)


def k_anonymity(classes: Sequence[EquivalenceClass]) -> int:
    if not classes:
        raise NoClasses()
    return min(len(c) for c in classes)


def _require_sensitive(table: Table, attribute: str) -> AttributeRole:
    role = table.schema.role(attribute)
    if role is None or not role.is_sensitive:
        raise UnknownAttribute(attribute)
    return role


def l_diversity(classes: Sequence[EquivalenceClass], attribute: str) -> int:
    """Distinct l-diversity: fewest distinct values of ``attribute`` in any class."""
    if not classes:
        raise NoClasses()
    _require_sensitive(classes[0].table, attribute)
    return min(len(set(c.sensitive_values(attribute))) for c in classes)


def resolve_method(method: str, role: AttributeRole) -> str:
    if method not in METHOD_CHOICES:
        raise ValueError(f"unknown method {method!r}")
    numeric = role is AttributeRole.SENSITIVE_NUMERIC
    if method == "auto":
        return "efficient" if numeric else "variational"
    if numeric != (method in emd.NUMERIC_METHODS):
        raise MethodRoleMismatch(method, role.value)
    return method


def t_closeness(
    table: Table,
    attribute: str,
    method: str = "auto",
    policy: OrderingPolicy | None = None,
    classes: Sequence[EquivalenceClass] | None = None,
) -> AttributeReport:
    """Largest distance between any class's distribution of ``attribute`` and the table's.

    ``policy`` defaults to value order for numeric attributes and first
    appearance for categorical ones. Every class attaining the maximum is
    listed in ``argmax``, in first-appearance order.
    """
    role = _require_sensitive(table, attribute)
    method = resolve_method(method, role)
    policy = policy or DEFAULT_ORDERING[role]
    if classes is None:
        classes = partition_classes(table)
    if not classes:
        raise NoClasses()

    column = table.column(attribute)
    domain = build_domain(column, policy)
    whole = build_distribution(column, domain)
    distance = emd.METHODS[method]

    per_class = tuple(
        (c.qi_key, distance(build_distribution(c.sensitive_values(attribute), domain), whole))
        for c in classes
    )
    t = max(d for _, d in per_class)
    argmax = tuple(key for key, d in per_class if d == t)
    return AttributeReport(attribute, role, method, policy, t, per_class, argmax)


def audit(
    table: Table,
    metrics: Sequence[str] = ("k", "l", "t"),
    attributes: Sequence[str] | None = None,
    method: str = "auto",
    policy: OrderingPolicy | None = None,
) -> PrivacyReport:
    """Compute the requested metrics over ``table``.

    ``l`` is the minimum over the selected sensitive attributes, since a table
    is only as diverse as its least diverse sensitive attribute. Without an
    explicit ``attributes`` list, every sensitive attribute the method applies
    to is audited (all of them for ``"auto"``).
    """
    classes = partition_classes(table)
    if attributes is None:
        attributes = [
            a.name for a in table.schema.attributes
            if a.role.is_sensitive
            and (method == "auto" or (method == "variational")
                 == (a.role is AttributeRole.SENSITIVE_CATEGORICAL))
        ]
        if not attributes:
            raise MethodRoleMismatch(method, "any sensitive")
    for name in attributes:
        _require_sensitive(table, name)

    k = k_anonymity(classes) if "k" in metrics else None
    l = min(l_diversity(classes, a) for a in attributes) if "l" in metrics else None
    reports = ()
    if "t" in metrics:
        reports = tuple(t_closeness(table, a, method, policy, classes) for a in attributes)
    return PrivacyReport(k, l, reports)
