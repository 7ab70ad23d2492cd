"""Privacy metrics for anonymized tables: k-anonymity, l-diversity, t-closeness."""

from .distribution import (
    Distribution,
    Domain,
    OrderingPolicy,
    build_distribution,
    build_domain,
    distribution,
)
from .emd import (
    TransportMove,
    TransportPlan,
    build_transport_plan,
    emd_definition,
    emd_efficient,
    emd_variational,
    ordered_distance,
)
from .errors import TCloseError
from .metrics import AttributeReport, PrivacyReport, audit, k_anonymity, l_diversity, t_closeness
from .table import (
    Attribute,
    AttributeRole,
    EquivalenceClass,
    Schema,
    Table,
    parse_csv,
    partition_classes,
)

__all__ = [
    "Attribute", "AttributeReport", "AttributeRole", "Distribution", "Domain",
    "EquivalenceClass", "OrderingPolicy", "PrivacyReport", "Schema", "TCloseError",
    "Table", "TransportMove", "TransportPlan", "audit", "build_distribution",
    "build_domain", "build_transport_plan", "distribution", "emd_definition",
    "emd_efficient", "emd_variational", "k_anonymity", "l_diversity",
    "ordered_distance", "parse_csv", "partition_classes", "t_closeness",
]
