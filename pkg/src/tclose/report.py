"""Rendering privacy reports as text or JSON."""

from __future__ import annotations

import json
from fractions import Fraction

from .metrics import PrivacyReport


def format_decimal(value: Fraction, places: int = 4) -> str:
    """Round half-up (away from zero on ties) to ``places`` decimals."""
    if places < 1:
        raise ValueError("places must be >= 1")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    q, r = divmod(num * 10**places, den)
    if 2 * r >= den:
        q += 1
    whole, frac = divmod(q, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def rational_dict(value: Fraction, places: int) -> dict:
    return {
        "numerator": str(value.numerator),
        "denominator": str(value.denominator),
        "decimal": format_decimal(value, places),
    }


def to_dict(report: PrivacyReport, input_path: str, schema_path: str, precision: int = 4) -> dict:
    return {
        "input": input_path,
        "schema": schema_path,
        "k": report.k,
        "l": report.l,
        "attributes": [
            {
                "name": a.name,
                "role": a.role.value,
                "method": a.method,
                "ordering": a.ordering.value,
                "t": rational_dict(a.t, precision),
                "classes": [
                    {"qi_key": list(key), "distance": rational_dict(d, precision)}
                    for key, d in a.per_class
                ],
                "argmax": [list(key) for key in a.argmax],
            }
            for a in report.attributes
        ],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _key_label(key) -> str:
    return ", ".join(key) if key else "(whole table)"


def _rational_label(r: dict) -> str:
    if r["denominator"] == "1":
        return f"{r['decimal']} ({r['numerator']})"
    return f"{r['decimal']} ({r['numerator']}/{r['denominator']})"


def render_text(doc: dict) -> str:
    """Human-readable report built from the same dict that backs the JSON output."""
    lines = [f"input:  {doc['input']}", f"schema: {doc['schema']}"]
    if doc["k"] is not None:
        lines.append(f"k-anonymity: {doc['k']}")
    if doc["l"] is not None:
        lines.append(f"l-diversity: {doc['l']}")
    for attr in doc["attributes"]:
        lines.append("")
        lines.append(
            f"t-closeness of {attr['name']} ({attr['role']}, "
            f"method={attr['method']}, ordering={attr['ordering']})"
        )
        lines.append(f"  t = {_rational_label(attr['t'])}")
        argmax = {tuple(k) for k in attr["argmax"]}
        labels = [_key_label(c["qi_key"]) for c in attr["classes"]]
        width = max(len("class"), *(len(s) for s in labels))
        lines.append(f"  {'class':<{width}}  distance")
        for label, c in zip(labels, attr["classes"]):
            mark = " *" if tuple(c["qi_key"]) in argmax else ""
            lines.append(f"  {label:<{width}}  {_rational_label(c['distance'])}{mark}")
    return "\n".join(lines) + "\n"
