"""Machine-readable bound reports.

Reports are JSON objects written with sorted keys and two-space indentation so identical
inputs produce byte-identical files. Huge integers appear in factored form, rationals as
``"num/den"`` and reals as decimal strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from mpmath import mpf, nstr

from ._internal.precision import working_precision
from .config import get_config
from .exactmath import Factorization
from .exceptions import InputError
from .heightbound import BoundReport

REPORT_KEYS = {
    "name",
    "e_bound",
    "f_bound",
    "log10_f",
    "k",
    "lambda",
    "beta",
    "ln_height_bound",
    "log10_height_bound",
    "positivity",
}


def format_decimal(value: Any, digits: int) -> str:
    """Render a real with at most ``digits`` significant digits."""
    return str(nstr(value, digits, strip_zeros=True))


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"num/den"`` (or ``"num"`` when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def report_to_dict(report: BoundReport) -> dict[str, Any]:
    """Serialize a report to plain JSON types."""
    config = get_config()
    return {
        "name": report.name,
        "e_bound": str(report.e_bound),
        "f_bound": str(report.f_bound),
        "log10_f": format_decimal(report.log10_f(), config.log10_digits),
        "k": report.k,
        "lambda": report.lambda_,
        "beta": format_rational(report.beta),
        "ln_height_bound": format_decimal(report.ln_bound, config.decimal_digits),
        "log10_height_bound": format_decimal(report.log10_height_bound(), config.log10_digits),
        "positivity": report.positivity,
    }


def render_report(report: BoundReport) -> str:
    """Render a report as a JSON document."""
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n"


def report_from_dict(payload: Any) -> BoundReport:
    """Rebuild a report from its serialized form.

    Raises:
        InputError: If keys are missing or unknown, or a field does not parse.
    """
    if not isinstance(payload, dict):
        raise InputError("Invalid report: expected a JSON object")
    missing = REPORT_KEYS - set(payload)
    if missing:
        raise InputError(f"Invalid report: missing keys {sorted(missing)}")
    unknown = set(payload) - REPORT_KEYS
    if unknown:
        raise InputError(f"Invalid report: unknown keys {sorted(unknown)}")
    try:
        beta = Fraction(payload["beta"])
        with working_precision(get_config().precision_bits):
            ln_bound = mpf(payload["ln_height_bound"])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"Invalid report: {exc}") from exc
    return BoundReport(
        e_bound=Factorization.parse(payload["e_bound"]),
        f_bound=Factorization.parse(payload["f_bound"]),
        k=int(payload["k"]),
        lambda_=int(payload["lambda"]),
        beta=beta,
        ln_bound=ln_bound,
        positivity=bool(payload["positivity"]),
        name=str(payload["name"]),
    )


def parse_report(text: str) -> BoundReport:
    """Parse a JSON report document.

    Raises:
        InputError: If the text is not a valid report.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"Report is not valid JSON: {exc}") from exc
    return report_from_dict(payload)
