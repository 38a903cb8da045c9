"""Golden-file harness replaying the worked examples.

Each row recomputes one example from scratch and compares it with ``golden.json``: exact
fields by string equality, reals against a closed form (relative tolerance) or a window.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable, Iterable
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, get_args

import polars as pl
from mpmath import fabs, log, mpf

from ._internal.precision import working_precision
from .compositum import ExtensionMultiset, crude_bound, inertia_bound
from .config import get_config
from .density import DensityQuery, conjecture_gap, natural_density
from .exceptions import HauteurError, InputError
from .heightbound import evaluate_scenario
from .krasner import LocalField, count_extensions, count_totally_ramified, enumerate_profiles
from .report import format_decimal, report_to_dict
from .scenario import SCENARIO_DIR, SCENARIO_PACKAGE, load_packaged_scenario
from .types import RowName

logger = logging.getLogger(__name__)

ROW_NAMES: tuple[RowName, ...] = get_args(RowName)


def _ex3_1_closed_form(p: int) -> mpf:
    return log(log(mpf(p) / 4) / (2 * (mpf(p) ** 4 + 1)))


def _ex3_1_unramified_closed_form(p: int) -> mpf:
    return log(log(mpf(p) / 2) / (mpf(p) ** 2 + 1))


def _ex3_2_closed_form(p: int) -> mpf:
    return log(log(mpf(2)) / 18)


CLOSED_FORMS: dict[str, Callable[[int], mpf]] = {
    "ex3_1": _ex3_1_closed_form,
    "ex3_1_unramified": _ex3_1_unramified_closed_form,
    "ex3_2": _ex3_2_closed_form,
}
"""Natural logarithms of the explicit bounds stated in closed form, as functions of ``p``."""


def load_golden(path: Path | None = None) -> dict[str, Any]:
    """Load the golden file (the packaged one by default).

    Raises:
        InputError: If the file is unreadable or not a JSON object.
    """
    try:
        if path is None:
            text = (resources.files(SCENARIO_PACKAGE) / SCENARIO_DIR / "golden.json").read_text(
                encoding="utf-8"
            )
        else:
            text = path.read_text(encoding="utf-8")
        golden = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"Cannot load golden file {path or 'golden.json'}: {exc}") from exc
    if not isinstance(golden, dict):
        raise InputError("Golden file must be a JSON object keyed by row name")
    return golden


def appendix_multiset(p: int, dmax: int) -> ExtensionMultiset:
    """Every extension of ``Q_p`` of degree at most ``dmax``, grouped by profile."""
    rows = enumerate_profiles(LocalField(p), dmax)
    return ExtensionMultiset(p, tuple(rows))


def _in_window(value: mpf, check: dict[str, Any]) -> bool:
    low, high = check["window"]
    return bool(low <= value <= high)


def _check_real(label: str, value: mpf, check: dict[str, Any], p: int) -> list[str]:
    if "window" in check:
        if not _in_window(value, check):
            return [f"{label}: {format_decimal(value, 15)} outside window {check['window']}"]
        return []
    reference = CLOSED_FORMS[check["closed_form"]](p)
    if fabs(value - reference) > check["rel_tol"] * fabs(reference):
        return [
            f"{label}: expected {format_decimal(reference, 15)}, got {format_decimal(value, 15)}"
        ]
    return []


def _scenario_row(entry: dict[str, Any]) -> tuple[list[str], str]:
    sc = load_packaged_scenario(entry["scenario"])
    report = evaluate_scenario(sc)
    rendered = report_to_dict(report)
    problems = [
        f"{key}: expected {expected!r}, got {rendered[key]!r}"
        for key, expected in entry["expect"].items()
        if rendered[key] != expected
    ]
    with working_precision(get_config().precision_bits):
        problems += _check_real("ln_height_bound", report.ln_bound, entry["ln_height_bound"], sc.p)
    summary = (
        f"e={rendered['e_bound']} f={rendered['f_bound']} lambda={rendered['lambda']} "
        f"beta={rendered['beta']} ln_bound={rendered['ln_height_bound']}"
    )
    return problems, summary


def _appendix_row(entry: dict[str, Any]) -> tuple[list[str], str]:
    ms = appendix_multiset(entry["p"], entry["dmax"])
    refined = inertia_bound(ms)
    crude = crude_bound(ms)
    problems: list[str] = []
    with working_precision(get_config().precision_bits):
        refined_log = refined.log10()
        crude_log = crude.log10()
        problems += _check_real("refined log10", refined_log, entry["refined_log10"], entry["p"])
        problems += _check_real("crude log10", crude_log, entry["crude_log10"], entry["p"])
        for label, value, stated in (
            ("refined", refined_log, entry["refined_stated"]),
            ("crude", crude_log, entry["crude_stated"]),
        ):
            if value > log(mpf(stated), 10):
                problems.append(f"{label} bound 10^{format_decimal(value, 6)} exceeds {stated}")
    if not refined < crude:
        problems.append("refined bound is not below the crude bound")
    summary = (
        f"refined=10^{format_decimal(refined_log, 6)} crude=10^{format_decimal(crude_log, 6)}"
    )
    return problems, summary


def _krasner_row(entry: dict[str, Any]) -> tuple[list[str], str]:
    problems = []
    for case in entry["cases"]:
        field = LocalField(case["p"], case["abs_degree"])
        if case["kind"] == "totally_ramified":
            value = count_totally_ramified(field, case["d"])
        else:
            value = count_extensions(field, case["d"])
        if value != case["expected"]:
            problems.append(
                f"{case['kind']} count for {field}, d={case['d']}: "
                f"expected {case['expected']}, got {value}"
            )
    return problems, f"{len(entry['cases'])} counts"


def _density_row(entry: dict[str, Any]) -> tuple[list[str], str]:
    problems = []
    for case in entry["cases"]:
        value = natural_density(DensityQuery(case["p"], case["n"], case["kind"]))
        if value != Fraction(case["expected"]):
            problems.append(
                f"d({case['kind']}, p={case['p']}, n={case['n']}): "
                f"expected {case['expected']}, got {value}"
            )
    limit = entry["limit"]
    worst = max(
        abs(n * natural_density(DensityQuery(limit["p"], n, "inert")) - 1) for n in (2, 3, 4, 5)
    )
    if worst >= Fraction(str(limit["tol"])):
        problems.append(f"|n d - 1| = {float(worst):.3g} at p={limit['p']}")
    for n in (2, 3, 4, 5):
        if conjecture_gap(limit["p"], n) <= 0:
            problems.append(f"non-positive gap at p={limit['p']}, n={n}")
    return problems, f"{len(entry['cases'])} densities, max |n d - 1| = {float(worst):.3g}"


_ROW_CHECKS: dict[str, Callable[[dict[str, Any]], tuple[list[str], str]]] = {
    "ex3_1": _scenario_row,
    "ex3_2": _scenario_row,
    "ex3_3": _scenario_row,
    "ex3_4": _scenario_row,
    "appendix_q11": _appendix_row,
    "appendix_q5": _appendix_row,
    "krasner_values": _krasner_row,
    "density_values": _density_row,
}


def run_reproduce(
    only: Iterable[str] | None = None, golden_path: Path | None = None
) -> pl.DataFrame:
    """Replay the examples and compare them with the golden file.

    Args:
        only: Row names to run (all rows by default).
        golden_path: Alternative golden file.

    Returns:
        A table with columns ``row``, ``status`` (``"pass"`` or ``"fail"``) and ``detail``, in
        fixed row order.

    Raises:
        InputError: If an unknown row is requested or the golden file cannot be loaded.
    """
    selected = list(ROW_NAMES) if only is None else list(only)
    unknown = [name for name in selected if name not in ROW_NAMES]
    if unknown:
        raise InputError(f"Unknown reproduce rows {unknown}; choose from {list(ROW_NAMES)}")
    golden = load_golden(golden_path)

    records = []
    for name in ROW_NAMES:
        if name not in selected:
            continue
        entry = golden.get(name)
        if not isinstance(entry, dict):
            problems, summary = [f"no golden entry for {name}"], ""
        else:
            try:
                problems, summary = _ROW_CHECKS[name](entry)
            except (HauteurError, KeyError, TypeError, ValueError) as exc:
                problems, summary = [f"{type(exc).__name__}: {exc}"], ""
        if problems:
            logger.warning("Row %s failed: %s", name, "; ".join(problems))
        records.append(
            {
                "row": name,
                "status": "fail" if problems else "pass",
                "detail": "; ".join(problems) if problems else summary,
            }
        )
    return pl.DataFrame(records, schema={"row": pl.Utf8, "status": pl.Utf8, "detail": pl.Utf8})


def summary_line(results: pl.DataFrame) -> str:
    """Return ``"<passed>/<total> pass"``."""
    passed = results.filter(pl.col("status") == "pass").height
    return f"{passed}/{results.height} pass"

