from __future__ import annotations

import json
from fractions import Fraction

import pytest
from mpmath import mpf

from hauteur.exceptions import InputError
from hauteur.heightbound import evaluate_scenario
from hauteur.report import (
    REPORT_KEYS,
    format_decimal,
    format_rational,
    parse_report,
    render_report,
    report_from_dict,
    report_to_dict,
)
from hauteur.scenario import load_packaged_scenario


def test_format_helpers() -> None:
    assert format_rational(Fraction(27, 20)) == "27/20"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_decimal(mpf("0.25"), 6) == "0.25"
    assert format_decimal(mpf(-14062350.5), 6) == "-1.40624e+7"


def test_report_to_dict_for_ex3_3() -> None:
    payload = report_to_dict(evaluate_scenario(load_packaged_scenario("ex3_3")))

    assert set(payload) == REPORT_KEYS
    assert payload["name"] == "ex3_3"
    assert payload["e_bound"] == "2^2 * 5"
    assert payload["f_bound"] == "2^12 * 5^5"
    assert payload["lambda"] == 3
    assert payload["beta"] == "27/20"
    assert payload["positivity"] is True
    assert float(payload["log10_f"]) == pytest.approx(7.10721, abs=1e-5)


def test_rendering_is_deterministic() -> None:
    first = render_report(evaluate_scenario(load_packaged_scenario("ex3_1")))
    second = render_report(evaluate_scenario(load_packaged_scenario("ex3_1")))

    assert first == second
    assert first.endswith("}\n")
    assert list(json.loads(first)) == sorted(REPORT_KEYS)


def test_parse_report_restores_exact_fields() -> None:
    report = evaluate_scenario(load_packaged_scenario("ex3_4"))

    restored = parse_report(render_report(report))

    assert restored.e_bound == report.e_bound
    assert restored.f_bound == report.f_bound
    assert (restored.k, restored.lambda_, restored.beta) == (24, 24, Fraction(27, 20))
    assert float(restored.ln_bound) == pytest.approx(float(report.ln_bound), rel=1e-14)


def test_report_from_dict_rejects_bad_payloads() -> None:
    payload = report_to_dict(evaluate_scenario(load_packaged_scenario("ex3_2")))

    with pytest.raises(InputError, match="expected a JSON object"):
        report_from_dict([payload])
    with pytest.raises(InputError, match="missing keys \\['beta'\\]"):
        report_from_dict({k: v for k, v in payload.items() if k != "beta"})
    with pytest.raises(InputError, match="unknown keys \\['extra'\\]"):
        report_from_dict({**payload, "extra": 1})
    with pytest.raises(InputError, match="Invalid report"):
        report_from_dict({**payload, "beta": "1/0"})
    with pytest.raises(InputError, match="not valid JSON"):
        parse_report("{")
