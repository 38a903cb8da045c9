"""Scenario files: JSON descriptions of tower scenarios.

A scenario lists the local profiles of the tower either explicitly (``towers``) or through a
``degrees`` generator that expands to every profile ``(e, f)`` with ``e * f`` in the list, each
counted by Krasner's formula. See ``docs/FORMATS.md`` for the grammar.
"""

from __future__ import annotations

import json
import logging
from importlib import resources
from pathlib import Path
from typing import Any

from .exceptions import InputError, ScenarioError
from .heightbound import BaseFieldData, Modulus, Tower, TowerScenario

logger = logging.getLogger(__name__)

KRASNER = "krasner"
SCENARIO_PACKAGE = "hauteur"
SCENARIO_DIR = "scenarios"

_TOP_LEVEL_REQUIRED = {"p", "base", "M"}
_TOP_LEVEL_OPTIONAL = {"towers", "degrees", "moduli", "name", "description"}
_BASE_KEYS = {"deg_K", "local_deg", "e_p", "f_p", "class_order"}
_TOWER_REQUIRED = {"d", "e"}
_TOWER_OPTIONAL = {"count"}
_MODULUS_REQUIRED = {"g"}
_MODULUS_OPTIONAL = {"eps"}


def _check_keys(obj: Any, required: set[str], optional: set[str], where: str) -> dict[str, Any]:
    """Reject non-objects, missing keys and unknown keys."""
    if not isinstance(obj, dict):
        raise ScenarioError(f"Invalid scenario: {where} must be an object")
    missing = required - set(obj)
    if missing:
        raise ScenarioError(f"Invalid scenario: {where} is missing keys {sorted(missing)}")
    unknown = set(obj) - required - optional
    if unknown:
        raise ScenarioError(f"Invalid scenario: {where} has unknown keys {sorted(unknown)}")
    return obj


def _int_field(obj: dict[str, Any], key: str, where: str) -> int:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"Invalid scenario: {where}.{key} must be an integer, got {value!r}")
    return value


def _parse_towers(raw: Any) -> tuple[Tower, ...]:
    if not isinstance(raw, list) or not raw:
        raise ScenarioError("Invalid scenario: 'towers' must be a non-empty list")
    towers = []
    for index, entry in enumerate(raw):
        where = f"towers[{index}]"
        obj = _check_keys(entry, _TOWER_REQUIRED, _TOWER_OPTIONAL, where)
        count = obj.get("count", KRASNER)
        if count != KRASNER and (isinstance(count, bool) or not isinstance(count, int)):
            raise ScenarioError(
                f"Invalid scenario: {where}.count must be an integer or {KRASNER!r}, got {count!r}"
            )
        towers.append(
            Tower(
                d=_int_field(obj, "d", where),
                e=_int_field(obj, "e", where),
                count=None if count == KRASNER else count,
            )
        )
    return tuple(towers)


def _parse_moduli(raw: Any) -> tuple[Modulus, ...]:
    if not isinstance(raw, list):
        raise ScenarioError("Invalid scenario: 'moduli' must be a list")
    moduli = []
    for index, entry in enumerate(raw):
        where = f"moduli[{index}]"
        obj = _check_keys(entry, _MODULUS_REQUIRED, _MODULUS_OPTIONAL, where)
        eps = _int_field(obj, "eps", where) if "eps" in obj else 1
        moduli.append(Modulus(g=_int_field(obj, "g", where), eps=eps))
    return tuple(moduli)


def expand_degrees(degrees: list[int]) -> tuple[Tower, ...]:
    """Expand a degree list into every profile ``(e, f)`` with ``e * f`` in the list.

    Raises:
        ScenarioError: If the list is empty or holds a non-positive or repeated degree.
    """
    if not degrees:
        raise ScenarioError("Invalid scenario: 'degrees' must be a non-empty list")
    if len(set(degrees)) != len(degrees):
        raise ScenarioError(f"Invalid scenario: 'degrees' has repeated values {degrees}")
    towers = []
    for d in sorted(degrees):
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise ScenarioError(f"Invalid scenario: degree {d!r} must be a positive integer")
        towers.extend(Tower(d=d, e=e) for e in range(1, d + 1) if d % e == 0)
    logger.debug("Expanded degrees %s into %d profiles", degrees, len(towers))
    return tuple(towers)


def parse_scenario(payload: Any, name: str = "") -> TowerScenario:
    """Validate a decoded scenario document and build the scenario.

    Args:
        payload: Decoded JSON document.
        name: Fallback label when the document has no ``name``.

    Raises:
        ScenarioError: If the document is malformed or describes an invalid scenario.
    """
    obj = _check_keys(payload, _TOP_LEVEL_REQUIRED, _TOP_LEVEL_OPTIONAL, "document")
    has_towers = "towers" in obj
    if has_towers == ("degrees" in obj):
        raise ScenarioError("Invalid scenario: give exactly one of 'towers' or 'degrees'")

    base_obj = _check_keys(obj["base"], _BASE_KEYS, set(), "base")
    try:
        base = BaseFieldData(**{key: _int_field(base_obj, key, "base") for key in _BASE_KEYS})
        moduli = _parse_moduli(obj["moduli"]) if "moduli" in obj else None
        if has_towers:
            towers = _parse_towers(obj["towers"])
        else:
            degrees = obj["degrees"]
            if not isinstance(degrees, list):
                raise ScenarioError("Invalid scenario: 'degrees' must be a list")
            towers = expand_degrees(degrees)
        return TowerScenario(
            p=_int_field(obj, "p", "document"),
            base=base,
            towers=towers,
            M=_int_field(obj, "M", "document"),
            moduli=moduli,
            name=str(obj.get("name", name)),
        )
    except ScenarioError:
        raise
    except InputError as exc:
        raise ScenarioError(f"Invalid scenario: {exc}") from exc


def load_scenario(path: Path) -> TowerScenario:
    """Read and validate a scenario file.

    Raises:
        ScenarioError: If the file is not valid JSON or not a valid scenario.
        InputError: If the file cannot be read.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read scenario file {path}: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"Scenario file {path} is not valid JSON: {exc}") from exc
    return parse_scenario(payload, name=path.stem)


def packaged_scenarios() -> list[str]:
    """Names of the scenarios shipped with the package."""
    folder = resources.files(SCENARIO_PACKAGE) / SCENARIO_DIR
    return sorted(
        entry.name.removesuffix(".json")
        for entry in folder.iterdir()
        if entry.name.endswith(".json") and entry.name != "golden.json"
    )


def load_packaged_scenario(name: str) -> TowerScenario:
    """Load a scenario shipped with the package by name (e.g. ``"ex3_3"``).

    Raises:
        InputError: If no packaged scenario has that name.
    """
    resource = resources.files(SCENARIO_PACKAGE) / SCENARIO_DIR / f"{name}.json"
    if not resource.is_file():
        raise InputError(f"Unknown packaged scenario {name!r}; available: {packaged_scenarios()}")
    return parse_scenario(json.loads(resource.read_text(encoding="utf-8")), name=name)


def scenario_to_dict(sc: TowerScenario) -> dict[str, Any]:
    """Serialize a scenario with explicit towers."""
    payload: dict[str, Any] = {
        "name": sc.name,
        "p": sc.p,
        "base": {
            "deg_K": sc.base.deg_K,
            "local_deg": sc.base.local_deg,
            "e_p": sc.base.e_p,
            "f_p": sc.base.f_p,
            "class_order": sc.base.class_order,
        },
        "towers": [
            {"d": t.d, "e": t.e, "count": KRASNER if t.count is None else t.count}
            for t in sc.towers
        ],
        "M": sc.M,
    }
    if sc.moduli is not None:
        payload["moduli"] = [{"g": m.g, "eps": m.eps} for m in sc.moduli]
    return payload
