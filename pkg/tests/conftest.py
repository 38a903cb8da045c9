from __future__ import annotations

import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from hauteur import config
from hauteur.heightbound import BaseFieldData


@pytest.fixture(autouse=True)
def reset_config(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(config.PRECISION_ENV_VAR, raising=False)
    monkeypatch.setattr(config, "_CONFIG", config.Config())


@pytest.fixture
def rational_base() -> BaseFieldData:
    return BaseFieldData(deg_K=1, local_deg=1, e_p=1, f_p=1, class_order=1)


@pytest.fixture
def scenario_payload() -> dict[str, Any]:
    return {
        "name": "ex3_1_copy",
        "p": 5,
        "base": {"deg_K": 1, "local_deg": 1, "e_p": 1, "f_p": 1, "class_order": 1},
        "towers": [{"d": 2, "e": 1, "count": 1}, {"d": 2, "e": 2, "count": 2}],
        "M": 1,
    }


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], Path]:
    def _write(name: str, payload: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
        return path

    return _write
