from __future__ import annotations

import pytest

import hauteur
from hauteur.config import PRECISION_ENV_VAR, Config, configure, get_config, resolve_precision_bits
from hauteur.exceptions import InputError


def test_defaults() -> None:
    config = get_config()

    assert config == Config()
    assert config.precision_bits == 128
    assert config.log10_digits == 6


def test_configure_replaces_fields() -> None:
    updated = configure(precision_bits=256, census_max_candidates=10)

    assert get_config() is updated
    assert (updated.precision_bits, updated.census_max_candidates) == (256, 10)
    assert updated.max_precision_bits == Config().max_precision_bits


def test_configure_rejects_unknown_fields() -> None:
    with pytest.raises(TypeError):
        configure(colour="blue")


def test_configure_is_reexported() -> None:
    hauteur.configure(decimal_digits=20)

    assert hauteur.get_config().decimal_digits == 20


def test_resolve_precision_prefers_explicit_then_env_then_config(
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    configure(precision_bits=96)
    assert resolve_precision_bits() == 96

    monkeypatch.setenv(PRECISION_ENV_VAR, " 200 ")
    assert resolve_precision_bits() == 200
    assert resolve_precision_bits(64) == 64


@pytest.mark.parametrize("raw", ["abc", "0", "-5"])
def test_resolve_precision_rejects_bad_env_values(
    monkeypatch: pytest.MonkeyPatch, raw: str
) -> None:
    monkeypatch.setenv(PRECISION_ENV_VAR, raw)

    with pytest.raises(InputError, match=PRECISION_ENV_VAR):
        resolve_precision_bits()


def test_resolve_precision_rejects_bad_explicit_value() -> None:
    with pytest.raises(InputError, match="precision_bits must be positive"):
        resolve_precision_bits(0)
