from __future__ import annotations

import pytest

from wmod.config import Settings, load_settings
from wmod.errors import InputError


def test_defaults() -> None:
    assert load_settings({}) == Settings()
    assert Settings().max_genus == 15


def test_environment_overrides() -> None:
    settings = load_settings({"WMOD_MAX_GENUS": "9", "WMOD_BUCHWEITZ_MAX_N": " ", "UNRELATED": "x"})
    assert settings.max_genus == 9
    assert settings.buchweitz_max_n == Settings().buchweitz_max_n


@pytest.mark.parametrize("raw", ["nine", "-1", "2.5"])
def test_malformed_overrides(raw) -> None:
    with pytest.raises(InputError):
        load_settings({"WMOD_BUCHWEITZ_MAX_N": raw})
