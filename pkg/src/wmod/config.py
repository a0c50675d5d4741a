import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .errors import InputError

ENV_PREFIX = "WMOD_"


@dataclass(frozen=True)
class Settings:
    max_genus: int = 15
    buchweitz_max_n: int = 4
    schema_version: int = 1


_ENV_FIELDS = {
    "MAX_GENUS": "max_genus",
    "BUCHWEITZ_MAX_N": "buchweitz_max_n",
}


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Build the settings, applying ``WMOD_*`` overrides from the environment.

    Args:
        environ: mapping to read instead of ``os.environ``.

    Returns:
        Settings: defaults with every well-formed override applied.
    """
    environ = os.environ if environ is None else environ
    overrides = {}
    for suffix, attr in _ENV_FIELDS.items():
        raw = environ.get(ENV_PREFIX + suffix)
        if raw is None or raw.strip() == "":
            continue
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"{ENV_PREFIX + suffix} must be an integer, got {raw!r}")
        if value < 0:
            raise InputError(f"{ENV_PREFIX + suffix} must be nonnegative, got {value}")
        overrides[attr] = value
    return replace(Settings(), **overrides)
