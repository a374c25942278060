"""Degree caps.

Every enumeration that grows super-exponentially in ``n`` is guarded by a
cap.  Defaults can be overridden per call, or globally through environment
variables named ``FACEDESCENT_CAP_<NAME>`` (e.g. ``FACEDESCENT_CAP_FACES=7``).
"""

import os

DEFAULT_CAPS = {
    "set_partitions": 8,  # Bell(8) = 4140
    "faces": 6,  # ordered Bell(6) = 4683
    "family": 6,
    "repanalysis": 5,  # full (lambda, mu) sweeps; 6 is opt-in
    "series": 8,
}

ENV_PREFIX = "FACEDESCENT_CAP_"


def cap(name: str, override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_PREFIX + name.upper())
    if env:
        return int(env)
    return DEFAULT_CAPS[name]


class CapExceeded(ValueError):
    """Requested degree is above the configured cap."""


def check_cap(name: str, n: int, override: int | None = None) -> None:
    limit = cap(name, override)
    if not 1 <= n <= limit:
        raise CapExceeded(f"{name}: n = {n} outside 1..{limit} (raise the cap to override)")
