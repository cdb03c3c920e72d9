"""Default size caps; constructions abort (never truncate) when a cap is hit."""

from __future__ import annotations

import os

#: total elements a Bernoulli poset / expansion construction may produce
DEFAULT_MAX_ELEMENTS = 2**16

#: largest ground set for order-ideal enumeration
DEFAULT_MAX_POSET = 8

#: largest group order attempted by the isomorphism backtracker
DEFAULT_ISO_CAP = 64

ENV_MAX_ELEMENTS = "INVCAT_MAX_ELEMENTS"


def max_elements_from_env(default: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Resolve the element cap, honouring the INVCAT_MAX_ELEMENTS override."""
    raw = os.environ.get(ENV_MAX_ELEMENTS)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default
