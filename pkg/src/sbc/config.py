"""Resource caps, overridable through the environment.

``SBC_LEVEL_CAP`` bounds the tower level k of the 2-groups we are willing
to model (classes, lazy character rows, restriction oracle); the default 5
covers groups up to the Sylow 2-subgroup of S_32 (26795 classes).

``SBC_TABLE_CAP`` bounds the levels whose full character table is
materialized as a dense matrix.  Level 5 would need ~7.2e8 entries, so the
default stops at 4 (230 x 230); higher levels are served row by row.
"""

import os

DEFAULT_LEVEL_CAP = 5
DEFAULT_TABLE_CAP = 4


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


def level_cap() -> int:
    return _env_int("SBC_LEVEL_CAP", DEFAULT_LEVEL_CAP)


def table_cap() -> int:
    return min(_env_int("SBC_TABLE_CAP", DEFAULT_TABLE_CAP), level_cap())
