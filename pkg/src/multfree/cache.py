"""
Persistent JSON cache for pairwise tensor decompositions.

The file is a single schema-versioned JSON map; caches written under a
different schema are ignored rather than migrated.  Keys encode
(family, rank, sorted weight pair); values list [weight, multiplicity]
pairs of the decomposition, which stays inside the same family and rank.
"""

from __future__ import annotations

import json
import os

from .irreps import IrrepLabel, export_pair_cache, import_pair_cache

SCHEMA = "multfree-pair-cache-v1"
DEFAULT_PATH = ".multfree-cache.json"
ENV_VAR = "MULTFREE_CACHE"


def _encode_weight(w: tuple[int, ...]) -> str:
    return ",".join(map(str, w))


def _decode_weight(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split(",")) if s else ()


def _encode_key(key: tuple) -> str:
    family, rank, wa, wb = key
    return f"{family}:{rank}:{_encode_weight(wa)}|{_encode_weight(wb)}"


def _decode_key(s: str) -> tuple:
    family, rank, pair = s.split(":", 2)
    wa, wb = pair.split("|", 1)
    return (family, int(rank), _decode_weight(wa), _decode_weight(wb))


def load(path: str) -> int:
    """Merge a cache file into the in-memory memo; returns entries loaded."""
    if not os.path.exists(path):
        return 0
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema") != SCHEMA:
        return 0
    loaded = {}
    for key_str, rows in data.get("entries", {}).items():
        family, rank, wa, wb = _decode_key(key_str)
        loaded[(family, rank, wa, wb)] = {
            IrrepLabel(family, rank, _decode_weight(w) if isinstance(w, str) else tuple(w)): int(m)
            for w, m in rows
        }
    import_pair_cache(loaded)
    return len(loaded)


def save(path: str) -> int:
    """Write the in-memory memo out; returns entries written."""
    entries = {}
    for key, result in sorted(export_pair_cache().items()):
        entries[_encode_key(key)] = [
            [list(lab.weight), m]
            for lab, m in sorted(result.items(), key=lambda kv: kv[0].sort_key())
        ]
    payload = {"schema": SCHEMA, "entries": entries}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
        fh.write("\n")
    return len(entries)


def resolve_path(flag_value: str | None, config_value: str | None, disabled: bool) -> str | None:
    """Precedence: --no-cache, then --cache, then MULTFREE_CACHE, then config."""
    if disabled:
        return None
    if flag_value:
        return flag_value
    env = os.environ.get(ENV_VAR)
    if env:
        return env
    return config_value
