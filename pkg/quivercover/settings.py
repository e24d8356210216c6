import json
import logging
import os
from dataclasses import dataclass, fields, replace
from fractions import Fraction

logger = logging.getLogger(__name__)

SETTINGS_ENV = "QUIVER_COVER_SETTINGS"
SETTINGS_KIND = "cover_settings"


@dataclass(frozen=True)
class Settings:
    """Capacity caps and τ scalars shared by the search-heavy operations.

    Values can be overridden through the ``QUIVER_COVER_SETTINGS`` environment
    variable, which holds a JSON object tagged ``{"kind": "cover_settings"}``.
    Unreadable fields keep their default.
    """

    subexpression_cap: int = 20
    representative_cap: int = 4
    node_cap: int = 256
    tau_scalars: tuple = (Fraction(1),)
    tietze_budget: int = 64

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        return cls.from_json(environ.get(SETTINGS_ENV))

    @classmethod
    def from_json(cls, v):
        data = _parse_json(v)
        if data is None:
            return cls()
        if data.get("kind") != SETTINGS_KIND:
            logger.warning("[Settings] ignoring settings without kind=%r", SETTINGS_KIND)
            return cls()

        base = cls()
        updates = {}
        for f in fields(cls):
            if f.name not in data:
                continue
            if f.name == "tau_scalars":
                scalars = _to_scalars(data[f.name])
                if scalars:
                    updates[f.name] = scalars
                continue
            value = _to_int(data[f.name], getattr(base, f.name))
            if value > 0:
                updates[f.name] = value
        return replace(base, **updates)

    def with_overrides(self, **kwargs):
        kept = {k: v for k, v in kwargs.items() if v is not None}
        if "tau_scalars" in kept:
            kept["tau_scalars"] = _to_scalars(kept["tau_scalars"]) or self.tau_scalars
        return replace(self, **kept)


# ---------- helpers ----------

def _parse_json(v):
    if v is None:
        return None
    if isinstance(v, dict):
        return v
    if isinstance(v, str):
        s = v.strip()
        if not s:
            return None
        try:
            data = json.loads(s)
        except Exception:
            logger.warning("[Settings] %s is not valid JSON, using defaults", SETTINGS_ENV)
            return None
        return data if isinstance(data, dict) else None
    return None


def _to_int(v, default):
    try:
        if isinstance(v, bool):
            return default
        if isinstance(v, (int, float)):
            return int(v)
        return int(str(v).strip())
    except Exception:
        return default


def _to_scalars(v):
    if isinstance(v, str):
        v = [p for p in v.replace(",", " ").split() if p]
    if not isinstance(v, (list, tuple)):
        v = [v]
    scalars = []
    for item in v:
        try:
            if isinstance(item, float):
                continue
            value = Fraction(str(item).strip())
        except Exception:
            continue
        if value != 0 and value not in scalars:
            scalars.append(value)
    return tuple(scalars)
