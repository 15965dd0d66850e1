"""Reading and writing the key/value configuration format.

Example::

    # F(0,0) with a rank-2 class
    surface.genus    = 0
    surface.e        = 0
    surface.blowups  = 0
    sheaf.rank       = 2
    sheaf.c1         = [0, -1]     # coordinates in (σ, f, E_1, ..., E_n)
    sheaf.c2         = 0
    polarization     = auto        # or an integer list

Blank lines and ``#`` comments are ignored, whitespace is insignificant and
lists may be written with or without brackets, separated by commas or spaces.
``surface.blowups`` defaults to 0 and ``polarization`` to ``auto``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConfigError, DimensionMismatchError, UnsupportedSurfaceError
from .invariants import ChernData
from .lattice import DivisorClass, RuledSurface

AUTO = "auto"

_INT_KEYS = ("surface.genus", "surface.e", "surface.blowups", "sheaf.rank", "sheaf.c2")
_LIST_KEYS = ("sheaf.c1",)
_KEYS = _INT_KEYS + _LIST_KEYS + ("polarization",)
_REQUIRED = ("surface.genus", "surface.e", "sheaf.rank", "sheaf.c1", "sheaf.c2")
_INT_RE = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class Config:
    surface: RuledSurface
    sheaf: ChernData
    polarization: DivisorClass | str = AUTO


def _parse_int(text: str, line: int, key: str) -> int:
    if not _INT_RE.fullmatch(text):
        raise ConfigError(f"expected a decimal integer, got {text!r}", line, key)
    return int(text)


def _parse_list(text: str, line: int, key: str) -> list[int]:
    body = text.strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise ConfigError("unterminated list", line, key)
        body = body[1:-1]
    items = [x for x in re.split(r"[,\s]+", body.strip()) if x]
    if not items:
        raise ConfigError("empty list", line, key)
    return [_parse_int(x, line, key) for x in items]


def parse_config(text: str) -> Config:
    """Parse configuration text; raise :class:`ConfigError` with line/field context."""
    raw: dict[str, tuple[str, int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        key = re.sub(r"\s+", "", key)
        if key not in _KEYS:
            raise ConfigError(f"unknown key (known: {', '.join(_KEYS)})", lineno, key)
        if key in raw:
            raise ConfigError(f"duplicate key (first set on line {raw[key][1]})", lineno, key)
        if not value:
            raise ConfigError("missing value", lineno, key)
        raw[key] = (value, lineno)

    ints = {}
    for key in _INT_KEYS:
        if key in raw:
            value, lineno = raw[key]
            ints[key] = _parse_int(re.sub(r"\s+", "", value), lineno, key)
    for key in _REQUIRED:
        if key not in raw:
            raise ConfigError("required field is missing", field=key)
    blowups = ints.get("surface.blowups", 0)

    try:
        surface = RuledSurface(ints["surface.genus"], ints["surface.e"], blowups)
    except UnsupportedSurfaceError as exc:
        raise UnsupportedSurfaceError(f"line {raw['surface.e'][1]}: {exc}") from None

    rank = ints["sheaf.rank"]
    if rank < 1:
        raise ConfigError("rank must be at least 1", raw["sheaf.rank"][1], "sheaf.rank")
    c1 = DivisorClass(_parse_list(*raw["sheaf.c1"], "sheaf.c1"))
    if len(c1) != surface.picard_number:
        raise DimensionMismatchError(
            f"line {raw['sheaf.c1'][1]}: sheaf.c1 has {len(c1)} coordinates, "
            f"surface has Picard number {surface.picard_number}"
        )
    sheaf = ChernData(rank, c1, ints["sheaf.c2"])

    polarization: DivisorClass | str = AUTO
    if "polarization" in raw:
        value, lineno = raw["polarization"]
        if value.lower() == AUTO:
            polarization = AUTO
        else:
            polarization = DivisorClass(_parse_list(value, lineno, "polarization"))
            if len(polarization) != surface.picard_number:
                raise DimensionMismatchError(
                    f"line {lineno}: polarization has {len(polarization)} coordinates, "
                    f"surface has Picard number {surface.picard_number}"
                )
    return Config(surface, sheaf, polarization)


def _fmt_list(values) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


def dump_config(cfg: Config) -> str:
    pol = cfg.polarization if isinstance(cfg.polarization, str) else _fmt_list(cfg.polarization)
    return (
        f"surface.genus = {cfg.surface.genus}\n"
        f"surface.e = {cfg.surface.e_invariant}\n"
        f"surface.blowups = {cfg.surface.blowups}\n"
        f"sheaf.rank = {cfg.sheaf.rank}\n"
        f"sheaf.c1 = {_fmt_list(cfg.sheaf.c1)}\n"
        f"sheaf.c2 = {cfg.sheaf.c2}\n"
        f"polarization = {pol}\n"
    )
