"""Weight configuration documents.

A config is a JSON document::

    {"N": 2, "mode": "periodic", "k": 2, "m": 1,
     "weights": [{"i": 1, "u": "e", "value": "1"}, ...]}

Periodic mode needs exactly one entry per (i, u) with |u| < k.  Explicit
mode lists weights for every (i, w) up to some depth.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import jsonschema

from .errors import ConfigError, FockShiftError
from .periodicity import WeightTop, periodic_weight, random_top
from .shift import WeightFunction
from .words import Word, dimension_d, words_up_to

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "fockshift weight configuration",
    "type": "object",
    "required": ["N", "mode", "weights"],
    "additionalProperties": False,
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "mode": {"enum": ["periodic", "explicit"]},
        "k": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 0},
        "L": {"type": "integer", "minimum": 0},
        "depth": {"type": "integer", "minimum": 0},
        "arithmetic": {"enum": ["exact", "float"]},
        "weights": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "u", "value"],
                "additionalProperties": False,
                "properties": {
                    "i": {"type": "integer", "minimum": 1},
                    "u": {"type": "string"},
                    "value": {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
                },
            },
        },
    },
    "if": {"properties": {"mode": {"const": "periodic"}}},
    "then": {"required": ["k"]},
}

SEED_ENV = "FOCKSHIFT_SEED"


@dataclass(frozen=True)
class RunConfig:
    n: int
    mode: str
    weights: WeightFunction
    top: WeightTop | None = None
    k: int | None = None
    m: int | None = None
    max_length: int | None = None
    depth: int | None = None
    arithmetic: str = "exact"


def _field(path) -> str:
    out = ""
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else p)
    return out or "<root>"


def parse_config(doc: dict) -> RunConfig:
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ConfigError(f"{_field(exc.absolute_path)}: {exc.message}") from None
    n = doc["N"]
    table: dict[tuple[int, Word], Fraction] = {}
    for pos, entry in enumerate(doc["weights"]):
        where = f"weights[{pos}]"
        i = entry["i"]
        if i > n:
            raise ConfigError(f"{where}.i: letter {i} outside 1..{n}")
        try:
            u = Word.parse(entry["u"], n)
        except (ValueError, FockShiftError) as exc:
            raise ConfigError(f"{where}.u: {exc}") from None
        value = Fraction(entry["value"].replace(" ", ""))
        if (i, u) in table:
            raise ConfigError(f"{where}: duplicate weight ({i}, {u})")
        table[(i, u)] = value

    common = dict(m=doc.get("m"), max_length=doc.get("L"), depth=doc.get("depth"),
                  arithmetic=doc.get("arithmetic", "exact"))
    if doc["mode"] == "periodic":
        k = doc["k"]
        expected = n * dimension_d(n, k)
        for u in (w for _, w in table):
            if len(u) >= k:
                raise ConfigError(f"weights: word {u} is too long for period {k}")
        for (i, u) in _all_keys(n, k - 1):
            if (i, u) not in table:
                raise ConfigError(f"weights: missing weight (i={i}, u={u})")
        if len(table) != expected:
            raise ConfigError(f"weights: expected {expected} entries for N={n}, k={k}, got {len(table)}")
        try:
            top = WeightTop(n, k, table)
        except FockShiftError as exc:
            raise ConfigError(f"weights: {exc}") from None
        return RunConfig(n, "periodic", periodic_weight(top), top, k=k, **common)

    depth = max((len(u) for _, u in table), default=-1)
    for (i, u) in _all_keys(n, depth):
        if (i, u) not in table:
            raise ConfigError(f"weights: missing weight (i={i}, u={u})")
    return RunConfig(n, "explicit", WeightFunction.explicit(n, table), None, k=doc.get("k"), **common)


def _all_keys(n: int, depth: int):
    return [(i, u) for u in words_up_to(n, depth) for i in range(1, n + 1)]


def load_config(path) -> RunConfig:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_config(doc)


def top_to_config(top: WeightTop, **extra) -> dict:
    doc = {"N": top.n, "mode": "periodic", "k": top.k}
    doc.update(extra)
    doc["weights"] = [{"i": i, "u": str(u), "value": str(top[(i, u)])} for i, u in top.keys()]
    return doc


def seeded_config(n: int, k: int, m: int | None = None) -> RunConfig:
    """Random period-k config; the seed comes from ``FOCKSHIFT_SEED`` (default 0)."""
    raw = os.environ.get(SEED_ENV, "0")
    try:
        seed = int(raw)
    except ValueError:
        raise ConfigError(f"{SEED_ENV} must be a decimal integer, got {raw!r}") from None
    top = random_top(n, k, random.Random(seed))
    return parse_config(top_to_config(top, **({"m": m} if m is not None else {})))
