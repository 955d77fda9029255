"""Reading and writing algebra catalog files and orbit-data files.

Catalog file::

    {"name": "sl2", "dim": 3,
     "structure_constants": [[i, j, k, num, den], ...],
     "grading": [0, 1, ...]}          # optional

Orbit-data file: a list of records with ``label``, one of
``representative`` (vector) or ``partition``, and optional ``orbit_dim``,
``centralizer_dim``, ``stratum_dim``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..polyalg.polynomial import as_rational
from .algebra import LieAlgebra, LieAlgebraError
from .catalog import SymmetricPair


class SchemaError(ValueError):
    """Malformed input file; the message carries the file and location."""


def _load(path) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _entry_line(text: str, key: str, index: int) -> int | None:
    # best effort: line of the index-th opening bracket after "key"
    start = text.find(f'"{key}"')
    if start < 0:
        return None
    depth, seen = 0, -1
    for pos in range(text.index("[", start), len(text)):
        ch = text[pos]
        if ch == "[":
            depth += 1
            if depth == 2:
                seen += 1
                if seen == index:
                    return text.count("\n", 0, pos) + 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return None
    return None


def parse_rational(value, where: str):
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return as_rational(Fraction(value))
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{where}: cannot parse rational {value!r}") from None
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        try:
            return as_rational(Fraction(int(value["num"]), int(value["den"])))
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{where}: bad rational {value!r}") from None
    raise SchemaError(f"{where}: expected an integer, 'a/b' string or {{num, den}}, got {value!r}")


def rational_json(x) -> dict:
    f = Fraction(x)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def load_algebra(path) -> tuple[LieAlgebra, SymmetricPair | None]:
    data = _load(path)
    text = Path(path).read_text()
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    for key in ("name", "dim", "structure_constants"):
        if key not in data:
            raise SchemaError(f"{path}: missing field {key!r}")
    name, dim = data["name"], data["dim"]
    if not isinstance(name, str):
        raise SchemaError(f"{path}: 'name' must be a string")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
        raise SchemaError(f"{path}: 'dim' must be a positive integer")
    consts = {}
    entries = data["structure_constants"]
    if not isinstance(entries, list):
        raise SchemaError(f"{path}: 'structure_constants' must be a list")
    for n, entry in enumerate(entries):
        line = _entry_line(text, "structure_constants", n)
        where = f"{path}: structure_constants[{n}]" + (f" (line {line})" if line else "")
        if not isinstance(entry, list) or len(entry) != 5:
            raise SchemaError(f"{where}: expected [i, j, k, num, den]")
        i, j, k = entry[:3]
        if not all(isinstance(t, int) and not isinstance(t, bool) and 0 <= t < dim for t in (i, j, k)):
            raise SchemaError(f"{where}: indices must be integers in [0, {dim})")
        try:
            c = as_rational(Fraction(int(entry[3]), int(entry[4])))
        except (ValueError, TypeError, ZeroDivisionError):
            raise SchemaError(f"{where}: bad coefficient {entry[3]!r}/{entry[4]!r}") from None
        consts[(i, j, k)] = consts.get((i, j, k), 0) + c
    g = LieAlgebra.from_constants(name, dim, consts)
    try:
        g.validate()
    except LieAlgebraError as exc:
        raise SchemaError(f"{path}: {exc}") from None
    pair = None
    if "grading" in data:
        grading = data["grading"]
        if not isinstance(grading, list) or len(grading) != dim or any(t not in (0, 1) for t in grading):
            raise SchemaError(f"{path}: 'grading' must be a list of {dim} entries, each 0 or 1")
        pair = SymmetricPair(g, tuple(grading), None, name)
        if not pair.is_compatible():
            raise SchemaError(f"{path}: grading is not compatible with the bracket")
    return g, pair


def dump_algebra(g: LieAlgebra, pair: SymmetricPair | None = None) -> dict:
    out = {"name": g.name, "dim": g.dim,
           "structure_constants": [[i, j, k, Fraction(c).numerator, Fraction(c).denominator]
                                   for i, j, k, c in g.constants()]}
    if pair is not None:
        out["grading"] = list(pair.grading)
    return out


@dataclass(frozen=True)
class OrbitRecord:
    label: str
    representative: tuple | None = None
    partition: tuple[int, ...] | None = None
    orbit_dim: int | None = None
    centralizer_dim: int | None = None
    stratum_dim: int | None = None


_OPTIONAL_INTS = ("orbit_dim", "centralizer_dim", "stratum_dim")


def parse_orbit_records(data, source: str = "<orbit data>") -> list[OrbitRecord]:
    if not isinstance(data, list):
        raise SchemaError(f"{source}: orbit data must be a list of records")
    out = []
    for n, rec in enumerate(data):
        where = f"{source}: record {n}"
        if not isinstance(rec, dict):
            raise SchemaError(f"{where}: expected an object")
        if "label" not in rec or not isinstance(rec["label"], str):
            raise SchemaError(f"{where}: missing string field 'label'")
        where = f"{where} ({rec['label']})"
        rep = part = None
        if "representative" in rec:
            if not isinstance(rec["representative"], list):
                raise SchemaError(f"{where}: 'representative' must be a list")
            rep = tuple(parse_rational(x, where) for x in rec["representative"])
        if "partition" in rec:
            p = rec["partition"]
            if not isinstance(p, list) or not all(isinstance(t, int) and t > 0 for t in p):
                raise SchemaError(f"{where}: 'partition' must be a list of positive integers")
            if list(p) != sorted(p, reverse=True):
                raise SchemaError(f"{where}: partition parts must be weakly decreasing")
            part = tuple(p)
        if rep is None and part is None:
            raise SchemaError(f"{where}: needs 'representative' or 'partition'")
        extra = {}
        for key in _OPTIONAL_INTS:
            if key in rec:
                v = rec[key]
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise SchemaError(f"{where}: '{key}' must be a nonnegative integer")
                extra[key] = v
        out.append(OrbitRecord(rec["label"], rep, part, **extra))
    return out


def load_orbit_data(path) -> list[OrbitRecord]:
    return parse_orbit_records(_load(path), str(path))
