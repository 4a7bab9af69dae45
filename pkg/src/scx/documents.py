"""JSON documents for complexes, games, coefficient families and schemes.

Face keys are comma-joined ascending vertex lists, with ``""`` for the empty
face.  Writers emit canonical orderings so output is byte-stable.
"""
from __future__ import annotations

import json
from pathlib import Path

from .complex import (
    SimplicialComplex,
    canonical_key,
    complex_from_json,
    complex_to_json,
    face_key,
    parse_face_key,
)
from .errors import ComplexMismatch, InputError
from .game import Game, cardinality_game, carrier_game, random_game
from .payoff import CoefficientFamily
from .scheme import ValueScheme


def read_json(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _parse_face(delta: SimplicialComplex, key: str, what: str):
    t = parse_face_key(key)
    if any(not 1 <= x <= delta.n for x in (int(p) for p in key.split(",") if p.strip())):
        raise InputError(f"{what}: face {key!r} has a vertex outside 1..{delta.n}")
    if t not in delta:
        raise InputError(f"{what}: {{{key}}} is not a face of the complex")
    return t


def resolve_complex(ref, base: Path | None = None) -> SimplicialComplex:
    """An inline complex document or a path to one."""
    if isinstance(ref, str):
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        return complex_from_json(read_json(path))
    if isinstance(ref, dict):
        return complex_from_json(ref)
    raise InputError('"complex" must be an inline document or a path')


def load_complex(path: str | Path) -> SimplicialComplex:
    """A complex file, or any document carrying a ``"complex"`` entry."""
    doc = read_json(path)
    if isinstance(doc, dict) and "complex" in doc:
        return resolve_complex(doc["complex"], Path(path).parent)
    return complex_from_json(doc)


# -- games ----------------------------------------------------------------------

def game_from_json(doc: dict, base: Path | None = None) -> Game:
    if not isinstance(doc, dict) or "complex" not in doc:
        raise InputError('game document needs a "complex" entry')
    delta = resolve_complex(doc["complex"], base)
    kind = doc.get("kind", "table")
    if kind == "table":
        values = {}
        for key, x in doc.get("values", {}).items():
            t = _parse_face(delta, key, "values")
            if t == 0 and x != 0:
                raise InputError('values: "" (the empty face) must map to 0')
            values[t] = float(x)
        return Game(delta, values)
    if kind == "cardinality":
        return cardinality_game(delta)
    if kind == "carrier":
        spec = doc.get("carrier") or {}
        t = _parse_face(delta, ",".join(str(x) for x in spec.get("T", [])), "carrier.T")
        return carrier_game(t, delta, bool(spec.get("strict", False)))
    if kind == "random":
        lo, hi = doc.get("range", [-1, 1])
        return random_game(delta, int(doc.get("seed", 0)), float(lo), float(hi))
    raise InputError(f"unknown game kind {kind!r}")


def game_to_json(v: Game) -> dict:
    return {
        "complex": complex_to_json(v.complex),
        "kind": "table",
        "values": {face_key(t): v.values[t] for t in sorted(v.values, key=canonical_key)},
    }


def load_game(path: str | Path) -> Game:
    return game_from_json(read_json(path), Path(path).parent)


# -- coefficient families ---------------------------------------------------------

def coefficients_from_json(doc: dict, delta: SimplicialComplex, label: str | None = None,
                           base: Path | None = None) -> CoefficientFamily:
    """``{"label": ..., "coeffs": {face: x}}`` or a bare ``{face: x}`` map."""
    if not isinstance(doc, dict):
        raise InputError("coefficient document must be a JSON object")
    if "coeffs" in doc:
        if "complex" in doc and resolve_complex(doc["complex"], base) != delta:
            raise ComplexMismatch("coefficient file belongs to another complex")
        label = label or doc.get("label", "generic")
        raw = doc["coeffs"]
    else:
        raw = doc
    coeffs = {}
    for key, x in raw.items():
        t = _parse_face(delta, key, "coeffs")
        if t == 0:
            raise InputError("coeffs: the empty face carries no coefficient")
        coeffs[t] = x
    return CoefficientFamily(delta, coeffs, label or "generic")


def coefficients_to_json(a: CoefficientFamily) -> dict:
    return {face_key(t): a.coeffs[t] for t in sorted(a.coeffs, key=canonical_key)}


def load_coefficients(path: str | Path, delta: SimplicialComplex, label: str | None = None) -> CoefficientFamily:
    return coefficients_from_json(read_json(path), delta, label, Path(path).parent)


# -- schemes ----------------------------------------------------------------------

def scheme_from_json(doc: dict, base: Path | None = None) -> ValueScheme:
    if not isinstance(doc, dict) or "complex" not in doc:
        raise InputError('scheme document needs a "complex" entry')
    delta = resolve_complex(doc["complex"], base)
    p = {}
    for player, row in doc.get("p", {}).items():
        try:
            i = int(player)
        except ValueError:
            raise InputError(f"p: player key {player!r} is not an integer") from None
        if not 1 <= i <= delta.n:
            raise InputError(f"p: player {i} is outside 1..{delta.n}")
        bit = 1 << (i - 1)
        for key, x in row.items():
            t = _parse_face(delta, key, f"p[{i}]")
            if t & bit or (t | bit) not in delta:
                raise InputError(f"p[{i}]: {{{key}}} is not in the link of player {i}")
            p[(i, t)] = float(x)
    return ValueScheme(delta, p)


def scheme_to_json(s: ValueScheme) -> dict:
    rows: dict[str, dict[str, float]] = {}
    for i, t in sorted(s.p, key=lambda it: (it[0], canonical_key(it[1]))):
        rows.setdefault(str(i), {})[face_key(t)] = s.p[(i, t)]
    return {"complex": complex_to_json(s.complex), "p": rows}


def load_scheme(path: str | Path) -> ValueScheme:
    return scheme_from_json(read_json(path), Path(path).parent)
