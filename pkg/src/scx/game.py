"""Characteristic functions on a simplicial complex."""
from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from .complex import (
    Face,
    SimplicialComplex,
    Subcomplex,
    face_key,
    size,
    star_face,
)
from .errors import (
    EmptyCarrierNotStrict,
    FaceNotInComplex,
    InputError,
    ParentMismatch,
)


@dataclass(frozen=True, eq=False)
class Game:
    """A game (complex, v) with v stored sparsely; unset faces are worth 0."""

    complex: SimplicialComplex
    values: Mapping[Face, float] = field(default_factory=dict)

    def __post_init__(self):
        vals = {}
        for s, x in self.values.items():
            if s not in self.complex:
                raise FaceNotInComplex(f"game value given on non-face {{{face_key(s)}}}")
            if s == 0:
                if x != 0:
                    raise InputError("v(empty set) must be 0")
                continue
            if x != 0:
                vals[s] = float(x)
        object.__setattr__(self, "values", vals)

    def __call__(self, s: Face) -> float:
        return evaluate(self, s)

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self.complex == other.complex and self.values == other.values

    def __add__(self, other: Game) -> Game:
        if self.complex != other.complex:
            raise ParentMismatch("games live on different complexes")
        vals = dict(self.values)
        for s, x in other.values.items():
            vals[s] = vals.get(s, 0.0) + x
        return Game(self.complex, vals)

    def __rmul__(self, c: float) -> Game:
        return scale(c, self)


def evaluate(v: Game, s: Face) -> float:
    if s == 0:
        return 0.0
    if s in v.values:
        return v.values[s]
    v.complex.require_face(s)
    return 0.0


def zero_game(delta: SimplicialComplex) -> Game:
    return Game(delta, {})


def cardinality_game(delta: SimplicialComplex) -> Game:
    """v(S) = |S|."""
    return Game(delta, {s: float(size(s)) for s in delta.faces})


def carrier_game(t: Face, delta: SimplicialComplex, strict: bool = False) -> Game:
    """Indicator of T <= S (or of T < S when ``strict``)."""
    delta.require_face(t)
    if t == 0 and not strict:
        raise EmptyCarrierNotStrict("the carrier game v_T needs a nonempty T")
    return Game(delta, {s: 1.0 for s in star_face(t, delta) if s & t == t and not (strict and s == t)})


def complex_worth(v: Game, k: Subcomplex) -> float:
    """Sum of v over the facets of a subcomplex."""
    if k.parent != v.complex:
        raise ParentMismatch("subcomplex does not belong to the game's complex")
    return math.fsum(evaluate(v, f) for f in k.facets)


def scale(c: float, v: Game) -> Game:
    return Game(v.complex, {s: c * x for s, x in v.values.items()})


def random_game(delta: SimplicialComplex, seed: int, lo: float = -1.0, hi: float = 1.0) -> Game:
    """Independent uniform draws on [lo, hi] per nonempty face, in canonical face order."""
    if lo > hi:
        raise InputError(f"empty range [{lo}, {hi}]")
    rng = np.random.default_rng(seed)
    nonempty = delta.sorted_faces[1:]
    draws = rng.uniform(lo, hi, size=len(nonempty))
    return Game(delta, dict(zip(nonempty, draws.tolist())))
