"""Marginal-contribution value schemes and efficiency characterization.

A scheme assigns a weight ``p[i, T]`` to every incidence (player i, face T in
the link of i) and defines

    phi_i(v) = sum_T p[i, T] * (v(T + i) - v(T)).

Summing over players and regrouping by face gives a coefficient per face,
``induced_coefficients``; a scheme satisfies an efficiency axiom with target
family ``a`` exactly when those coefficients equal ``a`` on every nonempty face.
"""
from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from .complex import (
    Face,
    SimplicialComplex,
    canonical_key,
    face_key,
    link_vertex,
    vertices,
)
from .errors import CapacityExceeded, ComplexMismatch, InputError
from .game import Game, carrier_game, evaluate
from .payoff import CoefficientFamily, check_facet_cap

FEASIBILITY_TOL = 1e-8
DEFAULT_TOL = 1e-9
MAX_SYSTEM_ENTRIES = 50_000_000

Incidence = tuple[int, Face]


def incidences(delta: SimplicialComplex) -> list[Incidence]:
    """All (i, T) with T in the link of i; player ascending, then canonical face order."""
    out = []
    for i in range(1, delta.n + 1):
        out.extend((i, t) for t in sorted(link_vertex(i, delta), key=canonical_key))
    return out


@dataclass(frozen=True, eq=False)
class ValueScheme:
    complex: SimplicialComplex
    p: Mapping[Incidence, float] = field(default_factory=dict)

    def __post_init__(self):
        delta = self.complex
        clean = {}
        for (i, t), x in self.p.items():
            bit = 1 << (i - 1)
            if not 1 <= i <= delta.n or t & bit or (t | bit) not in delta:
                raise InputError(f"{{{face_key(t)}}} is not in the link of player {i}")
            if x != 0:
                clean[(i, t)] = float(x)
        object.__setattr__(self, "p", clean)

    def __getitem__(self, key: Incidence) -> float:
        return self.p.get(key, 0.0)

    def __eq__(self, other):
        if not isinstance(other, ValueScheme):
            return NotImplemented
        return self.complex == other.complex and self.p == other.p

    def perturbed(self, key: Incidence, shift: float) -> ValueScheme:
        p = dict(self.p)
        p[key] = p.get(key, 0.0) + shift
        return ValueScheme(self.complex, p)


def shapley_scheme(delta: SimplicialComplex) -> ValueScheme:
    """Classical Shapley weights |T|! (n - 1 - |T|)! / n!, for the full simplex."""
    n = delta.n
    w = [math.factorial(s) * math.factorial(n - 1 - s) / math.factorial(n) for s in range(n)]
    return ValueScheme(delta, {(i, t): w[len(vertices(t))] for i, t in incidences(delta)})


def _shared(v: Game, s: ValueScheme) -> None:
    if v.complex != s.complex:
        raise ComplexMismatch("game and scheme live on different complexes")


def phi(v: Game, s: ValueScheme, i: int) -> float:
    _shared(v, s)
    bit = 1 << (i - 1)
    return math.fsum(
        x * (evaluate(v, t | bit) - evaluate(v, t)) for (j, t), x in s.p.items() if j == i
    )


def group_value(v: Game, s: ValueScheme) -> np.ndarray:
    _shared(v, s)
    terms: list[list[float]] = [[] for _ in range(s.complex.n)]
    for (i, t), x in s.p.items():
        terms[i - 1].append(x * (evaluate(v, t | (1 << (i - 1))) - evaluate(v, t)))
    return np.array([math.fsum(ts) for ts in terms])


def induced_coefficients(s: ValueScheme) -> CoefficientFamily:
    """Coefficient of v(T) in sum_i phi_i(v), for every nonempty face T."""
    parts: dict[Face, list[float]] = {}
    for (i, t), x in s.p.items():
        parts.setdefault(t | (1 << (i - 1)), []).append(x)
        if t:
            parts.setdefault(t, []).append(-x)
    return CoefficientFamily(s.complex, {t: math.fsum(xs) for t, xs in parts.items()})


@dataclass
class EfficiencyReport:
    axiom: str
    residuals: dict[Face, float]
    max_abs_residual: float
    tolerance: float
    passed: bool

    def __bool__(self) -> bool:
        return self.passed

    def worst(self) -> Face | None:
        return max(self.residuals, key=lambda t: abs(self.residuals[t]), default=None)


def check_efficiency(s: ValueScheme, target: CoefficientFamily, tol: float = DEFAULT_TOL) -> EfficiencyReport:
    if s.complex != target.complex:
        raise ComplexMismatch("scheme and target live on different complexes")
    if tol <= 0:
        raise InputError("tolerance must be positive")
    induced = induced_coefficients(s)
    residuals = {t: induced[t] - target[t] for t in s.complex.sorted_faces[1:]}
    worst = max((abs(r) for r in residuals.values()), default=0.0)
    return EfficiencyReport(target.label, residuals, worst, tol, worst <= tol)


def system_matrix(delta: SimplicialComplex) -> tuple[np.ndarray, list[Face], list[Incidence]]:
    """Rows: nonempty faces (canonical); columns: incidences (canonical)."""
    rows = list(delta.sorted_faces[1:])
    cols = incidences(delta)
    if len(rows) * len(cols) > MAX_SYSTEM_ENTRIES:
        raise CapacityExceeded(f"{len(rows)}x{len(cols)} system is too large for the dense solver")
    row_of = {t: r for r, t in enumerate(rows)}
    a = np.zeros((len(rows), len(cols)))
    for c, (i, t) in enumerate(cols):
        a[row_of[t | (1 << (i - 1))], c] += 1.0
        if t:
            a[row_of[t], c] -= 1.0
    return a, rows, cols


def solve_scheme(delta: SimplicialComplex, target: CoefficientFamily) -> tuple[ValueScheme, float]:
    """Minimum-norm least-squares scheme whose induced coefficients match ``target``.

    Returns the scheme and the Euclidean residual of the constraint system;
    a residual above ``FEASIBILITY_TOL`` means no scheme reaches the target.
    """
    if target.complex != delta:
        raise ComplexMismatch("target family belongs to another complex")
    check_facet_cap(delta)
    a, rows, cols = system_matrix(delta)
    b = np.array([float(target[t]) for t in rows])
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.linalg.norm(a @ x - b))
    return ValueScheme(delta, dict(zip(cols, x.tolist()))), residual


@dataclass
class ConverseCheck:
    passed: bool
    witness: Face | None
    max_abs_deviation: float

    def __bool__(self) -> bool:
        return self.passed


def carrier_converse_check(s: ValueScheme, target: CoefficientFamily, tol: float = DEFAULT_TOL) -> ConverseCheck:
    """Recover each face's coefficient from carrier-game values.

    For a non-facet T the coefficient is sum phi(v_T) - sum phi(v^_T); for a
    facet F it is sum phi(v_F).  Each is compared with ``target``.
    """
    delta = s.complex
    if target.complex != delta:
        raise ComplexMismatch("scheme and target live on different complexes")
    witness = None
    worst = 0.0
    for t in delta.sorted_faces[1:]:
        got = float(group_value(carrier_game(t, delta), s).sum())
        if t not in delta.facets:
            got -= float(group_value(carrier_game(t, delta, strict=True), s).sum())
        dev = abs(got - target[t])
        worst = max(worst, dev)
        if dev > tol and witness is None:
            witness = t
    return ConverseCheck(witness is None, witness, worst)
