"""Brute-force recomputation of the closed-form quantities.

Nothing here reuses the main code paths: faces are handled as frozensets of
vertex labels, facet subsets are enumerated plainly, phi is summed straight
from the link definition, and random games come from :mod:`random`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .complex import SimplicialComplex, face, vertices
from .errors import ComplexMismatch, FacetCapExceeded
from .game import Game
from .payoff import CoefficientFamily
from .scheme import ValueScheme

ORACLE_MAX_FACETS = 16
ORDER_TOL = 1e-12


@dataclass
class OracleReport:
    subject: str
    trials: int
    max_abs_deviation: float
    tolerance: float
    failures: list[tuple[str, float, float]] = field(default_factory=list)
    values: list[float] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed


def _facet_sets(delta: SimplicialComplex) -> list[frozenset[int]]:
    return [frozenset(vertices(f)) for f in delta.facets]


def _all_faces(delta: SimplicialComplex) -> set[frozenset[int]]:
    out = set()
    for f in _facet_sets(delta):
        items = sorted(f)
        for r in range(len(items) + 1):
            out.update(frozenset(c) for c in combinations(items, r))
    return out


def _label(t: frozenset[int]) -> str:
    return ",".join(str(x) for x in sorted(t))


def oracle_d_coefficients(delta: SimplicialComplex) -> CoefficientFamily:
    """Sign-weighted count of every nonempty facet subset by its intersection."""
    fs = _facet_sets(delta)
    k = len(fs)
    if k > ORACLE_MAX_FACETS:
        raise FacetCapExceeded(f"{k} facets exceed the oracle cap of {ORACLE_MAX_FACETS}")
    acc: dict[frozenset[int], int] = {}
    for chosen in range(1, 1 << k):
        members = [fs[i] for i in range(k) if chosen >> i & 1]
        inter = frozenset.intersection(*members)
        sign = 1 if len(members) % 2 == 1 else -1
        acc[inter] = acc.get(inter, 0) + sign
    return CoefficientFamily(
        delta, {face(t): d for t, d in acc.items() if t and d != 0}, "simplicial-d"
    )


def _phi_total(game: dict[frozenset[int], float], p: dict, faces: set[frozenset[int]], n: int) -> float:
    terms = []
    for i in range(1, n + 1):
        for t in faces:
            if i in t or (t | {i}) not in faces:
                continue
            weight = p.get((i, face(t)), 0.0)
            if weight:
                terms.append(weight * (game.get(t | {i}, 0.0) - game.get(t, 0.0)))
    return math.fsum(terms)


def _payoff(game: dict[frozenset[int], float], coeffs: dict[frozenset[int], float]) -> float:
    return math.fsum(c * game.get(t, 0.0) for t, c in coeffs.items())


def oracle_characterization(
    delta: SimplicialComplex,
    target: CoefficientFamily,
    s: ValueScheme,
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-9,
) -> OracleReport:
    """Compare sum_i phi_i(v) with the target payoff on carrier and random games."""
    if s.complex != delta or target.complex != delta:
        raise ComplexMismatch("scheme, target and complex must agree")
    faces = _all_faces(delta)
    nonempty = sorted((t for t in faces if t), key=lambda t: (len(t), sorted(t)))
    coeffs = {frozenset(vertices(t)): c for t, c in target.coeffs.items()}

    games: list[tuple[str, dict[frozenset[int], float]]] = []
    for t in [frozenset()] + nonempty:
        if t:
            games.append((f"v_{{{_label(t)}}}", {u: 1.0 for u in nonempty if t <= u}))
        games.append((f"v^_{{{_label(t)}}}", {u: 1.0 for u in nonempty if t < u}))
    for trial in range(trials):
        rng = random.Random(seed + trial)
        games.append((f"random[{seed + trial}]", {u: rng.uniform(-1.0, 1.0) for u in nonempty}))

    report = OracleReport("characterization", len(games), 0.0, tol)
    for name, game in games:
        lhs = _phi_total(game, s.p, faces, delta.n)
        rhs = _payoff(game, coeffs)
        dev = abs(lhs - rhs)
        report.max_abs_deviation = max(report.max_abs_deviation, dev)
        if dev > tol:
            report.failures.append((name, rhs, lhs))
    return report


def _sequential(game: dict[frozenset[int], float], order: list[frozenset[int]]) -> float:
    terms = []
    for j, f in enumerate(order):
        terms.append(game.get(f, 0.0))
        meets = {f & g for g in order[:j]}
        tops = [m for m in meets if not any(m < other for other in meets)]
        terms.extend(-game.get(m, 0.0) for m in tops)
    return math.fsum(terms)


def oracle_order_independence(v: Game, num_orders: int = 10, seed: int = 0, tol: float = ORDER_TOL) -> OracleReport:
    """Spread of the sequential payoff over facet orders.

    When ``num_orders`` reaches k! every order is evaluated; otherwise
    ``num_orders`` seeded shuffles are drawn.
    """
    fs = _facet_sets(v.complex)
    k = len(fs)
    if k > ORACLE_MAX_FACETS:
        raise FacetCapExceeded(f"{k} facets exceed the oracle cap of {ORACLE_MAX_FACETS}")
    game = {frozenset(vertices(t)): x for t, x in v.values.items()}
    if num_orders >= math.factorial(k):
        orders = [list(p) for p in permutations(fs)]
    else:
        rng = random.Random(seed)
        orders = [rng.sample(fs, k) for _ in range(num_orders)]

    values = [_sequential(game, order) for order in orders]
    spread = max(values) - min(values) if values else 0.0
    report = OracleReport("order-independence", len(orders), spread, tol, values=values)
    if spread > tol:
        ref = values[0]
        for order, x in zip(orders, values):
            if abs(x - ref) > tol:
                desc = " ".join("{" + _label(f) + "}" for f in order)
                report.failures.append((desc, ref, x))
    return report
