"""Total-payoff functionals.

The canonical simplicial payoff is the facet inclusion-exclusion sum, realized
as a generic payoff with the d coefficients.  The sequential and alternating
forms and the matroid shelling reduction are kept as comparators; on some
complexes they disagree with the canonical value (see :func:`compare_formulas`).
"""
from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import NamedTuple

import numpy as np

from .complex import (
    Face,
    SimplicialComplex,
    Subcomplex,
    face_key,
    is_full_simplex,
    maximal_faces,
    vertices,
)
from .errors import (
    ComplexMismatch,
    FacetCapExceeded,
    IndexOutOfRange,
    InputError,
    NotAPermutation,
    NotFullSimplex,
    ShellingVerificationFailed,
    SupportNotFacets,
)
from .game import Game, complex_worth, evaluate
from .matroid import ShellingOrder, is_matroid, shelling_order, verify_shelling

MAX_FACETS = 20

LABELS = ("generic", "probabilistic", "traditional", "simplicial-d")


def check_facet_cap(delta: SimplicialComplex, cap: int | None = None) -> None:
    cap = MAX_FACETS if cap is None else cap
    if len(delta.facets) > cap:
        raise FacetCapExceeded(f"{len(delta.facets)} facets exceed the cap of {cap}")


@dataclass(frozen=True, eq=False)
class CoefficientFamily:
    """A real weight per nonempty face; absent faces weigh 0."""

    complex: SimplicialComplex
    coeffs: Mapping[Face, float] = field(default_factory=dict)
    label: str = "generic"

    def __post_init__(self):
        if self.label not in LABELS:
            raise InputError(f"unknown coefficient label {self.label!r}")
        if self.label == "traditional" and not is_full_simplex(self.complex):
            raise NotFullSimplex("traditional efficiency needs the full simplex")
        for t in self.coeffs:
            if t == 0:
                raise InputError("coefficients are indexed by nonempty faces")
            self.complex.require_face(t)
        if self.label == "probabilistic":
            stray = [t for t in self.coeffs if t not in self.complex.facets]
            if stray:
                raise SupportNotFacets(f"{{{face_key(stray[0])}}} is not a facet")
        if self.label == "traditional":
            if dict(self.coeffs) != {self.complex.ground: 1}:
                raise InputError("traditional family is {[n]: 1}")
        object.__setattr__(self, "coeffs", {t: c for t, c in self.coeffs.items() if c != 0})

    def __getitem__(self, t: Face) -> float:
        return self.coeffs.get(t, 0)

    def __eq__(self, other):
        if not isinstance(other, CoefficientFamily):
            return NotImplemented
        return (self.complex, self.coeffs, self.label) == (other.complex, other.coeffs, other.label)


def traditional_family(delta: SimplicialComplex) -> CoefficientFamily:
    return CoefficientFamily(delta, {delta.ground: 1}, "traditional")


def uniform_family(delta: SimplicialComplex) -> CoefficientFamily:
    k = len(delta.facets)
    return CoefficientFamily(delta, {f: 1 / k for f in delta.facets}, "probabilistic")


def random_family(delta: SimplicialComplex, seed: int, lo: float = -1.0, hi: float = 1.0) -> CoefficientFamily:
    rng = np.random.default_rng(seed)
    nonempty = delta.sorted_faces[1:]
    return CoefficientFamily(delta, dict(zip(nonempty, rng.uniform(lo, hi, len(nonempty)).tolist())))


def _same_complex(v: Game, a: CoefficientFamily) -> None:
    if v.complex != a.complex:
        raise ComplexMismatch("game and coefficient family live on different complexes")


def generic_payoff(v: Game, a: CoefficientFamily) -> float:
    _same_complex(v, a)
    return math.fsum(c * evaluate(v, t) for t, c in a.coeffs.items())


def traditional_payoff(v: Game) -> float:
    if not is_full_simplex(v.complex):
        raise NotFullSimplex("the grand coalition is not a face of this complex")
    return evaluate(v, v.complex.ground)


class ProbabilisticPayoff(NamedTuple):
    value: float
    normalized: bool
    nonnegative: bool


def probabilistic_payoff(v: Game, c: CoefficientFamily) -> ProbabilisticPayoff:
    _same_complex(v, c)
    stray = [t for t in c.coeffs if t not in v.complex.facets]
    if stray:
        raise SupportNotFacets(f"{{{face_key(stray[0])}}} is not a facet")
    total = math.fsum(c.coeffs.values())
    return ProbabilisticPayoff(
        math.fsum(x * evaluate(v, f) for f, x in c.coeffs.items()),
        abs(total - 1) <= 1e-12,
        all(x >= 0 for x in c.coeffs.values()),
    )


def d_coefficients(delta: SimplicialComplex) -> CoefficientFamily:
    """Signed counts of facet subsets by their intersection.

    Depth-first over facet subsets in index order; once the running
    intersection is empty every extension is empty too, so the branch is cut.
    Coefficients are accumulated as integers and zero totals are pruned.
    """
    check_facet_cap(delta)
    fs = delta.facets
    k = len(fs)
    acc: dict[Face, int] = {}
    stack = [(i, fs[i], 1) for i in reversed(range(k)) if fs[i]]
    while stack:
        last, inter, count = stack.pop()
        acc[inter] = acc.get(inter, 0) + (1 if count % 2 else -1)
        for nxt in reversed(range(last + 1, k)):
            meet = inter & fs[nxt]
            if meet:
                stack.append((nxt, meet, count + 1))
    return CoefficientFamily(delta, {t: d for t, d in acc.items() if d}, "simplicial-d")


def simplicial_payoff(v: Game) -> float:
    return generic_payoff(v, d_coefficients(v.complex))


def _check_permutation(delta: SimplicialComplex, order: Sequence[Face]) -> None:
    if len(order) != len(delta.facets) or set(order) != set(delta.facets):
        raise NotAPermutation("order must list every facet exactly once")


def sequential_payoff(v: Game, order: Sequence[Face]) -> float:
    """v(F_1) + sum_j [v(F_j) - v(F_j meet (F_1 + ... + F_{j-1}))].

    The correction subcomplex is worth the sum over its facets.
    """
    delta = v.complex
    _check_permutation(delta, order)
    terms = []
    for j, f in enumerate(order):
        terms.append(evaluate(v, f))
        if j:
            meet = Subcomplex(delta, maximal_faces(f & g for g in order[:j]))
            terms.append(-complex_worth(v, meet))
    return math.fsum(terms)


def delta_j(delta: SimplicialComplex, j: int) -> Subcomplex:
    """Union of all (j + 1)-fold intersections of distinct facets."""
    k = len(delta.facets)
    if not 0 <= j <= k - 1:
        raise IndexOutOfRange(f"j={j} is outside 0..{k - 1}")
    if j == 0:
        return delta.as_subcomplex()
    meets = []
    for combo in combinations(delta.facets, j + 1):
        inter = combo[0]
        for f in combo[1:]:
            inter &= f
        meets.append(inter)
    return Subcomplex(delta, maximal_faces(meets))


def alternating_payoff(v: Game) -> float:
    """Signed sum of the worths of Delta^(0), Delta^(1), ..."""
    delta = v.complex
    check_facet_cap(delta)
    terms = []
    for j in range(len(delta.facets)):
        layer = delta_j(delta, j)
        if layer.is_empty:
            continue
        terms.append((-1) ** j * complex_worth(v, layer))
    return math.fsum(terms)


def matroid_reduction_payoff(v: Game, order: ShellingOrder) -> float:
    """Sum of v over the bases minus the worth of each shelling step intersection."""
    if order.complex != v.complex:
        raise ComplexMismatch("shelling order belongs to another complex")
    check = verify_shelling(order)
    if not check:
        raise ShellingVerificationFailed(
            f"order is not a shelling (fails at step {check.failing_index})", check.failing_index
        )
    delta = v.complex
    terms = [evaluate(v, b) for b in order.order]
    for step in order.steps():
        terms.append(-complex_worth(v, Subcomplex(delta, step)))
    return math.fsum(terms)


@dataclass
class FormulaComparison:
    closed: float
    sequential: list[tuple[str, float]]
    alternating: float
    matroid_reduction: float | None
    max_pairwise_delta: float
    orders: dict[str, list[list[int]]] = field(default_factory=dict)


def compare_formulas(v: Game, num_random_orders: int = 0, seed: int = 0) -> FormulaComparison:
    """Evaluate every total-payoff formula on one game.

    The sequential form runs on the canonical facet order plus
    ``num_random_orders`` seeded permutations.  When that budget covers all
    k! orders, every permutation is enumerated instead.
    """
    delta = v.complex
    check_facet_cap(delta)
    fs = delta.facets
    k = len(fs)

    named: list[tuple[str, tuple[Face, ...]]] = [("canonical", fs)]
    if num_random_orders + 1 >= math.factorial(k):
        named += [(f"perm-{i}", p) for i, p in enumerate(permutations(fs)) if p != fs]
    else:
        rng = np.random.default_rng(seed)
        for i in range(num_random_orders):
            named.append((f"random-{i + 1}", tuple(fs[t] for t in rng.permutation(k))))

    closed = simplicial_payoff(v)
    alternating = alternating_payoff(v)
    sequential = [(name, sequential_payoff(v, order)) for name, order in named]

    reduction = None
    if is_matroid(delta):
        try:
            reduction = matroid_reduction_payoff(v, shelling_order(delta))
        except ShellingVerificationFailed:
            reduction = None

    values = [closed, alternating] + [x for _, x in sequential]
    if reduction is not None:
        values.append(reduction)
    return FormulaComparison(
        closed=closed,
        sequential=sequential,
        alternating=alternating,
        matroid_reduction=reduction,
        max_pairwise_delta=max(values) - min(values),
        orders={name: [list(vertices(f)) for f in order] for name, order in named},
    )
