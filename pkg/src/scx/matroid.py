"""Matroid recognition and shelling orders of bases."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .complex import (
    Face,
    SimplicialComplex,
    face_key,
    from_facets,
    is_pure,
    maximal_faces,
    size,
    vertices,
)
from .errors import (
    NotAMatroid,
    NotAPermutation,
    NotPure,
    ShellingVerificationFailed,
)


@dataclass(frozen=True)
class MatroidCheck:
    is_matroid: bool
    witness: tuple[Face, Face] | None = None

    def __bool__(self) -> bool:
        return self.is_matroid


def is_matroid(delta: SimplicialComplex) -> MatroidCheck:
    """Exhaustive test of the independent-set exchange axiom.

    Every pair (A, B) of faces with |A| < |B| is scanned for some b in B - A
    such that A + b is a face.  A is taken by increasing size with the highest
    vertex labels first, B in canonical order; the first violating pair is
    returned as the witness.
    """
    fs = delta.faces
    by_size: dict[int, list[Face]] = {}
    for f in delta.sorted_faces:
        by_size.setdefault(size(f), []).append(f)
    sizes = sorted(by_size)
    for sa in sizes:
        larger = [b for sb in sizes if sb > sa for b in by_size[sb]]
        for a in sorted(by_size[sa], key=vertices, reverse=True):
            for b in larger:
                rest = b & ~a
                ok = False
                while rest:
                    low = rest & -rest
                    if a | low in fs:
                        ok = True
                        break
                    rest ^= low
                if not ok:
                    return MatroidCheck(False, (a, b))
    return MatroidCheck(True)


def rank(delta: SimplicialComplex) -> int:
    if not is_pure(delta):
        raise NotPure("rank of a complex is defined here only for pure complexes")
    return size(delta.facets[0])


@dataclass(frozen=True)
class ShellingOrder:
    complex: SimplicialComplex
    order: tuple[Face, ...]
    rank: int

    def steps(self) -> list[tuple[Face, ...]]:
        """Facets of (B_1 + ... + B_{j-1}) meet B_j, for j = 2..k."""
        return [
            maximal_faces(prev & self.order[j] for prev in self.order[:j])
            for j in range(1, len(self.order))
        ]


@dataclass(frozen=True)
class ShellingCheck:
    ok: bool
    failing_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def make_order(delta: SimplicialComplex, order: Sequence[Face]) -> ShellingOrder:
    """Wrap a facet permutation of a pure complex as a (not yet verified) order."""
    if sorted(order) != sorted(delta.facets) or len(set(order)) != len(order):
        raise NotAPermutation("order must list every facet exactly once")
    return ShellingOrder(delta, tuple(order), rank(delta))


def verify_shelling(order: ShellingOrder) -> ShellingCheck:
    """Check that every step intersection is pure of cardinality r - 1.

    ``failing_index`` is the 1-based position j of the first offending facet.
    """
    delta = order.complex
    if sorted(order.order) != sorted(delta.facets) or len(set(order.order)) != len(order.order):
        raise NotAPermutation("order must list every facet exactly once")
    r = order.rank
    for j, step in enumerate(order.steps(), start=2):
        if any(size(f) != r - 1 for f in step):
            return ShellingCheck(False, j)
    return ShellingCheck(True)


def shelling_order(m: SimplicialComplex) -> ShellingOrder:
    """Lexicographic order of the bases, verified as a shelling."""
    check = is_matroid(m)
    if not check:
        a, b = check.witness
        raise NotAMatroid(
            f"exchange fails for A={{{face_key(a)}}}, B={{{face_key(b)}}}"
        )
    order = ShellingOrder(m, tuple(sorted(m.facets, key=vertices)), rank(m))
    result = verify_shelling(order)
    if not result:
        raise ShellingVerificationFailed(
            f"lexicographic order fails the codimension-one check at step {result.failing_index}",
            result.failing_index,
        )
    return order


def uniform_matroid(r: int, n: int) -> SimplicialComplex:
    """U_{r,n}: all r-subsets of [n] as bases."""
    return from_facets(n, combinations(range(1, n + 1), r))


def step_report(order: ShellingOrder) -> list[dict]:
    out = []
    for j, step in enumerate(order.steps(), start=2):
        out.append({
            "j": j,
            "facet": list(vertices(order.order[j - 1])),
            "intersection": [list(vertices(f)) for f in step],
        })
    return out
