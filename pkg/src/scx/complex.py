"""Finite simplicial complexes on the vertex set {1, ..., n}.

Faces are plain ``int`` bitmasks: vertex ``i`` is bit ``i - 1``.  A complex is
stored by its facet antichain in canonical order (cardinality descending, then
lexicographic by sorted vertex list); the full face set is built lazily.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CapacityExceeded,
    EmptyFacetList,
    FaceNotInComplex,
    ParentMismatch,
    VertexOutOfRange,
)

MAX_VERTICES = 24

Face = int


# -- face helpers -------------------------------------------------------------

def face(vertices: Iterable[int]) -> Face:
    """Bitmask of a collection of 1-based vertices (no range check)."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices(mask: Face) -> tuple[int, ...]:
    """Sorted 1-based vertex tuple of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: Face) -> int:
    return bin(mask).count("1")


def face_key(mask: Face) -> str:
    """Comma-joined ascending vertex list; the empty face is ``""``."""
    return ",".join(str(v) for v in vertices(mask))


def parse_face_key(key: str) -> Face:
    key = key.strip()
    if not key:
        return 0
    try:
        return face(int(part) for part in key.split(","))
    except ValueError:
        raise VertexOutOfRange(f"malformed face key {key!r}") from None


def canonical_key(mask: Face) -> tuple[int, tuple[int, ...]]:
    """Sort key for faces: cardinality ascending, then lexicographic."""
    vs = vertices(mask)
    return len(vs), vs


def facet_key(mask: Face) -> tuple[int, tuple[int, ...]]:
    """Sort key for facet lists: cardinality descending, then lexicographic."""
    vs = vertices(mask)
    return -len(vs), vs


def submasks(mask: Face) -> Iterator[Face]:
    """All subsets of ``mask``, including ``mask`` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_faces(faces: Iterable[Face]) -> tuple[Face, ...]:
    """Antichain normalization in canonical facet order.

    Duplicates are dropped and every face contained in another is absorbed.
    An input with no nonempty face normalizes to ``(0,)``, the empty
    subcomplex whose only face is the empty set.
    """
    kept: list[Face] = []
    for f in sorted(set(faces), key=size, reverse=True):
        if not any(f & ~g == 0 for g in kept):
            kept.append(f)
    if not kept:
        return (0,)
    return tuple(sorted(kept, key=facet_key))


# -- complexes ----------------------------------------------------------------

def _check_vertex_count(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"n={n} exceeds the capacity bound {MAX_VERTICES}")
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    Build instances with :func:`from_facets` or :func:`full_simplex`; the
    constructor trusts that ``facets`` is already a canonical antichain.
    """

    n: int
    facets: tuple[Face, ...]

    @cached_property
    def faces(self) -> frozenset[Face]:
        out: set[Face] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def sorted_faces(self) -> tuple[Face, ...]:
        return tuple(sorted(self.faces, key=canonical_key))

    @property
    def ground(self) -> Face:
        return (1 << self.n) - 1

    def __contains__(self, mask: Face) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def require_face(self, mask: Face) -> None:
        if mask not in self:
            raise FaceNotInComplex(f"{{{face_key(mask)}}} is not a face of the complex")

    def as_subcomplex(self) -> Subcomplex:
        return Subcomplex(self, self.facets)

    def __repr__(self) -> str:
        fs = ", ".join("{" + face_key(f) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{fs}])"


def from_facets(n: int, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The complex on ``n`` vertices generated by ``sets``."""
    _check_vertex_count(n)
    masks = []
    for s in sets:
        vs = list(s)
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise VertexOutOfRange(f"vertex {v!r} is outside 1..{n}")
        masks.append(face(vs))
    if not masks:
        raise EmptyFacetList("a complex needs at least one generating set")
    return SimplicialComplex(n, maximal_faces(masks))


def full_simplex(n: int) -> SimplicialComplex:
    _check_vertex_count(n)
    return SimplicialComplex(n, ((1 << n) - 1,))


def faces(delta: SimplicialComplex) -> frozenset[Face]:
    return delta.faces


def is_facet(mask: Face, delta: SimplicialComplex) -> bool:
    return mask in delta.facets


def is_pure(delta: SimplicialComplex) -> bool:
    return len({size(f) for f in delta.facets}) == 1


def dimension(delta: SimplicialComplex) -> int:
    return max(size(f) for f in delta.facets) - 1


def is_full_simplex(delta: SimplicialComplex) -> bool:
    return delta.facets == (delta.ground,)


def link_vertex(i: int, delta: SimplicialComplex) -> frozenset[Face]:
    """Faces T with i not in T and T + i a face."""
    if not 1 <= i <= delta.n:
        raise VertexOutOfRange(f"vertex {i} is outside 1..{delta.n}")
    bit = 1 << (i - 1)
    out: set[Face] = set()
    for f in delta.facets:
        if f & bit:
            out.update(submasks(f & ~bit))
    return frozenset(out)


def link_face(s: Face, delta: SimplicialComplex) -> frozenset[Face]:
    delta.require_face(s)
    out: set[Face] = set()
    for f in delta.facets:
        if s & ~f == 0:
            out.update(submasks(f & ~s))
    return frozenset(out)


def star_face(s: Face, delta: SimplicialComplex) -> frozenset[Face]:
    delta.require_face(s)
    out: set[Face] = set()
    for f in delta.facets:
        if s & ~f == 0:
            out.update(submasks(f))
    return frozenset(out)


# -- subcomplexes -------------------------------------------------------------

@dataclass(frozen=True)
class Subcomplex:
    """A subcomplex of ``parent`` stored by its normalized facet antichain."""

    parent: SimplicialComplex
    facets: tuple[Face, ...]

    @classmethod
    def from_faces(cls, parent: SimplicialComplex, generators: Iterable[Face]) -> Subcomplex:
        gens = list(generators)
        for g in gens:
            parent.require_face(g)
        return cls(parent, maximal_faces(gens))

    @classmethod
    def empty(cls, parent: SimplicialComplex) -> Subcomplex:
        return cls(parent, (0,))

    @classmethod
    def simplex(cls, parent: SimplicialComplex, mask: Face) -> Subcomplex:
        parent.require_face(mask)
        return cls(parent, (mask,))

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    @cached_property
    def faces(self) -> frozenset[Face]:
        out: set[Face] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    def __repr__(self) -> str:
        fs = ", ".join("{" + face_key(f) + "}" for f in self.facets)
        return f"Subcomplex([{fs}])"


def facets_of(k: Subcomplex | SimplicialComplex) -> list[Face]:
    return list(k.facets)


def _same_parent(a: Subcomplex, b: Subcomplex) -> None:
    if a.parent != b.parent:
        raise ParentMismatch("subcomplexes belong to different complexes")


def union_subcomplexes(a: Subcomplex, b: Subcomplex) -> Subcomplex:
    _same_parent(a, b)
    return Subcomplex(a.parent, maximal_faces(a.facets + b.facets))


def intersect_subcomplexes(a: Subcomplex, b: Subcomplex) -> Subcomplex:
    _same_parent(a, b)
    return Subcomplex(a.parent, maximal_faces(f & g for f in a.facets for g in b.facets))


# -- JSON documents -------------------------------------------------------------

def complex_to_json(delta: SimplicialComplex) -> dict:
    return {"n": delta.n, "facets": [list(vertices(f)) for f in delta.facets]}


def complex_from_json(doc: dict) -> SimplicialComplex:
    try:
        n = doc["n"]
        sets = doc["facets"]
    except (KeyError, TypeError):
        raise EmptyFacetList('complex document needs "n" and "facets"') from None
    if not isinstance(n, int) or not isinstance(sets, list):
        raise VertexOutOfRange('"n" must be an integer and "facets" a list of lists')
    return from_facets(n, sets)
