"""
Simplicial complexes on a fixed ambient vertex set [m] = {1, ..., m}.

A complex is stored by its maximal faces only.  Vertices of [m] that lie
in no face are ghost vertices; they are kept in the ambient set so that
moment-angle complexes pick up their circle factors.

>>> K = skeleton(4, 1)
>>> sorted(link(K, 1).facets)
[(2,), (3,), (4,)]
>>> relabel(link(K, 1), [2, 3, 4]) == skeleton(3, 0)
True
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidParameter

Face = tuple  # strictly increasing tuple of 1-based vertices; () is the empty face


def _as_face(vertices: Iterable[int]) -> Face:
    face = tuple(sorted(set(int(v) for v in vertices)))
    return face


def _maximal(faces: Iterable[Face]) -> frozenset:
    # Longest first, so a face is only compared against faces that could contain it.
    kept: list = []
    for f in sorted(set(faces), key=len, reverse=True):
        fs = set(f)
        if not any(fs <= set(g) for g in kept):
            kept.append(f)
    return frozenset(f for f in kept if f)


class SimplicialComplex:
    """Immutable simplicial complex on [ambient], given by its facets.

    An empty facet set means the complex {∅}.  Facets passed in need not
    form an antichain; non-maximal ones are dropped.
    """

    __slots__ = ("ambient", "facets", "_hash")

    def __init__(self, ambient: int, facets: Iterable[Iterable[int]] = ()):
        if ambient < 0:
            raise InvalidParameter(f"ambient vertex count must be >= 0, got {ambient}")
        faces = [_as_face(f) for f in facets]
        for f in faces:
            if f and (f[0] < 1 or f[-1] > ambient):
                raise InvalidParameter(f"facet {list(f)} not inside [1..{ambient}]")
        object.__setattr__(self, "ambient", int(ambient))
        object.__setattr__(self, "facets", _maximal(faces))
        object.__setattr__(self, "_hash", hash((self.ambient, self.facets)))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ambient == other.ambient and self.facets == other.facets

    def __hash__(self):
        return self._hash

    def __repr__(self):
        fs = sorted(self.facets, key=lambda f: (len(f), f))
        return f"SimplicialComplex({self.ambient}, {[list(f) for f in fs]})"

    def __contains__(self, face) -> bool:
        return is_face(self, face)

    @property
    def vertices(self) -> tuple:
        """Vertices that belong to some face (ghosts excluded)."""
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def ghosts(self) -> tuple:
        used = set(self.vertices)
        return tuple(v for v in range(1, self.ambient + 1) if v not in used)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def sorted_facets(self) -> list:
        return sorted(self.facets, key=lambda f: (len(f), f))

    def faces(self) -> Iterator[Face]:
        """Every face, including the empty one, each exactly once."""
        seen = {()}
        yield ()
        for facet in self.sorted_facets():
            for r in range(1, len(facet) + 1):
                for f in combinations(facet, r):
                    if f not in seen:
                        seen.add(f)
                        yield f

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "facets": [list(f) for f in self.sorted_facets()]}

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        try:
            ambient = data["ambient"]
            facets = data.get("facets", [])
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidParameter(f"malformed complex document: {exc}") from None
        if not isinstance(ambient, int) or not isinstance(facets, list):
            raise InvalidParameter("complex document needs integer 'ambient' and list 'facets'")
        for f in facets:
            if not isinstance(f, list) or not all(isinstance(v, int) for v in f):
                raise InvalidParameter(f"facet {f!r} is not a list of integers")
        return cls(ambient, facets)


def dumps(K: SimplicialComplex) -> str:
    return json.dumps(K.to_dict())


def loads(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"invalid JSON: {exc}") from None
    return SimplicialComplex.from_dict(data)


def _check_vertex(K: SimplicialComplex, v: int):
    if not 1 <= v <= K.ambient:
        raise InvalidParameter(f"vertex {v} not in [1..{K.ambient}]")


def _check_vertices(K: SimplicialComplex, vs: Iterable[int]) -> Face:
    face = _as_face(vs)
    for v in face:
        _check_vertex(K, v)
    return face


def _check_same_ambient(K1: SimplicialComplex, K2: SimplicialComplex):
    if K1.ambient != K2.ambient:
        raise InvalidParameter(f"ambient mismatch: {K1.ambient} vs {K2.ambient}")


def simplex(vertices: Iterable[int], ambient: int | None = None) -> SimplicialComplex:
    face = _as_face(vertices)
    if ambient is None:
        ambient = face[-1] if face else 0
    return SimplicialComplex(ambient, [face])


def skeleton(m: int, k: int) -> SimplicialComplex:
    """All subsets of [m] of size at most k+1."""
    if m < 1:
        raise InvalidParameter(f"skeleton needs m >= 1, got {m}")
    if not -1 <= k <= m - 1:
        raise InvalidParameter(f"skeleton needs -1 <= k <= m-1, got m={m}, k={k}")
    return SimplicialComplex(m, combinations(range(1, m + 1), k + 1) if k >= 0 else ())


def is_face(K: SimplicialComplex, sigma: Iterable[int]) -> bool:
    face = set(_check_vertices(K, sigma))
    if not face:
        return True
    return any(face <= set(f) for f in K.facets)


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(K, v)
    return SimplicialComplex(K.ambient, [tuple(u for u in f if u != v) for f in K.facets if v in f])


def star(K: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(K, v)
    if v not in K.vertices:
        return SimplicialComplex(K.ambient)
    return cone(link(K, v), v)


def rest(K: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(K, v)
    return full_subcomplex(K, [u for u in range(1, K.ambient + 1) if u != v])


def full_subcomplex(K: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    w = set(_check_vertices(K, W))
    return SimplicialComplex(K.ambient, [tuple(u for u in f if u in w) for f in K.facets])


def union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    _check_same_ambient(K1, K2)
    return SimplicialComplex(K1.ambient, K1.facets | K2.facets)


def intersection(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    _check_same_ambient(K1, K2)
    return SimplicialComplex(
        K1.ambient, [tuple(sorted(set(f) & set(g))) for f in K1.facets for g in K2.facets]
    )


def cone(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Join of K with the vertex v; v must be a ghost vertex of K."""
    _check_vertex(K, v)
    if v in K.vertices:
        raise InvalidParameter(f"cone vertex {v} already belongs to the complex")
    facets = [f + (v,) for f in K.facets] or [(v,)]
    return SimplicialComplex(K.ambient, facets)


def boundary_simplex(S: Iterable[int], ambient: int | None = None) -> SimplicialComplex:
    """All proper subsets of S."""
    face = _as_face(S)
    if ambient is None:
        ambient = face[-1] if face else 0
    return SimplicialComplex(ambient, combinations(face, len(face) - 1) if face else ())


def relabel(K: SimplicialComplex, vertices: Iterable[int] | None = None) -> SimplicialComplex:
    """Order-preserving copy of K on [len(vertices)].

    ``vertices`` is the part of the ambient set to keep (default: the
    non-ghost vertices); every face of K must lie inside it.
    """
    keep = sorted(set(vertices)) if vertices is not None else list(K.vertices)
    for v in keep:
        _check_vertex(K, v)
    index = {v: i + 1 for i, v in enumerate(keep)}
    try:
        facets = [tuple(index[u] for u in f) for f in K.facets]
    except KeyError as exc:
        raise InvalidParameter(f"vertex {exc.args[0]} is used by a face but not kept") from None
    return SimplicialComplex(len(keep), facets)


def embed(K: SimplicialComplex, ambient: int) -> SimplicialComplex:
    """The same faces on a larger ambient set; new vertices are ghosts."""
    if ambient < K.ambient:
        raise InvalidParameter(f"cannot embed [1..{K.ambient}] into [1..{ambient}]")
    return SimplicialComplex(ambient, K.facets)


def l_family(j: int, m: int, k: int) -> SimplicialComplex:
    """Δ_m^k with the facets [m]∖{m}, [m]∖{m-1}, ..., [m]∖{m-j+1} adjoined."""
    if not 0 <= j <= k + 2 <= m:
        raise InvalidParameter(f"l_family needs 0 <= j <= k+2 <= m, got j={j}, m={m}, k={k}")
    K = skeleton(m, k)
    full = range(1, m + 1)
    extra = [tuple(u for u in full if u != m - i + 1) for i in range(1, j + 1)]
    return SimplicialComplex(m, list(K.facets) + extra)
