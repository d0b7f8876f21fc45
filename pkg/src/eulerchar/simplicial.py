"""Finite abstract simplicial complexes.

A complex is stored as its full set of faces (downward closed, empty
face excluded), each face a strictly increasing tuple of integer vertex
ids.  Storing every face keeps f-vectors and chain enumeration direct;
a hard guard of one million faces keeps everything desk scale, since
repeated subdivision grows super-exponentially.

Barycentric subdivision is performed genuinely: the vertices of sd(C)
are the faces of C, and the faces of sd(C) are the chains of faces
strictly ordered by inclusion.  This combinatorial route is deliberately
independent of the Stirling-number formula in :mod:`eulerchar.subdivision`
so the two can be checked against each other.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .fps import Series

MAX_FACES = 10**6

Face = tuple[int, ...]


class FaceCountError(ValueError):
    """Refusal to materialize a complex with more than MAX_FACES faces."""


def _canonical_face(vertices: Iterable[int]) -> Face:
    vs = tuple(sorted(vertices))
    if not vs:
        raise ValueError("faces must be nonempty")
    for v in vs:
        if not isinstance(v, int):
            raise ValueError(f"vertex ids must be integers, got {v!r}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"face {vs} has repeated vertices")
    return vs


class Complex:
    """A finite abstract simplicial complex (downward-closed face set)."""

    __slots__ = ("_faces",)

    def __init__(self, faces: Iterable[Iterable[int]]):
        fs = frozenset(_canonical_face(f) for f in faces)
        if not fs:
            raise ValueError("a complex needs at least one face")
        if len(fs) > MAX_FACES:
            raise FaceCountError(f"complex would have {len(fs)} faces (limit {MAX_FACES})")
        for face in fs:
            if len(face) > 1:
                for sub in combinations(face, len(face) - 1):
                    if sub not in fs:
                        raise ValueError(
                            f"face set is not downward closed: {sub} missing under {face}"
                        )
        self._faces = fs

    @classmethod
    def _from_closed(cls, faces: Iterable[Face]) -> "Complex":
        # Trusted constructor for face sets already known to be closed.
        c = object.__new__(cls)
        c._faces = frozenset(faces)
        return c

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable[int]]) -> "Complex":
        """Downward closure of the given faces."""
        tops = [_canonical_face(f) for f in maximal]
        if not tops:
            raise ValueError("at least one maximal face is required")
        faces: set[Face] = set()
        for top in tops:
            if 2 ** len(top) - 1 > MAX_FACES:
                raise FaceCountError(
                    f"closure of a {len(top)}-vertex face exceeds {MAX_FACES} faces"
                )
            for size in range(1, len(top) + 1):
                faces.update(combinations(top, size))
            if len(faces) > MAX_FACES:
                raise FaceCountError(
                    f"complex exceeds the {MAX_FACES}-face guard"
                )
        return cls._from_closed(faces)

    # -- inspection ---------------------------------------------------

    @property
    def faces(self) -> frozenset[Face]:
        return self._faces

    @property
    def dim(self) -> int:
        return max(len(f) for f in self._faces) - 1

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self._faces

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._faces == other._faces

    def __hash__(self) -> int:
        return hash(self._faces)

    def __repr__(self) -> str:
        return f"Complex({len(self._faces)} faces, dim={self.dim})"

    def maximal_faces(self) -> list[Face]:
        """Faces not properly contained in any other face, sorted."""
        covered: set[Face] = set()
        for face in self._faces:
            if len(face) > 1:
                covered.update(combinations(face, len(face) - 1))
        return sorted(f for f in self._faces if f not in covered)

    def f_vector(self) -> list[int]:
        """(f_0, ..., f_dim): the count of i-dimensional faces."""
        counts = [0] * (self.dim + 1)
        for face in self._faces:
            counts[len(face) - 1] += 1
        return counts

    def chi(self) -> int:
        """Euler characteristic: the alternating sum of the f-vector."""
        return sum((-1) ** i * fi for i, fi in enumerate(self.f_vector()))

    def chi_weighted(self, weights: Series) -> Fraction:
        """The face-count linear combination sum_k weights[k] * f_k.

        With weights 1/(1+x) this is exactly the Euler characteristic.
        The weight series must be known past the complex's dimension.
        """
        fv = self.f_vector()
        if weights.precision < len(fv):
            raise ValueError(
                f"weight series precision {weights.precision} is insufficient "
                f"for a {self.dim}-dimensional complex"
            )
        acc = Fraction(0)
        for k, fk in enumerate(fv):
            acc += weights.coeff(k) * fk
        return acc

    # -- subdivision --------------------------------------------------

    def barycentric_subdivision(self) -> "Complex":
        """The complex of chains of faces strictly ordered by inclusion.

        Each face of this complex becomes a vertex of the subdivision;
        vertex ids are assigned by the lexicographic order of the faces
        they replace, so the output is deterministic.  Because the face
        set is downward closed, every nonempty proper subset of a face
        is again a face, which lets chains be enumerated by their top
        element.  A counting pass runs first so the face guard triggers
        before any chain is materialized.
        """
        faces_lex = sorted(self._faces)
        vid = {face: i for i, face in enumerate(faces_lex)}
        by_size = sorted(self._faces, key=len)

        counts: dict[Face, int] = {}
        total = 0
        for face in by_size:
            c = 1
            for size in range(1, len(face)):
                for sub in combinations(face, size):
                    c += counts[sub]
            counts[face] = c
            total += c
            if total > MAX_FACES:
                raise FaceCountError(
                    f"subdivision exceeds the {MAX_FACES}-face guard"
                )

        chains: dict[Face, list[tuple[int, ...]]] = {}
        for face in by_size:
            top = vid[face]
            grown = [(top,)]
            for size in range(1, len(face)):
                for sub in combinations(face, size):
                    grown.extend(ch + (top,) for ch in chains[sub])
            chains[face] = grown

        new_faces: set[Face] = set()
        for grown in chains.values():
            for ch in grown:
                new_faces.add(tuple(sorted(ch)))
        return Complex._from_closed(new_faces)

    def iterated_subdivision(self, k: int) -> "Complex":
        """k-fold barycentric subdivision; k = 0 returns the complex itself."""
        if not isinstance(k, int) or k < 0:
            raise ValueError("subdivision count must be a nonnegative integer")
        result = self
        for _ in range(k):
            result = result.barycentric_subdivision()
        return result


def simplex(n: int) -> Complex:
    """The solid n-simplex: every nonempty subset of {0, ..., n}."""
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    return Complex.from_maximal([range(n + 1)])
