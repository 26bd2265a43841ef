"""Finite abstract simplicial complexes with integer weights.

A simplex is a nonempty tuple of strictly increasing non-negative
integer vertex ids. Keeping vertices in ascending order fixes the
orientation once and for all, so boundary signs are deterministic.

A weighted complex assigns an integer to every simplex subject to the
divisibility rule: whenever sigma is a face of tau, w(sigma) divides
w(tau). Divisibility is taken with the convention that 0 divides only
0, so the set of zero-weight simplices is closed under taking cofaces.
Negative weights are allowed; divisibility ignores sign.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import (
    DivisibilityViolation,
    DuplicateSimplex,
    DuplicateVertex,
    NotFaceClosed,
)

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonicalize a vertex collection into a simplex.

    Vertices may arrive in any order; the result is sorted. Repeats are
    rejected rather than collapsed, since a repeated id is almost always
    a data error.

    >>> simplex([2, 0, 1])
    (0, 1, 2)
    """
    vs = tuple(vertices)
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
    out = tuple(sorted(vs))
    for a, b in zip(out, out[1:]):
        if a == b:
            raise DuplicateVertex(vs)
    return out


def dim(sigma: Simplex) -> int:
    return len(sigma) - 1


def faces(sigma: Simplex) -> list[Simplex]:
    """Codimension-1 faces in deletion order.

    Entry i is sigma with its i-th smallest vertex removed, matching the
    sign convention (-1)^i used by the weighted boundary. A vertex has
    no faces (the empty simplex is never materialized).

    >>> faces((0, 1, 2))
    [(1, 2), (0, 2), (0, 1)]
    """
    if len(sigma) == 1:
        return []
    return [sigma[:i] + sigma[i + 1:] for i in range(len(sigma))]


def closure(generators: Iterable[Simplex]) -> set[Simplex]:
    """All nonempty subsets of the given simplices."""
    out: set[Simplex] = set()
    stack = [simplex(g) for g in generators]
    while stack:
        s = stack.pop()
        if s in out:
            continue
        out.add(s)
        stack.extend(faces(s))
    return out


def _divides(a: int, b: int) -> bool:
    # 0 | b holds only for b == 0; sign is irrelevant otherwise
    if a == 0:
        return b == 0
    return b % a == 0


def _sort_key(sigma: Simplex):
    return (len(sigma), sigma)


class SimplicialComplex:
    """A finite face-closed set of simplices.

    Construction validates closure by checking that every codimension-1
    face of every simplex is present, which is enough by induction.
    Iteration order is by dimension, then lexicographic, so anything
    derived from iteration is deterministic.
    """

    __slots__ = ("_simplices", "_by_dim")

    def __init__(self, simplices: Iterable[Simplex]):
        members = frozenset(tuple(s) for s in simplices)
        by_dim: dict[int, list[Simplex]] = {}
        for s in members:
            for f in faces(s):
                if f not in members:
                    raise NotFaceClosed(f)
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._simplices = members
        self._by_dim = {d: tuple(sorted(group)) for d, group in by_dim.items()}

    @classmethod
    def from_maximal(cls, generators: Iterable[Simplex]) -> "SimplicialComplex":
        return cls(closure(generators))

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    @property
    def dimension(self) -> int:
        """Largest simplex dimension, or -1 for the empty complex."""
        return max(self._by_dim, default=-1)

    def of_dim(self, n: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(n, ())

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.of_dim(0))

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self._simplices

    def __iter__(self) -> Iterator[Simplex]:
        for d in sorted(self._by_dim):
            yield from self._by_dim[d]

    def __len__(self) -> int:
        return len(self._simplices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self)} simplices, dim {self.dimension})"

    def proper_cofaces(self, sigma: Simplex) -> list[Simplex]:
        """Every simplex strictly containing sigma, in (dim, lex) order."""
        sigma = tuple(sigma)
        k = len(sigma)
        sset = set(sigma)
        out = []
        for d in sorted(self._by_dim):
            if d + 1 <= k:
                continue
            for t in self._by_dim[d]:
                if sset.issubset(t):
                    out.append(t)
        return out

    def cofacets(self, sigma: Simplex) -> list[Simplex]:
        """Cofaces of sigma of exactly one dimension higher."""
        sigma = tuple(sigma)
        sset = set(sigma)
        return [t for t in self.of_dim(len(sigma)) if sset.issubset(t)]

    def is_maximal(self, sigma: Simplex) -> bool:
        return not self.proper_cofaces(sigma)

    def maximal_simplices(self) -> list[Simplex]:
        return [s for s in self if self.is_maximal(s)]

    def free_coface(self, sigma: Simplex) -> Simplex | None:
        """The unique proper coface of sigma, if there is exactly one.

        When it exists, that coface tau automatically has dimension
        dim(sigma) + 1 and is maximal: any larger coface of sigma, and
        any proper coface of tau, would be a second coface of sigma.
        """
        cofaces = self.proper_cofaces(sigma)
        if len(cofaces) != 1:
            return None
        tau = cofaces[0]
        assert len(tau) == len(sigma) + 1 and self.is_maximal(tau)
        return tau

    def without(self, removed: Iterable[Simplex]) -> "SimplicialComplex":
        gone = {tuple(s) for s in removed}
        return SimplicialComplex(self._simplices - gone)


class WeightedComplex:
    """A simplicial complex together with a divisibility-compatible weight.

    Instances are immutable after construction; all operations return
    new objects. Weights are plain Python integers, never floats.
    """

    __slots__ = ("_complex", "_weight")

    def __init__(self, complex: SimplicialComplex, weight: Mapping[Simplex, int]):
        w: dict[Simplex, int] = {}
        for s in complex.simplices:
            if s not in weight:
                raise ValueError(f"no weight for simplex {list(s)}")
            value = weight[s]
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"weight of {list(s)} must be an integer, got {value!r}")
            w[s] = value
        # codim-1 checks suffice: divisibility is transitive, also under
        # the 0 | x iff x == 0 convention
        for s in complex.simplices:
            for f in faces(s):
                if not _divides(w[f], w[s]):
                    raise DivisibilityViolation(f, s, w[f], w[s])
        self._complex = complex
        self._weight = w

    @property
    def complex(self) -> SimplicialComplex:
        return self._complex

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._complex.simplices

    @property
    def dimension(self) -> int:
        return self._complex.dimension

    def of_dim(self, n: int) -> tuple[Simplex, ...]:
        return self._complex.of_dim(n)

    def weight(self, sigma: Simplex) -> int:
        return self._weight[tuple(sigma)]

    def items(self) -> list[tuple[Simplex, int]]:
        return [(s, self._weight[s]) for s in self._complex]

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self._complex.simplices

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._complex)

    def __len__(self) -> int:
        return len(self._complex)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedComplex):
            return NotImplemented
        return self._complex == other._complex and self._weight == other._weight

    def __repr__(self) -> str:
        return f"WeightedComplex({len(self)} simplices, dim {self.dimension})"

    def free_coface(self, sigma: Simplex) -> Simplex | None:
        return self._complex.free_coface(sigma)

    def is_maximal(self, sigma: Simplex) -> bool:
        return self._complex.is_maximal(sigma)

    def restrict(self, members: Iterable[Simplex]) -> "WeightedComplex":
        """Sub-complex on the given simplices, keeping their weights.

        Raises NotFaceClosed if the selection is not a complex.
        """
        selected = SimplicialComplex(tuple(s) for s in members)
        for s in selected.simplices:
            if s not in self._complex.simplices:
                raise KeyError(f"{list(s)} is not a simplex of this complex")
        return WeightedComplex(selected, self._weight)

    def without(self, removed: Iterable[Simplex]) -> "WeightedComplex":
        gone = {tuple(s) for s in removed}
        return self.restrict(self._complex.simplices - gone)


def validate_complex(entries: Iterable[tuple[Iterable[int], int]]) -> WeightedComplex:
    """Build a weighted complex from (vertices, weight) records.

    Vertex tuples are canonicalized; repeated records for the same
    simplex and repeated vertices inside one record are rejected. The
    listing must be explicit: every face needs its own record.
    """
    weight: dict[Simplex, int] = {}
    for vertices, w in entries:
        s = simplex(vertices)
        if s in weight:
            raise DuplicateSimplex(s)
        weight[s] = w
    return WeightedComplex(SimplicialComplex(weight), weight)
