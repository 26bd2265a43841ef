"""Weighted chain complexes and their homology over the integers.

Chain groups are free on the simplices of nonzero weight, listed in
lexicographic order per dimension. The boundary of a simplex scales
each codimension-1 face by the weight ratio w(sigma) / w(face); the
divisibility rule makes every ratio an integer, and a zero-weight face
forces a zero-weight coface, so the ratio never needs a zero divisor.

Homology is read off Smith normal forms: in dimension n the free rank
is nullity(d_n) - rank(d_{n+1}) and the torsion coefficients are the
invariant factors of d_{n+1} that exceed 1. Dimension 0 is not reduced;
the boundary below dimension 0 is the zero map.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .complexes import Simplex, WeightedComplex, faces
from .errors import NotACycle
from .snf import IntMatrix, SmithDecomposition, smith_normal_form


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group in invariant factor form.

    torsion is a tuple of integers > 1, each dividing the next, so equal
    groups compare equal structurally.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d <= 1:
                raise ValueError(f"torsion coefficients must exceed 1, got {d}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def trivial(cls) -> "HomologyGroup":
        return cls(0, ())

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " (+) ".join(parts) if parts else "0"


@dataclass(frozen=True)
class WeightedBoundary:
    """Chain bases and boundary matrices of a weighted complex.

    bases[n] lists the nonzero-weight n-simplices in lexicographic
    order. matrices[n] maps chains in dimension n to dimension n - 1;
    matrices[0] maps to the zero module and has no rows.
    """

    bases: tuple[tuple[Simplex, ...], ...]
    matrices: tuple[IntMatrix, ...]

    def basis(self, n: int) -> tuple[Simplex, ...]:
        if 0 <= n < len(self.bases):
            return self.bases[n]
        return ()

    def matrix(self, n: int) -> IntMatrix:
        """Boundary matrix in dimension n, zero-shaped outside range."""
        if 0 <= n < len(self.matrices):
            return self.matrices[n]
        rows = len(self.basis(n - 1))
        cols = len(self.basis(n))
        return IntMatrix.zeros(rows, cols)


def chain_bases(K: WeightedComplex) -> tuple[tuple[Simplex, ...], ...]:
    """Nonzero-weight simplices per dimension, lexicographically sorted."""
    out = []
    for n in range(K.dimension + 1):
        out.append(tuple(s for s in K.of_dim(n) if K.weight(s) != 0))
    return tuple(out)


def boundary_matrix(K: WeightedComplex, n: int, bases=None) -> IntMatrix:
    """The weighted boundary from dimension n to n - 1.

    Column j is the boundary of the j-th basis simplex: face i picks up
    sign (-1)^i and coefficient w(sigma) / w(face).
    """
    if bases is None:
        bases = chain_bases(K)
    cols = bases[n] if 0 <= n < len(bases) else ()
    rows = bases[n - 1] if 1 <= n < len(bases) + 1 else ()
    if n <= 0 or not cols:
        return IntMatrix.zeros(len(rows) if n > 0 else 0, len(cols))
    index = {s: i for i, s in enumerate(rows)}
    entries = [0] * (len(rows) * len(cols))
    for j, sigma in enumerate(cols):
        ws = K.weight(sigma)
        for i, face in enumerate(faces(sigma)):
            wf = K.weight(face)
            assert wf != 0 and ws % wf == 0, "divisibility guarantees integer ratios"
            entries[index[face] * len(cols) + j] = (-1) ** i * (ws // wf)
    return IntMatrix(len(rows), len(cols), entries)


def boundary_matrices(K: WeightedComplex) -> WeightedBoundary:
    bases = chain_bases(K)
    mats = [boundary_matrix(K, n, bases) for n in range(len(bases))]
    return WeightedBoundary(bases=bases, matrices=tuple(mats))


def homology(K: WeightedComplex, max_dim: int | None = None) -> list[HomologyGroup]:
    """Weighted homology groups in dimensions 0 through dim K.

    Above the top dimension every group vanishes, so the list stops
    there (or at max_dim, when given and smaller).
    """
    top = K.dimension
    if max_dim is not None:
        top = min(top, max_dim)
    if top < 0:
        return []
    bd = boundary_matrices(K)
    groups = []
    ranks: dict[int, SmithDecomposition] = {}

    def snf_at(n: int) -> SmithDecomposition:
        if n not in ranks:
            ranks[n] = smith_normal_form(bd.matrix(n))
        return ranks[n]

    for n in range(top + 1):
        cycles = len(bd.basis(n)) - snf_at(n).rank
        above = snf_at(n + 1)
        free = cycles - above.rank
        torsion = tuple(d for d in above.factors if d > 1)
        assert free >= 0
        groups.append(HomologyGroup(free, torsion))
    return groups


def group_at(groups: Sequence[HomologyGroup], n: int) -> HomologyGroup:
    """The n-th group of a homology list, trivial outside the range."""
    if 0 <= n < len(groups):
        return groups[n]
    return HomologyGroup.trivial()


@dataclass(frozen=True)
class ClassOrder:
    """Order of a homology class: zero, finite torsion, or infinite.

    kind is one of "zero", "torsion", "infinite". For torsion classes k
    is the least positive multiplier sending the class to zero; a zero
    class records k = 1.
    """

    kind: str
    k: int | None = None

    @classmethod
    def zero(cls) -> "ClassOrder":
        return cls("zero", 1)

    @classmethod
    def torsion(cls, k: int) -> "ClassOrder":
        return cls("torsion", k)

    @classmethod
    def infinite(cls) -> "ClassOrder":
        return cls("infinite", None)

    @property
    def is_torsion(self) -> bool:
        """True when some positive multiple of the class vanishes."""
        return self.kind != "infinite"

    def __str__(self) -> str:
        if self.kind == "torsion":
            return f"torsion(k={self.k})"
        return self.kind


def homology_class_order(K: WeightedComplex, n: int, z: Sequence[int]) -> ClassOrder:
    """Order of the class [z] in the n-th weighted homology group.

    z is an integer vector over the lexicographic basis of nonzero-weight
    n-simplices. The chain must be a cycle. The computation runs in the
    Smith coordinates of the boundary one dimension up: with y = U z and
    invariant factors d_1..d_r, the class dies under multiplication by
    lcm(d_i / gcd(d_i, y_i)) provided the coordinates past r vanish, and
    has infinite order otherwise.
    """
    bd = boundary_matrices(K)
    basis = bd.basis(n)
    z = list(z)
    if len(z) != len(basis):
        raise ValueError(f"chain has {len(z)} coordinates but dimension {n} has {len(basis)} basis simplices")
    for x in z:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"chain coordinates must be integers, got {x!r}")
    if n >= 1 and any(v != 0 for v in bd.matrix(n).apply(z)):
        raise NotACycle(n)

    dec = smith_normal_form(bd.matrix(n + 1), want_transforms=True)
    y = dec.U.apply(z)
    k = 1
    for i, d in enumerate(dec.factors):
        k = lcm(k, d // gcd(d, y[i]))
    if any(y[i] != 0 for i in range(dec.rank, len(y))):
        return ClassOrder.infinite()
    if k == 1:
        return ClassOrder.zero()
    return ClassOrder.torsion(k)
