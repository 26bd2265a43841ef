"""Sequence fingerprints through substring posets.

The distinct proper nonempty contiguous substrings of a string form a
poset under the contiguous-substring relation. Its order complex has
one vertex per substring and one simplex per chain; vertices are
numbered in lexicographic substring order, with a name table kept on
the side so reports stay readable.

Weights come from per-letter positive integers. A substring's weight is
either the lcm or the product of its letter weights, and a simplex's
weight is either the lcm or the product of its vertex weights; the four
combinations are the weighting types 1 through 4 (type 1 is lcm/lcm,
type 4 is product/product, type 2 is lcm then product, type 3 the
reverse). Divisibility of the resulting weighting is verified when the
complex is built, not assumed.

The fingerprint of a sequence is the weighted homology of this complex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import lcm, prod
from typing import Iterable, Mapping

from .complexes import SimplicialComplex, WeightedComplex
from .errors import UnweightedSymbol, ZeroLetterWeight
from .homology import HomologyGroup, homology

ALPHABETS: dict[str, tuple[str, ...]] = {
    "dna": tuple("ACGT"),
    "rna": tuple("ACGU"),
    "bin": tuple("01"),
    "hex": tuple("0123456789ABCDEF"),
}


class SubstringPoset:
    """A finite set of strings ordered by the substring relation.

    The relation is t <= u iff t occurs contiguously in u. On a set of
    distinct strings this is a partial order: comparable distinct
    elements have different lengths, so antisymmetry is automatic, and
    a substring of a substring is a substring.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[str]):
        self.elements = tuple(sorted(set(elements)))

    def leq(self, t: str, u: str) -> bool:
        return t in u

    def less(self, t: str, u: str) -> bool:
        return t != u and t in u

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t) -> bool:
        return t in set(self.elements)

    def __repr__(self) -> str:
        return f"SubstringPoset({len(self.elements)} elements)"


def substrings(s: str) -> SubstringPoset:
    """The poset of distinct proper nonempty substrings of s.

    Strings shorter than 2 characters have no proper substrings, so the
    poset is empty for them.

    >>> substrings("CTC").elements
    ('C', 'CT', 'T', 'TC')
    """
    found = {s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1)}
    found.discard(s)
    return SubstringPoset(found)


@dataclass(frozen=True)
class OrderComplex:
    """Chains of a poset as a simplicial complex plus the name table."""

    complex: SimplicialComplex
    names: tuple[str, ...]

    def name_of(self, vertex: int) -> str:
        return self.names[vertex]


def order_complex(poset: SubstringPoset, max_dim: int | None = None) -> OrderComplex:
    """All chains of the poset, as simplices on lexicographic vertex ids.

    A set of distinct substrings is a chain iff it is pairwise
    comparable, so chains are exactly the cliques of the comparability
    graph. With max_dim given, only chains of at most max_dim + 1
    elements are produced; anything needing deeper simplices (long runs
    of one letter, say) stays tractable that way.
    """
    names = poset.elements  # already sorted lexicographically
    n = len(names)
    comparable = [[poset.less(names[i], names[j]) or poset.less(names[j], names[i])
                   for j in range(n)] for i in range(n)]
    cap = None if max_dim is None else max_dim + 1
    chains: list[tuple[int, ...]] = []

    def grow(chain: tuple[int, ...], candidates: list[int]):
        for idx, v in enumerate(candidates):
            ext = chain + (v,)
            chains.append(ext)
            if cap is not None and len(ext) >= cap:
                continue
            rest = [u for u in candidates[idx + 1:] if comparable[v][u]]
            if rest:
                grow(ext, rest)

    grow((), list(range(n)))
    return OrderComplex(complex=SimplicialComplex(chains), names=names)


class WocType(enum.IntEnum):
    """How string weights and simplex weights are aggregated.

    Types 1 and 2 give a substring the lcm of its letter weights; types
    3 and 4 use the product. Types 1 and 3 give a simplex the lcm of its
    vertex weights; types 2 and 4 use the product.
    """

    TYPE_1 = 1
    TYPE_2 = 2
    TYPE_3 = 3
    TYPE_4 = 4

    @property
    def string_rule(self) -> str:
        return "lcm" if self in (WocType.TYPE_1, WocType.TYPE_2) else "product"

    @property
    def simplex_rule(self) -> str:
        return "lcm" if self in (WocType.TYPE_1, WocType.TYPE_3) else "product"


def _aggregate(rule: str, values) -> int:
    values = list(values)
    return lcm(*values) if rule == "lcm" else prod(values)


def check_letter_weights(letter_weights: Mapping[str, int], symbols: Iterable[str]) -> None:
    for sym in symbols:
        if sym not in letter_weights:
            raise UnweightedSymbol(sym)
        w = letter_weights[sym]
        if isinstance(w, bool) or not isinstance(w, int) or w < 1:
            raise ZeroLetterWeight(sym, w)


def build_woc(
    s: str,
    letter_weights: Mapping[str, int],
    woc_type: WocType | int,
    max_dim: int | None = None,
) -> tuple[WeightedComplex, tuple[str, ...]]:
    """The weighted order complex of the substring poset of s.

    Every symbol occurring in s needs a positive integer weight. The
    returned name table maps vertex ids back to substrings. The weight
    assignment is passed through full validation, so the divisibility
    rule is checked rather than trusted.
    """
    woc_type = WocType(woc_type)
    check_letter_weights(letter_weights, sorted(set(s)))
    oc = order_complex(substrings(s), max_dim=max_dim)
    string_weight = {
        name: _aggregate(woc_type.string_rule, (letter_weights[ch] for ch in name))
        for name in oc.names
    }
    weight = {
        sigma: _aggregate(woc_type.simplex_rule, (string_weight[oc.names[v]] for v in sigma))
        for sigma in oc.complex.simplices
    }
    return WeightedComplex(oc.complex, weight), oc.names


def sequence_fingerprint(
    s: str,
    letter_weights: Mapping[str, int],
    woc_type: WocType | int,
    max_dim: int | None = None,
) -> list[HomologyGroup]:
    """Weighted homology of the substring order complex of s.

    With max_dim given, the reported groups stop there but stay exact:
    the complex is built one dimension higher so the top group still
    sees its boundaries from above.
    """
    skeleton = None if max_dim is None else max_dim + 1
    K, _ = build_woc(s, letter_weights, woc_type, max_dim=skeleton)
    return homology(K, max_dim=max_dim)
