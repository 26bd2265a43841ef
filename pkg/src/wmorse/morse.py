"""Discrete Morse functions on weighted complexes.

A discrete Morse function assigns a rational value to every simplex so
that each cell has at most one "wrong" neighbour in each direction: at
most one coface one dimension up with a value not above its own, and at
most one face one dimension down with a value not below its own. No
cell can have both kinds of wrong neighbour at once; a cell with
neither is critical. Injectivity is not assumed anywhere.

Values are exact rationals (fractions.Fraction); no binary floats enter
any comparison.

The level complex K(c) collects every simplex that either has value at
most c or sits under a coface with value at most c. Sliding c across a
window free of critical values collapses K(b) down to K(a) one free
pair at a time; when every cell crossed is w-simple, each removed pair
has equal weights and weighted homology survives untouched. A window
that contains exactly one critical cell is handled by the certificate
in critical_window: collapse from above onto the level of the critical
cell, remove that cell, and collapse again below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .collapse import (
    CollapseStep,
    PreservationVerdict,
    Verdict,
    check_preservation,
    elementary_collapse,
    elementary_removal,
    RemovalReport,
)
from .complexes import Simplex, WeightedComplex, faces, simplex
from .errors import (
    ExtraCritical,
    HypothesisFailed,
    MorseViolation,
    NoValidAPrime,
    NotCritical,
    WSimpleFailed,
)


def to_fraction(value) -> Fraction:
    """Exact conversion of Morse values; binary floats are refused."""
    if isinstance(value, bool):
        raise ValueError("Morse values must be rational numbers, got a bool")
    if isinstance(value, float):
        raise ValueError(f"refusing float {value!r}; pass a string or a Fraction")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"cannot interpret {value!r} as a rational")


class MorseFunction:
    """A validated discrete Morse function on a fixed complex.

    Use validate_morse to construct one. Instances map simplices to
    Fractions and may carry values for more simplices than the complex
    they were validated on; restriction to a subcomplex stays valid
    because neighbour counts only shrink.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Simplex, Fraction]):
        self._values = {tuple(s): to_fraction(v) for s, v in values.items()}

    def __call__(self, sigma) -> Fraction:
        return self._values[tuple(sigma)]

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self._values

    def items(self):
        return sorted(self._values.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def distinct_values(self) -> list[Fraction]:
        return sorted(set(self._values.values()))

    def __repr__(self) -> str:
        return f"MorseFunction({len(self._values)} values)"


def _wrong_cofaces(K: WeightedComplex, f, sigma) -> list[Simplex]:
    fs = f(sigma)
    return [t for t in K.complex.cofacets(sigma) if f(t) <= fs]


def _wrong_faces(K: WeightedComplex, f, sigma) -> list[Simplex]:
    fs = f(sigma)
    return [g for g in faces(sigma) if f(g) >= fs]


def validate_morse(K: WeightedComplex, values: Mapping) -> MorseFunction:
    """Check the two discrete Morse conditions on every simplex of K.

    values must cover all of K (extra entries are allowed and kept).
    All violations are collected before raising, so the error lists
    every offending cell with its witnesses.
    """
    table = {simplex(s): to_fraction(v) for s, v in values.items()}
    missing = [s for s in K if s not in table]
    if missing:
        raise ValueError(f"no Morse value for {[list(s) for s in missing]}")
    f = lambda s: table[tuple(s)]
    violations = []
    for s in K:
        up = _wrong_cofaces(K, f, s)
        if len(up) > 1:
            violations.append((s, 1, tuple(up)))
        down = _wrong_faces(K, f, s)
        if len(down) > 1:
            violations.append((s, 2, tuple(down)))
    if violations:
        raise MorseViolation(violations)
    return MorseFunction(table)


@dataclass(frozen=True)
class CellClassification:
    """Critical cells, w-simple cells, and the pairing of the rest.

    pair maps each non-critical cell to its unique wrong neighbour (the
    low coface for cells failing the first condition, the high face for
    cells failing the second). A cell is w-simple when its weight is
    nonzero and every high face carries the same weight it does.
    """

    critical: frozenset[Simplex]
    w_simple: frozenset[Simplex]
    pair: Mapping[Simplex, Simplex]

    def is_critical(self, sigma) -> bool:
        return tuple(sigma) in self.critical

    def is_w_simple(self, sigma) -> bool:
        return tuple(sigma) in self.w_simple


def classify(K: WeightedComplex, f: MorseFunction) -> CellClassification:
    """Split the cells of K by the Morse function's local structure.

    Also checks, cell by cell, that no simplex has wrong neighbours in
    both directions at once; for a valid Morse function that situation
    is impossible, so hitting it means f was not validated on K.
    """
    critical = set()
    pair = {}
    w_simple = set()
    for s in K:
        up = _wrong_cofaces(K, f, s)
        down = _wrong_faces(K, f, s)
        assert not (up and down), f"{list(s)} has wrong neighbours both ways"
        if not up and not down:
            critical.add(s)
        else:
            pair[s] = up[0] if up else down[0]
        if K.weight(s) != 0 and all(K.weight(g) == K.weight(s) for g in down):
            w_simple.add(s)
    return CellClassification(
        critical=frozenset(critical),
        w_simple=frozenset(w_simple),
        pair=pair,
    )


@dataclass(frozen=True)
class LevelSubcomplex:
    """K(c): simplices with value at most c, closed under faces."""

    threshold: Fraction
    complex: WeightedComplex


def in_level(K: WeightedComplex, f: MorseFunction, c, sigma) -> bool:
    """Membership test for K(c) without building the whole level.

    A simplex belongs to K(c) when its own value is at most c or some
    proper coface's value is at most c.
    """
    c = to_fraction(c)
    sigma = tuple(sigma)
    if f(sigma) <= c:
        return True
    return any(f(t) <= c for t in K.complex.proper_cofaces(sigma))


def level_subcomplex(K: WeightedComplex, f: MorseFunction, c) -> LevelSubcomplex:
    c = to_fraction(c)
    seeds = [s for s in K if f(s) <= c]
    members = set(seeds)
    stack = list(seeds)
    while stack:
        s = stack.pop()
        for g in faces(s):
            if g not in members:
                members.add(g)
                stack.append(g)
    return LevelSubcomplex(threshold=c, complex=K.restrict(members))


@dataclass(frozen=True)
class MorseCollapse:
    """Certificate that K(b) collapses to K(a) through free pairs.

    steps and verdicts are aligned; every verdict is same-weight when
    the window's cells are all w-simple, which the construction checks
    before doing anything else.
    """

    a: Fraction
    b: Fraction
    start: WeightedComplex
    end: WeightedComplex
    steps: tuple[CollapseStep, ...]
    verdicts: tuple[PreservationVerdict, ...]

    @property
    def all_same_weight(self) -> bool:
        return all(v.verdict == Verdict.SAME_WEIGHT for v in self.verdicts)


def _window_cells(K: WeightedComplex, f: MorseFunction, a: Fraction, b: Fraction):
    return [s for s in K if a < f(s) <= b]


def morse_collapse(K: WeightedComplex, f: MorseFunction, a, b) -> MorseCollapse:
    """Collapse K(b) onto K(a) across a window with no critical values.

    Requires every cell with value in (a, b] to be non-critical and
    w-simple. Distinct values in the window are processed from the top;
    the cells gained at one value split into free pairs (each paired
    cell with its wrong neighbour), removed in order of decreasing pair
    dimension and then lexicographically. Every removal is checked to be
    an elementary collapse of the current complex, and every verdict is
    checked to be same-weight.
    """
    a, b = to_fraction(a), to_fraction(b)
    if not a < b:
        raise ValueError(f"need a < b, got {a} and {b}")
    cls = classify(K, f)
    window = _window_cells(K, f, a, b)
    for s in sorted(window, key=lambda s: (len(s), s)):
        if cls.is_critical(s):
            raise HypothesisFailed(s, "critical")
        if not cls.is_w_simple(s):
            raise HypothesisFailed(s, "not-w-simple")

    values = sorted({f(s) for s in window})
    start = level_subcomplex(K, f, b).complex
    current = start
    steps: list[CollapseStep] = []
    verdicts: list[PreservationVerdict] = []
    for i in range(len(values) - 1, -1, -1):
        v = values[i]
        lower = values[i - 1] if i > 0 else a
        target = level_subcomplex(K, f, lower).complex.simplices
        gained = current.simplices - target
        if not gained:
            continue
        pairs = []
        for t in gained:
            if f(t) != v:
                continue  # enters as the partner of a value-v coface
            down = _wrong_faces(K, f, t)
            if not down:
                continue  # this cell is the lower half of its pair
            g = down[0]
            assert g in gained, "pair partner must enter at the same value"
            pairs.append((g, t))
        assert 2 * len(pairs) == len(gained), "window cells must split into free pairs"
        pairs.sort(key=lambda p: (-len(p[1]), p[0]))
        for sigma, tau in pairs:
            next_complex, step = elementary_collapse(current, sigma)
            assert step.tau == tau
            verdict = check_preservation(current, step)
            assert verdict.verdict == Verdict.SAME_WEIGHT
            steps.append(step)
            verdicts.append(verdict)
            current = next_complex
        assert current.simplices == target
    return MorseCollapse(
        a=a, b=b, start=start, end=current,
        steps=tuple(steps), verdicts=tuple(verdicts),
    )


@dataclass(frozen=True)
class CriticalWindow:
    """Certificate for a window containing exactly one critical cell.

    The complex K(f(alpha)) is K(a_prime) plus the single maximal cell
    alpha; above and below, the window collapses freely. removal carries
    the homology relations between the two levels (None when alpha has
    weight zero, where the removal theorems say nothing).
    """

    alpha: Simplex
    a: Fraction
    b: Fraction
    a_prime: Fraction
    top: LevelSubcomplex         # K(f(alpha))
    below: LevelSubcomplex       # K(a_prime)
    collapse_above: MorseCollapse   # K(b) onto K(f(alpha))
    collapse_below: MorseCollapse   # K(a_prime) onto K(a)
    removal: RemovalReport | None


def critical_window(K: WeightedComplex, f: MorseFunction, alpha, a, b) -> CriticalWindow:
    """Isolate one critical cell and certify the sandwich around it.

    Preconditions: alpha is critical with value in (a, b], no other
    critical cell has a value in the window, and no other cell shares
    alpha's exact value (otherwise no threshold can split alpha off).
    Every non-critical cell in the window must be w-simple.
    """
    a, b = to_fraction(a), to_fraction(b)
    alpha = tuple(alpha)
    if alpha not in K:
        raise NotCritical(alpha)
    cls = classify(K, f)
    if not cls.is_critical(alpha):
        raise NotCritical(alpha)
    fa = f(alpha)
    if not (a < fa <= b):
        raise ValueError(f"f(alpha)={fa} is outside ({a}, {b}]")
    for s in sorted(_window_cells(K, f, a, b), key=lambda s: (len(s), s)):
        if s != alpha and cls.is_critical(s):
            raise ExtraCritical(s)

    lower_values = [f(s) for s in K if s != alpha and a <= f(s) < fa]
    for s in sorted(K, key=lambda s: (len(s), s)):
        if s != alpha and f(s) == fa:
            raise NoValidAPrime(s, fa)
    a_prime = max([a] + lower_values)

    top = level_subcomplex(K, f, fa)
    below = level_subcomplex(K, f, a_prime)
    assert below.complex.simplices == top.complex.simplices - {alpha}
    assert top.complex.is_maximal(alpha)

    for s in sorted(K, key=lambda s: (len(s), s)):
        v = f(s)
        if (a < v <= a_prime or fa < v <= b) and not cls.is_w_simple(s):
            raise WSimpleFailed(s)

    collapse_above = morse_collapse(K, f, fa, b) if fa < b else MorseCollapse(
        a=fa, b=b, start=top.complex, end=top.complex, steps=(), verdicts=(),
    )
    collapse_below = morse_collapse(K, f, a, a_prime) if a < a_prime else MorseCollapse(
        a=a, b=a_prime, start=below.complex, end=below.complex, steps=(), verdicts=(),
    )

    if K.weight(alpha) != 0:
        removed, report = elementary_removal(top.complex, alpha)
        assert removed.simplices == below.complex.simplices
    else:
        report = None

    return CriticalWindow(
        alpha=alpha, a=a, b=b, a_prime=a_prime,
        top=top, below=below,
        collapse_above=collapse_above,
        collapse_below=collapse_below,
        removal=report,
    )
