"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the package's own linear algebra:
determinants are expanded by Laplace cofactors, ranks are computed by
Gaussian elimination over Fractions, and invariant factors come from
the gcd-of-k-minors characterization. They are slow and only meant for
small matrices, which is exactly what makes them trustworthy checks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from wmorse import (
    SimplicialComplex,
    WeightedComplex,
    build_woc,
    validate_complex,
    validate_morse,
)
from wmorse.complexes import closure
from wmorse.snf import IntMatrix


# --- matrix oracles ---------------------------------------------------------

def laplace_det(rows) -> int:
    """Determinant by cofactor expansion; fine for tiny matrices."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * x * laplace_det(minor)
    return total


def minor_gcd_factors(rows, cols) -> tuple[int, ...]:
    """Invariant factors via gcds of k x k minors.

    The product of the first k invariant factors equals the gcd of all
    k x k minors, so the factors are successive quotients of those gcds.
    """
    m = len(rows)
    factors = []
    previous = 1
    for k in range(1, min(m, cols) + 1):
        g = 0
        for ris in itertools.combinations(range(m), k):
            for cis in itertools.combinations(range(cols), k):
                sub = [[rows[i][j] for j in cis] for i in ris]
                g = gcd(g, laplace_det(sub))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return tuple(factors)


def rational_rank(rows, cols) -> int:
    """Rank by Gaussian elimination over exact rationals."""
    M = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    col = 0
    while rank < len(M) and col < cols:
        pivot = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        pv = M[rank][col]
        for i in range(rank + 1, len(M)):
            if M[i][col] != 0:
                f = M[i][col] / pv
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


def lattice_contains(rows, cols, vector) -> bool:
    """Is the vector in the integer column span of the matrix?

    Appending the vector as an extra column can only grow the column
    lattice; it stays the same iff the rank and the product of all
    invariant factors both stay the same.
    """
    augmented = [r + [v] for r, v in zip(rows, vector)]
    if rational_rank(rows, cols) != rational_rank(augmented, cols + 1):
        return False
    before = minor_gcd_factors(rows, cols)
    after = minor_gcd_factors(augmented, cols + 1)
    prod_before = prod_after = 1
    for d in before:
        prod_before *= d
    for d in after:
        prod_after *= d
    return prod_before == prod_after


def class_order_oracle(rows, cols, z):
    """Order of [z] modulo the column lattice: 0, a finite k, or None.

    None encodes infinite order. Brute force over divisors of the
    largest invariant factor, which bounds the torsion exponent.
    """
    if lattice_contains(rows, cols, z):
        return 0
    augmented = [r + [v] for r, v in zip(rows, z)]
    if rational_rank(rows, cols) != rational_rank(augmented, cols + 1):
        return None
    factors = minor_gcd_factors(rows, cols)
    exponent = factors[-1] if factors else 1
    for k in sorted(d for d in range(2, exponent + 1) if exponent % d == 0):
        if lattice_contains(rows, cols, [k * v for v in z]):
            return k
    raise AssertionError("order must divide the torsion exponent")


def matrix_rows(A: IntMatrix) -> list[list[int]]:
    return A.to_rows()


# --- complex builders --------------------------------------------------------

def constant_complex(maximal, weight=1) -> WeightedComplex:
    sims = closure(maximal)
    return WeightedComplex(SimplicialComplex(sims), {s: weight for s in sims})


def full_simplex(n, weight=1) -> WeightedComplex:
    return constant_complex([tuple(range(n + 1))], weight)


def sphere(n, weight=1) -> WeightedComplex:
    """Boundary of the (n+1)-simplex, a triangulated n-sphere."""
    top = tuple(range(n + 2))
    facets = [top[:i] + top[i + 1:] for i in range(len(top))]
    return constant_complex(facets, weight)


def filled_triangle() -> WeightedComplex:
    """The running example: one 2-cell with mixed weights."""
    return validate_complex([
        ([0], 1), ([1], 1), ([2], 2),
        ([0, 1], 2), ([0, 2], 2), ([1, 2], 4),
        ([0, 1, 2], 4),
    ])


def hollow_triangle_w2() -> WeightedComplex:
    """Triangle boundary, vertices weight 1, edges weight 2."""
    return validate_complex([
        ([0], 1), ([1], 1), ([2], 1),
        ([0, 1], 2), ([0, 2], 2), ([1, 2], 2),
    ])


def weighted_disk(top_weight) -> WeightedComplex:
    """Full 2-simplex, constant weight 1 except the 2-cell."""
    return validate_complex([
        ([0], 1), ([1], 1), ([2], 1),
        ([0, 1], 1), ([0, 2], 1), ([1, 2], 1),
        ([0, 1, 2], top_weight),
    ])


# --- Morse builders -----------------------------------------------------------

def xyyy_setup(a=6, b=10):
    """The xyyy order complex with product/lcm weights and its Morse function.

    Returns (K, names, f, cell) where cell("x", "xy") resolves substring
    names to a simplex.
    """
    K, names = build_woc("xyyy", {"x": a, "y": b}, 3)
    ids = {name: i for i, name in enumerate(names)}

    def cell(*subs):
        return tuple(sorted(ids[s] for s in subs))

    values = {
        cell("x"): 1, cell("xy"): 1, cell("y"): 1,
        cell("x", "xy"): 2, cell("xy", "y"): 2,
        cell("xyy"): 3, cell("yy"): 3, cell("xy", "xyy"): 3, cell("y", "yy"): 3,
        cell("yyy"): 4, cell("yy", "yyy"): 4, cell("xyy", "y"): 4,
        cell("y", "xy", "xyy"): 4,
        cell("x", "xyy"): 5, cell("xyy", "yy"): 5, cell("y", "yyy"): 5,
        cell("x", "xy", "xyy"): 5, cell("y", "yy", "xyy"): 5,
        cell("y", "yy", "yyy"): 5,
    }
    f = validate_morse(K, values)
    return K, names, f, cell


def xn_morse_values(n):
    """Morse values for the substring complex of x^n (a full simplex).

    Vertex i stands for the run x^(i+1); vertex 0 gets value 1. The
    simplices avoiding vertex 0 are ordered by dimension and then
    lexicographically and receive the successive unused integers; every
    simplex containing vertex 0 (other than the vertex itself) copies
    the value of the simplex with vertex 0 dropped.
    """
    assert n >= 2
    m = n - 1  # vertex count
    values = {(0,): 1}
    nxt = 2
    for k in range(0, m - 1):
        for combo in itertools.combinations(range(1, m), k + 1):
            values[combo] = nxt
            nxt += 1
    for combo in list(values):
        if combo != (0,):
            values[(0,) + combo] = values[combo]
    return values


def xn_setup(n, a=7):
    K, names = build_woc("x" * n, {"x": a}, 3)
    values = xn_morse_values(n)
    f = validate_morse(K, values)
    return K, names, f


# --- misc ----------------------------------------------------------------------

def groups_equal_padded(left, right) -> bool:
    """Compare homology lists, treating missing dimensions as trivial."""
    from wmorse import group_at

    for k in range(max(len(left), len(right))):
        if group_at(left, k) != group_at(right, k):
            return False
    return True
