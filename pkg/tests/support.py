"""Independent brute-force reference implementations used across the tests.

Everything here recomputes results straight from first principles (box
enumeration, definition filters, indicator tables, product-rule recursion)
so the package code is checked against a second route, not against itself.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from jetlift import (
    CoefficientAssignment,
    FreeCell,
    LiftParams,
    LiftTable,
    construct,
    degree,
    free_cells,
    lookup_skew,
    multiply_monomials,
    sub_unit,
    support,
)


def brute_monomials(k: int, d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of degree <= d by box enumeration, sorted by
    ascending degree then descending lexicographic order."""
    found = [a for a in product(range(d + 1), repeat=k) if sum(a) <= d]
    return sorted(found, key=lambda a: (sum(a), tuple(-x for x in a)))


def brute_free_cells(r: int, k: int, s: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Free cells filtered straight from the membership condition."""
    out = []
    for axes in combinations(range(1, k + 1), s):
        for alpha in brute_monomials(k, r):
            d = sum(alpha)
            if s == 0 or d < r:
                keep = True
            else:
                sup = [j for j in range(1, k + 1) if alpha[j - 1] > 0]
                keep = bool(sup) and axes[-1] < max(sup)
            if keep:
                out.append((axes, alpha))
    return out


def zero_table(params: LiftParams) -> LiftTable:
    dim = params.algebra.dim
    return LiftTable(
        params, tuple(tuple(Fraction(0) for _ in range(dim)) for _ in params.rows)
    )


def indicator_table(params: LiftParams, axes, alpha) -> LiftTable:
    return zero_table(params).with_cell(axes, alpha, Fraction(1))


def detectable_cells(params: LiftParams) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Cells whose single-cell perturbation leaves the lift space.

    Perturbing cell z of a valid table stays valid exactly when the
    indicator table at z is itself valid, i.e. when z is free and the
    completed unit assignment at z has no other nonzero cell.  Those cells
    are excluded; everything else is detectable by the exhaustive checks.
    """
    free = set(free_cells(params))
    out = []
    for axes in params.rows:
        for alpha in params.algebra.basis:
            cell = FreeCell(axes, alpha)
            if cell in free:
                completed = construct(CoefficientAssignment.unit(params, cell))
                if completed != indicator_table(params, axes, alpha):
                    out.append((axes, alpha))
            else:
                out.append((axes, alpha))
    return out


def leibniz_eval(table: LiftTable, gammas, delta) -> Fraction:
    """Evaluate a *valid* table on basis monomials by product-rule recursion.

    Degree-one argument tuples are read straight off the table; a constant
    argument gives zero; otherwise one argument is split off one variable
    and the product rule rewrites the value through lower argument degrees,
    with truncating products contributing zero.  For tables that satisfy the
    checks this must agree with the package's direct expansion.
    """
    alg = table.params.algebra
    gammas = [tuple(g) for g in gammas]
    for t, g in enumerate(gammas):
        d = degree(g)
        if d == 1:
            continue
        if d == 0:
            return Fraction(0)
        j = support(g)[-1]
        rest = sub_unit(g, j)
        xj = tuple(int(i == j - 1) for i in range(alg.k))
        acc = Fraction(0)
        prod = multiply_monomials(alg, rest, delta)
        if prod is not None:
            acc += leibniz_eval(table, gammas[:t] + [xj] + gammas[t + 1 :], prod)
        prod = multiply_monomials(alg, xj, delta)
        if prod is not None:
            acc += leibniz_eval(table, gammas[:t] + [rest] + gammas[t + 1 :], prod)
        return acc
    axes = tuple(support(g)[0] for g in gammas)
    return lookup_skew(table, axes, delta)
