"""Evaluators for products of hook-like Schur functions ``s_(n + a, lambda)``.

Two routes are provided.  The direct route multiplies Schur functions with
the Littlewood-Richardson rule.  The reduced route expands every factor
along the first row of its Jacobi-Trudi matrix,

    s_(N, mu) = sum_i (-1)^i h_(N+i) det(M_{mu,i}),

so that the whole product becomes ``sum_beta G_beta(n) s_beta`` where each
``G_beta(n)`` is an integer combination of three-row homogeneous products.
The minors do not depend on ``n`` and are multiplied out once; per index
only closed-form Kostka numbers and one vectorized multiplication by each
small ``s_beta`` remain.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Sequence
from itertools import product

from .packed import DEFAULT_LAYOUT, PackedExpansion, combine, multiply_by_schur, three_row_h_product
from .partitions import Partition, prepend_row
from .schur import SchurExpansion, h_product, jacobi_trudi_hook_terms, schur_multiply

__all__ = ["hook_product_evaluator", "direct_hook_product", "reduced_hook_terms"]


def direct_hook_product(n: int, alpha: Sequence[int], lambdas: Sequence[Partition]) -> SchurExpansion:
    rows = [n + a for a, lam in zip(alpha, lambdas) if not lam]
    out = h_product(rows)
    for a, lam in zip(alpha, lambdas):
        if lam:
            out = schur_multiply(out, SchurExpansion.basis(prepend_row(n + a, lam)))
    return out


def reduced_hook_terms(alpha: Sequence[int], lambdas: Sequence[Partition]) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """``{beta: {row offsets: coefficient}}`` for the Jacobi-Trudi reduction.

    The product equals ``sum c * h_(n+o_1) ... h_(n+o_k) * s_beta`` summed
    over the table.  Offsets are stored sorted in decreasing order.
    """
    per_factor = [jacobi_trudi_hook_terms(lam) for lam in lambdas]
    table: dict[tuple, dict[tuple, int]] = defaultdict(lambda: defaultdict(int))
    for choice in product(*per_factor):
        sign = 1
        minor = SchurExpansion.basis(())
        offsets = []
        for a, (s, i, m) in zip(alpha, choice):
            sign *= s
            minor = schur_multiply(minor, m)
            offsets.append(a + i)
        key = tuple(sorted(offsets, reverse=True))
        for beta, c in minor.items():
            table[beta][key] += sign * c
    return {beta: {o: c for o, c in row.items() if c} for beta, row in table.items() if any(row.values())}


def _packed_evaluator(alpha, lambdas, layout) -> Callable[[int], PackedExpansion]:
    table = reduced_hook_terms(alpha, lambdas)
    n0 = sum(alpha) + sum(l.weight for l in lambdas)

    def ev(n: int) -> PackedExpansion:
        parts = []
        for beta, row in sorted(table.items()):
            g = combine(
                [(c, three_row_h_product(*(n + o for o in offs), layout=layout)) for offs, c in sorted(row.items())],
                3 * n + n0 - sum(beta),
                layout,
            )
            parts.append((1, multiply_by_schur(g, beta)))
        return combine(parts, 3 * n + n0, layout)

    return ev


def hook_product_evaluator(alpha: Sequence[int], lambdas: Sequence[Partition], engine: str = "auto", layout=DEFAULT_LAYOUT) -> Callable[[int], object]:
    alpha = tuple(alpha)
    lambdas = tuple(Partition(l) for l in lambdas)
    if engine == "auto":
        engine = "packed" if len(alpha) == 3 else "dict"
    if engine == "packed":
        if len(alpha) != 3:
            raise ValueError("the packed engine handles three factors")
        return _packed_evaluator(alpha, lambdas, layout)
    if engine == "dict":
        return lambda n: direct_hook_product(n, alpha, lambdas)
    raise ValueError(f"unknown engine {engine!r}")
