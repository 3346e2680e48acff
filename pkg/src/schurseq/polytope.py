"""Lattice points of the staircase polytope P_{k,n,alpha} and related tools.

A semistandard tableau with entries in {1..k} is recorded as a staircase
array ``a[i][j]`` (1-based: ``1 <= i <= k``, ``1 <= j <= k - i + 1``) where
``a[i][j]`` counts the entries equal to ``i + j - 1`` in row ``i``.  The
content condition becomes "the m-th antidiagonal sums to the m-th weight"
and column strictness becomes "row prefix sums are dominated by the prefix
sums of the row above".  The Schur expansion of a product of one-row Schur
functions is then a sum of ``s_(row sums)`` over lattice points.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import FaceNotDefinedForK, NegativeWeight, ShapeMismatch, UnsortedAlpha
from .partitions import Partition, _add
from .schur import SchurExpansion, _distribute, h_product, restrict_length

MAX_K = 5
FACES = ("D1K", "D21", "D211_SECOND", "D22")

__all__ = [
    "PartialMatrix",
    "CentreTableau",
    "FACES",
    "is_member",
    "enumerate_points",
    "lattice_points",
    "homogeneous_product",
    "face_filter",
    "affine_witnesses",
    "affine_dimension",
    "enumerate_centres",
    "product_with_border",
    "border_product",
]


@dataclass(frozen=True, order=True)
class PartialMatrix:
    """Staircase integer array; ``rows[i-1]`` has ``k - i + 1`` entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        k = len(rows)
        for i, r in enumerate(rows):
            if len(r) != k - i:
                raise ShapeMismatch(f"row {i + 1} of a staircase with k={k} needs {k - i} entries, got {len(r)}")

    @classmethod
    def from_nested(cls, rows: Iterable[Iterable[int]]) -> "PartialMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def row_sum(self, i: int) -> int:
        return sum(self.rows[i - 1])

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def shape(self) -> Partition:
        return Partition(self.row_sums())

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class CentreTableau:
    """Filling of the first ``beta_1`` columns below and beside ``beta``.

    ``filling[i]`` lists the entries of row ``i + 1`` that lie outside
    ``beta``, left to right.
    """

    beta: Partition
    shape: Partition
    filling: tuple[tuple[int, ...], ...]
    symbol_counts: tuple[int, ...] = field(compare=False)

    def entry(self, i: int, j: int) -> int | None:
        """Entry in row ``i``, column ``j`` (1-based); ``None`` for a cell of beta or outside."""
        inner = self.beta[i - 1] if i <= len(self.beta) else 0
        if i > len(self.shape) or j > self.shape[i - 1] or j <= inner:
            return None
        return self.filling[i - 1][j - inner - 1]

    def full_rows(self) -> int:
        """Number of rows of the shape reaching the full width ``beta_1``."""
        b1 = self.beta[0] if self.beta else 0
        return sum(1 for p in self.shape if p == b1)

    def c(self, i: int) -> int:
        return self.symbol_counts[i - 1]


def _check_alpha(alpha: Sequence[int], k: int | None = None) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if k is not None and len(alpha) != k:
        raise ShapeMismatch(f"expected {k} weights, got {len(alpha)}")
    if any(a < 0 for a in alpha) or any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise UnsortedAlpha(f"alpha must be nonincreasing and nonnegative, got {alpha}")
    if len(alpha) > MAX_K:
        raise ShapeMismatch(f"k is capped at {MAX_K}")
    return alpha


def is_member(A: PartialMatrix, n: int, alpha: Sequence[int]) -> bool:
    alpha = _check_alpha(alpha)
    if A.k != len(alpha):
        raise ShapeMismatch(f"matrix has k={A.k} but alpha has {len(alpha)} entries")
    k = A.k
    w = [n + a for a in alpha]
    for i in range(1, k + 1):
        for j in range(1, k - i + 2):
            if not 0 <= A[i, j] <= w[i + j - 2]:
                return False
    for i in range(2, k + 1):
        here = above = 0
        for m in range(1, k - i + 2):
            here += A[i, m]
            above += A[i - 1, m]
            if here > above:
                return False
    for m in range(1, k + 1):
        if sum(A[i, m + 1 - i] for i in range(1, m + 1)) != w[m - 1]:
            return False
    return True


def lattice_points(weights: Sequence[int], allowed: Callable[[int, int], bool] | None = None) -> list[PartialMatrix]:
    """Staircase arrays with antidiagonal sums ``weights``, in row-major lex order.

    ``weights`` need not be sorted.  ``allowed(i, j)`` (1-based) may force
    entries to zero, which is how flagged tableaux are counted.
    """
    k = len(weights)
    if any(w < 0 for w in weights):
        raise NegativeWeight(f"weights must be nonnegative, got {tuple(weights)}")
    grid = [[0] * (k - i) for i in range(k)]
    prefix = [[0] * (k - i + 1) for i in range(k)]  # prefix[i][j] = sum of grid[i][:j]
    out: list[PartialMatrix] = []

    def fill(m: int):
        if m == k:
            out.append(PartialMatrix(tuple(tuple(r) for r in grid)))
            return
        # cells of antidiagonal m (0-based): row i, column m - i
        caps = []
        for i in range(m + 1):
            j = m - i
            if allowed is not None and not allowed(i + 1, j + 1):
                caps.append(0)
            elif i == 0:
                caps.append(weights[m])
            else:
                caps.append(max(prefix[i - 1][j + 1] - prefix[i][j], 0))
        for parts in _distribute(weights[m], caps):
            for i, x in enumerate(parts):
                j = m - i
                grid[i][j] = x
                prefix[i][j + 1] = prefix[i][j] + x
            fill(m + 1)

    fill(0)
    out.sort(key=PartialMatrix.flat)
    return out


def enumerate_points(k: int, n: int, alpha: Sequence[int]) -> list[PartialMatrix]:
    alpha = _check_alpha(alpha, k)
    return lattice_points([n + a for a in alpha])


def _sum_shapes(points: Iterable[PartialMatrix], degree: int) -> SchurExpansion:
    terms: dict[tuple, int] = {}
    for p in points:
        lam = tuple(x for x in p.row_sums() if x)
        terms[lam] = terms.get(lam, 0) + 1
    return SchurExpansion(degree, terms)


def homogeneous_product(k: int, n: int, alpha: Sequence[int]) -> SchurExpansion:
    """``s_(n+alpha_1) ... s_(n+alpha_k)`` as a sum over lattice points."""
    alpha = _check_alpha(alpha, k)
    return _sum_shapes(enumerate_points(k, n, alpha), k * n + sum(alpha))


def _face_predicate(face_id: str, k: int) -> Callable[[PartialMatrix], bool]:
    if face_id == "D1K":
        return lambda a: a[k, 1] == 0
    if face_id == "D21":
        if k < 2:
            raise FaceNotDefinedForK("D21 needs k >= 2")
        return lambda a: a[1, k] == 0 or a[k - 1, 1] == 0
    if face_id in ("D211_SECOND", "D22") and k != 4:
        raise FaceNotDefinedForK(f"{face_id} is only defined for k = 4")
    if face_id == "D211_SECOND":
        return lambda a: (
            a[1, 3] == 0
            or a[3, 2] == 0
            or a[3, 1] == a[2, 1]
            or a[2, 1] + a[2, 2] + a[2, 3] == a[1, 1] + a[1, 2] + a[1, 3]
        )
    if face_id == "D22":
        return lambda a: (
            a[1, 2] == 0
            or a[2, 2] == 0
            or a[2, 3] == 0
            or a[2, 1] + a[2, 2] == a[1, 1] + a[1, 2]
            or a[3, 1] + a[3, 2] == a[2, 1] + a[2, 2]
        )
    raise FaceNotDefinedForK(f"unknown face {face_id!r}; expected one of {', '.join(FACES)}")


def face_filter(points: Sequence[PartialMatrix], face_id: str) -> list[PartialMatrix]:
    if not points:
        return []
    k = points[0].k
    if any(p.k != k for p in points):
        raise ShapeMismatch("all points must share k")
    keep = _face_predicate(face_id, k)
    return [p for p in points if keep(p)]


def affine_witnesses(k: int, n: int, alpha: Sequence[int], *, literal: bool = False) -> list[PartialMatrix]:
    """``C(k,2) + 1`` affinely independent lattice points of P_{k,n,alpha}.

    Every point starts from the tableau whose first column carries all the
    weights.  For each column ``c >= 2`` of the staircase and each height
    ``h``, the run of weights ``n + alpha_c, ..., n + alpha_{c+h-1}`` is
    stacked in column ``c`` (rows ``1..h``), the weights before ``c`` stay in
    the first column and the weights after the run sit in row 1.  Each such
    point uses one cell (row ``h``, column ``c``) that no earlier point uses,
    so the family is independent.

    ``literal=True`` instead slides the tail of row 1 down the antidiagonals
    for every split ``i`` exactly as in the classical construction.  Those
    slide steps repeat across splits, so for ``k >= 4`` that family spans
    less than ``C(k,2)`` dimensions; it is kept for comparison.
    """
    alpha = _check_alpha(alpha, k)
    if n < 1:
        raise ValueError("affine witnesses need n >= 1")
    w = [n + a for a in alpha]  # w[m-1] = n + alpha_m

    def blank():
        return [[0] * (k - r) for r in range(k)]

    pts = []
    g = blank()
    for i in range(k):
        g[i][0] = w[i]
    pts.append(g)
    if literal:
        for i in range(1, k):
            for s in range(i):
                g = blank()
                g[0][0] = w[0]
                for j in range(k - i + 1, k - s + 1):
                    g[0][j - 1] = w[j - 1]
                for r in range(2, k - i + 1):
                    g[r - 1][0] = w[r - 1]
                col = k - s
                for t in range(1, s + 1):
                    g[t][col - 1] = w[col + t - 1]
                pts.append(g)
    else:
        for c in range(2, k + 1):
            for h in range(1, k - c + 2):
                g = blank()
                for r in range(1, c):
                    g[r - 1][0] = w[r - 1]
                for t in range(1, h + 1):
                    g[t - 1][c - 1] = w[c + t - 2]
                for m in range(c + h, k + 1):
                    g[0][m - 1] = w[m - 1]
                pts.append(g)
    return [PartialMatrix.from_nested(p) for p in pts]


def affine_dimension(points: Sequence[PartialMatrix]) -> int:
    """Exact rank of the difference vectors ``p - p_0`` over the rationals."""
    if not points:
        return -1
    base = points[0].flat()
    rows = [[Fraction(x - y) for x, y in zip(p.flat(), base)] for p in points[1:]]
    rank = 0
    cols = len(base)
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                factor = rows[r][c] / rows[rank][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _skew_fillings(outer: tuple[int, ...], inner: tuple[int, ...], k: int):
    cells = [
        (i, j)
        for i in range(len(outer))
        for j in range(inner[i] if i < len(inner) else 0, outer[i])
    ]
    fill: dict[tuple[int, int], int] = {}

    def rec(t: int):
        if t == len(cells):
            yield dict(fill)
            return
        i, j = cells[t]
        lo = max(fill.get((i, j - 1), 1), fill.get((i - 1, j), 0) + 1)
        for v in range(lo, k + 1):
            fill[(i, j)] = v
            yield from rec(t + 1)
        fill.pop((i, j), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def _centres(k: int, beta: tuple[int, ...]) -> tuple[CentreTableau, ...]:
    b1 = beta[0] if beta else 0
    max_rows = len(beta) + k  # column strictness bounds the depth

    def shapes(i: int, prev: int, cur: list[int]):
        if i == max_rows:
            yield tuple(p for p in cur if p)
            return
        lo = beta[i] if i < len(beta) else 0
        for v in range(prev, lo - 1, -1):
            yield from shapes(i + 1, v, cur + [v])

    out = []
    for sigma in sorted(set(shapes(0, b1, []))):
        for fill in _skew_fillings(sigma, beta, k):
            counts = [0] * k
            for v in fill.values():
                counts[v - 1] += 1
            rows = tuple(
                tuple(fill[(i, j)] for j in range(beta[i] if i < len(beta) else 0, sigma[i]))
                for i in range(len(sigma))
            )
            out.append(CentreTableau(Partition(beta), Partition(sigma), rows, tuple(counts)))
    return tuple(out)


def enumerate_centres(k: int, beta: Iterable[int]) -> list[CentreTableau]:
    """All possible centres of tableaux of shape nu / beta with entries in {1..k}."""
    if k < 1:
        raise ValueError("k must be positive")
    return list(_centres(k, tuple(Partition(beta))))


def border_product(weights: Sequence[int], beta: Iterable[int], *, literal: bool = False, strict: bool = False) -> SchurExpansion:
    """``h_{w_1} ... h_{w_k} s_beta`` through the centre/arm decomposition.

    A tableau of shape nu / beta splits into its centre (columns up to
    beta_1) and its arms (the remaining cells of the rows where the centre
    is full).  The arms form a tableau of straight shape with the leftover
    content, and each arm row must start at or above the centre entry it
    touches.  That flag is what ``literal=True`` drops: then every arm
    tableau with at most ``full_rows`` rows is counted, which reproduces the
    unflagged sum and over-counts once k >= 3.

    Weights ``w_i - c(i)`` that go negative make a centre impossible and are
    skipped, unless ``strict`` asks for :class:`NegativeWeight` instead.
    """
    weights = tuple(int(w) for w in weights)
    beta = tuple(Partition(beta))
    k = len(weights)
    b1 = beta[0] if beta else 0
    degree = sum(weights) + sum(beta)
    if not beta:
        return h_product(weights) if k else SchurExpansion.basis(())
    terms: dict[tuple, int] = {}
    for c in _centres(k, beta):
        rest = [w - x for w, x in zip(weights, c.symbol_counts)]
        if min(rest) < 0:
            if strict:
                raise NegativeWeight(f"weight {min(rest)} left after removing centre {c.filling}")
            continue
        full = c.full_rows()
        sigma = tuple(c.shape)
        if literal:
            arms, _ = restrict_length(h_product(rest), full)
            items = arms.items()
        else:
            flags = []
            for i in range(1, k + 1):
                e = c.entry(i, b1) if i <= full else None
                flags.append(e or 0)
            pts = lattice_points(
                rest,
                lambda i, j: i <= full and i + j - 1 >= flags[i - 1],
            )
            items = _sum_shapes(pts, sum(rest)).items()
        for lam, coef in items:
            key = _add(lam, sigma)
            terms[key] = terms.get(key, 0) + coef
    return SchurExpansion(degree, terms)


def product_with_border(k: int, n: int, alpha: Sequence[int], beta: Iterable[int], *, literal: bool = False, strict: bool = False) -> SchurExpansion:
    """``s_(n+alpha_1) ... s_(n+alpha_k) s_beta`` summed over centres."""
    alpha = _check_alpha(alpha, k)
    return border_product([n + a for a in alpha], beta, literal=literal, strict=strict)
