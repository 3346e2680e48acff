"""Vectorized Schur expansions with partitions packed into int64 keys.

Bulk sequence evaluation (thousands of products of degree ~100) is too slow
with one Python dict operation per tableau.  Here a partition with at most
``rows`` parts, each below ``2**bits``, is packed into one integer with the
first part in the most significant field.  Componentwise addition of
partitions is then integer addition, and ascending key order is
lexicographic order on parts.

Only the operations the sequence machinery needs are provided: sums, shifts,
length truncation, the closed-form three-row homogeneous product and
multiplication by a small Schur function through precomputed
Littlewood-Richardson displacement patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegreeMismatch
from .partitions import Partition
from .schur import SchurExpansion


@dataclass(frozen=True)
class Layout:
    rows: int = 9
    bits: int = 7

    def __post_init__(self):
        if self.rows * self.bits > 63:
            raise ValueError("layout does not fit in a signed 64-bit key")

    @property
    def max_part(self) -> int:
        return (1 << self.bits) - 1

    @property
    def shifts(self) -> np.ndarray:
        return np.array([self.bits * (self.rows - 1 - i) for i in range(self.rows)], dtype=np.int64)

    def encode(self, parts) -> int:
        parts = tuple(parts)
        if len(parts) > self.rows or (parts and max(parts) > self.max_part):
            raise OverflowError(f"partition {parts} does not fit layout {self}")
        key = 0
        for i, p in enumerate(parts):
            key |= p << (self.bits * (self.rows - 1 - i))
        return key

    def encode_many(self, parts: np.ndarray) -> np.ndarray:
        """Rows of a (N, r) integer array to keys, r <= rows."""
        parts = np.asarray(parts, dtype=np.int64)
        if parts.size and (parts.max() > self.max_part or parts.shape[1] > self.rows):
            raise OverflowError(f"parts do not fit layout {self}")
        return (parts << self.shifts[: parts.shape[1]]).sum(axis=1)

    def decode_many(self, keys: np.ndarray) -> np.ndarray:
        return (keys[:, None] >> self.shifts[None, :]) & self.max_part

    def decode(self, key: int) -> tuple[int, ...]:
        parts = [(int(key) >> int(s)) & self.max_part for s in self.shifts]
        while parts and parts[-1] == 0:
            parts.pop()
        return tuple(parts)


DEFAULT_LAYOUT = Layout()


def _reduce(keys: np.ndarray, coefs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if keys.size == 0:
        return keys, coefs
    order = np.argsort(keys, kind="stable")
    keys, coefs = keys[order], coefs[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    keys = keys[starts]
    coefs = np.add.reduceat(coefs, starts)
    nz = coefs != 0
    return keys[nz], coefs[nz]


class PackedExpansion:
    """Homogeneous Schur expansion stored as sorted key/coefficient arrays.

    Supports the same ``+``, ``-``, ``shift`` and ``is_zero`` surface that the
    sequence machinery uses on :class:`~schurseq.schur.SchurExpansion`.
    """

    __slots__ = ("degree", "keys", "coefs", "layout")

    def __init__(self, degree: int, keys: np.ndarray, coefs: np.ndarray, layout: Layout = DEFAULT_LAYOUT, *, reduced: bool = False):
        if degree > layout.max_part:
            # a single part may be as long as the degree
            raise OverflowError(f"degree {degree} does not fit the {layout.bits}-bit part fields")
        self.degree = degree
        self.layout = layout
        if not reduced:
            keys, coefs = _reduce(np.asarray(keys, dtype=np.int64), np.asarray(coefs, dtype=np.int64))
        self.keys = keys
        self.coefs = coefs

    @classmethod
    def zero(cls, degree: int, layout: Layout = DEFAULT_LAYOUT) -> "PackedExpansion":
        empty = np.zeros(0, dtype=np.int64)
        return cls(degree, empty, empty.copy(), layout, reduced=True)

    @classmethod
    def from_expansion(cls, f: SchurExpansion, layout: Layout = DEFAULT_LAYOUT) -> "PackedExpansion":
        items = list(f.items())
        keys = np.array([layout.encode(lam) for lam, _ in items], dtype=np.int64)
        coefs = np.array([c for _, c in items], dtype=np.int64)
        return cls(f.degree, keys, coefs, layout)

    def to_expansion(self) -> SchurExpansion:
        parts = self.layout.decode_many(self.keys)
        terms = {}
        for row, c in zip(parts.tolist(), self.coefs.tolist()):
            while row and row[-1] == 0:
                row.pop()
            terms[tuple(row)] = c
        return SchurExpansion(self.degree, terms, _trusted=True)

    def __len__(self) -> int:
        return int(self.keys.size)

    def is_zero(self) -> bool:
        return self.keys.size == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, PackedExpansion):
            return (
                self.degree == other.degree
                and self.layout == other.layout
                and np.array_equal(self.keys, other.keys)
                and np.array_equal(self.coefs, other.coefs)
            )
        return NotImplemented

    __hash__ = None

    def _check(self, other: "PackedExpansion") -> None:
        if self.degree != other.degree:
            raise DegreeMismatch(f"cannot combine degree {self.degree} with degree {other.degree}")
        if self.layout != other.layout:
            raise ValueError("layouts differ")

    def __add__(self, other: "PackedExpansion") -> "PackedExpansion":
        self._check(other)
        return PackedExpansion(
            self.degree, np.concatenate([self.keys, other.keys]), np.concatenate([self.coefs, other.coefs]), self.layout
        )

    def __sub__(self, other: "PackedExpansion") -> "PackedExpansion":
        self._check(other)
        return PackedExpansion(
            self.degree, np.concatenate([self.keys, other.keys]), np.concatenate([self.coefs, -other.coefs]), self.layout
        )

    def __neg__(self) -> "PackedExpansion":
        return PackedExpansion(self.degree, self.keys, -self.coefs, self.layout, reduced=True)

    def scale(self, c: int) -> "PackedExpansion":
        if c == 0:
            return PackedExpansion.zero(self.degree, self.layout)
        return PackedExpansion(self.degree, self.keys, self.coefs * c, self.layout, reduced=True)

    def shift(self, lam) -> "PackedExpansion":
        lam = tuple(Partition(lam))
        if not lam:
            return self
        # parts never exceed the degree, and the degree is range-checked
        return PackedExpansion(
            self.degree + sum(lam), self.keys + self.layout.encode(lam), self.coefs, self.layout, reduced=True
        )

    def restrict_length(self, l: int) -> "PackedExpansion":
        if l >= self.layout.rows:
            return self
        low_bits = self.layout.bits * (self.layout.rows - l)
        mask = (self.keys & ((1 << low_bits) - 1)) == 0
        return PackedExpansion(self.degree, self.keys[mask], self.coefs[mask], self.layout, reduced=True)

    def coefficient(self, lam) -> int:
        key = self.layout.encode(tuple(lam))
        i = np.searchsorted(self.keys, key)
        if i < self.keys.size and self.keys[i] == key:
            return int(self.coefs[i])
        return 0


def combine(pairs, degree: int, layout: Layout = DEFAULT_LAYOUT) -> PackedExpansion:
    """Integer linear combination ``sum(c * f)`` in one reduction pass."""
    keys, coefs = [], []
    for c, f in pairs:
        if f.degree != degree:
            raise DegreeMismatch(f"expected degree {degree}, got {f.degree}")
        if c and f.keys.size:
            keys.append(f.keys)
            coefs.append(f.coefs * c)
    if not keys:
        return PackedExpansion.zero(degree, layout)
    return PackedExpansion(degree, np.concatenate(keys), np.concatenate(coefs), layout)


@lru_cache(maxsize=4096)
def three_row_h_product(a: int, b: int, c: int, layout: Layout = DEFAULT_LAYOUT) -> PackedExpansion:
    """h_a h_b h_c, with Kostka numbers in closed form.

    A tableau of content (a, b, c) is fixed by the number t of 2s in row 2:
    row 1 holds a ones, b - t twos and nu_1 - a - b + t threes; row 2 holds
    t twos and nu_2 - t threes; row 3 holds nu_3 threes.  Counting the
    admissible t gives the coefficient of s_nu directly.
    """
    if min(a, b, c) < 0:
        return PackedExpansion.zero(max(a + b + c, 0), layout)
    d = a + b + c
    nu3 = np.arange(0, d // 3 + 1)
    parts = []
    for v3 in nu3.tolist():
        rest = d - v3
        v2 = np.arange(v3, rest // 2 + 1)
        v1 = rest - v2
        parts.append(np.stack([v1, v2, np.full_like(v2, v3)], axis=1))
    nu = np.concatenate(parts) if parts else np.zeros((0, 3), dtype=np.int64)
    v1, v2, v3 = nu[:, 0], nu[:, 1], nu[:, 2]
    hi = np.minimum.reduce([np.full_like(v2, b), v2, np.full_like(v2, a), a + b - v2])
    lo = np.maximum.reduce([np.zeros_like(v2), a + b - v1, v3])
    count = np.maximum(hi - lo + 1, 0)
    keep = count > 0
    return PackedExpansion(d, layout.encode_many(nu[keep]), count[keep], layout)


@lru_cache(maxsize=None)
def lr_patterns(beta: tuple[int, ...], in_rows: int, out_rows: int):
    """Displacement patterns for multiplying by s_beta.

    Each Littlewood-Richardson filling of nu / kappa with content beta is
    described by the number of cells it adds to every row (``tau``) and by
    the minimal gaps ``kappa_{r-1} - kappa_r`` it needs (``need``); the filling
    exists for a given kappa iff kappa's gaps dominate ``need``.  Returns
    arrays ``(tau, need, multiplicity)`` with identical (tau, need) merged.
    """
    rows = out_rows
    counts: dict[tuple, int] = {}
    table = [[0] * len(beta) for _ in range(rows)]

    def need_of() -> tuple[int, ...]:
        need = [0] * rows
        for r in range(1, rows):
            run_here, run_above, best = 0, 0, 0
            for i in range(len(beta)):
                run_here += table[r][i]
                best = max(best, run_here - run_above)
                run_above += table[r - 1][i]
            need[r] = best
        return tuple(need)

    def place(letter: int):
        if letter == len(beta):
            tau = tuple(sum(row) for row in table)
            key = (tau, need_of())
            counts[key] = counts.get(key, 0) + 1
            return
        # letter `letter` may reach row in_rows + letter at the deepest
        last = min(rows - 1, in_rows + letter)
        allow = [0] * rows
        if letter == 0:
            for r in range(last + 1):
                allow[r] = beta[0]
        else:
            run = 0
            for r in range(1, last + 1):
                run += table[r - 1][letter - 1]
                allow[r] = run
        yield_rows(letter, 0, beta[letter], 0, allow, last)

    def yield_rows(letter, r, remaining, used, allow, last):
        if remaining == 0:
            place(letter + 1)
            return
        if r > last:
            return
        # cumulative lattice bound: used + x <= allow[r] (prefix of previous letter above)
        hi = min(remaining, allow[r] - used) if letter else remaining
        for x in range(hi, -1, -1):
            table[r][letter] = x
            yield_rows(letter, r + 1, remaining - x, used + x, allow, last)
        table[r][letter] = 0

    if not beta:
        return np.zeros((1, rows), dtype=np.int64), np.zeros((1, rows), dtype=np.int64), np.ones(1, dtype=np.int64)
    place(0)
    items = sorted(counts.items())
    tau = np.array([k[0] for k, _ in items], dtype=np.int64)
    need = np.array([k[1] for k, _ in items], dtype=np.int64)
    mult = np.array([v for _, v in items], dtype=np.int64)
    return tau, need, mult


def multiply_by_schur(f: PackedExpansion, beta) -> PackedExpansion:
    """f * s_beta through the displacement patterns of beta."""
    beta = tuple(Partition(beta))
    layout = f.layout
    if not beta:
        return f
    degree = f.degree + sum(beta)
    if f.is_zero():
        return PackedExpansion.zero(degree, layout)
    parts = layout.decode_many(f.keys)
    in_rows = int((parts > 0).sum(axis=1).max())
    out_rows = in_rows + len(beta)
    if out_rows > layout.rows:
        raise OverflowError(f"product may need {out_rows} rows, layout has {layout.rows}")
    tau, need, mult = lr_patterns(beta, in_rows, out_rows)
    padded = np.zeros((parts.shape[0], out_rows + 1), dtype=np.int64)
    padded[:, :in_rows] = parts[:, :in_rows]
    gaps = padded[:, :out_rows - 1] - padded[:, 1:out_rows]  # gap above row r is gaps[:, r-1]
    uniq_need, which = np.unique(need[:, 1:], axis=0, return_inverse=True)
    which = np.asarray(which).reshape(-1)
    ok_u = (gaps[:, None, :] >= uniq_need[None, :, :]).all(axis=2)
    ok = ok_u[:, which]
    ki, pi = np.nonzero(ok)
    tau_keys = layout.encode_many(tau)
    keys = f.keys[ki] + tau_keys[pi]
    coefs = f.coefs[ki] * mult[pi]
    return PackedExpansion(degree, keys, coefs, layout)
