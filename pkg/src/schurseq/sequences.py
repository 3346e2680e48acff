"""Sequences of symmetric functions and the difference operators acting on them.

A :class:`SequenceFamily` is a lazily evaluated, memoized map
``n -> f_n`` with ``deg f_n = k*n + n0``.  A :class:`DiffOp` ``(lam, m)``
acts by ``f_n - (f_{n-m} + lam)``, which keeps the grading exactly when
``|lam| = m*k``.

Values are either :class:`~schurseq.schur.SchurExpansion` or
:class:`~schurseq.packed.PackedExpansion`; both provide ``shift``, ``-``,
``is_zero`` and ``len``, which is all this module relies on.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import reduce

from .errors import BelowFloor, DegreeMismatch, SlopeMismatch
from .partitions import Partition, format_partition, prepend_row
from .schur import SchurExpansion, linear_combination

__all__ = [
    "SequenceFamily",
    "DiffOp",
    "eval_pointwise",
    "pointwise",
    "apply",
    "compose",
    "VanishingReport",
    "vanishing_onset",
    "detect_stabilization",
    "hook_family",
    "stable_family",
    "parse_ops",
]


class SequenceFamily:
    """Memoized sequence ``n -> f_n`` defined for ``n >= floor``."""

    def __init__(self, evaluator: Callable[[int], object], k: int, n0: int = 0, floor: int = 0, name: str = ""):
        if k < 1:
            raise ValueError(f"slope must be positive, got {k}")
        self._evaluator = evaluator
        self.k = k
        self.n0 = n0
        self.floor = floor
        self.name = name or "f"
        self._memo: dict[int, object] = {}

    def __call__(self, n: int):
        hit = self._memo.get(n)
        if hit is not None:
            return hit
        if n < self.floor:
            raise BelowFloor(f"{self.name} is defined for n >= {self.floor}, asked for n = {n}")
        value = self._evaluator(n)
        if value.degree != self.k * n + self.n0:
            raise DegreeMismatch(
                f"{self.name} at n={n} has degree {value.degree}, expected {self.k * n + self.n0}"
            )
        self._memo[n] = value
        return value

    evaluate = __call__

    def forget(self) -> None:
        self._memo.clear()

    def __repr__(self) -> str:
        return f"SequenceFamily({self.name}, k={self.k}, n0={self.n0}, floor={self.floor})"

    def _combine(self, other: "SequenceFamily", a: int, b: int) -> "SequenceFamily":
        if (self.k, self.n0) != (other.k, other.n0):
            raise DegreeMismatch("families live in different graded pieces")
        floor = max(self.floor, other.floor)

        def ev(n):
            return linear_combination([(a, self(n)), (b, other(n))], self.k * n + self.n0)

        return SequenceFamily(ev, self.k, self.n0, floor, f"({a}*{self.name} + {b}*{other.name})")

    def __add__(self, other: "SequenceFamily") -> "SequenceFamily":
        return self._combine(other, 1, 1)

    def __sub__(self, other: "SequenceFamily") -> "SequenceFamily":
        return self._combine(other, 1, -1)

    def scaled(self, c: int) -> "SequenceFamily":
        return SequenceFamily(lambda n: self(n).scale(c), self.k, self.n0, self.floor, f"{c}*{self.name}")


_OP_RE = re.compile(r"^\s*(?:(\d+)\s*\|)?\s*\(?\s*([\d,\s]*?)\s*\)?\s*$")


@dataclass(frozen=True, order=True)
class DiffOp:
    """The operator ``f_n -> f_n - (f_{n-m} + lam)``."""

    lam: Partition
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lam", Partition(self.lam))
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if not self.lam or self.lam.weight % self.m:
            raise ValueError(f"m={self.m} must divide |lambda|={self.lam.weight} > 0")

    @property
    def slope(self) -> int:
        return self.lam.weight // self.m

    @classmethod
    def parse(cls, text: str) -> "DiffOp":
        """Parse ``"2|(3,3)"``; a missing ``m|`` means ``m = 1``."""
        match = _OP_RE.match(text)
        if not match or not match.group(2):
            raise ValueError(f"cannot parse operator {text!r}; expected m|(parts)")
        m = int(match.group(1) or 1)
        return cls(Partition.parse(match.group(2)), m)

    def __str__(self) -> str:
        return f"{self.m}|({format_partition(self.lam)})"


def parse_ops(text: str) -> list[DiffOp]:
    """Operators separated by ``;``, e.g. ``"2|(2) ; 1|(1,1)"``."""
    return [DiffOp.parse(tok) for tok in text.split(";") if tok.strip()]


def _check_slope(op: DiffOp, seq: SequenceFamily) -> None:
    if op.slope != seq.k:
        raise SlopeMismatch(f"operator {op} has slope {op.slope}, family has slope {seq.k}")


def eval_pointwise(op: DiffOp, seq: SequenceFamily, n: int):
    """``f_n - (f_{n-m} + lam)``."""
    _check_slope(op, seq)
    if n < seq.floor + op.m:
        raise BelowFloor(f"{op} needs n >= {seq.floor + op.m}, got {n}")
    return seq(n) - seq(n - op.m).shift(op.lam)


def pointwise(op: DiffOp, seq: SequenceFamily) -> SequenceFamily:
    """The family ``n -> f_n - (f_{n-m} + lam)`` on the original index."""
    _check_slope(op, seq)
    return SequenceFamily(
        lambda n: eval_pointwise(op, seq, n), seq.k, seq.n0, seq.floor + op.m, f"{op}{seq.name}"
    )


def apply(op: DiffOp, seq: SequenceFamily) -> SequenceFamily:
    """The re-indexed image ``n -> Delta f_{n+m}``.

    Its degree offset grows by ``|lam|``.  Verdicts use :func:`pointwise`
    instead, so that "zero for all n > N" refers to the original index.
    """
    _check_slope(op, seq)
    return SequenceFamily(
        lambda n: eval_pointwise(op, seq, n + op.m),
        seq.k,
        seq.n0 + op.lam.weight,
        seq.floor,
        f"{op}[{seq.name}]",
    )


def compose(ops: Iterable[DiffOp], seq: SequenceFamily) -> SequenceFamily:
    """Apply ``ops`` pointwise, in the order given (the result does not depend on it)."""
    return reduce(lambda acc, op: pointwise(op, acc), ops, seq)


@dataclass
class VanishingReport:
    flags: dict[int, bool] = field(default_factory=dict)
    term_counts: dict[int, int] = field(default_factory=dict)
    onset: int | None = None

    def per_n(self) -> list[dict]:
        return [{"n": n, "zero": self.flags[n], "term_count": self.term_counts[n]} for n in sorted(self.flags)]


def vanishing_onset(ops: Sequence[DiffOp], seq: SequenceFamily, n_max: int, n_min: int | None = None) -> VanishingReport:
    """Zero flags for every valid ``n <= n_max`` and the smallest ``N`` with zeros beyond it."""
    fam = compose(ops, seq)
    start = fam.floor if n_min is None else max(n_min, fam.floor)
    if n_max < start:
        raise BelowFloor(f"n_max={n_max} is below the first valid index {start}")
    report = VanishingReport()
    for n in range(start, n_max + 1):
        value = fam(n)
        report.flags[n] = value.is_zero()
        report.term_counts[n] = len(value)
    if report.flags[n_max]:
        onset = n_max
        while onset >= start and report.flags[onset]:
            onset -= 1
        report.onset = onset
    return report


def detect_stabilization(seq: SequenceFamily, n_max: int) -> int | None:
    """Smallest ``N`` with ``f_n = f_{n-1} + (1)`` for all ``N < n <= n_max``."""
    if seq.k != 1:
        raise SlopeMismatch(f"stabilization is defined for slope 1, got {seq.k}")
    return vanishing_onset([DiffOp((1,))], seq, n_max).onset


# --- concrete families ---------------------------------------------------------


def hook_family(alpha: Sequence[int], lambdas: Sequence[Iterable[int]] | None = None, *, engine: str = "auto") -> SequenceFamily:
    """``n -> prod_q s_(n + alpha_q, lambda_q)``.

    ``engine`` chooses how products are evaluated: ``"dict"`` multiplies
    Schur functions with the Littlewood-Richardson rule, ``"packed"`` goes
    through :mod:`schurseq.hooks` (three factors, vectorized), and
    ``"auto"`` picks packed for three factors with nonzero degree.
    """
    from .hooks import hook_product_evaluator

    alpha = tuple(int(a) for a in alpha)
    k = len(alpha)
    lambdas = tuple(Partition(l) for l in (lambdas or [()] * k))
    if len(lambdas) != k:
        raise ValueError("need one partition per factor")
    floor = max(0, *(lam[0] - a if lam else -a for a, lam in zip(alpha, lambdas)))
    n0 = sum(alpha) + sum(l.weight for l in lambdas)
    name = "*".join(f"s(n+{a},{format_partition(l)})" for a, l in zip(alpha, lambdas))
    return SequenceFamily(hook_product_evaluator(alpha, lambdas, engine), k, n0, floor, name)


def stable_family(terms: Sequence[tuple[int, int, Iterable[int]]]) -> SequenceFamily:
    """``n -> sum_j c_j s_(n + a_j, lambda_j)`` with a common ``a_j + |lambda_j|``.

    Such a family has slope 1 and stabilizes once every row ``n + a_j`` is
    long enough to sit on top of ``lambda_j``.
    """
    terms = [(int(c), int(a), Partition(lam)) for c, a, lam in terms]
    if not terms:
        raise ValueError("need at least one term")
    offsets = {a + lam.weight for _, a, lam in terms}
    if len(offsets) != 1:
        raise DegreeMismatch("terms must share a + |lambda|")
    if any(a < 0 for _, a, _ in terms):
        raise ValueError("only nonnegative shifts a_j are supported")
    n0 = offsets.pop()
    floor = max(max(lam[0] - a, 0) if lam else 0 for _, a, lam in terms)

    def ev(n):
        out = {}
        for c, a, lam in terms:
            key = tuple(prepend_row(n + a, lam))
            out[key] = out.get(key, 0) + c
        return SchurExpansion(n + n0, out)

    name = " + ".join(f"{c}*s(n+{a},{format_partition(lam)})" for c, a, lam in terms)
    return SequenceFamily(ev, 1, n0, floor, name)
