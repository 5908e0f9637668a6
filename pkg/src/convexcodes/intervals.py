"""Exact one-dimensional realizations: intervals, endpoint sweeps, open-ification."""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .code import NeuralCode, code_from_json, code_to_json
from .errors import BadParameter, NoEpsilon, UnboundedInterval

NEG_INF = float("-inf")
POS_INF = float("inf")


def _endpoint(value: object) -> Fraction | float:
    if isinstance(value, float) and value in (NEG_INF, POS_INF):
        return value
    if isinstance(value, str):
        text = value.strip()
        if text in ("-inf", "-oo"):
            return NEG_INF
        if text in ("inf", "+inf", "oo", "+oo"):
            return POS_INF
    if isinstance(value, float):
        raise BadParameter(f"finite endpoints must be exact rationals, got float {value!r}")
    return Fraction(value)  # type: ignore[arg-type]


def _endpoint_str(value: Fraction | float) -> str:
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "inf"
    return str(value)


@dataclass(frozen=True)
class IntervalSet:
    """A convex subset of the real line, possibly empty or unbounded."""

    empty: bool = False
    lo: Fraction | float = Fraction(0)
    lo_closed: bool = True
    hi: Fraction | float = Fraction(0)
    hi_closed: bool = True

    def __post_init__(self) -> None:
        if self.empty:
            return
        lo, hi = _endpoint(self.lo), _endpoint(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo == POS_INF or hi == NEG_INF:
            raise BadParameter("interval has an infinite end on the wrong side")
        if (lo == NEG_INF and self.lo_closed) or (hi == POS_INF and self.hi_closed):
            raise BadParameter("infinite ends must be open")
        if lo > hi or (lo == hi and not (self.lo_closed and self.hi_closed)):
            raise BadParameter(f"degenerate interval {self}")

    @classmethod
    def make(cls, lo, hi, lo_closed: bool = True, hi_closed: bool = True) -> IntervalSet:
        return cls(False, _endpoint(lo), lo_closed, _endpoint(hi), hi_closed)

    @property
    def bounded(self) -> bool:
        return self.empty or (self.lo != NEG_INF and self.hi != POS_INF)

    def finite_endpoints(self) -> list[Fraction]:
        if self.empty:
            return []
        return [e for e in (self.lo, self.hi) if e not in (NEG_INF, POS_INF)]  # type: ignore[misc]

    def __contains__(self, x: Fraction) -> bool:
        if self.empty:
            return False
        above = self.lo < x or (self.lo_closed and x == self.lo)
        below = x < self.hi or (self.hi_closed and x == self.hi)
        return above and below

    def translate(self, c: Fraction) -> IntervalSet:
        if self.empty:
            return self
        return IntervalSet(False, self.lo + c, self.lo_closed, self.hi + c, self.hi_closed)

    def __str__(self) -> str:
        if self.empty:
            return "∅"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_endpoint_str(self.lo)}, {_endpoint_str(self.hi)}{right}"

    def to_json(self) -> dict:
        if self.empty:
            return {"empty": True}
        return {
            "lo": _endpoint_str(self.lo),
            "lo_closed": self.lo_closed,
            "hi": _endpoint_str(self.hi),
            "hi_closed": self.hi_closed,
        }

    @classmethod
    def from_json(cls, data: dict) -> IntervalSet:
        if data.get("empty"):
            return EMPTY
        return cls.make(data["lo"], data["hi"], bool(data["lo_closed"]), bool(data["hi_closed"]))


EMPTY = IntervalSet(empty=True)

_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^\]\)\s]+)\s*([\])])\s*$")


def interval(text: str) -> IntervalSet:
    """Parse bracket notation: ``"[0,1]"``, ``"(1, 2]"``, ``"(-inf,1]"``, ``"empty"``."""
    if text.strip() in ("empty", "∅", "{}"):
        return EMPTY
    m = _INTERVAL_RE.match(text)
    if not m:
        raise BadParameter(f"cannot parse interval {text!r}")
    left, lo, hi, right = m.groups()
    return IntervalSet.make(lo, hi, left == "[", right == "]")


class Line(enum.Enum):
    WHOLE_LINE = "whole_line"
    UNION_ONLY = "union_only"


@dataclass(frozen=True)
class Realization1D:
    n: int
    intervals: tuple[IntervalSet, ...]
    stimulus: Line = Line.WHOLE_LINE

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if len(self.intervals) != self.n:
            raise BadParameter(f"expected {self.n} intervals, got {len(self.intervals)}")

    @classmethod
    def of(cls, *specs: str, stimulus: Line = Line.WHOLE_LINE) -> Realization1D:
        return cls(len(specs), tuple(interval(s) for s in specs), stimulus)

    def endpoints(self) -> list[Fraction]:
        return sorted({e for iv in self.intervals for e in iv.finite_endpoints()})

    def support(self, x: Fraction) -> frozenset[int]:
        return frozenset(j for j, iv in enumerate(self.intervals, start=1) if x in iv)

    def translate(self, c: Fraction) -> Realization1D:
        c = Fraction(c)
        return Realization1D(self.n, tuple(iv.translate(c) for iv in self.intervals), self.stimulus)

    def __str__(self) -> str:
        body = ", ".join(f"I_{j}={iv}" for j, iv in enumerate(self.intervals, start=1))
        return f"{body} [{self.stimulus.value}]"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "stimulus": self.stimulus.value,
            "intervals": [iv.to_json() for iv in self.intervals],
        }

    @classmethod
    def from_json(cls, data: dict) -> Realization1D:
        try:
            ivs = tuple(IntervalSet.from_json(d) for d in data["intervals"])
            return cls(int(data.get("n", len(ivs))), ivs, Line(data.get("stimulus", "whole_line")))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, BadParameter):
                raise
            raise BadParameter(f"bad Realization1D JSON: {exc}") from None


# -- cells -----------------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    lo: Fraction | float
    hi: Fraction | float
    rep: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class CellDecomposition:
    """Partition of R by finitely many points into 2t+1 cells, left to right."""

    points: tuple[Fraction, ...]
    cells: tuple[Cell, ...] = field(init=False)

    def __post_init__(self) -> None:
        pts = tuple(Fraction(p) for p in self.points)
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise BadParameter("cell points must be strictly increasing")
        object.__setattr__(self, "points", pts)
        if not pts:
            cells = (Cell(NEG_INF, POS_INF, Fraction(0)),)
        else:
            out = [Cell(NEG_INF, pts[0], pts[0] - 1)]
            for a, b in zip(pts, pts[1:]):
                out.append(Cell(a, a, a))
                out.append(Cell(a, b, (a + b) / 2))
            out.append(Cell(pts[-1], pts[-1], pts[-1]))
            out.append(Cell(pts[-1], POS_INF, pts[-1] + 1))
            cells = tuple(out)
        object.__setattr__(self, "cells", cells)

    @property
    def representatives(self) -> list[Fraction]:
        return [c.rep for c in self.cells]


def cell_supports(r: Realization1D) -> list[frozenset[int]]:
    decomposition = CellDecomposition(tuple(r.endpoints()))
    return [r.support(x) for x in decomposition.representatives]


def realized_code_1d(r: Realization1D) -> NeuralCode:
    """The code of ``r``, read off one representative per cell.

    Supports are constant on each cell, so the cell representatives see
    every region of the arrangement.
    """
    words: set[frozenset[int]] = set()
    for s in cell_supports(r):
        if s:
            words.add(s)
        elif r.stimulus is Line.WHOLE_LINE:
            words.add(frozenset())
    return NeuralCode.of(r.n, words)


# -- open-ification ------------------------------------------------------------------


def endpoint_epsilon(r: Realization1D) -> Fraction | None:
    """Smallest nonzero distance between finite endpoints; None if there is none."""
    pts = r.endpoints()
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    return min(gaps) if gaps else None


def _open_up(iv: IntervalSet, shift: Fraction) -> IntervalSet:
    if iv.empty:
        return iv
    lo = iv.lo - shift if iv.lo_closed else iv.lo + shift
    hi = iv.hi + shift if iv.hi_closed else iv.hi - shift
    return IntervalSet(False, lo, False, hi, False)


def openify(r: Realization1D, strict: bool = False) -> tuple[Fraction, Realization1D]:
    """Replace each interval by an open one, moving every endpoint by eps/3.

    Closed endpoints move outward and open endpoints move inward, where eps
    is the smallest nonzero gap between endpoints. If every endpoint
    coincides, eps falls back to 1 (``strict`` raises :class:`NoEpsilon`).
    """
    for j, iv in enumerate(r.intervals, start=1):
        if not iv.bounded:
            raise UnboundedInterval(f"I_{j} = {iv} is unbounded")
    eps = endpoint_epsilon(r)
    if eps is None:
        if strict:
            raise NoEpsilon("no two distinct endpoints")
        eps = Fraction(1)
    shift = eps / 3
    return eps, Realization1D(r.n, tuple(_open_up(iv, shift) for iv in r.intervals), r.stimulus)


@dataclass
class OpenifyReport:
    epsilon: Fraction
    before: NeuralCode
    after: NeuralCode
    equal: bool
    realization_before: Realization1D
    realization_after: Realization1D
    epsilon_fallback: bool = False
    notes: list[str] = field(default_factory=list)
    seed: int | None = None

    def to_json(self) -> dict:
        out = {
            "epsilon": str(self.epsilon),
            "epsilon_fallback": self.epsilon_fallback,
            "equal": self.equal,
            "before": code_to_json(self.before),
            "after": code_to_json(self.after),
            "realization_before": self.realization_before.to_json(),
            "realization_after": self.realization_after.to_json(),
            "notes": list(self.notes),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    @classmethod
    def from_json(cls, data: dict) -> OpenifyReport:
        return cls(
            epsilon=Fraction(data["epsilon"]),
            before=code_from_json(data["before"]),
            after=code_from_json(data["after"]),
            equal=bool(data["equal"]),
            realization_before=Realization1D.from_json(data["realization_before"]),
            realization_after=Realization1D.from_json(data["realization_after"]),
            epsilon_fallback=bool(data.get("epsilon_fallback", False)),
            notes=list(data.get("notes", [])),
            seed=data.get("seed"),
        )


def conjecture1_check(r: Realization1D, seed: int | None = None) -> OpenifyReport:
    """Compare the code of ``r`` with the code of its open-ification.

    Inequality is a finding, not an error.
    """
    eps, opened = openify(r)
    fallback = endpoint_epsilon(r) is None
    before = realized_code_1d(r)
    after = realized_code_1d(opened)
    notes = []
    if fallback:
        notes.append("all endpoints coincide; epsilon set to 1")
    if any(iv.empty for iv in r.intervals):
        notes.append("empty intervals kept empty")
    if any(not iv.empty and iv.lo == iv.hi for iv in r.intervals):
        notes.append("point intervals widened to (a - eps/3, a + eps/3)")
    if r.stimulus is Line.UNION_ONLY:
        notes.append("stimulus is the union of the intervals")
    return OpenifyReport(
        epsilon=eps,
        before=before,
        after=after,
        equal=before == after,
        realization_before=r,
        realization_after=opened,
        epsilon_fallback=fallback,
        notes=notes,
        seed=seed,
    )


# -- random instances ----------------------------------------------------------------

_GRID = tuple(Fraction(i, 2) for i in range(7))  # 0, 1/2, ..., 3


def random_interval(rng: random.Random, unbounded: bool = True) -> IntervalSet:
    roll = rng.random()
    if roll < 0.1:
        return EMPTY
    if roll < 0.25:
        a = rng.choice(_GRID)
        return IntervalSet.make(a, a)
    a, b = sorted(rng.sample(_GRID, 2))
    lo: Fraction | float = a
    hi: Fraction | float = b
    lo_closed, hi_closed = rng.random() < 0.5, rng.random() < 0.5
    if unbounded and rng.random() < 0.12:
        lo, lo_closed = NEG_INF, False
    if unbounded and rng.random() < 0.12:
        hi, hi_closed = POS_INF, False
    return IntervalSet.make(lo, hi, lo_closed, hi_closed)


def random_realization_1d(n: int, seed: int, unbounded: bool = True) -> Realization1D:
    """Seeded random realization on a coarse grid (shared endpoints are common)."""
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    return Realization1D(n, tuple(random_interval(rng, unbounded) for _ in range(n)), Line.WHOLE_LINE)


def batch_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(count)]


def conjecture1_batch(count: int, n: int, seed: int) -> list[OpenifyReport]:
    """Run the open-ification comparison on ``count`` seeded bounded instances."""
    if count < 0 or n < 1:
        raise BadParameter("count must be >= 0 and n >= 1")
    return [
        conjecture1_check(random_realization_1d(n, s, unbounded=False), seed=s)
        for s in batch_seeds(seed, count)
    ]

