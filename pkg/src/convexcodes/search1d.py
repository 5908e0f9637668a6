"""Exhaustive search for convex realizations on the real line.

Any realization by n intervals has at most 2n distinct finite endpoints.
Those t points cut R into 2t+1 cells (ray, point, open, point, ..., ray)
on which every support is constant, and each interval is a contiguous run
of cells. So a code is realizable in R^1 iff some sequence of 2t+1 cell
supports, with each neuron occupying a contiguous stretch, produces the
code. :func:`search_dim1` walks such sequences cell by cell; the
unpruned run-by-run enumeration lives in :mod:`convexcodes.kernels` and
backs :func:`realizable_dim1_bruteforce`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .code import NeuralCode, canonicalize, mask_key, require_codewords, to_mask
from .errors import BadParameter
from .intervals import EMPTY, NEG_INF, POS_INF, IntervalSet, Line, Realization1D, realized_code_1d


@dataclass(frozen=True)
class CellAssignment:
    """Per-neuron contiguous runs ``(l, r)`` of 1-based cell indices, or ``None``."""

    t: int
    runs: tuple[tuple[int, int] | None, ...]
    stimulus: Line

    def __post_init__(self) -> None:
        cells = 2 * self.t + 1
        for run in self.runs:
            if run is not None and not 1 <= run[0] <= run[1] <= cells:
                raise BadParameter(f"run {run} outside cells 1..{cells}")

    @property
    def cell_count(self) -> int:
        return 2 * self.t + 1

    def cell_supports(self) -> list[frozenset[int]]:
        return [
            frozenset(j for j, run in enumerate(self.runs, start=1) if run and run[0] <= c <= run[1])
            for c in range(1, self.cell_count + 1)
        ]

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "runs": [list(r) if r else None for r in self.runs],
            "stimulus": self.stimulus.value,
        }


def _left_end(cell: int) -> tuple[Fraction | float, bool]:
    # Odd cells are open gaps (v_(c-1)/2, v_(c+1)/2); even cells are points v_(c/2).
    if cell % 2 == 0:
        return Fraction(cell // 2), True
    if cell == 1:
        return NEG_INF, False
    return Fraction((cell - 1) // 2), False


def _right_end(cell: int, t: int) -> tuple[Fraction | float, bool]:
    if cell % 2 == 0:
        return Fraction(cell // 2), True
    if cell == 2 * t + 1:
        return POS_INF, False
    return Fraction((cell + 1) // 2), False


def assignment_to_realization(a: CellAssignment) -> Realization1D:
    """Concretize with arrangement points 1, 2, ..., t."""
    intervals = []
    for run in a.runs:
        if run is None:
            intervals.append(EMPTY)
            continue
        lo, lo_closed = _left_end(run[0])
        hi, hi_closed = _right_end(run[1], a.t)
        intervals.append(IntervalSet(False, lo, lo_closed, hi, hi_closed))
    return Realization1D(len(a.runs), tuple(intervals), a.stimulus)


class _Targets:
    """Bookkeeping shared by both searches: which codewords are still owed."""

    def __init__(self, targets: list[int], need_empty: bool) -> None:
        self.alphabet = [0] + targets
        self.bit = {w: 1 << i for i, w in enumerate(targets)}
        self.all_covered = (1 << len(targets)) - 1
        self.need_empty = need_empty
        self._touching: dict[int, int] = {}

    def touching(self, neurons: int) -> int:
        """Bitmask of the targets that share a neuron with ``neurons``."""
        hit = self._touching.get(neurons)
        if hit is None:
            hit = 0
            for w, b in self.bit.items():
                if w & neurons:
                    hit |= b
            self._touching[neurons] = hit
        return hit

    def done(self, covered: int, empty_seen: bool) -> bool:
        return covered == self.all_covered and (empty_seen or not self.need_empty)

    def step(self, s: int, seen: int, covered: int, empty_seen: bool):
        """State after one more cell of support ``s``, plus the cells still required.

        None when an uncovered codeword uses a neuron whose run has ended.
        """
        seen2 = seen | s
        covered2 = covered | self.bit[s] if s else covered
        owed = self.all_covered & ~covered2
        if owed & self.touching(seen2 & ~s):
            return None
        empty2 = empty_seen or s == 0
        need = bin(owed).count("1") + (self.need_empty and not empty2)
        return seen2, covered2, empty2, need


def _feasible(cells: int, targets: list[int], need_empty: bool) -> bool:
    """Whether some sequence of at most ``cells`` supports realizes ``targets``.

    Equal neighbours are skipped: repeating a support never creates a
    codeword and can always pad a shorter sequence to full length.
    """
    book = _Targets(targets, need_empty)
    failed: dict[tuple[int, int, int, bool], int] = {}

    def go(budget: int, prev: int, seen: int, covered: int, empty_seen: bool) -> bool:
        if book.done(covered, empty_seen):
            return True
        key = (prev, seen, covered, empty_seen)
        if budget == 0 or failed.get(key, -1) >= budget:
            return False
        for s in book.alphabet:
            if s == prev or s & seen & ~prev:
                continue
            state = book.step(s, seen, covered, empty_seen)
            if state is not None and state[3] < budget and go(budget - 1, s, *state[:3]):
                return True
        failed[key] = budget
        return False

    return go(cells, -1, 0, 0, False)


def _sequence_search(cells: int, targets: list[int], need_empty: bool) -> list[int] | None:
    """Lexicographically first support sequence of length ``cells`` realizing ``targets``.

    Supports are tried in the order: empty, then canonical codeword order.
    Failed states are memoized, so the first success is still the
    lexicographically first one.
    """
    book = _Targets(targets, need_empty)
    failed: set[tuple[int, int, int, int, bool]] = set()
    path: list[int] = []

    def extend(pos: int, prev: int, seen: int, covered: int, empty_seen: bool) -> bool:
        if pos == cells:
            return book.done(covered, empty_seen)
        key = (pos, prev, seen, covered, empty_seen)
        if key in failed:
            return False
        remaining = cells - pos - 1
        for s in book.alphabet:
            if s & seen & ~prev:
                continue  # would reopen a neuron whose run already ended
            state = book.step(s, seen, covered, empty_seen)
            if state is None or state[3] > remaining:
                continue
            path.append(s)
            if extend(pos + 1, s, *state[:3]):
                return True
            path.pop()
        failed.add(key)
        return False

    return list(path) if extend(0, 0, 0, 0, False) else None


def _runs_from_sequence(n: int, seq: list[int]) -> tuple[tuple[int, int] | None, ...]:
    runs = []
    for j in range(n):
        hit = [c for c, s in enumerate(seq, start=1) if s >> j & 1]
        runs.append((hit[0], hit[-1]) if hit else None)
    return tuple(runs)


def search_dim1(code: NeuralCode, max_points: int | None = None) -> CellAssignment | None:
    """A realization of ``code`` in R^1 on at most ``max_points`` points, or None.

    With the default ``max_points = 2n`` a ``None`` result proves that no
    convex realization in R^1 exists. The answer uses the fewest points,
    then the lexicographically first cell-support sequence. The stimulus
    space is the whole line exactly when the empty codeword is present.
    """
    require_codewords(code)
    code = canonicalize(code)
    if max_points is None:
        max_points = 2 * code.n
    if max_points < 0:
        raise BadParameter(f"max_points must be >= 0, got {max_points}")
    targets = sorted((to_mask(w) for w in code.nonempty), key=mask_key)
    need_empty = code.has_empty
    stimulus = Line.WHOLE_LINE if need_empty else Line.UNION_ONLY

    if not _feasible(2 * max_points + 1, targets, need_empty):
        return None
    t = next(t for t in range(max_points + 1) if _feasible(2 * t + 1, targets, need_empty))
    seq = _sequence_search(2 * t + 1, targets, need_empty)
    if seq is None:
        raise AssertionError(f"feasible on {2 * t + 1} cells but no sequence of that length found")
    found = CellAssignment(t, _runs_from_sequence(code.n, seq), stimulus)
    _recheck(found, code)
    return found


def _recheck(a: CellAssignment, code: NeuralCode) -> None:
    got = realized_code_1d(assignment_to_realization(a))
    if got != code:
        raise AssertionError(f"search bookkeeping produced {got}, wanted {code}")


@lru_cache(maxsize=None)
def _families(backend: str, n: int, t: int) -> frozenset[int]:
    return kernels.get_backend(backend).realizable_1d_masks(n, t)


def realizable_dim1_bruteforce(code: NeuralCode, max_points: int | None = None) -> bool:
    """Unpruned decision by enumerating every run assignment (small n only)."""
    require_codewords(code)
    if code.n > 3:
        raise BadParameter("brute-force 1-D enumeration is limited to n <= 3")
    t = 2 * code.n if max_points is None else max_points
    family = 0
    for w in set(code.codewords):
        family |= 1 << to_mask(w)
    families = _families(kernels.backend_name(), code.n, t)
    if code.has_empty:
        return family in families
    return any(f & ~1 == family for f in families)
