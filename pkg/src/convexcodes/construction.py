"""The simplex-atom convex realization of an arbitrary code.

The i-th nonempty codeword is placed on the half-open simplex atom

    S_i = conv{0, e_1, ..., e_(i-1)} minus conv{0, e_1, ..., e_(i-2)},

and neuron j's receptive field is the union of the atoms whose codeword
contains j. Atoms are pairwise disjoint and together tile the closed
simplex conv{0, e_1, ..., e_(k-1)}. Everything here is exact rational
arithmetic.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .code import NeuralCode, canonicalize, codeword_key, format_codeword, require_codewords
from .errors import DimensionMismatch, IndexOutOfRange

RationalPoint = tuple  # tuple[Fraction, ...]


def point(*coords: int | str | Fraction) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coords)


class Stimulus(enum.Enum):
    WHOLE_SPACE = "whole_space"
    UNION_ONLY = "union_only"


@dataclass(frozen=True)
class SimplexAtom:
    index: int
    ambient_dim: int

    def __contains__(self, p: Sequence[Fraction]) -> bool:
        return atom_membership(self, p)


def atom_membership(atom: SimplexAtom, p: Sequence[Fraction]) -> bool:
    """Exact membership of ``p`` in the half-open atom ``S_index``.

    S_1 is the origin. For i >= 2 the atom is the closed simplex on
    0, e_1, ..., e_(i-1) with the facet where coordinate i-1 vanishes
    removed.
    """
    if len(p) != atom.ambient_dim:
        raise DimensionMismatch(f"point has {len(p)} coordinates, atom lives in R^{atom.ambient_dim}")
    i = atom.index
    if i == 1:
        return all(c == 0 for c in p)
    if i - 1 > len(p):
        return False
    if not p[i - 2] > 0:
        return False
    if any(c != 0 for c in p[i - 1 :]):
        return False
    head = p[: i - 1]
    return all(c >= 0 for c in head) and sum(head, Fraction(0)) <= 1


@dataclass(frozen=True)
class ConstructedRealization:
    n: int
    k: int
    order: tuple[frozenset[int], ...]
    ambient_dim: int
    atoms_per_neuron: tuple[frozenset[int], ...]
    stimulus: Stimulus

    def atom(self, i: int) -> SimplexAtom:
        if not 1 <= i <= self.k:
            raise IndexOutOfRange(f"atom index {i} outside 1..{self.k}")
        return SimplexAtom(i, self.ambient_dim)

    @property
    def atoms(self) -> tuple[SimplexAtom, ...]:
        return tuple(SimplexAtom(i, self.ambient_dim) for i in range(1, self.k + 1))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "ambient_dim": self.ambient_dim,
            "order": [sorted(w) for w in self.order],
            "atoms_per_neuron": [sorted(a) for a in self.atoms_per_neuron],
            "stimulus": self.stimulus.value,
        }

    @classmethod
    def from_json(cls, data: dict) -> ConstructedRealization:
        return cls(
            n=int(data["n"]),
            k=int(data["k"]),
            order=tuple(frozenset(w) for w in data["order"]),
            ambient_dim=int(data["ambient_dim"]),
            atoms_per_neuron=tuple(frozenset(a) for a in data["atoms_per_neuron"]),
            stimulus=Stimulus(data["stimulus"]),
        )


def _ambient_dim(k: int, has_empty: bool) -> int:
    # k = 1 with the empty codeword needs a point outside S_1, which R^0 lacks.
    if k >= 2:
        return k - 1
    return 1 if (k == 1 and has_empty) else 0


def construct(code: NeuralCode, preserve_order: bool = False) -> ConstructedRealization:
    """Build the simplex-atom realization of ``code``.

    Nonempty codewords are ordered canonically unless ``preserve_order``
    is set, in which case first occurrences are kept in listing order.
    """
    require_codewords(code)
    if preserve_order:
        seen: dict[frozenset[int], None] = {}
        for w in code.codewords:
            if w:
                seen.setdefault(w, None)
        order = tuple(seen)
    else:
        order = canonicalize(code).nonempty
    k = len(order)
    atoms_per_neuron = tuple(
        frozenset(i for i, w in enumerate(order, start=1) if j in w) for j in range(1, code.n + 1)
    )
    return ConstructedRealization(
        n=code.n,
        k=k,
        order=order,
        ambient_dim=_ambient_dim(k, code.has_empty),
        atoms_per_neuron=atoms_per_neuron,
        stimulus=Stimulus.WHOLE_SPACE if code.has_empty else Stimulus.UNION_ONLY,
    )


def witness_point(r: ConstructedRealization, i: int) -> tuple[Fraction, ...]:
    """A canonical point of ``S_i``: coordinates 1/i in slots 1..i-1."""
    if not 1 <= i <= r.k:
        raise IndexOutOfRange(f"atom index {i} outside 1..{r.k}")
    c = Fraction(1, i)
    return tuple(c if slot < i - 1 else Fraction(0) for slot in range(r.ambient_dim))


def exterior_point(r: ConstructedRealization) -> tuple[Fraction, ...]:
    """A point of R^d outside the closed simplex (the origin when there are no atoms)."""
    if r.ambient_dim == 0:
        return ()
    return (Fraction(2),) + (Fraction(0),) * (r.ambient_dim - 1)


def atoms_containing(r: ConstructedRealization, p: Sequence[Fraction]) -> list[int]:
    if len(p) != r.ambient_dim:
        raise DimensionMismatch(f"point has {len(p)} coordinates, expected {r.ambient_dim}")
    return [a.index for a in r.atoms if atom_membership(a, p)]


def codeword_at(r: ConstructedRealization, p: Sequence[Fraction]) -> frozenset[int] | None:
    """Support of the memberships of ``p``; ``None`` if ``p`` lies outside X."""
    hit = set(atoms_containing(r, p))
    support = frozenset(j for j, atoms in enumerate(r.atoms_per_neuron, start=1) if atoms & hit)
    if not support and r.stimulus is Stimulus.UNION_ONLY:
        return None
    return support


def realized_code(r: ConstructedRealization) -> NeuralCode:
    words = list(r.order)
    if r.stimulus is Stimulus.WHOLE_SPACE:
        words.append(frozenset())
    return NeuralCode.of(r.n, words)


def realized_code_pointwise(r: ConstructedRealization) -> NeuralCode:
    """Realized code from sampling one witness per atom, plus the exterior."""
    probes = [witness_point(r, i) for i in range(1, r.k + 1)]
    if r.stimulus is Stimulus.WHOLE_SPACE:
        probes.append(exterior_point(r))
    words = [w for w in (codeword_at(r, p) for p in probes) if w is not None]
    return NeuralCode.of(r.n, words)


# -- sampling ------------------------------------------------------------------


def _weights(rng: random.Random, count: int, zero_prob: float = 0.3) -> list[int]:
    return [0 if rng.random() < zero_prob else rng.randint(1, 7) for _ in range(count)]


def random_simplex_point(rng: random.Random, k: int, dim: int) -> tuple[Fraction, ...]:
    """Rational convex combination of 0, e_1, ..., e_(k-1), embedded in R^dim.

    Weights are zero with positive probability so lower faces get hit too.
    """
    w = _weights(rng, max(k, 1))
    total = sum(w)
    if total == 0:
        return (Fraction(0),) * dim
    coords = [Fraction(x, total) for x in w[1:]]
    return tuple(coords + [Fraction(0)] * (dim - len(coords)))


def random_atom_point(rng: random.Random, i: int, dim: int) -> tuple[Fraction, ...]:
    """Random rational point of ``S_i`` embedded in R^dim."""
    if i == 1:
        return (Fraction(0),) * dim
    w = _weights(rng, i)
    w[i - 1] = rng.randint(1, 7)
    total = sum(w)
    coords = [Fraction(x, total) for x in w[1:]]
    return tuple(coords + [Fraction(0)] * (dim - len(coords)))


def random_ambient_point(rng: random.Random, dim: int) -> tuple[Fraction, ...]:
    """Random rational point near the simplex, often outside it."""
    return tuple(Fraction(rng.randint(-4, 8), rng.randint(1, 6)) for _ in range(dim))


def in_closed_simplex(p: Sequence[Fraction], k: int) -> bool:
    """Membership in conv{0, e_1, ..., e_(k-1)}; empty for k = 0."""
    if k == 0:
        return False
    head, tail = p[: k - 1], p[k - 1 :]
    return all(c == 0 for c in tail) and all(c >= 0 for c in head) and sum(head, Fraction(0)) <= 1


def random_rational_lambda(rng: random.Random) -> Fraction:
    q = rng.randint(2, 12)
    return Fraction(rng.randint(1, q - 1), q)


# -- verification -----------------------------------------------------------------


@dataclass
class VerificationReport:
    code: NeuralCode
    realization: ConstructedRealization
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "ambient_dim": self.realization.ambient_dim,
            "k": self.realization.k,
            "checks": dict(self.checks),
            "details": dict(self.details),
        }


def check_partition(r: ConstructedRealization, points: Iterable[Sequence[Fraction]]) -> str | None:
    """First failure of "closed simplex points lie in exactly one atom, others in none"."""
    for p in points:
        hits = atoms_containing(r, p)
        expected = 1 if in_closed_simplex(p, r.k) else 0
        if len(hits) != expected:
            return f"point {tuple(map(str, p))} lies in atoms {hits}"
    return None


def check_convexity(r: ConstructedRealization, rng: random.Random, pairs: int) -> str | None:
    for j, atoms in enumerate(r.atoms_per_neuron, start=1):
        if not atoms:
            continue
        choices = sorted(atoms)
        for _ in range(pairs):
            p = random_atom_point(rng, rng.choice(choices), r.ambient_dim)
            q = random_atom_point(rng, rng.choice(choices), r.ambient_dim)
            lam = random_rational_lambda(rng)
            mix = tuple(lam * a + (1 - lam) * b for a, b in zip(p, q))
            word = codeword_at(r, mix)
            if word is None or j not in word:
                return f"neuron {j}: {lam} mix of {p} and {q} leaves U_{j}"
    return None


def verify_construction(code: NeuralCode, samples: int = 32, seed: int = 0) -> VerificationReport:
    """Construct, then check realized code, atom geometry, and receptive-field convexity."""
    r = construct(code)
    report = VerificationReport(code=code, realization=r)
    target = canonicalize(code)
    rng = random.Random(seed)

    combinatorial = realized_code(r)
    pointwise = realized_code_pointwise(r)
    report.checks["realized_code"] = combinatorial == target
    report.checks["pointwise_agrees"] = pointwise == combinatorial
    if not report.checks["realized_code"]:
        report.details["realized_code"] = f"expected {target}, realized {combinatorial}"
    if not report.checks["pointwise_agrees"]:
        report.details["pointwise_agrees"] = f"pointwise {pointwise} vs combinatorial {combinatorial}"

    witnesses = [witness_point(r, i) for i in range(1, r.k + 1)]
    bad = next((i for i, p in enumerate(witnesses, start=1) if atoms_containing(r, p) != [i]), None)
    report.checks["witnesses"] = bad is None
    if bad is not None:
        report.details["witnesses"] = f"witness of S_{bad} lies in {atoms_containing(r, witnesses[bad - 1])}"

    d = r.ambient_dim
    probes = [random_simplex_point(rng, r.k, d) for _ in range(samples)]
    probes += [random_ambient_point(rng, d) for _ in range(samples)]
    failure = check_partition(r, probes)
    report.checks["partition"] = failure is None
    if failure:
        report.details["partition"] = failure

    failure = check_convexity(r, rng, pairs=max(1, samples // 4))
    report.checks["convexity"] = failure is None
    if failure:
        report.details["convexity"] = failure
    return report


def describe(r: ConstructedRealization) -> str:
    """Human-readable U_j = union of atoms listing."""
    lines = []
    for j, atoms in enumerate(r.atoms_per_neuron, start=1):
        rhs = " ∪ ".join(f"S_{i}" for i in sorted(atoms)) or "∅"
        lines.append(f"U_{j} = {rhs}")
    lines.append("order: " + ", ".join(format_codeword(w) for w in r.order))
    return "\n".join(lines)


__all__ = [
    "ConstructedRealization",
    "SimplexAtom",
    "Stimulus",
    "VerificationReport",
    "atom_membership",
    "codeword_at",
    "codeword_key",
    "construct",
    "exterior_point",
    "point",
    "realized_code",
    "realized_code_pointwise",
    "verify_construction",
    "witness_point",
]
