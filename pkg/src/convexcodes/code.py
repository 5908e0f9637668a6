"""Binary codes, their text/JSON forms, and the simplicial complex of a code.

Neurons are 1-based. Internally a codeword is a ``frozenset`` of neuron
indices; the bitmask form (bit ``j - 1`` for neuron ``j``) is used wherever
subset lattices are scanned.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import BadParameter, DuplicateCodeword, EmptyCode, MalformedLine

Codeword = frozenset  # frozenset[int]


def codeword_key(word: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: size first, then lexicographic on sorted indices."""
    items = tuple(sorted(word))
    return (len(items), items)


def to_mask(word: Iterable[int]) -> int:
    mask = 0
    for j in word:
        mask |= 1 << (j - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def mask_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return codeword_key(from_mask(mask))


def format_codeword(word: Iterable[int]) -> str:
    items = sorted(word)
    return "".join(map(str, items)) if items else "∅"


@dataclass(frozen=True)
class NeuralCode:
    """A collection of codewords on ``n`` neurons.

    ``codewords`` keeps whatever order it was built with; use
    :func:`canonicalize` to obtain the deduplicated canonical form.
    """

    n: int
    codewords: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise BadParameter(f"neuron count must be non-negative, got {self.n}")
        words = tuple(frozenset(w) for w in self.codewords)
        for w in words:
            for j in w:
                if not 1 <= j <= self.n:
                    raise BadParameter(f"neuron index {j} outside 1..{self.n}")
        object.__setattr__(self, "codewords", words)

    @classmethod
    def of(cls, n: int, words: Iterable[Iterable[int]]) -> NeuralCode:
        """Build and canonicalize in one step."""
        return canonicalize(cls(n, tuple(frozenset(w) for w in words)))

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.codewords)

    def __len__(self) -> int:
        return len(self.codewords)

    def __contains__(self, word: object) -> bool:
        return frozenset(word) in set(self.codewords)  # type: ignore[arg-type]

    @property
    def has_empty(self) -> bool:
        return frozenset() in self.codewords

    @property
    def nonempty(self) -> tuple[frozenset[int], ...]:
        return tuple(w for w in self.codewords if w)

    @property
    def k(self) -> int:
        """Number of distinct nonempty codewords."""
        return len(set(self.nonempty))

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(to_mask(w) for w in self.codewords)

    def is_canonical(self) -> bool:
        return self == canonicalize(self)

    def __str__(self) -> str:
        return "{" + ", ".join(format_codeword(w) for w in self.codewords) + "}"


def canonicalize(code: NeuralCode) -> NeuralCode:
    unique = sorted(set(code.codewords), key=codeword_key)
    return NeuralCode(code.n, tuple(unique))


def require_codewords(code: NeuralCode) -> None:
    if not code.codewords:
        raise EmptyCode("the code has no codewords")


def require_nonempty_codeword(code: NeuralCode) -> None:
    require_codewords(code)
    if not code.nonempty:
        raise EmptyCode("the code has no nonempty codewords")


# -- text / JSON --------------------------------------------------------------


def parse_code(text: str, strict: bool = False) -> NeuralCode:
    """Parse a code document (line format, or the JSON alternative).

    The line format has optional ``#`` comments, an optional ``n=<int>``
    header, one codeword per line as strictly increasing integers, and ``-``
    for the empty codeword. Codewords are returned in listing order; in
    strict mode a repeated codeword is an error.
    """
    if text.lstrip().startswith("{"):
        return code_from_json(json.loads(text), strict=strict)

    declared_n: int | None = None
    words: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if declared_n is not None or words:
                raise MalformedLine(lineno, raw, "header must precede codewords")
            try:
                declared_n = int(line[2:])
            except ValueError:
                raise MalformedLine(lineno, raw, "bad neuron count") from None
            if declared_n < 0:
                raise MalformedLine(lineno, raw, "negative neuron count")
            continue
        if line == "-":
            word: frozenset[int] = frozenset()
        else:
            indices = []
            for token in line.split():
                try:
                    j = int(token)
                except ValueError:
                    raise MalformedLine(lineno, raw, f"non-integer token {token!r}") from None
                if j < 1:
                    raise MalformedLine(lineno, raw, f"index {j} < 1")
                if declared_n is not None and j > declared_n:
                    raise MalformedLine(lineno, raw, f"index {j} > n={declared_n}")
                if indices and j <= indices[-1]:
                    raise MalformedLine(lineno, raw, "indices must be strictly increasing")
                indices.append(j)
            word = frozenset(indices)
        if word in seen and strict:
            raise DuplicateCodeword(f"line {lineno}: codeword {format_codeword(word)} repeated")
        seen.add(word)
        words.append(word)

    if not words:
        raise EmptyCode("no codeword lines")
    n = declared_n if declared_n is not None else max((max(w) for w in words if w), default=0)
    return NeuralCode(n, tuple(words))


def format_code(code: NeuralCode) -> str:
    """Canonical text form, without a trailing newline."""
    lines = [f"n={code.n}"]
    for w in canonicalize(code).codewords:
        lines.append(" ".join(map(str, sorted(w))) if w else "-")
    return "\n".join(lines)


def code_to_json(code: NeuralCode) -> dict:
    return {"n": code.n, "codewords": [sorted(w) for w in code.codewords]}


def code_from_json(data: dict, strict: bool = False) -> NeuralCode:
    try:
        n = int(data["n"])
        raw_words = data["codewords"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedLine(0, json.dumps(data)[:80], f"bad code JSON ({exc})") from None
    words = []
    for idx, raw in enumerate(raw_words):
        if not all(isinstance(j, int) for j in raw):
            raise MalformedLine(idx + 1, str(raw), "non-integer index")
        if list(raw) != sorted(set(raw)):
            raise MalformedLine(idx + 1, str(raw), "indices must be strictly increasing")
        if any(j < 1 or j > n for j in raw):
            raise MalformedLine(idx + 1, str(raw), f"index outside 1..{n}")
        words.append(frozenset(raw))
    if not words:
        raise EmptyCode("no codewords")
    if strict and len(set(words)) != len(words):
        raise DuplicateCodeword("repeated codeword in JSON input")
    return NeuralCode(n, tuple(words))


# -- simplicial complex ---------------------------------------------------------


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=lambda m: (-bin(m).count("1"), mask_key(m)))
    kept: list[int] = []
    for m in ordered:
        if not any(m & f == m for f in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of faces, stored by its maximal faces."""

    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        masks = _maximal_masks(to_mask(f) for f in self.facets)
        facets = tuple(sorted((from_mask(m) for m in masks), key=codeword_key))
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "_facet_masks", tuple(to_mask(f) for f in facets))

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facet_masks  # type: ignore[attr-defined]

    def contains_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facet_masks)

    def __contains__(self, face: object) -> bool:
        return self.contains_mask(to_mask(face))  # type: ignore[arg-type]

    def faces(self) -> list[frozenset[int]]:
        """Every face, in canonical order. Exponential in facet size."""
        out: set[int] = set()
        for f in self.facet_masks:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted((from_mask(m) for m in out), key=codeword_key)


def simplicial_complex(code: NeuralCode) -> SimplicialComplex:
    require_codewords(code)
    return SimplicialComplex(code.n, tuple(set(code.codewords)))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _minimize(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: bin(m).count("1")):
        if not any(s & m == s for s in kept):
            kept.append(m)
    return kept


def minimal_nonfaces(complex_: SimplicialComplex) -> tuple[frozenset[int], ...]:
    """Inclusion-minimal subsets of ``[n]`` that are not faces.

    A set is a non-face exactly when it meets the complement of every
    facet, so the minimal non-faces are the minimal transversals of the
    facet complements (computed incrementally, one complement at a time).
    """
    full = (1 << complex_.n) - 1
    transversals = [0]
    for f in complex_.facet_masks:
        edge = full & ~f
        grown = []
        for t in transversals:
            if t & edge:
                grown.append(t)
            else:
                grown.extend(t | v for v in _bits(edge))
        transversals = _minimize(grown)
        if not transversals:
            break
    return tuple(sorted((from_mask(m) for m in transversals), key=codeword_key))


# -- generators and predicates ---------------------------------------------------


def generate_Cn(n: int) -> NeuralCode:
    """The code of all (n-1)-subsets of [n]."""
    if n < 2:
        raise BadParameter(f"C_n needs n >= 2, got {n}")
    full = frozenset(range(1, n + 1))
    return NeuralCode.of(n, (full - {j} for j in range(1, n + 1)))


def random_code(n: int, seed: int, include_empty_prob: Fraction | int | str = Fraction(1, 2)) -> NeuralCode:
    """Seeded random code: each nonempty subset kept on a fair coin.

    The empty codeword is included with probability ``include_empty_prob``.
    Draws are repeated until at least one nonempty codeword survives.
    """
    p = Fraction(include_empty_prob)
    if n < 1:
        raise BadParameter(f"random_code needs n >= 1, got {n}")
    if not 0 <= p <= 1:
        raise BadParameter(f"probability {p} outside [0, 1]")
    rng = random.Random(seed)
    while True:
        masks = [m for m in range(1, 1 << n) if rng.getrandbits(1)]
        if masks:
            break
    if rng.randrange(p.denominator) < p.numerator:
        masks.append(0)
    return NeuralCode.of(n, (from_mask(m) for m in masks))


def maximal_codewords(code: NeuralCode) -> tuple[frozenset[int], ...]:
    masks = _maximal_masks(to_mask(w) for w in code.codewords)
    return tuple(sorted((from_mask(m) for m in masks), key=codeword_key))


def is_max_intersection_complete(code: NeuralCode) -> bool:
    """True iff every intersection of maximal codewords is a codeword."""
    require_nonempty_codeword(code)
    present = code.masks
    closure = {to_mask(w) for w in maximal_codewords(code)}
    frontier = set(closure)
    while frontier:
        new = {a & b for a in frontier for b in closure} - closure
        closure |= new
        frontier = new
    return closure <= present


def all_codes(n: int) -> Iterator[NeuralCode]:
    """Every nonempty collection of subsets of [n] (2^(2^n) - 1 codes)."""
    subsets = range(1 << n)
    for selector in range(1, 1 << (1 << n)):
        yield NeuralCode.of(n, (from_mask(m) for m in subsets if selector >> m & 1))


def parse_words(n: int, words: Sequence[str]) -> NeuralCode:
    """Build the code written compactly, as in ``{∅, 12, 34, 123}`` (n <= 9)."""
    out = []
    for w in words:
        w = w.strip()
        out.append(frozenset() if w in ("", "∅", "-") else frozenset(int(c) for c in w))
    return NeuralCode.of(n, out)
