"""Bounds on the minimal convex embedding dimension of a code.

Lower bounds come from Helly's theorem: if every (d+1)-subset of sigma is a
face of the nerve but sigma itself is not, no realization in R^d exists.
Such a sigma always contains a minimal non-face of size >= d+2, so the
minimal non-faces alone decide the bound. Upper bounds come from the
simplex-atom construction, optionally sharpened by the exact 1-D search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .code import (
    NeuralCode,
    canonicalize,
    from_mask,
    mask_key,
    minimal_nonfaces,
    require_codewords,
    simplicial_complex,
)
from .construction import construct
from .errors import BadParameter
from .search1d import search_dim1

BRUTE_FORCE_MAX_N = 12


class UpperSource(enum.Enum):
    THEOREM1 = "theorem1"
    DIM1_SEARCH = "dim1_search"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class DimensionBounds:
    lower: int
    upper: int
    lower_witness: frozenset[int] | None
    upper_source: UpperSource
    lower_source: str = "helly"

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise AssertionError(f"inconsistent bounds [{self.lower}, {self.upper}]")

    @property
    def tight(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "tight": self.tight,
            "lower_witness": sorted(self.lower_witness) if self.lower_witness is not None else None,
            "upper_source": self.upper_source.value,
            "lower_source": self.lower_source,
        }

    @classmethod
    def from_json(cls, data: dict) -> DimensionBounds:
        witness = data.get("lower_witness")
        return cls(
            lower=int(data["lower"]),
            upper=int(data["upper"]),
            lower_witness=frozenset(witness) if witness is not None else None,
            upper_source=UpperSource(data["upper_source"]),
            lower_source=data.get("lower_source", "helly"),
        )


def _nonfaces(code: NeuralCode) -> tuple[frozenset[int], ...]:
    require_codewords(code)
    return minimal_nonfaces(simplicial_complex(code))


def helly_violation(code: NeuralCode, d: int) -> frozenset[int] | None:
    """Least (size, then lexicographic) certificate that ``code`` has no realization in R^d."""
    if d < 0:
        raise BadParameter(f"dimension must be >= 0, got {d}")
    for rho in _nonfaces(code):  # already in canonical order
        if len(rho) >= d + 2:
            return rho
    return None


def helly_lower_bound(code: NeuralCode) -> int:
    sizes = [len(rho) for rho in _nonfaces(code)]
    return max(0, max(sizes, default=0) - 1)


# -- brute-force oracle over the full subset lattice -------------------------------


def _face_table(code: NeuralCode) -> bytes:
    require_codewords(code)
    if code.n > BRUTE_FORCE_MAX_N:
        raise BadParameter(f"brute-force Helly scan is capped at n <= {BRUTE_FORCE_MAX_N}, got n={code.n}")
    return kernels.face_table(code.n, simplicial_complex(code).facet_masks)


def helly_violation_bruteforce(code: NeuralCode, d: int) -> frozenset[int] | None:
    """Same contract as :func:`helly_violation`, by scanning every subset of [n]."""
    if d < 0:
        raise BadParameter(f"dimension must be >= 0, got {d}")
    found = kernels.helly_violations(code.n, _face_table(code), d)
    return from_mask(min(found, key=mask_key)) if found else None


def helly_lower_bound_bruteforce(code: NeuralCode) -> int:
    return kernels.helly_bound(code.n, _face_table(code))


def is_helly_certificate(code: NeuralCode, sigma: frozenset[int], d: int) -> bool:
    """Independent re-check: sigma is a non-face whose (d+1)-subsets are all faces."""
    cx = simplicial_complex(code)
    if len(sigma) < d + 2 or sigma in cx:
        return False
    return all(frozenset(sub) in cx for sub in combinations(sorted(sigma), d + 1))


# -- combined report ---------------------------------------------------------------


def embedding_dimension_bounds(code: NeuralCode, refine_with_search: bool = False) -> DimensionBounds:
    """Interval ``[lower, upper]`` containing the minimal convex embedding dimension."""
    require_codewords(code)
    code = canonicalize(code)
    lower = helly_lower_bound(code)
    witness = helly_violation(code, lower - 1) if lower > 0 else None
    upper = construct(code).ambient_dim
    source = UpperSource.THEOREM1 if code.k >= 2 else UpperSource.DEGENERATE
    lower_source = "helly"

    if refine_with_search and lower <= 1 and code.k >= 1 and upper > 0:
        found = search_dim1(code)
        if found is None:
            lower, lower_source = max(lower, 2), "dim1_search"
        else:
            best = 0 if found.t == 0 else 1
            if best < upper:
                upper, source = best, UpperSource.DIM1_SEARCH
    return DimensionBounds(lower, upper, witness, source, lower_source)


__all__ = [
    "DimensionBounds",
    "UpperSource",
    "embedding_dimension_bounds",
    "helly_lower_bound",
    "helly_lower_bound_bruteforce",
    "helly_violation",
    "helly_violation_bruteforce",
    "is_helly_certificate",
]
