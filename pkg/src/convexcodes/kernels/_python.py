"""Pure-Python kernels. Same contracts as the compiled ``_native`` module.

All sets are bitmasks: neuron j is bit j-1, and a family of supports on n
neurons is a bitmask over the 2^n possible supports (bit s set when
support s occurs; bit 0 is the empty support).
"""

from __future__ import annotations

from typing import Iterable

NAME = "python"


def face_table(n: int, facet_masks: Iterable[int]) -> bytes:
    """Indicator table over all 2^n subsets of the downward closure of the facets."""
    size = 1 << n
    table = bytearray(size)
    for f in facet_masks:
        table[f] = 1
    for b in range(n):
        bit = 1 << b
        for mask in range(size):
            if mask & bit and table[mask]:
                table[mask ^ bit] = 1
    return bytes(table)


def minimal_nonfaces(n: int, table: bytes) -> list[int]:
    out = []
    for s in range(1 << n):
        if table[s]:
            continue
        rest = s
        minimal = True
        while rest:
            low = rest & -rest
            rest ^= low
            if not table[s ^ low]:
                minimal = False
                break
        if minimal:
            out.append(s)
    return out


def _all_small_subsets_faces(s: int, size: int, table: bytes) -> bool:
    sub = s
    while True:
        if bin(sub).count("1") == size and not table[sub]:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & s


def helly_violations(n: int, table: bytes, d: int) -> list[int]:
    """Every non-face of size >= d+2 whose (d+1)-subsets are all faces."""
    return [
        s
        for s in range(1 << n)
        if not table[s] and bin(s).count("1") >= d + 2 and _all_small_subsets_faces(s, d + 1, table)
    ]


def helly_bound(n: int, table: bytes) -> int:
    """Least d >= 0 admitting no violation."""
    for d in range(n + 1):
        if not helly_violations(n, table, d):
            return d
    return n


def realizable_1d_masks(n: int, t: int) -> frozenset[int]:
    """Every family of cell supports produced by some run assignment on 2t+1 cells.

    Unpruned: every neuron ranges over the empty run and every contiguous
    cell range. Only the last neuron is handled in closed form, using
    prefix and suffix unions of the partial supports.
    """
    m = 2 * t + 1
    if n == 0:
        return frozenset({1})
    runs = [(lo, hi) for lo in range(m) for hi in range(lo, m)]
    results: set[int] = set()
    last_bit = 1 << (n - 1)

    def finish(cells: list[int]) -> None:
        prefix = [0] * (m + 1)
        for c in range(m):
            prefix[c + 1] = prefix[c] | (1 << cells[c])
        suffix = [0] * (m + 1)
        for c in range(m - 1, -1, -1):
            suffix[c] = suffix[c + 1] | (1 << cells[c])
        results.add(prefix[m])
        for lo in range(m):
            mid = 0
            for hi in range(lo, m):
                mid |= 1 << (cells[hi] | last_bit)
                results.add(prefix[lo] | mid | suffix[hi + 1])

    def assign(j: int, cells: list[int]) -> None:
        if j == n - 1:
            finish(cells)
            return
        assign(j + 1, cells)
        bit = 1 << j
        for lo, hi in runs:
            nxt = cells[:]
            for c in range(lo, hi + 1):
                nxt[c] |= bit
            assign(j + 1, nxt)

    assign(0, [0] * m)
    return frozenset(results)
