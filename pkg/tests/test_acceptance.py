"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``).
"""

import json
import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction
from pathlib import Path

import pytest

from convexcodes.bounds import (
    DimensionBounds,
    embedding_dimension_bounds,
    helly_lower_bound,
    helly_lower_bound_bruteforce,
    helly_violation,
    helly_violation_bruteforce,
)
from convexcodes.code import (
    NeuralCode,
    all_codes,
    code_from_json,
    code_to_json,
    format_code,
    generate_Cn,
    parse_code,
    parse_words,
    random_code,
)
from convexcodes.construction import (
    ConstructedRealization,
    Stimulus,
    atoms_containing,
    codeword_at,
    construct,
    random_atom_point,
    random_rational_lambda,
    random_simplex_point,
    realized_code,
    verify_construction,
)
from convexcodes.intervals import (
    NEG_INF,
    POS_INF,
    Line,
    Realization1D,
    conjecture1_batch,
    conjecture1_check,
    random_realization_1d,
    realized_code_1d,
)
from convexcodes.render import render_svg_1d, render_svg_2d
from convexcodes.search1d import assignment_to_realization, search_dim1

from oracles import as_tuples, dense_sample_code

GOLDEN = Path(__file__).parent / "golden"
STRESS = ("(0,1]", "(0,1]", "[1,2)", "(1,2)")
fs = frozenset


@pytest.fixture
def announce(capsys):
    def emit(number, ok, elapsed, detail=""):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[{status}] criterion {number}: {detail} ({elapsed:.2f}s)")

    return emit


def sampled(r):
    return dense_sample_code(r.n, as_tuples(r), r.stimulus is Line.WHOLE_LINE)


def test_criterion_1_sample_construction(announce):
    start = time.perf_counter()
    code = parse_words(4, ["", "12", "34", "123"])
    r = construct(code)
    ok = (
        r.atoms_per_neuron == (fs({1, 3}), fs({1, 3}), fs({2, 3}), fs({2}))
        and r.ambient_dim == 2
        and r.stimulus is Stimulus.WHOLE_SPACE
        and realized_code(r) == code
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1
    announce(1, ok, elapsed, "example construction atoms, R^2, whole space, code recovered")
    assert ok


def test_criterion_2_construction_at_desk_scale(announce):
    start = time.perf_counter()
    failures = []
    exhaustive = 0
    for n in (1, 2, 3):
        for code in all_codes(n):
            exhaustive += 1
            if not verify_construction(code).passed:
                failures.append(str(code))
    rng = random.Random(20240601)
    for _ in range(1000):
        code = random_code(rng.choice((4, 5, 6)), rng.getrandbits(48))
        if not verify_construction(code, seed=rng.getrandbits(32)).passed:
            failures.append(str(code))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    announce(2, ok, elapsed, f"{exhaustive} exhaustive + 1000 random codes, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_3_atom_geometry(announce):
    start = time.perf_counter()
    rng = random.Random(7)
    partition_bad = 0
    for _ in range(1000):
        k = rng.randint(1, 7)
        r = construct(NeuralCode.of(k, ({j} for j in range(1, k + 1))))
        p = random_simplex_point(rng, k, r.ambient_dim)
        if len(atoms_containing(r, p)) != 1:
            partition_bad += 1
    convex_bad = 0
    pairs = 0
    while pairs < 10_000:
        r = construct(random_code(rng.randint(1, 6), rng.getrandbits(32)))
        for j, atoms in enumerate(r.atoms_per_neuron, start=1):
            if not atoms or pairs >= 10_000:
                continue
            choices = sorted(atoms)
            p = random_atom_point(rng, rng.choice(choices), r.ambient_dim)
            q = random_atom_point(rng, rng.choice(choices), r.ambient_dim)
            for lam in (Fraction(1, 2), random_rational_lambda(rng)):
                word = codeword_at(r, tuple(lam * a + (1 - lam) * b for a, b in zip(p, q)))
                if word is None or j not in word:
                    convex_bad += 1
            pairs += 1
    elapsed = time.perf_counter() - start
    ok = partition_bad == 0 and convex_bad == 0
    announce(3, ok, elapsed, f"1000 simplex points ({partition_bad} bad), {pairs} pairs ({convex_bad} bad)")
    assert ok


def test_criterion_4_cn_bounds(announce):
    start = time.perf_counter()
    results = {n: embedding_dimension_bounds(generate_Cn(n)) for n in range(3, 9)}
    ok = all(
        (b.lower, b.upper) == (n - 1, n - 1) and b.lower_witness == fs(range(1, n + 1))
        for n, b in results.items()
    )
    seq = [results[n] for n in range(3, 9)]
    ok = ok and all(a.lower < b.lower and a.upper < b.upper for a, b in zip(seq, seq[1:]))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10
    shown = ", ".join(f"C{n}=({b.lower},{b.upper})" for n, b in results.items())
    announce(4, ok, elapsed, shown)
    assert ok


def test_criterion_5_helly_equivalence(announce):
    start = time.perf_counter()
    mismatches = []
    checked = 0

    def compare(code):
        bound = helly_lower_bound(code)
        if bound != helly_lower_bound_bruteforce(code):
            mismatches.append(str(code))
        elif bound > 0 and helly_violation(code, bound - 1) != helly_violation_bruteforce(code, bound - 1):
            mismatches.append(str(code))

    for n in range(1, 5):
        for code in all_codes(n):
            compare(code)
            checked += 1
    rng = random.Random(555)
    for _ in range(500):
        compare(random_code(rng.choice((5, 6)), rng.getrandbits(48)))
        checked += 1
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300
    announce(5, ok, elapsed, f"{checked} codes compared, {len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_criterion_6_dimension_one(announce):
    start = time.perf_counter()
    c3_none = search_dim1(generate_Cn(3)) is None
    code = parse_words(4, ["", "12", "34", "123"])
    found = search_dim1(code)
    ok = c3_none and found is not None
    if found is not None:
        r = assignment_to_realization(found)
        ok = ok and realized_code_1d(r) == code and sampled(r) == set(code.codewords)
    rechecked = 0
    for seed in range(100):
        other = random_code(3, seed)
        hit = search_dim1(other)
        if hit is not None:
            rechecked += 1
            ok = ok and realized_code_1d(assignment_to_realization(hit)) == other
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30
    where = found.to_json() if found else None
    announce(6, ok, elapsed, f"C3 none={c3_none}; example on the line {where}; {rechecked} more rechecked")
    assert ok


def test_criterion_7_openification_harness(announce):
    start = time.perf_counter()
    a = [conjecture1_check(Realization1D.of(*s)) for s in (("[0,1]", "[1,2]"), ("[0,1]", "(1,2]"))]
    ok_a = all(rep.equal for rep in a)

    stress = conjecture1_check(Realization1D.of(*STRESS))
    ok_b = (
        not stress.equal
        and stress.after == parse_words(4, ["", "12", "123", "3", "34"])
        and sampled(stress.realization_before) == set(stress.before.codewords)
        and sampled(stress.realization_after) == set(stress.after.codewords)
    )

    batch = conjecture1_batch(1000, 3, 1)
    again = conjecture1_batch(1000, 3, 1)
    ok_c = len(batch) == 1000 and [r.to_json() for r in batch] == [r.to_json() for r in again]
    unequal = 0
    for rep in batch:
        ok_c = ok_c and sampled(rep.realization_before) == set(rep.before.codewords)
        ok_c = ok_c and sampled(rep.realization_after) == set(rep.after.codewords)
        ok_c = ok_c and rep.equal == (rep.before == rep.after)
        unequal += not rep.equal
    elapsed = time.perf_counter() - start
    ok = ok_a and ok_b and ok_c and elapsed < 120
    announce(7, ok, elapsed, f"(a) {ok_a} (b) {ok_b} (c) {ok_c}: batch of 1000, {unequal} codes changed")
    assert ok


def test_criterion_8_sweep_vs_sampling(announce):
    start = time.perf_counter()
    mismatches = 0
    seen = {"point": 0, "shared": 0, "ray": 0}
    for seed in range(1000):
        r = random_realization_1d(1 + seed % 5, seed, unbounded=True)
        if seed % 7 == 0:
            r = Realization1D(r.n, r.intervals, Line.UNION_ONLY)
        ends = [e for iv in r.intervals for e in iv.finite_endpoints()]
        seen["shared"] += len(ends) != len(set(ends))
        seen["point"] += any(not iv.empty and iv.lo == iv.hi for iv in r.intervals)
        seen["ray"] += any(not iv.empty and (iv.lo == NEG_INF or iv.hi == POS_INF) for iv in r.intervals)
        if set(realized_code_1d(r).codewords) != sampled(r):
            mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and all(seen.values()) and elapsed < 60
    announce(8, ok, elapsed, f"1000 instances, {mismatches} mismatches, coverage {seen}")
    assert ok


def test_criterion_9_interfaces(announce):
    start = time.perf_counter()
    rng = random.Random(99)
    ok = True
    for _ in range(300):
        code = random_code(rng.randint(1, 7), rng.getrandbits(32))
        ok = ok and parse_code(format_code(code)) == code
        ok = ok and code_from_json(json.loads(json.dumps(code_to_json(code)))) == code
        r = construct(code)
        ok = ok and ConstructedRealization.from_json(json.loads(json.dumps(r.to_json()))) == r
        b = embedding_dimension_bounds(code)
        ok = ok and DimensionBounds.from_json(json.loads(json.dumps(b.to_json()))) == b
    for seed in range(300):
        r1 = random_realization_1d(3, seed)
        ok = ok and Realization1D.from_json(json.loads(json.dumps(r1.to_json()))) == r1

    svgs = {
        "sample_construction.svg": render_svg_2d(construct(parse_words(4, ["", "12", "34", "123"]))),
        "stress_1d.svg": render_svg_1d(Realization1D.of(*STRESS)),
    }
    for name, svg in svgs.items():
        ET.fromstring(svg.encode("utf-8"))
        ok = ok and svg == (GOLDEN / name).read_text(encoding="utf-8")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10
    announce(9, ok, elapsed, "code/JSON round trips, SVGs well-formed and equal to golden files")
    assert ok
