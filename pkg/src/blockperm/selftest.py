"""End-to-end acceptance checks for the whole library.

Each criterion is a self-contained verification at desk scale; ``run_all``
executes them in order and reports one line each.  A criterion that cannot
run completely under a reduced size guard reports "skip" instead of
pretending to pass.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass

from . import bounds as bounds_mod
from .constructions import (
    PairEncoder,
    even_n_code,
    ham_decomp_code,
    syndrome_classes,
    verify_min_distance,
    zn1_code,
)
from .enumeration import ball_size_bounds, ball_size_exact, enumerate_spheres, myers_count
from .graph import build_graph, exact_independent_set, jv_lower_formula, neighborhood_stats
from .perm import block_distance, char_set, compose, distance_by_definition, from_one_line

FULL_MAX_N = 7


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str


def _result(number, name, ok, complete, detail) -> CriterionResult:
    status = "fail" if not ok else ("pass" if complete else "skip")
    return CriterionResult(number, name, status, detail)


def criterion_1_worked_example(max_n: int = FULL_MAX_N) -> CriterionResult:
    """The 9-element example pair is at distance 3 by both routes, fast."""
    start = time.perf_counter()
    p1 = from_one_line((4, 8, 3, 2, 6, 7, 5, 1, 9))
    p2 = from_one_line((6, 7, 8, 3, 2, 5, 1, 9, 4))
    fast = block_distance(p1, p2)
    slow = distance_by_definition(p1, p2, max_n=9)
    elapsed = time.perf_counter() - start
    ok = fast == 3 and slow == 3 and elapsed < 1.0
    return _result(1, "worked example distance", ok, True,
                   f"pair-count {fast}, cut-search {slow}, {elapsed:.3f}s")


def criterion_2_sphere_formula(max_n: int = FULL_MAX_N) -> CriterionResult:
    """Enumerated sphere sizes equal the closed formula for n = 3..7."""
    start = time.perf_counter()
    top = min(7, max_n)
    bad = []
    for n in range(3, top + 1):
        profile = enumerate_spheres(n, max_n=max_n)
        if sum(profile.counts) != math.factorial(n) or profile.counts[0] != 1:
            bad.append(f"n={n} mass")
        for k in range(1, n):
            if profile.counts[k] != myers_count(n, k):
                bad.append(f"n={n} k={k}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300.0
    detail = f"n=3..{top}, {elapsed:.2f}s" + (f"; mismatches {bad}" if bad else "")
    return _result(2, "sphere counts vs formula", ok, top == 7, detail)


def criterion_3_ball_sandwich(max_n: int = FULL_MAX_N) -> CriterionResult:
    """Product sandwich holds exactly for every admissible (n, t), n <= 7."""
    top = min(7, max_n)
    checked, bad = 0, []
    for n in range(1, top + 1):
        profile = enumerate_spheres(n, max_n=max_n)
        for t in range(n):
            if n - t - 1 < 0 or (n - t - 1) ** 2 < n:
                continue
            lower, upper = ball_size_bounds(n, t)
            size = profile.ball(t)
            checked += 1
            if not lower <= size <= upper:
                bad.append(f"(n={n}, t={t}): {lower} <= {size} <= {upper}")
    ok = not bad and checked > 0
    detail = f"{checked} admissible (n, t) pairs" + (f"; failed {bad}" if bad else "")
    return _result(3, "ball size sandwich", ok, top == 7, detail)


def criterion_4_bound_table(max_n: int = FULL_MAX_N) -> CriterionResult:
    """All ten published comparison rows reproduce within tolerance, fast."""
    start = time.perf_counter()
    problems = bounds_mod.table1_deviations(bounds_mod.table1())
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1.0
    detail = f"10 rows, {elapsed:.3f}s" + (f"; {problems}" if problems else "")
    return _result(4, "published bound table", ok, True, detail)


def criterion_5_syndrome_partition(max_n: int = FULL_MAX_N) -> CriterionResult:
    """Syndrome fibers partition S_n into codes of the designed distance."""
    start = time.perf_counter()
    bad = []
    scanned = []
    for n, d in itertools.product((5, 6), (3, 4)):
        if n > max_n:
            continue
        scanned.append(n)
        enc = PairEncoder.for_n(n)
        buckets = syndrome_classes(n, d, enc, max_n=max_n)
        if sum(len(ws) for ws in buckets.values()) != math.factorial(n):
            bad.append(f"(n={n}, d={d}): fiber sizes do not sum to n!")
        for words in buckets.values():
            sets = [char_set(w) for w in words]
            for i, si in enumerate(sets):
                for sj in sets[i + 1 :]:
                    if len(si - sj) < d:
                        bad.append(f"(n={n}, d={d}): fiber pair below distance {d}")
        floor = -(-math.factorial(n) // enc.q ** (d - 1))
        if max(len(ws) for ws in buckets.values()) < floor:
            bad.append(f"(n={n}, d={d}): largest fiber below pigeonhole floor {floor}")
    sampled = 0
    if max_n >= 7:
        n, d = 7, 3
        enc = PairEncoder.for_n(n)
        buckets = syndrome_classes(n, d, enc, max_n=max_n)
        if sum(len(ws) for ws in buckets.values()) != math.factorial(n):
            bad.append("(n=7, d=3): fiber sizes do not sum to n!")
        rich = [ws for ws in buckets.values() if len(ws) >= 2]
        weights = [len(ws) * (len(ws) - 1) // 2 for ws in rich]
        rng = random.Random(0x5A11)
        for words in rng.choices(rich, weights=weights, k=100_000):
            a, b = rng.sample(words, 2)
            sampled += 1
            if block_distance(a, b) < d:
                bad.append(f"(n=7, d=3): sampled fiber pair {a}, {b} below distance {d}")
                break
        for words in rich:  # cheap at this size, so also check every fiber pair
            sets = [char_set(w) for w in words]
            for i, si in enumerate(sets):
                for sj in sets[i + 1 :]:
                    if len(si - sj) < d:
                        bad.append("(n=7, d=3): fiber pair below distance 3")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300.0
    ran = f"n in {sorted(set(scanned))} exhaustive" if scanned else "no group scans ran"
    detail = (f"{ran}, n=7 sampled {sampled} fiber pairs, {elapsed:.2f}s"
              + (f"; {bad[:3]}" if bad else ""))
    return _result(5, "syndrome fibers are codes", ok, max_n >= 7, detail)


def criterion_6_max_distance_codes(max_n: int = FULL_MAX_N) -> CriterionResult:
    """The d = n-1 families: sizes, exact distances, and pair partitions."""
    bad = []

    def check(code, n):
        if len(code.words) != n:
            bad.append(f"{code.provenance} n={n}: {len(code.words)} words")
            return
        if verify_min_distance(code) != n - 1:
            bad.append(f"{code.provenance} n={n}: min distance != {n - 1}")
        pairs = [pr for w in code.words for pr in char_set(w)]
        if len(pairs) != len(set(pairs)) or len(set(pairs)) != n * (n - 1):
            bad.append(f"{code.provenance} n={n}: adjacency pairs do not partition")

    for n in (4, 6, 8, 10, 12):
        check(even_n_code(n), n)
    for n in (4, 6, 10, 12):
        check(zn1_code(n), n)
    found = ham_decomp_code(7)
    if found is None or len(found.words) != 7 or verify_min_distance(found) != 6:
        bad.append("hub-cycle search at n=7 did not yield 7 words at distance 6")
    else:
        check(found, 7)
    for n in (3, 5):
        if ham_decomp_code(n) is not None:
            bad.append(f"hub-cycle search claims a decomposition at n={n}")
    detail = "even n in {4..12}, n+1 prime in {4..12}, hub cycles at n=3,5,7" + (
        f"; {bad[:3]}" if bad else "")
    return _result(6, "maximum-distance constructions", not bad, True, detail)


def criterion_7_independence_numbers(max_n: int = FULL_MAX_N) -> CriterionResult:
    """Exact maximum code sizes from the solver: (3,2)->2, (4,2)->6, (5,4)->4."""
    if max_n < 5:
        return _result(7, "exact independence numbers", True, False,
                       f"needs n=5 graphs, guard is {max_n}")
    start = time.perf_counter()
    got = {case: len(exact_independent_set(build_graph(*case)).words)
           for case in ((3, 2), (4, 2), (5, 4))}
    elapsed = time.perf_counter() - start
    want = {(3, 2): 2, (4, 2): 6, (5, 4): 4}
    ok = got == want and elapsed < 300.0
    return _result(7, "exact independence numbers", ok, True, f"{got}, {elapsed:.2f}s")


def criterion_8_graph_structure(max_n: int = FULL_MAX_N) -> CriterionResult:
    """Regularity of the full graphs and absence of zero-overlap ring edges."""
    bad = []
    reg_top = min(6, max_n)
    for n in range(3, reg_top + 1):
        profile = enumerate_spheres(n, max_n=max_n)
        for d in range(1, 5):
            g = build_graph(n, d, max_n=max_n)
            expected = profile.ball(min(d - 1, n - 1)) - 1
            if any(deg != expected for deg in g.degrees()):
                bad.append(f"G({n},{d}) not {expected}-regular")
    ring_top = min(7, max_n)
    for n in range(3, ring_top + 1):
        for d in (3, 4):
            stats = neighborhood_stats(n, d, max_n=max_n)
            if stats.zero_x_edge_count != 0:
                bad.append(f"({n},{d}): {stats.zero_x_edge_count} zero-overlap edges")
    detail = (f"regularity n<={reg_top}, ring check n<={ring_top}"
              + (f"; {bad[:3]}" if bad else ""))
    complete = reg_top == 6 and ring_top == 7
    return _result(8, "graph structure", not bad, complete, detail)


def criterion_9_metric_axioms(max_n: int = FULL_MAX_N) -> CriterionResult:
    """Symmetry, left-invariance and the triangle inequality, exhaustively on
    S_4 and S_5 and on 10^5 random triples in S_7."""
    start = time.perf_counter()
    violations = 0
    exhausted = []
    for n in (4, 5):
        if n > max_n:
            continue
        exhausted.append(n)
        perms = list(itertools.permutations(range(1, n + 1)))
        size = len(perms)
        sets = [frozenset(zip(p, p[1:])) for p in perms]
        table = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                dij = len(sets[i] - sets[j])
                if dij != len(sets[j] - sets[i]):
                    violations += 1
                table[i][j] = table[j][i] = dij
        index = {p: i for i, p in enumerate(perms)}
        comp = [[index[compose(c, a)] for a in perms] for c in perms]
        for c in range(size):
            rowc = comp[c]
            for a in range(size):
                da, dca = table[a], table[rowc[a]]
                for b in range(size):
                    if dca[rowc[b]] != da[b]:
                        violations += 1
        for a in range(size):
            ta = table[a]
            for b in range(size):
                tab, tb = ta[b], table[b]
                for c in range(size):
                    if ta[c] > tab + tb[c]:
                        violations += 1
        for i in range(size):
            for j in range(size):
                if (table[i][j] == 0) != (i == j):
                    violations += 1
    sampled = 0
    if max_n >= 7:
        rng = random.Random(2759)
        labels = list(range(1, 8))
        for _ in range(100_000):
            a = tuple(rng.sample(labels, 7))
            b = tuple(rng.sample(labels, 7))
            c = tuple(rng.sample(labels, 7))
            sa, sb, sc = (frozenset(zip(p, p[1:])) for p in (a, b, c))
            dab = len(sa - sb)
            if dab != len(sb - sa):
                violations += 1
            if block_distance(compose(c, a), compose(c, b)) != dab:
                violations += 1
            if len(sa - sc) > dab + len(sb - sc):
                violations += 1
            sampled += 1
    elapsed = time.perf_counter() - start
    ok = violations == 0
    ran = ", ".join(f"S_{n}" for n in exhausted) or "none"
    detail = f"exhaustive on {ran}; {sampled} random S_7 triples; " \
             f"{violations} violations, {elapsed:.2f}s"
    return _result(9, "metric axioms", ok, max_n >= 7, detail)


def criterion_10_asymptotics_substitute(max_n: int = FULL_MAX_N) -> CriterionResult:
    """The asymptotic improvement claims are out of desk scale by declaration;
    the finite stand-in plugs measured graph parameters into the independence
    formula and checks it does not exceed the measured optimum on (4, 3)."""
    stats = neighborhood_stats(4, 3)
    value = jv_lower_formula(4, 3, stats)
    alpha = len(exact_independent_set(build_graph(4, 3)).words)
    ok = value <= alpha
    detail = (f"formula {value:.3f} <= measured maximum {alpha} on (4,3); "
              f"asymptotic statements themselves declared untestable at desk scale")
    return _result(10, "asymptotics stand-in", ok, True, detail)


CRITERIA = (
    criterion_1_worked_example,
    criterion_2_sphere_formula,
    criterion_3_ball_sandwich,
    criterion_4_bound_table,
    criterion_5_syndrome_partition,
    criterion_6_max_distance_codes,
    criterion_7_independence_numbers,
    criterion_8_graph_structure,
    criterion_9_metric_axioms,
    criterion_10_asymptotics_substitute,
)


def run_all(max_n: int = FULL_MAX_N) -> list[CriterionResult]:
    return [fn(max_n=max_n) for fn in CRITERIA]


def format_result(result: CriterionResult) -> str:
    return f"{result.status.upper():4s} criterion {result.number}: {result.name} ({result.detail})"
