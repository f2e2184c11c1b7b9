"""Exhaustive statistics over S_n for the block permutation metric.

Distance spheres around the identity, the closed-form sphere count, and ball
sizes with their product sandwich bounds.  Everything here is exact integer
arithmetic; the full-group scans carry a size guard because they walk all n!
permutations.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class SphereProfile:
    """counts[k] = number of permutations at block distance k from the identity."""

    n: int
    counts: tuple[int, ...]

    def ball(self, t: int) -> int:
        return sum(self.counts[: t + 1])


@dataclass(frozen=True)
class BallSize:
    n: int
    t: int
    size: int


def _sphere_counts_slice(n: int, start: int, stop: int) -> list[int]:
    """Distance histogram over one lexicographic slice of S_n.

    A pair (a, b) is an identity adjacency exactly when b = a + 1, so the
    distance to the identity is the number of adjacent pairs failing that.
    """
    counts = [0] * n
    perms = itertools.islice(itertools.permutations(range(1, n + 1)), start, stop)
    for p in perms:
        k = 0
        prev = p[0]
        for cur in p[1:]:
            if cur != prev + 1:
                k += 1
            prev = cur
        counts[k] += 1
    return counts


def enumerate_spheres(n: int, max_n: int = DEFAULT_MAX_N, workers: int = 1) -> SphereProfile:
    """Scan all of S_n and histogram block distances to the identity.

    With workers > 1 the lexicographic index range is split into equal slices
    counted in separate processes; the per-slice histograms merge by addition,
    so the result does not depend on the worker count.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds enumeration guard {max_n}")
    total = math.factorial(n)
    if workers <= 1 or total < 2 * workers:
        return SphereProfile(n, tuple(_sphere_counts_slice(n, 0, total)))
    step = -(-total // workers)
    slices = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    counts = [0] * n
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_sphere_counts_slice, *zip(*slices)):
            counts = [a + b for a, b in zip(counts, part)]
    return SphereProfile(n, tuple(counts))


def myers_count(n: int, k: int) -> int:
    """Closed-form size of the distance-k sphere, 1 <= k <= n-1.

    Evaluates k! C(n-1, k) * sum_{i=0..k} (-1)^(k-i) (i+1) / (k-i)! in exact
    rational arithmetic; the sum is an inclusion-exclusion over retained
    identity adjacencies and must come out integral.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in [1, n-1], got k={k} with n={n}")
    acc = sum(Fraction((-1) ** (k - i) * (i + 1), math.factorial(k - i)) for i in range(k + 1))
    value = math.factorial(k) * math.comb(n - 1, k) * acc
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral sphere count for n={n}, k={k}: {value}")
    return int(value)


def ball_size_exact(n: int, t: int, max_n: int = DEFAULT_MAX_N, workers: int = 1) -> BallSize:
    """Exact number of permutations within block distance t of any center.

    Left-invariance of the metric makes the size center-independent, so the
    count is taken around the identity.
    """
    if not 0 <= t <= n - 1:
        raise ValueError(f"radius t must lie in [0, n-1], got t={t} with n={n}")
    profile = enumerate_spheres(n, max_n=max_n, workers=workers)
    return BallSize(n, t, profile.ball(t))


def ball_size_bounds(n: int, t: int) -> tuple[int, int]:
    """Product sandwich for the t-ball size, valid for t <= n - sqrt(n) - 1.

    Returns (prod_{i=1..t} (n-i), prod_{i=0..t} (n-i)); empty products are 1.
    The hypothesis is tested in exact integer form: n-t-1 >= 0 and
    (n-t-1)^2 >= n, avoiding any floating-point boundary doubt.
    """
    if t < 0:
        raise ValueError(f"radius t must be nonnegative, got {t}")
    if n - t - 1 < 0 or (n - t - 1) ** 2 < n:
        raise ValueError(f"sandwich bounds need t <= n - sqrt(n) - 1; (n, t) = ({n}, {t}) fails")
    lower = math.prod(range(n - t, n))
    upper = math.prod(range(n - t, n + 1))
    return lower, upper


def sphere_profile_payload(profile: SphereProfile) -> dict:
    return {"n": profile.n, "counts": list(profile.counts)}


def sphere_profile_from_payload(payload: dict) -> SphereProfile:
    return SphereProfile(int(payload["n"]), tuple(int(c) for c in payload["counts"]))
