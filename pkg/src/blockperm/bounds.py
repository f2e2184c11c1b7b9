"""Size bounds for block-permutation codes, all in exact integer/rational
arithmetic (no floating point anywhere in this module).

For odd minimum distance d = 2t+1 the classical pair is

    gv_lower:   n! / |ball(n, 2t)|  <=  max code size  <=  n! / |ball(n, t)|   :sp_upper

where balls can be enumerated exactly (small n) or replaced by their product
estimates.  The estimate used for the sphere-packing side is n! divided by
the *upper* ball product, i.e. (n-t-1)!; that is a floor of the true
sphere-packing value, the conventional way these tables are quoted.

The newer upper bound counts (n-d)-subsets of characteristic sets:

    new_upper = C(n, d)^2 (n-d)! / C(n-1, n-d)

which beats (n-t-1)! whenever ``corollary_applies`` holds.  Lower bounds are
rounded up, upper bounds down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import DEFAULT_MAX_N, ball_size_exact

#: the published comparison rows: (n, d) -> (sphere-packing estimate, new bound)
TABLE1_PUBLISHED = {
    (13, 9): (40320, 24787),
    (15, 11): (362880, 44672),
    (16, 11): (3628800, 762415),
    (17, 11): (39916800, 13771113),
    (17, 13): (3628800, 74696),
    (18, 11): (479001600, 262461363),
    (18, 13): (39916800, 1423607),
    (19, 11): (6227020800, 5263805324),
    (19, 13): (479001600, 28551213),
    (20, 13): (6227020800, 601078154),
}

#: the published new-bound column rounds inconsistently; allow one off
TABLE1_TOLERANCE = 1


def _odd_radius(d: int) -> int:
    if d < 1:
        raise ValueError(f"distance must be positive, got {d}")
    if d % 2 == 0:
        raise ValueError(
            f"ball bounds are stated for odd d = 2t+1 only, got d={d}; "
            f"query d+1={d + 1} for the stronger requirement instead")
    return (d - 1) // 2


def _sandwich_radius_ok(n: int, r: int) -> bool:
    # integer form of r <= n - sqrt(n) - 1
    return n - r - 1 >= 0 and (n - r - 1) ** 2 >= n


def _require_sandwich_radius(n: int, r: int):
    if not _sandwich_radius_ok(n, r):
        raise ValueError(f"product ball estimate needs radius <= n - sqrt(n) - 1; "
                         f"(n, radius) = ({n}, {r}) fails")


def gv_lower(n: int, d: int, mode: str = "exact", max_n: int = DEFAULT_MAX_N) -> int:
    """Existence lower bound ceil(n! / |ball(n, d-1)|) for odd d."""
    t = _odd_radius(d)
    fact = math.factorial(n)
    if mode == "exact":
        ball = ball_size_exact(n, min(2 * t, n - 1), max_n=max_n).size
    elif mode == "estimate":
        _require_sandwich_radius(n, 2 * t)
        ball = math.prod(range(n - 2 * t, n + 1))
    else:
        raise ValueError(f"mode must be 'exact' or 'estimate', got {mode!r}")
    return -(-fact // ball)


def sp_upper(n: int, d: int, mode: str = "exact", max_n: int = DEFAULT_MAX_N) -> int:
    """Packing upper bound floor(n! / |ball(n, t)|) for odd d = 2t+1.

    In "estimate" mode the ball is replaced by its upper product, giving
    (n-t-1)!, an optimistic floor of the true sphere-packing value.
    """
    t = _odd_radius(d)
    if mode == "exact":
        ball = ball_size_exact(n, min(t, n - 1), max_n=max_n).size
        return math.factorial(n) // ball
    if mode == "estimate":
        _require_sandwich_radius(n, t)
        return math.factorial(n - t - 1)
    raise ValueError(f"mode must be 'exact' or 'estimate', got {mode!r}")


def new_upper(n: int, d: int) -> tuple[Fraction, int]:
    """Exact rational C(n,d)^2 (n-d)! / C(n-1, n-d) and its floor."""
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got (n, d) = ({n}, {d})")
    exact = Fraction(math.comb(n, d) ** 2 * math.factorial(n - d), math.comb(n - 1, n - d))
    return exact, exact.numerator // exact.denominator


def special_exact(n: int, d: int) -> int | None:
    """Known exact maximum code sizes, where the distance pins them down.

    d=1 admits everything (n!), d=2 admits one permutation per rotation class
    ((n-1)!), d > n-1 exceeds the diameter (singletons only), and d = n-1
    gives n except for the two small failures (3,2) -> 2 and (5,4) -> 4.
    """
    if d > n - 1:
        return 1
    if d == 1:
        return math.factorial(n)
    if d == 2:
        return math.factorial(n - 1)
    if d == n - 1:
        if n == 5:
            return 4
        return n
    return None


def corollary_applies(n: int, d: int) -> bool:
    """True when the new bound provably does not exceed the packing estimate:
    odd d = 2t+1 with t <= n - sqrt(n) - 1, n * prod_{i=0..t}(n-i) <= d * d!,
    and d <= n-1."""
    t = _odd_radius(d)
    if d > n - 1:
        return False
    if n - t - 1 < 0 or (n - t - 1) ** 2 < n:
        return False
    return n * math.prod(range(n - t, n + 1)) <= d * math.factorial(d)


@dataclass(frozen=True)
class BoundReport:
    """One row of bound values for a given (n, d).

    ``bound_distance`` is the odd distance the GV / sphere-packing columns
    refer to; it equals d, or d+1 when d is even (those bounds are only
    stated for odd distances, so an even request reports the stronger
    requirement and says so here).  In estimate mode a GV or SP entry is None
    when its radius violates the product-sandwich hypothesis.
    """

    n: int
    d: int
    bound_distance: int
    gv_lower: int | None
    sp_upper: int | None
    new_upper: int
    new_upper_exact: Fraction
    exact_mode: bool
    corollary_applies: bool


def bound_report(n: int, d: int, exact: bool = False, max_n: int = DEFAULT_MAX_N) -> BoundReport:
    bd = d if d % 2 else d + 1
    t = (bd - 1) // 2
    mode = "exact" if exact else "estimate"
    gv = sp = None
    if exact or _sandwich_radius_ok(n, 2 * t):
        gv = gv_lower(n, bd, mode, max_n=max_n)
    if exact or _sandwich_radius_ok(n, t):
        sp = sp_upper(n, bd, mode, max_n=max_n)
    exact_frac, floor = new_upper(n, d)
    return BoundReport(
        n=n,
        d=d,
        bound_distance=bd,
        gv_lower=gv,
        sp_upper=sp,
        new_upper=floor,
        new_upper_exact=exact_frac,
        exact_mode=exact,
        corollary_applies=corollary_applies(n, bd),
    )


def table1(rows=None) -> list[BoundReport]:
    """Estimate-mode reports for the published comparison rows (or any rows)."""
    rows = list(rows) if rows is not None else sorted(TABLE1_PUBLISHED)
    return [bound_report(n, d, exact=False) for n, d in rows]


def table1_deviations(reports, tolerance: int = TABLE1_TOLERANCE) -> list[str]:
    """Mismatches of reports against the published rows, empty when all agree
    (sphere-packing exactly, new bound within the tolerance)."""
    problems = []
    for rep in reports:
        published = TABLE1_PUBLISHED.get((rep.n, rep.d))
        if published is None:
            continue
        sp, new = published
        if rep.sp_upper != sp:
            problems.append(f"({rep.n},{rep.d}): sphere-packing {rep.sp_upper} != published {sp}")
        if abs(rep.new_upper - new) > tolerance:
            problems.append(f"({rep.n},{rep.d}): new bound {rep.new_upper} "
                            f"off published {new} by more than {tolerance}")
    return problems


def bound_report_payload(report: BoundReport) -> dict:
    return {
        "n": report.n,
        "d": report.d,
        "bound_distance": report.bound_distance,
        "gv_lower": report.gv_lower,
        "sp_upper": report.sp_upper,
        "new_upper": report.new_upper,
        "new_upper_exact": f"{report.new_upper_exact.numerator}/{report.new_upper_exact.denominator}",
        "exact_mode": report.exact_mode,
        "corollary_applies": report.corollary_applies,
    }


def bound_report_from_payload(payload: dict) -> BoundReport:
    num, den = payload["new_upper_exact"].split("/")
    gv, sp = payload["gv_lower"], payload["sp_upper"]
    return BoundReport(
        n=int(payload["n"]),
        d=int(payload["d"]),
        bound_distance=int(payload["bound_distance"]),
        gv_lower=None if gv is None else int(gv),
        sp_upper=None if sp is None else int(sp),
        new_upper=int(payload["new_upper"]),
        new_upper_exact=Fraction(int(num), int(den)),
        exact_mode=bool(payload["exact_mode"]),
        corollary_applies=bool(payload["corollary_applies"]),
    )
