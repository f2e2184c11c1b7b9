"""Size bounds: ball-based brackets and the subset-counting upper bound.

For small n the balls are enumerated exactly; for large n the product
estimates stand in.  The subset-counting bound C(n,d)^2 (n-d)!/C(n-1,n-d)
beats the sphere-packing estimate (n-t-1)! when d is close to n, the regime
``corollary_applies`` characterizes.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from blockperm import bound_report, corollary_applies, special_exact, table1
from blockperm.bounds import TABLE1_PUBLISHED, table1_deviations

rep = bound_report(5, 3, exact=True)
print(f"exact-mode report for (n,d)=(5,3): {rep.gv_lower} <= max code size <= {rep.sp_upper}"
      f" (subset-count bound {rep.new_upper})")
for d in (1, 2, 4):
    print(f"  known exact value C(5,{d}) = {special_exact(5, d)}")

print("\nten reference rows, sphere-packing estimate vs subset-count bound:\n")
print(f"{'n':>3} {'d':>3} {'sphere-packing':>15} {'new upper':>12} {'reference':>12}")
for rep in table1():
    ref = TABLE1_PUBLISHED[(rep.n, rep.d)][1]
    mark = "" if abs(rep.new_upper - ref) <= 1 else "  <- reference off its own formula"
    print(f"{rep.n:>3} {rep.d:>3} {rep.sp_upper:>15} {rep.new_upper:>12} {ref:>12}{mark}")
print()
for problem in table1_deviations(table1()):
    print(f"note: {problem}")
print("(the exact rational for (18,11) is 2887073280/11 = 262461207.27...)")

print("\nwhere the new bound provably wins (odd d, n <= 20):")
wins = [(n, d) for n in range(4, 21) for d in range(3, n, 2) if corollary_applies(n, d)]
print(", ".join(f"({n},{d})" for n, d in wins))
