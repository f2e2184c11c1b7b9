"""Codes at the maximum possible distance n-1.

At distance n-1 the codewords' adjacency-pair sets must be pairwise disjoint,
so a size-n code tiles all n(n-1) ordered pairs.  Three routes get there:
an arithmetic gap sequence for even n, the multiplication table of Z_{n+1}
when n+1 is prime, and for odd n a backtracking search for a Hamiltonian
decomposition of the complete digraph with one hub vertex added (which also
proves nonexistence at n = 3 and 5 by exhaustion).
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from blockperm import char_set, even_n_code, ham_decomp_code, verify_min_distance, zn1_code


def show(code):
    print(f"{code.provenance} construction, n={code.n}:")
    for w in code.words:
        print(f"  {w}")
    dist = verify_min_distance(code)
    pairs = sorted(pr for w in code.words for pr in char_set(w))
    print(f"  verified minimum distance {dist} = n-1")
    print(f"  {len(pairs)} adjacency pairs, {len(set(pairs))} distinct "
          f"= n(n-1) = {code.n * (code.n - 1)}\n")


show(even_n_code(6))
show(zn1_code(6))
show(ham_decomp_code(7))

for n in (3, 5):
    print(f"hub-cycle search at n={n}: {ham_decomp_code(n)} "
          f"(exhausted, so no size-{n} code at distance {n - 1})")
