"""Independent brute force: the oracle that keeps the pipeline honest.

The oracle never touches the reduction machinery — only exact Pell
recurrences, S-unit decomposition and direct enumeration.  Its findings
are frozen as golden files and every pipeline claim that overlaps a
brute-forceable window must agree with it.
"""

from pellsu import oracle
from pellsu.numkernel import certified_log
from pellsu.sunit import PrimeSet

S = PrimeSet((2, 3))

print("== every (d, l) with d <= 10, l <= 5 whose X_l = 2^n1 3^n2, n1 <= n2 ==")
for f in oracle.scan(range(2, 11), 5, S, 1, ordered_2_3=True):
    w = f.decompositions[0]
    print(f"d = {f.d}: X_{f.l} = {f.X} = 2^{w.exponents[0]} * 3^{w.exponents[1]}")

print("\n== does any d <= 1000 have TWO such X-coordinates (l <= 20)? ==")
multi = oracle.multi_solution_d(1000, 20, S, 1, ordered_2_3=True)
print(f"{multi if multi else 'none'} — consistent with the verified claim")

print("\n== sums of several S-units ==")
found = oracle.scan([2], 3, S, r=2)
for f in found:
    terms = " + ".join(str(w.value(S)) for w in f.decompositions)
    print(f"d = 2: X_{f.l} = {f.X} = {terms}")

print("\n== enumerative check of the partial-quotient gap bound ==")
tau = lambda b: certified_log(2, b) / certified_log(3, b)
ok = oracle.verify_gap_bound(tau, [10, 50, 200])
print(f"|m tau - n| > 1/((a(M)+2) m) for all 0 < m < M in {{10, 50, 200}}: {ok}")
