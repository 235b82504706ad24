"""The five-stage verification pipeline, end to end.

Claim under test: no Pell equation X^2 - d Y^2 = 1 has two distinct
X-coordinates of the form 2^{n1} 3^{n2} with n1 <= n2.  The stages hand
bounds to each other:

1. initial_bounds: Baker-method constants cap the larger exponent at
   ~8.6e28 — finite, but hopeless to enumerate.
2. reduce_chain: continued-fraction reduction brings that down to 253.
3. search_l1_ge2: if the *first* qualifying index were l1 >= 2, its X1
   would be recoverable by polynomial inversion; the sweep finds nothing.
4. search_small_d: direct enumeration settles every d <= 401.
5. final_scan: for each of the 32384 remaining candidates X1 = 2^a1 3^a2
   a per-candidate reduction caps the second index; the tail is scanned
   exactly.

This demo runs stages 1-4 in full and stage 5 on a small window.  The
full stage 5 takes about an hour single-threaded:

    pellsu thm2 verify --checkpoint scan.jsonl --report report.json
"""

from pellsu import theorem2

print("== stages 1-2: constants and the reduction chain ==")
report = theorem2.verify(stages=("initial_bounds", "reduce_chain"))
ib = report.constants
print(f"mode {ib.mode}: c10 = {float(ib.c10.midpoint):.3e}, "
      f"b2 < {ib.b2_max:.3e}, l2 < {ib.l2_max:.3e}")
for s in report.chain:
    print(f"  M = {float(s.M):9.3e} -> exponent bound {s.a2_bound}")

print("\n== sharp mode recomputes everything and must never do worse ==")
sharp = theorem2.initial_bounds(theorem2.MODE_SHARP)
print(f"sharp c10 = {float(sharp.c10.midpoint):.3e} "
      f"(pinned {float(theorem2.REPRO_C10):.3e})")
print(f"sharp b2 bound = {sharp.b2_max:.3e} "
      f"(pinned {float(theorem2.REPRO_B2_MAX):.3e})")

print("\n== stages 3-4: the exhaustive searches ==")
print(f"polynomial sweep hits: {theorem2.search_l1_ge2(253)}")
print(f"small-discriminant sweep hits: {theorem2.search_small_d(401, 253)}")

print("\n== stage 5 on a small window (a2 <= 5) ==")
stats = theorem2.final_scan(int(theorem2.REPRO_CHAIN_MS[-1]), a2_max=5)
print(f"candidates: {stats.candidate_count}, hits: {stats.hits}, "
      f"inconclusive: {stats.inconclusive_candidates}")
print(f"max second-index modulus M5 = {stats.max_M5}, "
      f"max window l(X1) = {stats.max_lX1}")
eps = stats.min_eps1
print(f"min eps1 ~ {float(eps.midpoint):.3e} (certified > 0)")
print("\nverdict logic: Holds needs all five stages, zero hits and zero")
print("inconclusive candidates; any hit anywhere is CounterexampleFound.")
