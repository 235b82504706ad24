"""The effective-constants ledger for X-coordinates that are sums of
S-units.

For a prime set S = {p_1 < ... < p_s} and a number of terms r, a chain
of constants c1..c9 bounds how many indices l can have X_l expressible
as a sum of r S-units, and a threshold on d splits the discriminants
into an "at most c9 solutions" regime and an "at most one" regime.
Every constant is a certified interval; every audit is a certified
inequality on a concrete solution.
"""

from fractions import Fraction

from pellsu import oracle, sunit, theorem1
from pellsu.pell import fundamental_solution

params = theorem1.Theorem1Params(
    s=2, primes=sunit.PrimeSet((2, 3)), r=1, epsilon=Fraction(1, 2))
ledger = theorem1.constants(params)

print("== the constant chain for S = {2, 3}, r = 1, eps = 1/2 ==")
for name in ("c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"):
    c = getattr(ledger, name)
    print(f"{name} ~ {float(c.midpoint):.6e}")
print(f"log of the d-threshold ~ {float(ledger.log_d_threshold.midpoint):.3e}")
print("(the threshold itself has ~10^34 digits, so it is stored as a log;")
print(" every d you can write down falls in the at-most-c9 regime)")

print("\n== classification ==")
for d in (2, 61, 10 ** 12 + 39):
    print(f"d = {d}: {theorem1.classify_d(d, ledger)}")

print("\n== auditing concrete solutions ==")
findings = oracle.scan(range(2, 11), 5, params.primes, 1, ordered_2_3=True)
for f in findings:
    ctx = fundamental_solution(f.d)
    rec = theorem1.audit_inequalities(ctx, (f.l, list(f.decompositions)), params)
    print(f"d = {f.d}, l = {f.l}, X = {f.X}: "
          f"growth {rec.growth_sandwich}, size {rec.sunit_size}, "
          f"transfer {rec.exponent_transfer}, window {rec.log_gamma_window} "
          f"-> {'PASS' if rec.passed else 'FAIL'}")
