"""Certified interval arithmetic and continued fractions.

Every inexact quantity in the toolkit is an interval [lo, hi] with exact
rational endpoints that provably contains the true value.  Comparisons
and floors either resolve soundly or trigger precision escalation —
nothing is ever silently rounded.  Continued-fraction quotients are only
emitted once their floor is unambiguous.
"""

from fractions import Fraction

from pellsu import cfrac
from pellsu.numkernel import CertifiedReal, certified_log, sqrt_enclosure

print("== enclosures tighten with requested precision ==")
for bits in (64, 128, 256):
    enc = certified_log(2, bits)
    print(f"log 2 at {bits:4d} bits: width ~ {float(enc.hi - enc.lo):.3e}")

print("\n== arithmetic preserves containment ==")
x = certified_log(2, 128)
y = certified_log(3, 128)
ratio = x / y
print(f"log2/log3 ~ {float(ratio.midpoint):.15f} "
      f"(width {float(ratio.hi - ratio.lo):.1e})")

print("\n== certified continued fraction of log2/log3 ==")
tau = lambda b: certified_log(2, b) / certified_log(3, b)
exp = cfrac.expand(tau, 20, start_bits=64)
print(f"first 20 partial quotients: {exp.quotients}")
print(f"determinant identity p_t q_(t-1) - p_(t-1) q_t = (-1)^(t-1): "
      f"{exp.check_determinant()}")
print("(the expansion restarts itself at doubled precision whenever a")
print(" floor is ambiguous, so a wrong quotient can never slip through)")

print("\n== the largest partial quotient below a modulus ==")
for M in (10 ** 6, 178 * 10 ** 17, 862 * 10 ** 26):
    n, q_n, a_m = cfrac.a_of_M(tau, M)
    print(f"M = {float(M):.2e}: first q_N > M at index {n}, a(M) = {a_m}")

print("\n== distance to the nearest integer, as an exact range ==")
iv = CertifiedReal(Fraction(19, 10), Fraction(21, 10))
d = cfrac.nearest_int_distance(iv)
print(f"||[1.9, 2.1]|| = [{d.lo}, {d.hi}]  (the interval straddles 2)")
