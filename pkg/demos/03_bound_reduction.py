"""From astronomical to tiny: lower bounds for linear forms in
logarithms and the two bound-reduction devices.

Baker-method bounds prove finiteness but start around 10^28.  Continued
fractions then shrink them to double digits: first through the largest
partial quotient a(M), then per-candidate through the Baker-Davenport
(Dujella-Petho) reduction with its certified quantity
eps1 = ||mu q|| - M ||tau q||.
"""

from fractions import Fraction

from pellsu.baker import MatveevInstance, matveev_lower_bound, shrink_bound
from pellsu.numkernel import CertifiedReal, certified_log, sqrt_enclosure
from pellsu.reduction import dujella_petho, legendre_exponent_bound
from pellsu.theorem2 import REPRO_B2_MAX, REPRO_C11, reduce_chain

BITS = 256

print("== a lower bound for a three-term linear form in logarithms ==")
log2, log3 = certified_log(2, BITS), certified_log(3, BITS)
inst = MatveevInstance(t=3, dL=2, A=[2 * log2, CertifiedReal.exact(1, BITS),
                                     2 * log3], B=CertifiedReal.exact(1, BITS))
L = matveev_lower_bound(inst, BITS)
print(f"log|Lambda| > -L with L ~ {float(L.midpoint):.3e}")

print("\n== closing B <= alpha log B + beta ==")
b = shrink_bound(1, 50, 7, BITS)
print(f"any B with B <= 50 log B + 7 satisfies B <= {float(b.hi):.1f}")

print("\n== the full reduction chain ==")
chain = reduce_chain(int(REPRO_B2_MAX), CertifiedReal.exact(REPRO_C11, BITS),
                     4, BITS)
for step in chain:
    print(f"M = {float(step.M):.3e}: a(M) = {step.a_of_M:3d} "
          f"-> exponent bound {step.a2_bound:3d}, "
          f"next modulus ~ {float(step.b2_bound.midpoint):.3e}")
print(f"fixpoint: the exponent bound settles at {chain[-1].a2_bound}")

print("\n== a Baker-Davenport reduction, certified ==")
tau = lambda b: certified_log(2, b) / certified_log(3, b)
mu = lambda b: sqrt_enclosure(2, b) - CertifiedReal.exact(1, b)
out = dujella_petho(tau, mu, CertifiedReal.exact(2, BITS),
                    CertifiedReal.exact(3, BITS), M=10 ** 6, start_bits=BITS)
print(f"convergent q = {out.q_used} (index {out.convergent_index}), "
      f"eps1 ~ {float(out.epsilon1.midpoint):.3e} > 0 certified")
print(f"|m tau - n + mu| < 2 * 3^(-k) with m <= 10^6 forces k <= {out.bound}")
