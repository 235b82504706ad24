"""End-to-end verification that no Pell equation X^2 - d Y^2 = 1 has two
distinct X-coordinates of the form 2^{n1} 3^{n2} with n1 <= n2.

The pipeline runs five stages, each consuming the previous one's bound:

1. initial_bounds  - Baker-method constants and the first bound on b2, l2
2. reduce_chain    - continued-fraction reduction of the exponent bound
3. search_l1_ge2   - polynomial-inversion sweep for a first index l1 >= 2
4. search_small_d  - direct sweep over the small discriminants 1 < d <= 401
5. final_scan      - per-candidate Baker-Davenport reduction for l1 = 1

`reproduction` mode pins the published working constants; `sharp` mode
recomputes them from scratch and asserts it never does worse.
"""

from __future__ import annotations

import bisect
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import cfrac
from .baker import MatveevInstance, absorb_one_plus_log, matveev_lower_bound, shrink_bound
from .numkernel import (
    DEFAULT_PREC_BITS,
    CertifiedReal,
    PrecisionExhausted,
    QuadraticSurd,
    certified_floor,
    certified_log,
    certified_to_json,
    is_square,
    sqrt_enclosure,
)
from .pell import fundamental_solution, p_poly_invert
from .reduction import (
    dujella_petho,
    exclusion_bound,
    legendre_exponent_bound,
    prepare_tau,
)
from .sunit import as_2a3b_ordered

MODE_REPRODUCTION = "reproduction"
MODE_SHARP = "sharp"

# published working constants, pinned verbatim in reproduction mode
REPRO_C10 = Fraction(133) * 10 ** 12
REPRO_C11 = Fraction(134) * 10 ** 12
REPRO_C12 = 4
REPRO_B2_MAX = Fraction(862) * 10 ** 26
REPRO_L2_MAX = Fraction(172) * 10 ** 27
# pinned intermediate reduction moduli and the final one used by the scan
REPRO_CHAIN_MS = (Fraction(178) * 10 ** 17, Fraction(12) * 10 ** 18,
                  Fraction(1179) * 10 ** 16)

CHECKPOINT_EVERY = 1000
CHECKPOINT_SCHEMA = "pellsu/1"


class ConsistencyError(RuntimeError):
    """A sharp-mode constant came out worse than the pinned one."""


# ---------------------------------------------------------------------------
# stage 1: initial bounds


@dataclass(frozen=True)
class InitialBounds:
    mode: str
    c10: CertifiedReal
    c11: CertifiedReal
    c12: int
    b2_max: int
    l2_max: int


def _solve_square_log_bound(C: CertifiedReal, D: CertifiedReal,
                            bits: int) -> int:
    """Certified bound for b satisfying b < C (log b)^2 + D log b.

    A candidate b* is certified once (i) b* > C(log b*)^2 + D log b* and
    (ii) b* > 2C log b* + D.  (ii) makes b - C(log b)^2 - D log b strictly
    increasing past b* (its derivative is 1 - (2C log b + D)/b > 0, and
    b - 2C log b - D itself keeps growing since b* > 2C), so no b >= b*
    can satisfy the original inequality.
    """
    c_hi = float(C.hi)
    d_hi = float(D.hi)
    guess = 16.0
    for _ in range(200):
        nxt = c_hi * math.log(guess) ** 2 + d_hi * math.log(guess) + 16.0
        if nxt <= guess:
            break
        guess = nxt
    b = int(guess * 1.01) + 1
    while True:
        log_hi = certified_log(b, bits).hi
        if (b > C.hi * log_hi * log_hi + D.hi * log_hi
                and b > 2 * C.hi * log_hi + D.hi):
            return b
        b *= 2


def initial_bounds(mode: str = MODE_REPRODUCTION,
                   bits: int = DEFAULT_PREC_BITS) -> InitialBounds:
    if mode == MODE_REPRODUCTION:
        return InitialBounds(
            mode,
            CertifiedReal.exact(REPRO_C10, bits),
            CertifiedReal.exact(REPRO_C11, bits),
            REPRO_C12,
            int(REPRO_B2_MAX),
            int(REPRO_L2_MAX),
        )
    if mode != MODE_SHARP:
        raise ValueError(f"unknown mode {mode!r}")

    log2 = certified_log(2, bits)
    log3 = certified_log(3, bits)
    one = CertifiedReal.exact(1, bits)

    # three-log instance for Lambda = l log(gamma) - (n1+1) log 2 - n2 log 3:
    # heights give A = (2 log 2, log gamma, 2 log 3); log gamma is factored
    # out (placeholder 1) and the coefficient bound B = l < 2 n2 is absorbed
    # at the branch floor min(gamma, n2) >= 7.5
    inst3 = MatveevInstance(t=3, dL=2, A=[2 * log2, one, 2 * log3],
                            B=CertifiedReal.exact(1, bits))
    c10 = matveev_lower_bound(inst3, bits) * absorb_one_plus_log(
        2, Fraction(15, 2), bits)
    # |Lambda| <= 3^(-n2) against log|Lambda| > -c10 (log n2)(log gamma) log 3
    # gives n2 < c10 (log n2) log gamma directly
    c11 = c10
    c12 = REPRO_C12  # |eta^l| <= gamma^(-l) telescopes to the same 4

    if c10.hi > REPRO_C10 or c11.hi > REPRO_C11:
        raise ConsistencyError("sharp Baker constants exceed the pinned ones")

    # two-log instance for Gamma2 = u log 2 + v log 3 with
    # |u|, |v| <= 2 l2 b2 <= 4 b2^2
    k2 = matveev_lower_bound(
        MatveevInstance(t=2, dL=1, A=[2 * log2, 2 * log3],
                        B=CertifiedReal.exact(1, bits)), bits)
    # |Gamma2| <= 4 l2 3^(-a2/2) <= 8 b2 3^(-a2/2) and
    # log|Gamma2| > -k2 (1 + log(4 b2^2)) combine to a2 < alpha log b2 + beta
    alpha_a = (2 / log3) * (1 + 2 * k2)
    beta_a = (2 / log3) * (certified_log(8, bits) + k2 * (1 + certified_log(4, bits)))
    # log gamma < 2 a2 log 3 + log 2.5 turns b2 < c11 (log b2)(log gamma)
    # into b2 < C (log b2)^2 + D log b2
    C = c11 * 2 * log3 * alpha_a
    D = c11 * (2 * log3 * beta_a + certified_log(Fraction(5, 2), bits))
    b2_max = _solve_square_log_bound(C, D, bits)
    if b2_max > REPRO_B2_MAX:
        raise ConsistencyError("sharp initial bound exceeds the pinned one")
    return InitialBounds(mode, c10, c11, c12, b2_max, 2 * b2_max)


# ---------------------------------------------------------------------------
# stage 2: reduction chain


@dataclass(frozen=True)
class ChainStep:
    M: int
    a_of_M: int
    convergent_index: int
    a2_bound: int
    b2_bound: CertifiedReal


def _tau_log2_log3(bits: int) -> CertifiedReal:
    return certified_log(2, bits) / certified_log(3, bits)


def reduce_chain(start_M: int, c11: CertifiedReal, c12: int = REPRO_C12,
                 bits: int = DEFAULT_PREC_BITS,
                 pinned_ms: Optional[tuple] = None,
                 max_steps: int = 12) -> list:
    """Iterate the a(M)-driven exponent reduction to a fixpoint.

    Each step: a(M) for tau = log2/log3; then 3^(a2/2) < 8 c12 M^2 * M *
    (a(M)+2) bounds a2; then b2 < 2 alpha log alpha with
    alpha = 4 c11 a2 log 3.  The next modulus is the certified ceiling of
    that b2 bound (or the matching pinned value, checked for soundness).
    """
    tau = _tau_log2_log3
    log3 = certified_log(3, bits)
    steps = []
    M = int(start_M)
    prev_a2 = None
    pinned = list(pinned_ms) if pinned_ms else []
    for _ in range(max_steps):
        n_idx, _, a_m = cfrac.a_of_M(tau, M, bits)
        a2 = legendre_exponent_bound(
            tau, M, CertifiedReal.exact(8 * c12 * M * M, bits),
            sqrt_enclosure(3, bits), bits)
        b2 = shrink_bound(1, 4 * c11 * a2 * log3, 0, bits)
        steps.append(ChainStep(M, a_m, n_idx, a2, b2))
        if prev_a2 is not None and a2 >= prev_a2:
            break  # fixpoint confirmed
        prev_a2 = a2
        if pinned:
            next_m = pinned.pop(0)
            if Fraction(next_m) < b2.hi:
                raise ConsistencyError(
                    f"pinned modulus {next_m} below the certified b2 bound")
            M = int(next_m)
        else:
            M = b2.hi.__ceil__()
    else:
        raise ConsistencyError("reduction chain did not reach a fixpoint")
    return steps


# ---------------------------------------------------------------------------
# stage 3: polynomial search for l1 >= 2


@dataclass(frozen=True)
class PolyHit:
    l1: int
    a1: Optional[int]
    a2: Optional[int]
    N: int
    X1: int


def search_l1_ge2(a2_max: int, l_max: int = 150, x1_min: int = 21,
                  extra_values: Optional[list] = None) -> list:
    """Invert P_l1(X1) = 2^{a1} 3^{a2} over a2 in [0, a2_max],
    a1 in [0, a2], l1 in [2, l_max]; report every X1 >= x1_min.

    For X1 >= 21 the unit gamma exceeds 41, so P_l1(X1) > 41^l1 / 2;
    targets at or below that threshold are rejected without inversion.
    """
    values = []
    for a2 in range(a2_max + 1):
        p3 = 3 ** a2
        for a1 in range(a2 + 1):
            values.append((p3 << a1, a1, a2))
    for extra in (extra_values or []):
        values.append((int(extra), None, None))
    values.sort()
    keys = [v[0] for v in values]
    hits = []
    for l1 in range(2, l_max + 1):
        threshold = 41 ** l1 // 2
        for n, a1, a2 in values[bisect.bisect_right(keys, threshold):]:
            x1 = p_poly_invert(n, l1)
            if x1 is not None and x1 >= x1_min:
                hits.append(PolyHit(l1, a1, a2, n, x1))
    return hits


# ---------------------------------------------------------------------------
# stage 4: small discriminants


@dataclass(frozen=True)
class SmallDHit:
    d: int
    l: int
    X: int
    n1: int
    n2: int


def search_small_d(d_max: int = 401, a2_cap: int = 253,
                   bits: int = DEFAULT_PREC_BITS) -> list:
    """For every non-square d in (1, d_max], scan all l >= 2 up to the
    certified bound l < (2 a2_cap log 3 + log 2.5) / log gamma for an
    X_l of the form 2^{n1} 3^{n2}, n1 <= n2."""
    hits = []
    numer_const = 2 * a2_cap * certified_log(3, bits) \
        + certified_log(Fraction(5, 2), bits)
    for d in range(2, d_max + 1):
        if is_square(d):
            continue
        ctx = fundamental_solution(d)

        def ratio(b, _ctx=ctx):
            return (2 * a2_cap * certified_log(3, b)
                    + certified_log(Fraction(5, 2), b)) / certified_log(_ctx.gamma, b)

        l_bound = certified_floor(ratio(bits), ratio)
        prev, cur = 1, ctx.X1
        for l in range(2, l_bound + 1):
            prev, cur = cur, 2 * ctx.X1 * cur - prev
            if cur % 3:
                continue  # 2^{n1} 3^{n2}, n1 <= n2, n2 >= 1 needs 3 | X
            t = as_2a3b_ordered(cur)
            if t is not None:
                hits.append(SmallDHit(d, l, cur, t[0], t[1]))
    return hits


# ---------------------------------------------------------------------------
# stage 5: final scan over l1 = 1 candidates


@dataclass
class CandidateRecord:
    a1: int
    a2: int
    M5: int
    l_bound: int
    eps_min: Optional[CertifiedReal]
    eps_last: Optional[CertifiedReal]  # epsilon1 for the largest-mu index
    inconclusive_js: list = field(default_factory=list)
    hits: list = field(default_factory=list)  # (l2, b1, b2)


@dataclass
class ScanStats:
    candidate_count: int = 0
    max_M5: int = 0
    max_lX1: int = 0
    max_lX1_half_log_gamma: int = 0  # same numerator over (log gamma)/2
    max_M5_last_mu: int = 0
    min_eps1: Optional[CertifiedReal] = None  # over all (candidate, mu) pairs
    min_eps1_last_mu: Optional[CertifiedReal] = None  # largest mu index only
    resonant_mu_count: int = 0
    inconclusive_candidates: list = field(default_factory=list)
    hits: list = field(default_factory=list)


def _min_eps(current: Optional[CertifiedReal],
             new: CertifiedReal) -> CertifiedReal:
    if current is None or new.lo < current.lo:
        return new
    return current


def _scan_candidate(a1: int, a2: int, a2_max: int, M4: int,
                    bits: int) -> CandidateRecord:
    """Reduce the exponent bound for one candidate X1 = 2^{a1} 3^{a2} and
    exhaust the remaining finite window.

    A second solution X_{l2} = 2^{b1} 3^{b2} forces, with j = b1 + 1,
    |b2 tau - l2 + mu_j| < A 3^{-b2}, tau = log3/log gamma,
    mu_j = j log2/log gamma, A = 2/log gamma.  For j a multiple of a1+1
    the form degenerates: writing c = j/(a1+1) and using
    (a1+1) log 2 + a2 log 3 = log(2 X1) = log gamma + delta with
    delta = log(2 X1/gamma) in (0, gamma^-2), one has
    mu_j = c - (c a2) tau + delta0, delta0 = c delta / log gamma, so the
    usual reduction can never certify eps1 > 0.  Those j are handled
    structurally: substituting m' = b2 - c a2, n' = l2 - c, either
    m' != 0 and the irrationality measure of tau caps b2 at K1 (largest
    k with 3^k < 2 A (a(M')+2) M', M' = M4 + c a2 + 1), or m' = 0, which
    pins (l2, b1, b2) = (c, j-1, c a2), refuted by one exact comparison.
    """
    x1 = (1 << a1) * 3 ** a2
    d = x1 * x1 - 1
    gamma = QuadraticSurd(Fraction(x1), Fraction(1), d)

    def log_gamma(b):
        return certified_log(gamma, b)

    def tau_src(b):
        return certified_log(3, b) / log_gamma(b)

    lg = log_gamma(bits)
    A_val = 2 / lg
    B_val = CertifiedReal.exact(3, bits)
    prep = prepare_tau(tau_src, M4, bits)
    j_max = a2_max + 1

    # exact X_l cache for the degenerate-point checks
    xs = [1, x1]

    def x_exact(l):
        while len(xs) <= l:
            xs.append(2 * x1 * xs[-1] - xs[-2])
        return xs[l]

    rec = CandidateRecord(a1, a2, 0, 0, None, None)
    resonant = 0
    k1_cache = None
    def k1_bound():
        # validity margin: delta0 <= j_max (log(2 X1) - log gamma)/log gamma
        # must be below half the Legendre gap 1/((a(M')+2) M'); a(M') is
        # dominated by prep.a_max_first for every M' = M4 + m0 + 1 here
        m_big = M4 + j_max * a2 + 1
        delta0_hi = max(
            (j_max * (certified_log(2 * x1, bits) - lg) / lg).hi, Fraction(0))
        if 2 * delta0_hi * (prep.a_max_first + 2) * m_big >= 1:
            return -1  # margin unavailable (only small X1); use the reduction
        return exclusion_bound(2 * A_val.hi * (prep.a_max_first + 2), m_big,
                               Fraction(1), Fraction(3))

    for j in range(1, j_max + 1):
        bound = None
        if j % (a1 + 1) == 0:
            # degenerate mu: prefer the structural bound when its margin holds
            c = j // (a1 + 1)
            m0 = c * a2
            if k1_cache is None:
                k1_cache = k1_bound()
            if k1_cache >= 0:
                resonant += 1
                bound = k1_cache
                # degenerate point (l2, b1, b2) = (c, j-1, c a2), exact check
                if c >= 2 and x_exact(c) == (1 << (j - 1)) * 3 ** m0:
                    if j - 1 <= m0:
                        rec.hits.append((c, j - 1, m0))
        if bound is None:
            def mu_src(b, _j=j):
                return _j * certified_log(2, b) / log_gamma(b)

            out = dujella_petho(tau_src, mu_src, A_val, B_val, M4,
                                start_bits=bits, prepared=prep)
            if out is None:
                rec.inconclusive_js.append(j)
                continue
            bound = out.bound
            rec.eps_min = _min_eps(rec.eps_min, out.epsilon1)
            if j == j_max:
                rec.eps_last = out.epsilon1
        rec.M5 = max(rec.M5, bound)
        if j == j_max:
            rec.last_mu_bound = bound

    # l2 window from the reduced bound, then the exhaustive tail scan
    def l_ratio(b):
        return (2 * rec.M5 * certified_log(3, b)
                + certified_log(Fraction(5, 2), b)) / certified_log(gamma, b)

    def l_ratio_half(b):
        return 2 * l_ratio(b)

    rec.l_bound = certified_floor(l_ratio(bits), l_ratio)
    # same numerator over (log gamma)/2: the alternative reading of the
    # published window formula, reported alongside the verbatim one
    rec.l_bound_half = certified_floor(l_ratio_half(bits), l_ratio_half)
    for l2 in range(2, rec.l_bound + 1):
        xl = x_exact(l2)
        if xl % 3:
            continue
        t = as_2a3b_ordered(xl)
        if t is not None:
            rec.hits.append((l2, t[0], t[1]))
    rec.resonant_count = resonant
    return rec


def _candidates(a2_max: int):
    for a2 in range(1, a2_max + 1):
        for a1 in range(a2 + 1):
            yield a1, a2


def _eps_to_json(e: Optional[CertifiedReal]) -> Optional[dict]:
    if e is None:
        return None
    return {"lo": str(e.lo), "hi": str(e.hi), "bits": e.bits}


def _eps_from_json(obj) -> Optional[CertifiedReal]:
    if obj is None:
        return None
    return CertifiedReal(Fraction(obj["lo"]), Fraction(obj["hi"]), obj["bits"])


def _stats_to_json(stats: ScanStats) -> dict:
    return {
        "candidate_count": stats.candidate_count,
        "max_M5": stats.max_M5,
        "max_lX1": stats.max_lX1,
        "max_lX1_half_log_gamma": stats.max_lX1_half_log_gamma,
        "max_M5_last_mu": stats.max_M5_last_mu,
        "min_eps1": _eps_to_json(stats.min_eps1),
        "min_eps1_last_mu": _eps_to_json(stats.min_eps1_last_mu),
        "resonant_mu_count": stats.resonant_mu_count,
        "inconclusive_candidates": stats.inconclusive_candidates,
        "hits": stats.hits,
    }


def _stats_from_json(obj: dict) -> ScanStats:
    return ScanStats(
        candidate_count=obj["candidate_count"],
        max_M5=obj["max_M5"],
        max_lX1=obj["max_lX1"],
        max_lX1_half_log_gamma=obj["max_lX1_half_log_gamma"],
        max_M5_last_mu=obj["max_M5_last_mu"],
        min_eps1=_eps_from_json(obj["min_eps1"]),
        min_eps1_last_mu=_eps_from_json(obj["min_eps1_last_mu"]),
        resonant_mu_count=obj["resonant_mu_count"],
        inconclusive_candidates=[tuple(x) for x in obj["inconclusive_candidates"]],
        hits=[tuple(x) for x in obj["hits"]],
    )


def final_scan(M4: int, a2_max: int = 253, bits: int = DEFAULT_PREC_BITS,
               checkpoint_path: Optional[str] = None,
               progress: Optional[Callable[[int, int], None]] = None) -> ScanStats:
    """Scan every candidate X1 = 2^{a1} 3^{a2}, 0 <= a1 <= a2 <= a2_max,
    a2 >= 1, in deterministic (a2, a1) order.  Checkpoints every 1000
    candidates to a resumable line-delimited JSON file."""
    total = a2_max * (a2_max + 3) // 2
    stats = ScanStats()
    done = 0
    if checkpoint_path and os.path.exists(checkpoint_path):
        with open(checkpoint_path) as f:
            lines = [ln for ln in f.read().splitlines() if ln.strip()]
        if lines:
            last = json.loads(lines[-1])
            if (last.get("schema") == CHECKPOINT_SCHEMA
                    and last.get("kind") == "final-scan-checkpoint"
                    and last.get("M4") == M4 and last.get("a2_max") == a2_max
                    and last.get("bits") == bits):
                done = last["completed"]
                stats = _stats_from_json(last["stats"])

    def checkpoint():
        if not checkpoint_path:
            return
        record = {
            "schema": CHECKPOINT_SCHEMA, "kind": "final-scan-checkpoint",
            "version": 1, "M4": M4, "a2_max": a2_max, "bits": bits,
            "completed": done, "total": total, "stats": _stats_to_json(stats),
        }
        with open(checkpoint_path, "a") as f:
            f.write(json.dumps(record) + "\n")

    for index, (a1, a2) in enumerate(_candidates(a2_max)):
        if index < done:
            continue
        rec = _scan_candidate(a1, a2, a2_max, M4, bits)
        stats.candidate_count += 1
        stats.max_M5 = max(stats.max_M5, rec.M5)
        stats.max_lX1 = max(stats.max_lX1, rec.l_bound)
        stats.max_lX1_half_log_gamma = max(stats.max_lX1_half_log_gamma,
                                           rec.l_bound_half)
        if hasattr(rec, "last_mu_bound"):
            stats.max_M5_last_mu = max(stats.max_M5_last_mu, rec.last_mu_bound)
        if rec.eps_min is not None:
            stats.min_eps1 = _min_eps(stats.min_eps1, rec.eps_min)
        if rec.eps_last is not None:
            stats.min_eps1_last_mu = _min_eps(stats.min_eps1_last_mu, rec.eps_last)
        stats.resonant_mu_count += rec.resonant_count
        if rec.inconclusive_js:
            stats.inconclusive_candidates.append((a1, a2, tuple(rec.inconclusive_js)))
        for hit in rec.hits:
            stats.hits.append((a1, a2) + tuple(hit))
        done = index + 1
        if done % CHECKPOINT_EVERY == 0:
            checkpoint()
            if progress:
                progress(done, total)
    checkpoint()
    return stats


# ---------------------------------------------------------------------------
# orchestration


VERDICT_HOLDS = "Holds"
VERDICT_COUNTEREXAMPLE = "CounterexampleFound"
VERDICT_INCONCLUSIVE = "Inconclusive"

ALL_STAGES = ("initial_bounds", "reduce_chain", "search_l1_ge2",
              "search_small_d", "final_scan")


@dataclass
class Theorem2Report:
    mode: str
    constants: Optional[InitialBounds] = None
    chain: Optional[list] = None
    poly_search: Optional[dict] = None
    small_d: Optional[dict] = None
    final_scan: Optional[ScanStats] = None
    verdict: str = VERDICT_INCONCLUSIVE
    failed_stage: Optional[str] = None
    error: Optional[str] = None

    def to_jsonable(self) -> dict:
        out = {"schema": CHECKPOINT_SCHEMA, "kind": "theorem2-report",
               "mode": self.mode, "verdict": self.verdict}
        if self.constants is not None:
            out["constants"] = {
                "c10": certified_to_json(self.constants.c10),
                "c11": certified_to_json(self.constants.c11),
                "c12": self.constants.c12,
            }
            out["initial_bounds"] = {"b2_max": str(self.constants.b2_max),
                                     "l2_max": str(self.constants.l2_max)}
        if self.chain is not None:
            out["chain"] = [{"M": str(s.M), "a_of_M": s.a_of_M,
                             "convergent_index": s.convergent_index,
                             "a2_bound": s.a2_bound,
                             "b2_bound": certified_to_json(s.b2_bound)}
                            for s in self.chain]
        if self.poly_search is not None:
            out["poly_search"] = {
                "ranges": self.poly_search["ranges"],
                "hits": [vars(h) for h in self.poly_search["hits"]],
            }
        if self.small_d is not None:
            out["small_d"] = {
                "d_range": self.small_d["d_range"],
                "hits": [vars(h) for h in self.small_d["hits"]],
            }
        if self.final_scan is not None:
            fs = _stats_to_json(self.final_scan)
            for key in ("min_eps1", "min_eps1_last_mu"):
                e = getattr(self.final_scan, key)
                fs[key] = certified_to_json(e) if e is not None else None
            out["final_scan"] = fs
        if self.failed_stage:
            out["failed_stage"] = self.failed_stage
            out["error"] = self.error
        return out


def verify(mode: str = MODE_REPRODUCTION, bits: int = DEFAULT_PREC_BITS,
           stages: tuple = ALL_STAGES,
           checkpoint_path: Optional[str] = None,
           progress: Optional[Callable[[int, int], None]] = None) -> Theorem2Report:
    """Run the requested stages in order and assemble the report.

    Verdict is Holds only when every stage of ALL_STAGES ran, every hit
    list is empty and nothing was inconclusive; any hit anywhere yields
    CounterexampleFound; everything else is Inconclusive.
    """
    report = Theorem2Report(mode)
    unknown = set(stages) - set(ALL_STAGES)
    if unknown:
        raise ValueError(f"unknown stages: {sorted(unknown)}")
    a2_final, m_final = 253, int(REPRO_CHAIN_MS[-1])
    try:
        if "initial_bounds" in stages:
            report.failed_stage = "initial_bounds"
            report.constants = initial_bounds(mode, bits)
        if "reduce_chain" in stages:
            report.failed_stage = "reduce_chain"
            start = report.constants.b2_max if report.constants else int(REPRO_B2_MAX)
            c11 = report.constants.c11 if report.constants \
                else CertifiedReal.exact(REPRO_C11, bits)
            pinned = REPRO_CHAIN_MS if mode == MODE_REPRODUCTION else None
            report.chain = reduce_chain(start, c11, REPRO_C12, bits, pinned)
            a2_final = min(s.a2_bound for s in report.chain)
            m_final = report.chain[-1].M
        if "search_l1_ge2" in stages:
            report.failed_stage = "search_l1_ge2"
            hits = search_l1_ge2(a2_final)
            report.poly_search = {
                "ranges": {"l1": [2, 150], "a2": [0, a2_final], "x1_min": 21},
                "hits": hits,
            }
        if "search_small_d" in stages:
            report.failed_stage = "search_small_d"
            report.small_d = {"d_range": [2, 401],
                              "hits": search_small_d(401, a2_final, bits)}
        if "final_scan" in stages:
            report.failed_stage = "final_scan"
            report.final_scan = final_scan(m_final, a2_final, bits,
                                           checkpoint_path, progress)
        report.failed_stage = None
    except Exception as exc:  # noqa: BLE001 - verdict must degrade, not crash
        report.error = f"{type(exc).__name__}: {exc}"
        report.verdict = VERDICT_INCONCLUSIVE
        return report

    hit_lists = []
    if report.poly_search is not None:
        hit_lists.append(report.poly_search["hits"])
    if report.small_d is not None:
        hit_lists.append(report.small_d["hits"])
    if report.final_scan is not None:
        hit_lists.append(report.final_scan.hits)
    if any(len(h) > 0 for h in hit_lists):
        report.verdict = VERDICT_COUNTEREXAMPLE
        return report
    incomplete = set(ALL_STAGES) - set(stages)
    inconclusive = (report.final_scan is not None
                    and report.final_scan.inconclusive_candidates)
    if incomplete or inconclusive:
        report.verdict = VERDICT_INCONCLUSIVE
    else:
        report.verdict = VERDICT_HOLDS
    return report
