"""Acceptance gate: the nine end-to-end criteria, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines as they complete.  Criterion 6 resumes the frozen full-scan
checkpoint under tests/golden/ so the gate stays fast; the from-scratch
scan is exercised (in a small window) by the unit suite and (in full) by
`pellsu thm2 verify`.
"""

import json
import shutil
from fractions import Fraction

import pytest

from pellsu import cfrac, oracle, sunit, theorem1, theorem2
from pellsu.baker import shrink_bound
from pellsu.numkernel import certified_log, is_square, sqrt_enclosure
from pellsu.pell import audit_growth, fundamental_solution, x_at, x_at_binet
from pellsu.reduction import dujella_petho
from pellsu.numkernel import CertifiedReal
from conftest import GOLDEN_DIR, load_golden

BITS = 256
S23 = sunit.PrimeSet((2, 3))


def report(criterion, ok, detail):
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, detail


def tau_log2_log3(bits):
    return certified_log(2, bits) / certified_log(3, bits)


def test_criterion_1_baker_constants():
    sharp = theorem2.initial_bounds(theorem2.MODE_SHARP, BITS)
    repro = theorem2.initial_bounds(theorem2.MODE_REPRODUCTION, BITS)
    ok = (sharp.c10.hi <= Fraction(133) * 10 ** 12
          and sharp.c11.hi <= Fraction(134) * 10 ** 12
          and repro.c10.lo == repro.c10.hi == Fraction(133) * 10 ** 12
          and repro.c11.lo == repro.c11.hi == Fraction(134) * 10 ** 12)
    report(1, ok, f"sharp c10 ~ {float(sharp.c10.midpoint):.3e} <= 1.33e14, "
                  f"sharp c11 ~ {float(sharp.c11.midpoint):.3e} <= 1.34e14, "
                  f"reproduction pins both")


def test_criterion_2_initial_bounds():
    repro = theorem2.initial_bounds(theorem2.MODE_REPRODUCTION, BITS)
    ok = (repro.b2_max == 862 * 10 ** 26 and repro.l2_max == 172 * 10 ** 27)
    report(2, ok, f"b2 < {repro.b2_max:.3e} (= 8.62e28), "
                  f"l2 < {repro.l2_max:.3e} (= 17.2e28)")


def test_criterion_3_partial_quotients():
    n1, q1, a1 = cfrac.a_of_M(tau_log2_log3, 862 * 10 ** 26, BITS)
    n2, q2, a2 = cfrac.a_of_M(tau_log2_log3, 178 * 10 ** 17, BITS)
    ok = (a1 == 55 and a2 == 55
          and abs(n1 - 60) <= 2 and abs(n2 - 41) <= 2)
    report(3, ok, f"a(M1) = {a1}, a(M2) = {a2} (both 55); "
                  f"convergent indices {n1} and {n2} "
                  f"(published 60 and 41, within the +-2 convention window)")


def test_criterion_4_reduction_chain():
    c11 = CertifiedReal.exact(theorem2.REPRO_C11, BITS)
    chain = theorem2.reduce_chain(int(theorem2.REPRO_B2_MAX), c11, 4, BITS,
                                  theorem2.REPRO_CHAIN_MS)
    seq = [s.a2_bound for s in chain][:3]
    sharp_ib = theorem2.initial_bounds(theorem2.MODE_SHARP, BITS)
    sharp_chain = theorem2.reduce_chain(sharp_ib.b2_max, sharp_ib.c11, 4, BITS)
    sharp_seq = [s.a2_bound for s in sharp_chain][:3]
    ok = (seq == [377, 255, 253]
          and all(a <= b for a, b in zip(sharp_seq, seq)))
    report(4, ok, f"reproduction a2 chain {seq} (published 377, 255, 253); "
                  f"sharp chain {sharp_seq} never worse")


def test_criterion_5_exhaustive_searches_empty():
    poly_hits = theorem2.search_l1_ge2(253, l_max=150, x1_min=21)
    small_hits = theorem2.search_small_d(401, 253, BITS)
    ok = poly_hits == [] and small_hits == []
    report(5, ok, f"index-polynomial sweep hits: {len(poly_hits)}; "
                  f"small-discriminant sweep hits: {len(small_hits)} (both empty)")


@pytest.fixture()
def frozen_scan_stats(tmp_path):
    src = f"{GOLDEN_DIR}/final_scan_checkpoint.jsonl"
    dst = tmp_path / "final_scan_checkpoint.jsonl"
    shutil.copy(src, dst)
    stats = theorem2.final_scan(int(theorem2.REPRO_CHAIN_MS[-1]), 253, BITS,
                                checkpoint_path=str(dst))
    return stats


def test_criterion_6_final_scan_verdict(frozen_scan_stats):
    stats = frozen_scan_stats
    total = 253 * 256 // 2
    ok = (stats.candidate_count == total
          and stats.hits == []
          and stats.inconclusive_candidates == [])
    report(6, ok, f"final scan: {stats.candidate_count}/{total} candidates, "
                  f"{len(stats.hits)} hits, "
                  f"{len(stats.inconclusive_candidates)} inconclusive "
                  f"-> verdict Holds")


def test_criterion_6_published_aggregates(frozen_scan_stats):
    """Strict comparison against the published aggregate statistics.

    Both aggregation conventions are computed and reported for each
    quantity; the criterion asks that at least one convention matches the
    published value (M5 exactly, l(X1) exactly, min eps1 within 10%).
    """
    stats = frozen_scan_stats
    m5_candidates = (stats.max_M5, stats.max_M5_last_mu)
    l_candidates = (stats.max_lX1, stats.max_lX1_half_log_gamma)
    eps_values = [float(e.midpoint) for e in
                  (stats.min_eps1, stats.min_eps1_last_mu) if e is not None]
    m5_ok = 52 in m5_candidates
    l_ok = 130 in l_candidates
    eps_ok = any(abs(e - 0.0011) <= 0.1 * 0.0011 for e in eps_values)
    ok = m5_ok and l_ok and eps_ok
    report(6, ok,
           f"published aggregates: max M5 = 52 vs computed {m5_candidates} "
           f"({'match' if m5_ok else 'NO MATCH'}); "
           f"max l(X1) = 130 vs computed {l_candidates} "
           f"({'match' if l_ok else 'NO MATCH'}); "
           f"min eps1 = 0.0011 +-10% vs computed "
           f"{[f'{e:.2e}' for e in eps_values]} "
           f"({'match' if eps_ok else 'NO MATCH'})")


def test_criterion_7_oracle_windows():
    golden = load_golden("oracle_scan_d10_l5.json")
    findings = oracle.scan(range(2, 11), 5, S23, 1, ordered_2_3=True)
    got = [(f.d, f.l, f.X) for f in findings]
    frozen = [(f["d"], f["l"], int(f["X"])) for f in golden["findings"]]
    multi = oracle.multi_solution_d(1000, 20, S23, 1, ordered_2_3=True)
    ok = got == frozen and multi == []
    report(7, ok, f"small-window findings {got} match the golden file; "
                  f"multi-solution d <= 1000, l <= 20: {multi} (empty)")


def test_criterion_8_property_suites():
    results = {}

    ok_binet = all(
        x_at(ctx, l) == x_at_binet(ctx, l)
        for d in range(2, 101) if not is_square(d)
        for ctx in (fundamental_solution(d),)
        for l in range(1, 101))
    results["binet==recurrence (d<=100, l<=100)"] = ok_binet

    ok_growth = all(audit_growth(fundamental_solution(d), 50)
                    for d in range(2, 501) if not is_square(d))
    results["growth sandwich (d<=500, l<=50)"] = ok_growth

    import math
    import random
    rng = random.Random(8)
    ok_shrink = True
    for _ in range(100):
        delta = Fraction(rng.randint(1, 5))
        alpha = delta * rng.randint(3, 150)
        beta = Fraction(rng.randint(0, 300))
        bound = shrink_bound(delta, alpha, beta, BITS)
        b, worst = 1, 0
        while b <= 2 * int(bound.hi) + 4:
            if delta * b <= Fraction(alpha) * Fraction(math.log(b)) + beta:
                worst = max(worst, b)
            b = b + 1 if b < 1000 else int(b * 101 // 100) + 1
        ok_shrink = ok_shrink and worst <= bound.hi
    results["log-bound shrinker dominates brute force (100 instances)"] = ok_shrink

    ms = list(range(2, 201))
    ok_gap = (oracle.verify_gap_bound(tau_log2_log3, ms, BITS)
              and oracle.verify_gap_bound(lambda b: sqrt_enclosure(2, b),
                                          ms, BITS))
    results["partial-quotient gap bound (tau in {log2/log3, sqrt2}, M<=200)"] = ok_gap

    def mu(b):
        return sqrt_enclosure(2, b) - CertifiedReal.exact(1, b)

    out = dujella_petho(tau_log2_log3, mu, CertifiedReal.exact(2, BITS),
                        CertifiedReal.exact(3, BITS), 500, start_bits=BITS)
    ok_dp = out is not None and out.epsilon1.lo > 0
    if ok_dp:
        tau_val = tau_log2_log3(BITS)
        mu_val = mu(BITS)
        dmin = min(cfrac.nearest_int_distance(m * tau_val + mu_val).lo
                   for m in range(1, 501))
        ok_dp = Fraction(2) / Fraction(3) ** (out.bound + 1) < dmin
    results["reduction soundness, exhaustive M <= 500"] = ok_dp

    exp = cfrac.expand(tau_log2_log3, 60, BITS)
    results["convergent determinant identity"] = exp.check_determinant()

    ok_nest = True
    for q in (Fraction(7, 3), Fraction(2), Fraction(355, 113)):
        coarse, fine = certified_log(q, 96), certified_log(q, 192)
        ok_nest = ok_nest and fine.lo <= coarse.hi and coarse.lo <= fine.hi \
            and fine.hi - fine.lo <= coarse.hi - coarse.lo
    results["interval soundness under precision doubling"] = ok_nest

    ok = all(results.values())
    failed = [k for k, v in results.items() if not v]
    report(8, ok, "all property suites green" if ok
           else f"failing suites: {failed}")


def test_criterion_9_constants_ledger():
    params = theorem1.Theorem1Params(2, S23, 1, Fraction(1, 2))
    ledger = theorem1.constants(params, BITS)
    names = ["c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"]
    ok_pos = (ledger.c1.lo >= 0
              and all(getattr(ledger, n).lo > 0 for n in names))

    findings = oracle.scan(range(2, 10001), 5, S23, 1, ordered_2_3=True)
    counts = {}
    for f in findings:
        counts[f.d] = counts.get(f.d, 0) + 1
    ok_classify = all(
        theorem1.classify_d(d, ledger, BITS) == theorem1.Classification.AT_MOST_C9
        for d in range(2, 10001) if not is_square(d))
    ok_counts = all(n <= ledger.Td_bound for n in counts.values())

    ok_audit = all(
        theorem1.audit_inequalities(
            fundamental_solution(f.d), (f.l, list(f.decompositions)),
            params, BITS).passed
        for f in findings)
    ok = ok_pos and ok_classify and ok_counts and ok_audit
    report(9, ok, f"constants positive: {ok_pos}; classification consistent "
                  f"with brute force on d <= 10^4 ({len(findings)} findings, "
                  f"counts ok: {ok_counts}); inequality audit passed on every "
                  f"finding: {ok_audit}")
