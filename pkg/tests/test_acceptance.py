"""Acceptance gate: every headline identity at its contracted scale and
runtime budget.  One printed pass/fail line per criterion.

Each criterion calls the verification suite with the contracted parameters,
asserts the verdict, and asserts the wall-clock budget.  Budgets are hard
limits, not targets; everything here runs far below them.
"""

import time

from ginshift.verify import run_claim

SEED = 0


def _check(criterion, claim_id, budget_seconds, **config):
    t0 = time.perf_counter()
    report = run_claim(claim_id, seed=SEED, **config)
    elapsed = time.perf_counter() - t0
    ok = report.verdict and elapsed < budget_seconds
    status = "pass" if ok else "FAIL"
    print(f"[{status}] {criterion} ({claim_id}, {elapsed:.1f}s "
          f"of {budget_seconds:.0f}s budget)")
    assert report.verdict, (criterion, report.witness)
    assert elapsed < budget_seconds, (criterion, elapsed)


def test_criterion_01_gin_q_closed_form():
    _check("1: gin(Q) closed form, 1 <= n,m <= 4",
           "prop-computegin2-i", 60, max_n=4, max_m=4)


def test_criterion_02_gin_q_power_slices():
    _check("2: degree-2k slice of gin(Q^k) = gin(Q)^k, n,m <= 3, k = 2",
           "prop-computegin2-ii", 180, max_n=3, max_m=3)


def test_criterion_03_w_identity():
    _check("3: W(n,m) = C(n+1,2)C(m+1,2), n,m <= 6",
           "W-identity", 1, max_n=6, max_m=6)


def test_criterion_04_fibre_gin_identity():
    _check("4: gin(F(I,J)) = gin(F(gin_n(I),gin_m(J))), 30 pairs + worked pair",
           "thm-1.3", 300, samples=30, max_n=3, max_m=3, max_deg=3)


def test_criterion_05_separating_monomial():
    _check("5: x1x4 separates gin(gin_2(I)+gin_3(J)) from gin(I+J)",
           "example-1.2", 30)


def test_criterion_06_lex_failure():
    _check("6: the fibre identity fails under lex with a witness monomial",
           "remark-lex", 30)


def test_criterion_07_kernel_identities():
    budget = 300
    t0 = time.perf_counter()
    reports = [run_claim(cid, seed=SEED, samples=20, max_n=3, max_deg=3)
               for cid in ("lemma-2.1", "prop-kern1", "prop-ker2",
                           "lemma-helperker", "lemma-helper1",
                           "lemma-easyhelper")]
    elapsed = time.perf_counter() - t0
    ok = all(r.verdict for r in reports) and elapsed < budget
    print(f"[{'pass' if ok else 'FAIL'}] 7: span/kernel/shadow identities on "
          f"20 ideals ({elapsed:.1f}s of {budget:.0f}s budget)")
    for r in reports:
        assert r.verdict, (r.claim_id, r.witness)
    assert elapsed < budget


def test_criterion_08_structural_identities():
    budget = 300
    t0 = time.perf_counter()
    reports = [run_claim(cid, seed=SEED, samples=20, max_n=3)
               for cid in ("prop-mainprop", "prop-mainhelper")]
    elapsed = time.perf_counter() - t0
    ok = all(r.verdict for r in reports) and elapsed < budget
    print(f"[{'pass' if ok else 'FAIL'}] 8: gin/d-value additivity on 20 "
          f"pairs ({elapsed:.1f}s of {budget:.0f}s budget)")
    for r in reports:
        assert r.verdict, (r.claim_id, r.witness)
    assert elapsed < budget


def test_criterion_09_shifting_axioms():
    _check("9: shifting axioms S1-S4 + Stanley-Reisner round trip, 50 complexes",
           "shifting-axioms", 300, samples=50, max_n=5)


def test_criterion_10_shift_of_disjoint_union():
    _check("10: shift of a disjoint union, 20 pairs + worked example",
           "thm-4.2", 300, samples=20, max_n=4, max_m=4)


def test_criterion_11_componentwise_linear_transfer():
    _check("11: I,J componentwise linear iff F(I,J) is, 10 pairs",
           "thm-5", 300, samples=10, max_n=3, max_m=3)


def test_criterion_12_cross_oracle():
    _check("12: Buchberger vs Macaulay initial ideals + gin stability, 50 ideals",
           "cross-oracle", 300, samples=50, max_deg=6)
