"""Reproducible verification suites for every claim in scope.

Each claim suite draws its instances from a seeded generator (child seed =
crc32(claim id) xor run seed), so any failure is replayable bit-identically
from the report.  Suites are independent; run_all aggregates rather than
short-circuits.
"""

from __future__ import annotations

import random
import time
import zlib
from dataclasses import dataclass

from .constructions import (Q_ideal, SplitRing, count_W, W_formula,
                            fibre_product_ideal, gin_Q_closed_form,
                            gin_in_block, ideal_sum, is_componentwise_linear,
                            is_strongly_stable, is_squarefree_strongly_stable,
                            embed_ideal)
from .ginengine import (GenericChange, d_of, gin, gin_membership_span,
                        gin_slice, kernel_constraints, kernel_intersection_dim,
                        not_in_gin_by_d, random_change)
from .groebner import (Ideal, MonomialIdeal, initial_ideal, macaulay_initial)
from .ring import LEX, RLEX, Poly, Ring, shadow
from .simplicial import (SimplicialComplex, complex_of_ideal, delta_s,
                         disjoint_union, f_vector, is_shifted, is_subcomplex,
                         random_complex, random_subcomplex, stanley_reisner)
from . import linalg


@dataclass
class Report:
    claim_id: str
    params: dict
    verdict: bool
    witness: dict | None = None
    elapsed: float = 0.0

    def to_dict(self):
        return {
            "schema": 1,
            "claim_id": self.claim_id,
            "params": self.params,
            "verdict": "pass" if self.verdict else "fail",
            "witness": self.witness,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def child_seed(seed, claim_id):
    return (seed ^ zlib.crc32(claim_id.encode())) % 2 ** 63


# ---------------------------------------------------------------------------
# random instance generators
# ---------------------------------------------------------------------------

def random_monomial(rng, ring, d):
    mono = [0] * ring.nvars
    for _ in range(d):
        mono[rng.randrange(ring.nvars)] += 1
    return tuple(mono)


def random_homogeneous_poly(rng, ring, d, nterms):
    terms = {}
    guard = 0
    while len(terms) < nterms and guard < 50:
        guard += 1
        c = rng.choice([k for k in range(-9, 10) if k])
        terms[random_monomial(rng, ring, d)] = c
    return Poly(ring, terms)


def random_graded_ideal(rng, ring, max_deg, min_deg=2):
    """The distribution the suites test against: half random monomial
    ideals, half ideals with 2-3-term homogeneous generators, coefficients
    in [-9, 9]; no degree-1 generators."""
    ngens = rng.randint(1, 3)
    gens = []
    if rng.random() < 0.5:
        monos = {random_monomial(rng, ring, rng.randint(min_deg, max_deg))
                 for _ in range(ngens)}
        return MonomialIdeal(ring, monos).to_ideal()
    for _ in range(ngens):
        d = rng.randint(min_deg, max_deg)
        p = random_homogeneous_poly(rng, ring, d, rng.randint(2, 3))
        if p:
            gens.append(p)
    if not gens:
        gens = [Poly.monomial(ring, random_monomial(rng, ring, min_deg))]
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# claim suites
# ---------------------------------------------------------------------------

def _report(claim_id, params, failures, t0):
    return Report(claim_id, params, not failures,
                  failures[0] if failures else None, time.time() - t0)


def claim_computegin2_i(seed=0, bound=1000, trials=2, max_n=4, max_m=4, **_):
    """Closed form of gin(Q) for all 1 <= n, m <= max."""
    t0 = time.time()
    failures = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            split = SplitRing(n, m)
            s = child_seed(seed, f"computegin2-i-{n}-{m}")
            got = gin(Q_ideal(split), RLEX, seed=s, bound=bound, trials=trials).gin
            want = gin_Q_closed_form(split)
            if got != want:
                failures.append({"n": n, "m": m, "seed": s,
                                 "gin": repr(got), "closed_form": repr(want)})
    return _report("prop-computegin2-i", {"max_n": max_n, "max_m": max_m,
                                          "seed": seed, "bound": bound,
                                          "trials": trials}, failures, t0)


def claim_computegin2_ii(seed=0, bound=1000, trials=2, max_n=3, max_m=3, k=2, **_):
    """Degree-2k slice of gin(Q^k) equals that of gin(Q)^k."""
    t0 = time.time()
    failures = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            split = SplitRing(n, m)
            s = child_seed(seed, f"computegin2-ii-{n}-{m}")
            q = Q_ideal(split)
            qk = MonomialIdeal(split.big, [g.leading_monomial(RLEX)
                                           for g in q.gens]).power(k)
            got = gin_slice(qk.to_ideal(), 2 * k, RLEX, seed=s, bound=bound,
                            trials=trials)
            ginq = gin(q, RLEX, seed=s, bound=bound, trials=trials).gin
            want = ginq.power(k).slice(2 * k)
            if got != want:
                failures.append({"n": n, "m": m, "k": k, "seed": s,
                                 "only_in_gin_Qk": sorted(got - want),
                                 "only_in_ginQ_k": sorted(want - got)})
    return _report("prop-computegin2-ii", {"max_n": max_n, "max_m": max_m,
                                           "k": k, "seed": seed, "bound": bound,
                                           "trials": trials}, failures, t0)


def claim_w_identity(max_n=6, max_m=6, **_):
    t0 = time.time()
    failures = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            got = count_W(SplitRing(n, m))
            want = W_formula(n, m)
            if got != want:
                failures.append({"n": n, "m": m, "count": got, "formula": want})
    return _report("W-identity", {"max_n": max_n, "max_m": max_m}, failures, t0)


def _example_12_ideals():
    """n=2, m=3; I = (x1,x2)^2, J = (x3^2, x3x4, x4x5) in local coordinates."""
    split = SplitRing(2, 3)
    r2, r3 = split.block1_ring(), split.block2_ring()
    I = Ideal(r2, [parse(r2, "x1^2"), parse(r2, "x1*x2"), parse(r2, "x2^2")])
    J = Ideal(r3, [parse(r3, "x1^2"), parse(r3, "x1*x2"), parse(r3, "x2*x3")])
    return split, I, J


def parse(ring, text):
    from .ring import parse_poly
    return parse_poly(text, ring)


def _fibre_sides(I, J, split, order, seed, bound, trials):
    lhs = gin(fibre_product_ideal(I, J, split), order,
              seed=seed, bound=bound, trials=trials).gin
    gI = gin_in_block(I, split, 1, order, seed=seed + 1, bound=bound, trials=trials)
    gJ = gin_in_block(J, split, 2, order, seed=seed + 2, bound=bound, trials=trials)
    rhs = gin(fibre_product_ideal(gI.to_ideal(), gJ.to_ideal(), split), order,
              seed=seed + 3, bound=bound, trials=trials).gin
    return lhs, rhs


def claim_thm_1_3(seed=0, bound=1000, trials=2, samples=30, max_n=3, max_m=3,
                  max_deg=3, **_):
    """gin(F(I,J)) = gin(F(gin_n(I), gin_m(J))) on random pairs plus the
    worked counterexample pair; also tallies how often the sum analogue
    (without Q) fails, which is expected."""
    t0 = time.time()
    failures = []
    k1_failures = 0
    rng = random.Random(child_seed(seed, "thm-1.3"))

    cases = [_example_12_ideals()]
    for _ in range(samples):
        n, m = rng.randint(1, max_n), rng.randint(1, max_m)
        split = SplitRing(n, m)
        I = random_graded_ideal(rng, split.block1_ring(), max_deg)
        J = random_graded_ideal(rng, split.block2_ring(), max_deg)
        cases.append((split, I, J))

    for idx, (split, I, J) in enumerate(cases):
        s = child_seed(seed, f"thm-1.3-case-{idx}") % 2 ** 32
        lhs, rhs = _fibre_sides(I, J, split, RLEX, s, bound, trials)
        if lhs != rhs:
            failures.append({"case": idx, "seed": s,
                             "I": repr(I), "J": repr(J),
                             "lhs": repr(lhs), "rhs": repr(rhs)})
            continue
        # the sum analogue without Q may fail; just count it
        big = split.big
        sum_lhs = gin(ideal_sum(embed_ideal(I, big), embed_ideal(J, big, split.n)),
                      RLEX, seed=s + 11, bound=bound, trials=trials).gin
        gI = gin_in_block(I, split, 1, RLEX, seed=s + 12, bound=bound, trials=trials)
        gJ = gin_in_block(J, split, 2, RLEX, seed=s + 13, bound=bound, trials=trials)
        sum_rhs = gin(ideal_sum(gI.to_ideal(), gJ.to_ideal()), RLEX,
                      seed=s + 14, bound=bound, trials=trials).gin
        if sum_lhs != sum_rhs:
            k1_failures += 1
    return _report("thm-1.3", {"samples": samples, "max_n": max_n,
                               "max_m": max_m, "max_deg": max_deg,
                               "seed": seed, "bound": bound, "trials": trials,
                               "sum_analogue_failures": k1_failures},
                   failures, t0)


def claim_example_1_2(seed=0, bound=1000, trials=2, **_):
    """x1x4 separates gin(gin_2(I)+gin_3(J)) from gin(I+J) for the stated
    pair; the fibre-product identity still holds for it."""
    t0 = time.time()
    failures = []
    split, I, J = _example_12_ideals()
    big = split.big
    s = child_seed(seed, "example-1.2") % 2 ** 32

    gI = gin_in_block(I, split, 1, RLEX, seed=s, bound=bound, trials=trials)
    gJ = gin_in_block(J, split, 2, RLEX, seed=s + 1, bound=bound, trials=trials)
    if gI != MonomialIdeal(big, [m.embed(big).leading_monomial(RLEX)
                                 for m in I.gens]):
        failures.append({"check": "gin_2(I) = I (strongly stable)",
                         "got": repr(gI)})
    expected_gJ = {(0, 0, 2, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 2, 0)}
    if gJ.gens != frozenset(expected_gJ):
        failures.append({"check": "gin_3(J) = (x3,x4)^2", "got": repr(gJ)})

    sum_plain = gin(ideal_sum(embed_ideal(I, big), embed_ideal(J, big, split.n)),
                    RLEX, seed=s + 2, bound=bound, trials=trials).gin
    sum_gins = gin(ideal_sum(gI.to_ideal(), gJ.to_ideal()), RLEX,
                   seed=s + 3, bound=bound, trials=trials).gin
    x1x4 = (1, 0, 0, 1, 0)
    if not sum_gins.contains(x1x4):
        failures.append({"check": "x1x4 in gin(gin_2(I)+gin_3(J))",
                         "got": repr(sum_gins)})
    if sum_plain.contains(x1x4):
        failures.append({"check": "x1x4 not in gin(I+J)", "got": repr(sum_plain)})

    lhs, rhs = _fibre_sides(I, J, split, RLEX, s + 4, bound, trials)
    if lhs != rhs:
        failures.append({"check": "fibre identity on the pair",
                         "lhs": repr(lhs), "rhs": repr(rhs)})
    return _report("example-1.2", {"seed": seed, "bound": bound,
                                   "trials": trials}, failures, t0)


def claim_remark_lex(seed=0, bound=1000, trials=2, **_):
    """With lex the fibre identity fails for I=(x1^2,x1x2), J=(x4^2,x5x6)."""
    t0 = time.time()
    failures = []
    split = SplitRing(3, 3)
    r3 = split.block1_ring()
    I = Ideal(r3, [parse(r3, "x1^2"), parse(r3, "x1*x2")])
    J = Ideal(r3, [parse(r3, "x1^2"), parse(r3, "x2*x3")])
    s = child_seed(seed, "remark-lex") % 2 ** 32
    lhs, rhs = _fibre_sides(I, J, split, LEX, s, bound, trials)
    if lhs == rhs:
        failures.append({"check": "lex sides must differ", "both": repr(lhs)})
        witness = None
    else:
        witness = next((m for m in sorted(lhs.gens) if not rhs.contains(m)),
                       None) or next(m for m in sorted(rhs.gens)
                                     if not lhs.contains(m))
    report = _report("remark-lex", {"n": 3, "m": 3, "seed": seed,
                                    "bound": bound, "trials": trials},
                     failures, t0)
    if witness is not None:
        report.params["witness_monomial"] = str(Poly.monomial(split.big, witness))
    return report


# -- section 2 oracle identities --------------------------------------------

def _section2_instances(seed, claim_id, samples, max_n, max_deg, bound):
    rng = random.Random(child_seed(seed, claim_id))
    out = []
    for i in range(samples):
        n = rng.randint(2, max_n)
        ring = Ring(n)
        ideal = random_graded_ideal(rng, ring, max_deg)
        change = random_change(ring, child_seed(seed, f"{claim_id}-A-{i}"), bound)
        out.append((ideal, change))
    return out


def _quotient_monomials_of(ginideal, ring, d):
    return [m for m in ring.monomials(d) if not ginideal.contains(m)]


def claim_lemma_2_1(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                    max_deg=3, **_):
    """Span criterion agrees with gin membership for all degrees <= 3."""
    t0 = time.time()
    failures = []
    for ideal, change in _section2_instances(seed, "lemma-2.1", samples,
                                             max_n, max_deg, bound):
        g = gin(ideal, RLEX, seed=change.seed, bound=bound, trials=trials).gin
        for d in range(1, 4):
            for a in ideal.ring.monomials(d):
                by_span = gin_membership_span(ideal, a, change)
                if by_span != g.contains(a):
                    failures.append({"ideal": repr(ideal), "a": a,
                                     "seed": change.seed, "span": by_span,
                                     "gin_member": g.contains(a)})
    return _report("lemma-2.1", {"samples": samples, "max_n": max_n,
                                 "max_deg": max_deg, "seed": seed,
                                 "bound": bound, "trials": trials},
                   failures, t0)


def claim_prop_kern1(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                     max_deg=3, **_):
    """Kernel-intersection dimension equals the count of quotient-basis
    monomials of gin(I) at or above x^a."""
    t0 = time.time()
    failures = []
    for ideal, change in _section2_instances(seed, "prop-kern1", samples,
                                             max_n, max_deg, bound):
        g = gin(ideal, RLEX, seed=change.seed, bound=bound, trials=trials).gin
        for d in range(1, 4):
            quot = _quotient_monomials_of(g, ideal.ring, d)
            for a in ideal.ring.monomials(d):
                dim = kernel_intersection_dim(ideal, a, d, True, change)
                want = sum(1 for c in quot if RLEX.compare(a, c) <= 0)
                if dim != want:
                    failures.append({"ideal": repr(ideal), "a": a, "d": d,
                                     "seed": change.seed, "dim": dim,
                                     "count": want})
    return _report("prop-kern1", {"samples": samples, "max_n": max_n,
                                  "max_deg": max_deg, "seed": seed,
                                  "bound": bound, "trials": trials},
                   failures, t0)


def claim_prop_ker2(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                    max_deg=3, **_):
    """Shadow count = difference of kernel-intersection dimensions at e=d+1."""
    t0 = time.time()
    failures = []
    for ideal, change in _section2_instances(seed, "prop-ker2", samples,
                                             max_n, max_deg, bound):
        g = gin(ideal, RLEX, seed=change.seed, bound=bound, trials=trials).gin
        ring = ideal.ring
        for d in range(1, 3):
            for a in ring.monomials(d):
                sh = sum(1 for b in shadow(ring, a) if not g.contains(b))
                strict = kernel_intersection_dim(ideal, a, d + 1, True, change)
                weak = kernel_intersection_dim(ideal, a, d + 1, False, change)
                if sh != strict - weak:
                    failures.append({"ideal": repr(ideal), "a": a, "d": d,
                                     "seed": change.seed, "shadow": sh,
                                     "strict": strict, "weak": weak})
    return _report("prop-ker2", {"samples": samples, "max_n": max_n,
                                 "max_deg": max_deg, "seed": seed,
                                 "bound": bound, "trials": trials},
                   failures, t0)


def claim_lemma_helperker(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                          max_deg=3, **_):
    """Kern(tau_{f^a})_e equals the intersection over j of
    Kern(tau_{f^{a+e_j}})_e, as subspaces."""
    t0 = time.time()
    failures = []
    for ideal, change in _section2_instances(seed, "lemma-helperker", samples,
                                             max_n, max_deg, bound):
        ring = ideal.ring
        for d in range(1, 3):
            e = d + 1
            for a in ring.monomials(d):
                rows_a, ncols = kernel_constraints(ideal, [a], e, change)
                bumped = [tuple(x + (1 if i == j else 0) for i, x in enumerate(a))
                          for j in range(ring.nvars)]
                rows_b, _ = kernel_constraints(ideal, bumped, e, change)
                dim_a = linalg.nullity(rows_a, ncols)
                dim_b = linalg.nullity(rows_b, ncols)
                dim_both = linalg.nullity(rows_a + rows_b, ncols)
                if not dim_a == dim_b == dim_both:
                    failures.append({"ideal": repr(ideal), "a": a, "e": e,
                                     "seed": change.seed,
                                     "dims": [dim_a, dim_b, dim_both]})
    return _report("lemma-helperker", {"samples": samples, "max_n": max_n,
                                       "max_deg": max_deg, "seed": seed,
                                       "bound": bound, "trials": trials},
                   failures, t0)


def claim_lemma_helper1(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                        max_deg=3, **_):
    t0 = time.time()
    failures = []
    for ideal, change in _section2_instances(seed, "lemma-helper1", samples,
                                             max_n, max_deg, bound):
        g = gin(ideal, RLEX, seed=change.seed, bound=bound, trials=trials).gin
        for d in range(2, 4):
            for a in ideal.ring.monomials(d):
                by_d = not_in_gin_by_d(ideal, a, seed=change.seed, bound=bound,
                                       trials=trials)
                if by_d != (not g.contains(a)):
                    failures.append({"ideal": repr(ideal), "a": a,
                                     "seed": change.seed, "by_d": by_d,
                                     "not_in_gin": not g.contains(a)})
    return _report("lemma-helper1", {"samples": samples, "max_n": max_n,
                                     "max_deg": max_deg, "seed": seed,
                                     "bound": bound, "trials": trials},
                   failures, t0)


def claim_lemma_easyhelper(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                           max_deg=3, **_):
    t0 = time.time()
    failures = []
    for ideal, change in _section2_instances(seed, "lemma-easyhelper", samples,
                                             max_n, max_deg, bound):
        g = gin(ideal, RLEX, seed=change.seed, bound=bound, trials=trials).gin
        for d in range(2, 4):
            for a in ideal.ring.monomials(d):
                left = d_of(ideal, a, seed=change.seed, bound=bound, trials=trials)
                right = d_of(g.to_ideal(), a, seed=change.seed + 1, bound=bound,
                             trials=trials)
                if left != right:
                    failures.append({"ideal": repr(ideal), "a": a,
                                     "seed": change.seed,
                                     "d_I": left, "d_gin": right})
    return _report("lemma-easyhelper", {"samples": samples, "max_n": max_n,
                                        "max_deg": max_deg, "seed": seed,
                                        "bound": bound, "trials": trials},
                   failures, t0)


# -- section 3 structural identities -----------------------------------------

def _pair_instances(seed, claim_id, samples, max_n, max_m, max_deg):
    rng = random.Random(child_seed(seed, claim_id))
    out = []
    for _ in range(samples):
        n, m = rng.randint(1, max_n), rng.randint(1, max_m)
        split = SplitRing(n, m)
        I = random_graded_ideal(rng, split.block1_ring(), max_deg)
        J = random_graded_ideal(rng, split.block2_ring(), max_deg)
        out.append((split, I, J))
    return out


def claim_prop_mainprop(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                        max_m=3, max_deg=3, **_):
    """gin(I + m_m) = gin(gin_n(I) + m_m), and the block-2 analogue."""
    t0 = time.time()
    failures = []
    for idx, (split, I, J) in enumerate(_pair_instances(seed, "prop-mainprop",
                                                        samples, max_n, max_m,
                                                        max_deg)):
        big = split.big
        s = child_seed(seed, f"prop-mainprop-{idx}") % 2 ** 32
        for block, K, mm in ((1, I, split.m2()), (2, J, split.m1())):
            offset = 0 if block == 1 else split.n
            lhs = gin(ideal_sum(embed_ideal(K, big, offset), mm), RLEX,
                      seed=s, bound=bound, trials=trials).gin
            gK = gin_in_block(K, split, block, RLEX, seed=s + 1, bound=bound,
                              trials=trials)
            rhs = gin(ideal_sum(gK.to_ideal(), mm), RLEX, seed=s + 2,
                      bound=bound, trials=trials).gin
            if lhs != rhs:
                failures.append({"case": idx, "block": block, "seed": s,
                                 "ideal": repr(K), "lhs": repr(lhs),
                                 "rhs": repr(rhs)})
    return _report("prop-mainprop", {"samples": samples, "max_n": max_n,
                                     "max_m": max_m, "max_deg": max_deg,
                                     "seed": seed, "bound": bound,
                                     "trials": trials}, failures, t0)


def claim_prop_mainhelper(seed=0, bound=1000, trials=2, samples=20, max_n=3,
                          max_m=3, max_deg=3, **_):
    """d_{I+J+Q}(a) = d_{I+m_m}(a) + d_{J+m_n}(a) for degree 2..3 monomials."""
    t0 = time.time()
    failures = []
    for idx, (split, I, J) in enumerate(_pair_instances(seed, "prop-mainhelper",
                                                        samples, max_n, max_m,
                                                        max_deg)):
        big = split.big
        s = child_seed(seed, f"prop-mainhelper-{idx}") % 2 ** 32
        fibre = fibre_product_ideal(I, J, split)
        left_ideal = ideal_sum(embed_ideal(I, big), split.m2())
        right_ideal = ideal_sum(embed_ideal(J, big, split.n), split.m1())
        for d in range(2, 4):
            for a in big.monomials(d):
                total = d_of(fibre, a, seed=s, bound=bound, trials=trials)
                part1 = d_of(left_ideal, a, seed=s + 1, bound=bound, trials=trials)
                part2 = d_of(right_ideal, a, seed=s + 2, bound=bound, trials=trials)
                if total != part1 + part2:
                    failures.append({"case": idx, "a": a, "seed": s,
                                     "I": repr(I), "J": repr(J),
                                     "d_fibre": total,
                                     "d_parts": [part1, part2]})
    return _report("prop-mainhelper", {"samples": samples, "max_n": max_n,
                                       "max_m": max_m, "max_deg": max_deg,
                                       "seed": seed, "bound": bound,
                                       "trials": trials}, failures, t0)


# -- section 4: shifting ------------------------------------------------------

def claim_shifting_axioms(seed=0, bound=1000, trials=2, samples=50, max_n=5, **_):
    """(S1)-(S3) on random complexes, (S4) on nested pairs, plus the
    Stanley-Reisner round trip."""
    t0 = time.time()
    failures = []
    rng = random.Random(child_seed(seed, "shifting-axioms"))
    for i in range(samples):
        n = rng.randint(2, max_n)
        cx = random_complex(rng, n)
        s = child_seed(seed, f"shifting-axioms-{i}") % 2 ** 32
        if complex_of_ideal(stanley_reisner(cx)) != cx:
            failures.append({"check": "round-trip", "complex": repr(cx)})
            continue
        shifted = delta_s(cx, seed=s, bound=bound, trials=trials)
        if not is_shifted(shifted):
            failures.append({"check": "S1", "complex": repr(cx),
                             "shifted": repr(shifted), "seed": s})
        if f_vector(cx) != f_vector(shifted):
            failures.append({"check": "S3", "complex": repr(cx),
                             "f": f_vector(cx), "f_shifted": f_vector(shifted),
                             "seed": s})
        again = delta_s(shifted, seed=s + 1, bound=bound, trials=trials)
        if again != shifted:
            failures.append({"check": "S2", "complex": repr(shifted),
                             "image": repr(again), "seed": s})
        if not is_squarefree_strongly_stable(stanley_reisner(shifted)):
            failures.append({"check": "sqfree-strongly-stable",
                             "complex": repr(shifted), "seed": s})
    for i in range(min(20, samples)):
        n = rng.randint(2, max_n)
        cx = random_complex(rng, n)
        sub = random_subcomplex(rng, cx)
        s = child_seed(seed, f"shifting-axioms-s4-{i}") % 2 ** 32
        big = delta_s(cx, seed=s, bound=bound, trials=trials)
        small = delta_s(sub, seed=s + 1, bound=bound, trials=trials)
        if not is_subcomplex(small, big):
            failures.append({"check": "S4", "complex": repr(cx),
                             "sub": repr(sub), "seed": s})
    return _report("shifting-axioms", {"samples": samples, "max_n": max_n,
                                       "seed": seed, "bound": bound,
                                       "trials": trials}, failures, t0)


def claim_thm_4_2(seed=0, bound=1000, trials=2, samples=20, max_n=4, max_m=4, **_):
    """Delta^s of a disjoint union is Delta^s of the union of the parts'
    shifted complexes."""
    t0 = time.time()
    failures = []
    rng = random.Random(child_seed(seed, "thm-4.2"))
    cases = [(SimplicialComplex(2, [{1, 2}]), SimplicialComplex(2, [{1, 2}]))]
    for _ in range(samples):
        cases.append((random_complex(rng, rng.randint(2, max_n)),
                      random_complex(rng, rng.randint(2, max_m))))
    for idx, (c1, c2) in enumerate(cases):
        s = child_seed(seed, f"thm-4.2-{idx}") % 2 ** 32
        lhs = delta_s(disjoint_union(c1, c2), seed=s, bound=bound, trials=trials)
        d1 = delta_s(c1, seed=s + 1, bound=bound, trials=trials)
        d2 = delta_s(c2, seed=s + 2, bound=bound, trials=trials)
        rhs = delta_s(disjoint_union(d1, d2), seed=s + 3, bound=bound,
                      trials=trials)
        if lhs != rhs:
            failures.append({"case": idx, "seed": s, "c1": repr(c1),
                             "c2": repr(c2), "lhs": repr(lhs), "rhs": repr(rhs)})
        if idx == 0:
            want = SimplicialComplex(4, [{1}, {2, 4}, {3, 4}])
            if lhs != want:
                failures.append({"case": "two-disjoint-edges", "seed": s,
                                 "got": repr(lhs), "want": repr(want)})
    return _report("thm-4.2", {"samples": samples, "max_n": max_n,
                               "max_m": max_m, "seed": seed, "bound": bound,
                               "trials": trials}, failures, t0)


# -- section 5: componentwise linearity ---------------------------------------

def claim_thm_5(seed=0, bound=1000, trials=2, samples=10, max_n=3, max_m=3,
                max_deg=3, **_):
    """I and J componentwise linear iff F(I,J) is."""
    t0 = time.time()
    failures = []
    for idx, (split, I, J) in enumerate(_pair_instances(seed, "thm-5", samples,
                                                        max_n, max_m, max_deg)):
        s = child_seed(seed, f"thm-5-{idx}") % 2 ** 32
        a = is_componentwise_linear(I, seed=s, bound=bound, trials=trials)
        b = is_componentwise_linear(J, seed=s + 1, bound=bound, trials=trials)
        c = is_componentwise_linear(fibre_product_ideal(I, J, split),
                                    seed=s + 2, bound=bound, trials=trials)
        if (a and b) != c:
            failures.append({"case": idx, "seed": s, "I": repr(I), "J": repr(J),
                             "cl_I": a, "cl_J": b, "cl_F": c})
    return _report("thm-5", {"samples": samples, "max_n": max_n,
                             "max_m": max_m, "max_deg": max_deg, "seed": seed,
                             "bound": bound, "trials": trials}, failures, t0)


# -- cross oracles -------------------------------------------------------------

def claim_cross_oracle(seed=0, bound=1000, trials=2, samples=50, max_n=4,
                       max_deg=3, max_degree_checked=6, **_):
    """Buchberger initial ideal vs Macaulay slices, gin idempotence and
    strong stability."""
    t0 = time.time()
    failures = []
    rng = random.Random(child_seed(seed, "cross-oracle"))
    for i in range(samples):
        n = rng.randint(2, max_n)
        ring = Ring(n)
        ideal = random_graded_ideal(rng, ring, max_deg)
        ini = initial_ideal(ideal, RLEX)
        for d in range(max_degree_checked + 1):
            via_matrix = set(macaulay_initial(ideal, RLEX, d))
            via_gb = ini.slice(d)
            if via_matrix != via_gb:
                failures.append({"ideal": repr(ideal), "d": d,
                                 "macaulay": sorted(via_matrix),
                                 "buchberger": sorted(via_gb)})
        if i % 5 == 0:
            s = child_seed(seed, f"cross-oracle-gin-{i}") % 2 ** 32
            g = gin(ideal, RLEX, seed=s, bound=bound, trials=trials).gin
            if not is_strongly_stable(g):
                failures.append({"ideal": repr(ideal), "check": "strongly-stable",
                                 "gin": repr(g), "seed": s})
            again = gin(g.to_ideal(), RLEX, seed=s + 1, bound=bound,
                        trials=trials).gin
            if again != g:
                failures.append({"ideal": repr(ideal), "check": "idempotence",
                                 "gin": repr(g), "gin_gin": repr(again),
                                 "seed": s})
    return _report("cross-oracle", {"samples": samples, "max_n": max_n,
                                    "max_deg": max_deg, "seed": seed,
                                    "bound": bound, "trials": trials},
                   failures, t0)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

CLAIMS = {
    "prop-computegin2-i": claim_computegin2_i,
    "prop-computegin2-ii": claim_computegin2_ii,
    "W-identity": claim_w_identity,
    "thm-1.3": claim_thm_1_3,
    "example-1.2": claim_example_1_2,
    "remark-lex": claim_remark_lex,
    "lemma-2.1": claim_lemma_2_1,
    "prop-kern1": claim_prop_kern1,
    "prop-ker2": claim_prop_ker2,
    "lemma-helperker": claim_lemma_helperker,
    "lemma-helper1": claim_lemma_helper1,
    "lemma-easyhelper": claim_lemma_easyhelper,
    "prop-mainprop": claim_prop_mainprop,
    "prop-mainhelper": claim_prop_mainhelper,
    "shifting-axioms": claim_shifting_axioms,
    "thm-4.2": claim_thm_4_2,
    "thm-5": claim_thm_5,
    "cross-oracle": claim_cross_oracle,
}


def run_claim(claim_id, **config):
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}")
    config = {k: v for k, v in config.items() if v is not None}
    return CLAIMS[claim_id](**config)


def run_all(jobs=None, **config):
    """Run every suite; output order is canonical by claim id regardless of
    completion order."""
    ids = sorted(CLAIMS)
    if jobs == 1:
        return [run_claim(cid, **config) for cid in ids]
    import concurrent.futures as cf
    import os
    workers = jobs or min(len(ids), os.cpu_count() or 1)
    with cf.ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {cid: pool.submit(run_claim, cid, **config) for cid in ids}
        return [futures[cid].result() for cid in ids]
