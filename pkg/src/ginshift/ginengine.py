"""Generic initial ideals via seeded random coordinate changes.

gin(I) is computed as ini(phi^{-1}(I)) for phi: x_i -> f_i, where the f_j
are random linear forms with integer coefficients.  Instead of the rational
inverse we substitute through the (integral) adjugate; that only rescales
each homogeneous generator, so the ideal is unchanged.

Certification is probabilistic: independent trials must agree, and rlex
results must additionally be strongly stable.  Disagreement escalates the
coefficient bound and finally raises GinUncertain -- never a silent fix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import lcm

from . import linalg
from .groebner import Ideal, MonomialIdeal, buchberger, initial_ideal, \
    macaulay_rows, normal_form, quotient_basis
from .ring import RLEX, Poly, contract


MAX_RETRIES = 3


class GinUncertain(RuntimeError):
    """Trials kept disagreeing; carries the offending seed for replay."""

    def __init__(self, message, seed):
        super().__init__(f"{message} (seed {seed})")
        self.seed = seed


@dataclass(frozen=True)
class GenericChange:
    """Invertible integer matrix A with columns f_j = sum_i A[i][j] x_i."""

    matrix: tuple
    seed: int
    bound: int
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def nvars(self):
        return len(self.matrix)

    def adjugate(self):
        return linalg.adjugate([list(r) for r in self.matrix])

    def f(self, ring, j):
        """The linear form f_j as a polynomial."""
        return Poly(ring, {ring.variable(i + 1): self.matrix[i][j - 1]
                           for i in range(ring.nvars) if self.matrix[i][j - 1]})

    def f_power(self, ring, b):
        """f^b = prod_j f_j^{b_j}, cached per exponent vector."""
        b = tuple(b)
        hit = self._powers.get(b)
        if hit is not None:
            return hit
        out = Poly.monomial(ring, ring.one)
        for j, e in enumerate(b, start=1):
            for _ in range(e):
                out = out * self.f(ring, j)
        self._powers[b] = out
        return out


def random_change(ring, seed, bound):
    """Seeded generic change of coordinates; entries uniform in [-bound, bound]
    (Mersenne-Twister via random.Random), redrawn wholesale until invertible."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rng = random.Random(seed)
    n = ring.nvars
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if linalg.determinant(m) != 0:
            return GenericChange(tuple(tuple(r) for r in m), seed, bound)


def apply_inverse(ideal, change):
    """phi^{-1}(I) up to per-generator scaling (adjugate substitution)."""
    adj = change.adjugate()
    return Ideal(ideal.ring, [g.substitute(adj) for g in ideal.gens])


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    certified: bool
    trials: tuple  # (seed, initial-ideal hash) per trial
    order: object


def _trial_seed(seed, attempt, t):
    return (seed + 0x9E3779B97F4A7C15 * (attempt * 64 + t + 1)) % 2 ** 63


_GIN_CACHE = {}


def gin(ideal, order=RLEX, seed=0, bound=1000, trials=2):
    """Certified generic initial ideal.

    Runs `trials` independent coordinate changes and requires the initial
    ideals to agree exactly; rlex results must also be strongly stable.
    On failure the bound is escalated (x10, up to MAX_RETRIES) before
    GinUncertain is raised.
    """
    from .constructions import is_strongly_stable

    key = (ideal.frozen(), order.kind, seed, bound, trials)
    hit = _GIN_CACHE.get(key)
    if hit is not None:
        return hit

    if not ideal.gens:
        result = GinResult(MonomialIdeal(ideal.ring, []), True, (), order)
        _GIN_CACHE[key] = result
        return result

    cur_bound = bound
    for attempt in range(MAX_RETRIES + 1):
        runs = []
        for t in range(trials):
            s = _trial_seed(seed, attempt, t)
            change = random_change(ideal.ring, s, cur_bound)
            ini = initial_ideal(apply_inverse(ideal, change), order)
            runs.append((s, ini))
        inis = {r[1] for r in runs}
        if len(inis) == 1:
            result = runs[0][1]
            if order == RLEX and not is_strongly_stable(result):
                cur_bound *= 10
                continue
            trail = tuple((s, hash(tuple(sorted(i.gens)))) for s, i in runs)
            out = GinResult(result, True, trail, order)
            _GIN_CACHE[key] = out
            return out
        cur_bound *= 10
    raise GinUncertain("generic initial ideal trials kept disagreeing", seed)


def gin_slice(ideal, d, order=RLEX, seed=0, bound=1000, trials=2):
    """The degree-d monomials of gin(I), by Macaulay row reduction of the
    substituted generators (no Groebner basis).

    Sound for reading off gin when gin is known to be generated in degrees
    <= d; certification mirrors gin().
    """
    cur_bound = bound
    for attempt in range(MAX_RETRIES + 1):
        slices = []
        for t in range(trials):
            s = _trial_seed(seed, attempt, t)
            change = random_change(ideal.ring, s, cur_bound)
            sub = apply_inverse(ideal, change)
            rows, cols = macaulay_rows(sub, order, d)
            if not rows:
                slices.append(frozenset())
                continue
            _, pivots, _ = linalg.row_reduce(rows, len(cols))
            slices.append(frozenset(cols[p] for p in pivots))
        if len(set(slices)) == 1:
            return set(slices[0])
        cur_bound *= 10
    raise GinUncertain("generic initial slice trials kept disagreeing", seed)


# ---------------------------------------------------------------------------
# span and kernel criteria (the linear-algebra route to gin membership)
# ---------------------------------------------------------------------------

def _residue_row(f, gb, basis_index):
    """Coordinates of the residue class of f in the quotient basis, as an
    integer row (denominators cleared)."""
    nf = normal_form(f, gb)
    den = 1
    for c in nf.terms.values():
        den = lcm(den, c.denominator)
    row = [0] * len(basis_index)
    for m, c in nf.terms.items():
        row[basis_index[m]] = int(c * den)
    return row


def gin_membership_span(ideal, a, change, order=RLEX):
    """Span criterion: x^a in gin(I) iff the residue of f^a lies in the span
    of the residues of f^b over the strictly order-smaller b of equal degree."""
    d = sum(a)
    if d < 1:
        raise ValueError("membership criterion needs degree >= 1")
    ring = ideal.ring
    gb = buchberger(ideal, order)
    basis = quotient_basis(ideal, d, order)
    basis_index = {m: i for i, m in enumerate(basis)}
    smaller = [b for b in ring.monomials(d) if order.compare(b, a) < 0]
    rows = [_residue_row(change.f_power(ring, b), gb, basis_index) for b in smaller]
    target = _residue_row(change.f_power(ring, a), gb, basis_index)
    if not any(target):
        return True
    return linalg.in_row_span(rows, target, len(basis))


def kernel_constraints(ideal, b_monos, e, change, order=RLEX):
    """Constraint rows on coordinates of (S/I)_e expressing tau_{f^b}(g) = 0
    in S for every b in b_monos.

    (S/I)_e is realized inside S_e as the span of the standard monomials in
    the generic coordinates of `change` (the complement of ini of the
    transformed ideal) so that the f-basis and the monomial complement are
    compatible; the complement of ini(I) in the original coordinates does
    not satisfy the kernel identities.  Contraction is applied to the
    subspace representative; "kernel" means vanishing in S, not in the
    quotient.
    """
    ring = ideal.ring
    basis = quotient_basis(apply_inverse(ideal, change), e, order)
    rows = []
    for b in b_monos:
        fb = change.f_power(ring, b)
        deg_out = e - sum(b)
        targets = {u: i for i, u in enumerate(ring.monomials(deg_out))}
        block = [[0] * len(basis) for _ in targets]
        for col, c in enumerate(basis):
            img = contract(fb, Poly.monomial(ring, c))
            for u, coeff in img.terms.items():
                block[targets[u]][col] = int(coeff)
        rows.extend(block)
    return rows, len(basis)


def kernel_intersection_dim(ideal, a, e, strict, change, order=RLEX):
    """dim of the intersection over {b : |b| = |a|, x^b < x^a} (or <= when
    strict is false) of the kernels of tau_{f^b} on span B(S/I)_e."""
    d = sum(a)
    if e < d:
        raise ValueError("target degree must be at least |a|")
    ring = ideal.ring
    if strict:
        bs = [b for b in ring.monomials(d) if order.compare(b, a) < 0]
    else:
        bs = [b for b in ring.monomials(d) if order.compare(b, a) <= 0]
    rows, ncols = kernel_constraints(ideal, bs, e, change, order)
    return linalg.nullity(rows, ncols)


# ---------------------------------------------------------------------------
# shadow counts d_I(a)
# ---------------------------------------------------------------------------

def d_of(ideal, a, order=RLEX, seed=0, bound=1000, trials=2):
    """d_I(a): monomials of degree |a| outside gin(I) whose quotient by
    their smallest variable equals x^a / x_min(a).  Needs |a| >= 2."""
    from .ring import min_index, mono_div, shadow

    if sum(a) < 2:
        raise ValueError("d_I(a) needs a monomial of degree >= 2")
    ring = ideal.ring
    g = gin(ideal, order, seed=seed, bound=bound, trials=trials).gin
    a_prime = mono_div(a, ring.variable(min_index(a)))
    return sum(1 for m in shadow(ring, a_prime, order) if not g.contains(m))


def not_in_gin_by_d(ideal, a, order=RLEX, seed=0, bound=1000, trials=2):
    """Decides x^a not-in gin(I) via the shadow-count inequality
    min(x^a/x_min(a)) - min(x^a) + 1 <= d_I(a)."""
    from .ring import min_index, mono_div

    if sum(a) < 2:
        raise ValueError("criterion needs degree >= 2")
    ring = ideal.ring
    a_prime = mono_div(a, ring.variable(min_index(a)))
    lhs = min_index(a_prime) - min_index(a) + 1
    return lhs <= d_of(ideal, a, order, seed=seed, bound=bound, trials=trials)
