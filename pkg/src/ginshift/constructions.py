"""Fibre products, the cross ideal Q, stability checks and regularity.

A SplitRing fixes two variable blocks 1..n and n+1..n+m inside one big
ring; fibre products, Q and the block maximal ideals all live there.
Regularity goes through the strongly stable rlex gin (valid in
characteristic zero); componentwise linearity uses the truncation
criterion reg T/L_{<=k} <= k-1.
"""

from __future__ import annotations

from math import comb

from .ginengine import gin
from .groebner import Ideal, MonomialIdeal, macaulay_span_basis
from .ring import RLEX, Poly, Ring, min_index, mono_mul


class BlockViolation(ValueError):
    """A generator strays outside its declared variable block."""


class SplitRing:
    """Two blocks of variables: 1..n and n+1..n+m in a ring with n+m vars."""

    __slots__ = ("n", "m", "big")

    def __init__(self, n, m):
        if n < 1 or m < 1:
            raise ValueError("both blocks need at least one variable")
        self.n = n
        self.m = m
        self.big = Ring(n + m)

    def block1_ring(self):
        return Ring(self.n)

    def block2_ring(self):
        return Ring(self.m)

    def m1(self):
        """(x_1, ..., x_n) inside the big ring."""
        return Ideal.of_monomials(self.big, [self.big.variable(i)
                                             for i in range(1, self.n + 1)])

    def m2(self):
        """(x_{n+1}, ..., x_{n+m}) inside the big ring."""
        return Ideal.of_monomials(self.big, [self.big.variable(i)
                                             for i in range(self.n + 1, self.n + self.m + 1)])

    def block_of(self, poly):
        """1 or 2 when the polynomial uses only that block, else raises."""
        used = set()
        for mono in poly.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(1 if i < self.n else 2)
        if used <= {1}:
            return 1
        if used == {2}:
            return 2
        raise BlockViolation(f"generator {poly} mixes the two variable blocks")


def embed_ideal(ideal, target, offset=0):
    if not ideal.gens:
        return Ideal.zero(target)
    return Ideal(target, [g.embed(target, offset) for g in ideal.gens])


def restrict_poly(poly, offset, target):
    """Inverse of embed: shift variable i+offset back to variable i."""
    terms = {}
    for mono, c in poly.terms.items():
        if any(mono[:offset]) or any(mono[offset + target.nvars:]):
            raise BlockViolation(f"{poly} uses variables outside the block")
        terms[mono[offset:offset + target.nvars]] = c
    return Poly(target, terms)


def Q_ideal(split):
    """Q = (x_1..x_n)(x_{n+1}..x_{n+m}): the n*m cross monomials x_i x_j."""
    big = split.big
    gens = [mono_mul(big.variable(i), big.variable(j))
            for i in range(1, split.n + 1)
            for j in range(split.n + 1, split.n + split.m + 1)]
    return Ideal.of_monomials(big, gens)


def fibre_product_ideal(I, J, split):
    """F(I,J) = I + J + Q in the big ring.

    I may live in a ring with n variables (embedded at offset 0) or already
    in the big ring using block-1 variables only; likewise J with offset n.
    """
    big = split.big
    gens = []
    for g in I.gens:
        h = g.embed(big) if g.ring.nvars == split.n and g.ring != big else g
        if split.block_of(h) != 1:
            raise BlockViolation(f"generator {g} of I is not in block 1")
        gens.append(h)
    for g in J.gens:
        h = g.embed(big, split.n) if g.ring.nvars == split.m and g.ring != big else g
        if split.block_of(h) != 2:
            raise BlockViolation(f"generator {g} of J is not in block 2")
        gens.append(h)
    gens.extend(Q_ideal(split).gens)
    return Ideal(big, gens)


def gin_in_block(I, split, block, order=RLEX, seed=0, bound=1000, trials=2):
    """gin of a block ideal computed inside its own block ring (the rlex
    order induced by the block's variable precedence), embedded back into
    the big ring."""
    big = split.big
    offset = 0 if block == 1 else split.n
    small = split.block1_ring() if block == 1 else split.block2_ring()
    gens = []
    for g in I.gens:
        h = g if g.ring == small else restrict_poly(g, offset, small)
        gens.append(h)
    small_ideal = Ideal(small, gens)
    result = gin(small_ideal, order, seed=seed, bound=bound, trials=trials).gin
    return MonomialIdeal(big, [(0,) * offset + m + (0,) * (big.nvars - offset - small.nvars)
                               for m in result.gens])


# ---------------------------------------------------------------------------
# ideal arithmetic
# ---------------------------------------------------------------------------

def ideal_sum(*ideals):
    ring = ideals[0].ring
    gens = []
    for i in ideals:
        if i.ring != ring:
            raise ValueError("ideal sum needs a common ring")
        gens.extend(i.gens)
    return Ideal(ring, gens)


def ideal_product(a, b):
    if a.ring != b.ring:
        raise ValueError("ideal product needs a common ring")
    gens = {}
    for f in a.gens:
        for g in b.gens:
            p = f * g
            gens[p.frozen()] = p
    return Ideal(a.ring, list(gens.values()))


def ideal_power(a, k):
    if k < 1:
        raise ValueError("power expects k >= 1")
    out = a
    for _ in range(k - 1):
        out = ideal_product(out, a)
    return out


# ---------------------------------------------------------------------------
# stability predicates
# ---------------------------------------------------------------------------

def is_strongly_stable(M):
    """Exchange condition x_j * m / x_i in M for all generators m, x_i | m,
    j <= i.  Checking minimal generators suffices."""
    for g in M.gens:
        for i, e in enumerate(g):
            if e == 0:
                continue
            for j in range(i):
                moved = list(g)
                moved[i] -= 1
                moved[j] += 1
                if not M.contains(tuple(moved)):
                    return False
    return True


def is_squarefree_strongly_stable(M):
    """Squarefree exchange: for x_F in M, x_i in F, j < i with x_j not in F,
    x_j * x_F / x_i is again in M."""
    if not M.is_squarefree():
        raise ValueError("predicate needs a squarefree monomial ideal")
    for g in M.gens:
        for i, e in enumerate(g):
            if e == 0:
                continue
            for j in range(i):
                if g[j]:
                    continue
                moved = list(g)
                moved[i] -= 1
                moved[j] += 1
                if not M.contains(tuple(moved)):
                    return False
    return True


# ---------------------------------------------------------------------------
# the closed form of gin(Q) and the W count
# ---------------------------------------------------------------------------

def gin_Q_closed_form(split):
    """(x_i x_j : i+j <= n+m, i <= j, i <= min(n,m))."""
    big = split.big
    cap = min(split.n, split.m)
    gens = []
    for i in range(1, cap + 1):
        for j in range(i, split.n + split.m - i + 1):
            gens.append(mono_mul(big.variable(i), big.variable(j)))
    return MonomialIdeal(big, gens)


def count_W(split):
    """Brute-force count of quadruples (i,j,h,k) with
    1 <= i <= j <= h <= k <= n+m, j <= min(n,m), i+k <= n+m, j+h <= n+m."""
    n, m = split.n, split.m
    total = n + m
    cap = min(n, m)
    count = 0
    for i in range(1, total + 1):
        for j in range(i, min(cap, total) + 1):
            for h in range(j, total - j + 1):
                for k in range(h, total - i + 1):
                    count += 1
    return count


def W_formula(n, m):
    return comb(n + 1, 2) * comb(m + 1, 2)


# ---------------------------------------------------------------------------
# components, truncations, regularity
# ---------------------------------------------------------------------------

def component_ideal(I, k, order=RLEX):
    """The ideal generated by a vector-space basis of I_k (not minimalized;
    minimality is irrelevant to the regularity criterion)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    _, basis = macaulay_span_basis(I, order, k)
    return Ideal(I.ring, basis)


def truncation_ideal(I, k, order=RLEX):
    """I_{<=k}: generated by all elements of I of degree at most k."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    gens = []
    degrees = sorted({g.total_degree() for g in I.gens if g.total_degree() <= k})
    for d in degrees:
        gens.extend(component_ideal(I, d, order).gens)
    return Ideal(I.ring, gens)


def regularity_via_gin(I, seed=0, bound=1000, trials=2):
    """Castelnuovo-Mumford regularity of a nonzero graded ideal: the maximal
    minimal-generator degree of its (strongly stable) rlex gin."""
    if not I.gens:
        raise ValueError("regularity of the zero ideal is undefined here")
    g = gin(I, RLEX, seed=seed, bound=bound, trials=trials).gin
    return max(sum(m) for m in g.gens)


def regularity_of_quotient(I, seed=0, bound=1000, trials=2):
    """reg(T/I) = reg(I) - 1 for nonzero I; reg(T) = 0."""
    if not I.gens:
        return 0
    return regularity_via_gin(I, seed=seed, bound=bound, trials=trials) - 1


def is_componentwise_linear(I, seed=0, bound=1000, trials=2):
    """Truncation criterion: reg T/I_{<=k} <= k-1 for k from the minimal
    generator degree up to reg(I).  Higher components of an ideal generated
    in degrees <= reg are automatically linear once these pass."""
    if not I.gens:
        return True
    mindeg = min(g.total_degree() for g in I.gens)
    if mindeg < 1:
        raise ValueError("ideal must be contained in the maximal ideal")
    top = regularity_via_gin(I, seed=seed, bound=bound, trials=trials)
    for k in range(mindeg, top + 1):
        trunc = truncation_ideal(I, k)
        if not trunc.gens:
            continue
        if regularity_of_quotient(trunc, seed=seed, bound=bound, trials=trials) > k - 1:
            return False
    return True
