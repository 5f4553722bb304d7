"""Independent oracles used only by the tests.

Everything here recomputes quantities from first principles (Koszul
homology, raw degree-slice spans) without going through the Groebner or
gin machinery under test, so agreement is meaningful.
"""

from itertools import combinations
from math import gcd

from ginshift import linalg
from ginshift.groebner import buchberger, normal_form, quotient_basis
from ginshift.ring import Poly, mono_mul


def slice_span_membership(ideal, mono):
    """Is x^mono in the ideal?  Decided by raw linear algebra on the degree
    slice: x^mono in span of {x^u * g : g generator, deg match}."""
    ring = ideal.ring
    d = sum(mono)
    cols = {m: i for i, m in enumerate(ring.monomials(d))}
    rows = []
    for g in ideal.gens:
        k = d - g.total_degree()
        if k < 0:
            continue
        for u in ring.monomials(k):
            shifted = g.term_mul(u)
            den = 1
            for c in shifted.terms.values():
                den *= c.denominator
            row = [0] * len(cols)
            for m, c in shifted.terms.items():
                row[cols[m]] = int(c * den)
            rows.append(row)
    target = [0] * len(cols)
    target[cols[mono]] = 1
    return linalg.in_row_span(rows, target, len(cols))


def _koszul_matrix(ideal, i, j, gb):
    """Matrix of the Koszul differential Lambda^i (x) (S/I)_{j-i} ->
    Lambda^{i-1} (x) (S/I)_{j-i+1}, with S/I realized on quotient bases."""
    ring = ideal.ring
    n = ring.nvars
    if j - i < 0 or i > n:
        return [], 0
    if i == 0:
        return [], len(quotient_basis(ideal, j))
    src_sets = list(combinations(range(n), i))
    dst_sets = {s: k for k, s in enumerate(combinations(range(n), i - 1))}
    src_basis = quotient_basis(ideal, j - i)
    dst_basis = {m: k for k, m in enumerate(quotient_basis(ideal, j - i + 1))}
    ncols = len(src_sets) * len(src_basis)
    nrows = len(dst_sets) * len(dst_basis)
    rows = [[0] * ncols for _ in range(nrows)]
    for si, subset in enumerate(src_sets):
        for ci, c in enumerate(src_basis):
            col = si * len(src_basis) + ci
            for t, var in enumerate(subset):
                rest = subset[:t] + subset[t + 1:]
                img = normal_form(Poly.monomial(ring,
                                                mono_mul(c, ring.variable(var + 1))),
                                  gb)
                sign = (-1) ** t
                for m, coeff in img.terms.items():
                    row = dst_sets[rest] * len(dst_basis) + dst_basis[m]
                    rows[row][col] += sign * coeff
    # row scaling does not change the rank, so clear denominators rowwise
    cleared = []
    for row in rows:
        den = 1
        for entry in row:
            den = den * entry.denominator // gcd(den, entry.denominator) \
                if entry else den
        cleared.append([int(entry * den) for entry in row])
    return cleared, ncols


def koszul_betti(ideal, i, j):
    """beta_{i,j}(S/I) = dim_K Tor_i(S/I, K)_j via the Koszul complex."""
    gb = buchberger(ideal)
    d_i, ncols_i = _koszul_matrix(ideal, i, j, gb)
    d_next, _ = _koszul_matrix(ideal, i + 1, j, gb)
    ker = ncols_i - linalg.rank(d_i, len(d_i[0]) if d_i else ncols_i)
    img = linalg.rank(d_next, len(d_next[0]) if d_next else 0)
    return ker - img


def regularity_by_koszul(ideal, search_pad=3):
    """reg(S/I) = max{ j - i : beta_{i,j}(S/I) != 0 }, searched over all i
    and j - i up to maxdeg(gens) + search_pad."""
    n = ideal.ring.nvars
    cap = max((g.total_degree() for g in ideal.gens), default=0) + search_pad
    reg = 0
    for i in range(n + 1):
        for slack in range(cap + 1):
            if koszul_betti(ideal, i, i + slack):
                reg = max(reg, slack)
    return reg
