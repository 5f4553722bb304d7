"""Buchberger Groebner bases, initial ideals and degree-slice oracles.

The Buchberger core works fraction-free on integer coefficient dicts
(content-stripped) and only converts to monic rational form at the end.
Results are reduced Groebner bases, so ideal equality is representation
equality.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from . import linalg
from .ring import (LEX, RLEX, Poly, Ring, mono_div, mono_divides, mono_mul)


class Ideal:
    """A graded ideal given by nonzero homogeneous generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens):
        self.ring = ring
        checked = []
        for g in gens:
            if not isinstance(g, Poly) or g.ring != ring:
                raise ValueError("generator from a different ring")
            if not g:
                raise ValueError("zero polynomial is not a valid generator")
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            checked.append(g)
        self.gens = tuple(checked)

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def of_monomials(cls, ring, monos):
        return cls(ring, [Poly.monomial(ring, m) for m in monos])

    def frozen(self):
        return (self.ring.names, tuple(sorted(g.frozen() for g in self.gens)))

    def max_degree(self):
        return max((g.total_degree() for g in self.gens), default=0)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"


class GroebnerBasis:
    """Reduced, monic Groebner basis with order-descending elements."""

    __slots__ = ("ring", "order", "elements", "leading_monomials")

    def __init__(self, ring, order, elements):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self.leading_monomials = tuple(g.leading_monomial(order) for g in self.elements)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and set(g.frozen() for g in self.elements)
                == set(g.frozen() for g in other.elements))

    def __repr__(self):
        return f"GB<{self.order}>({', '.join(map(str, self.elements))})"


class MonomialIdeal:
    """Finite antichain of minimal monomial generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, monos):
        self.ring = ring
        self.gens = frozenset(_minimalize(monos))

    def contains(self, mono):
        return any(mono_divides(g, mono) for g in self.gens)

    def slice(self, d):
        """All degree-d monomials of the ideal, as a set."""
        return {m for m in self.ring.monomials(d) if self.contains(m)}

    def sorted_gens(self, order=RLEX):
        return sorted(self.gens, key=order.key, reverse=True)

    def product(self, other):
        return MonomialIdeal(self.ring,
                             {mono_mul(a, b) for a in self.gens for b in other.gens})

    def power(self, k):
        if k < 1:
            raise ValueError("power expects k >= 1")
        out = self
        for _ in range(k - 1):
            out = out.product(self)
        return out

    def is_squarefree(self):
        return all(all(e <= 1 for e in g) for g in self.gens)

    def to_ideal(self):
        return Ideal.of_monomials(self.ring, self.gens)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        terms = [str(Poly.monomial(self.ring, m)) for m in self.sorted_gens()]
        return "(" + ", ".join(terms or ["0"]) + ")"


def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# fraction-free integer core
# ---------------------------------------------------------------------------

def _to_int_poly(p):
    """Clear denominators and strip content; returns dict mono -> int."""
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in p.terms.items()}
    return _strip(ints)


def _strip(f):
    g = 0
    for c in f.values():
        g = gcd(g, c)
        if g == 1:
            return f
    if g > 1:
        return {m: c // g for m, c in f.items()}
    return f


def _reduce_int(f, basis, keyf):
    """Full fraction-free normal form of f against basis [(lt, lc, poly)].
    Returns a primitive remainder dict."""
    work = dict(f)
    rem = {}
    steps = 0
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        hit = None
        for lt, lc, g in basis:
            if mono_divides(lt, m):
                hit = (lt, lc, g)
                break
        if hit is None:
            rem[m] = c
            continue
        lt, lc, g = hit
        u = mono_div(m, lt)
        if lc != 1:
            for k in work:
                work[k] *= lc
            for k in rem:
                rem[k] *= lc
        # the m-term of lc*f was lc*c, cancelled exactly by c * x^u * g
        for gm, gc in g.items():
            if gm == lt:
                continue
            k = mono_mul(gm, u)
            v = work.get(k, 0) - c * gc
            if v:
                work[k] = v
            else:
                work.pop(k, None)
        steps += 1
        if steps % 24 == 0 and (work or rem):
            joint = _strip({**work, **rem})
            if len(joint) == len(work) + len(rem):
                work = {k: joint[k] for k in work}
                rem = {k: joint[k] for k in rem}
    return _strip(rem)


def _spoly_int(f, lt_f, lc_f, g, lt_g, lc_g):
    lcm = tuple(max(a, b) for a, b in zip(lt_f, lt_g))
    uf, ug = mono_div(lcm, lt_f), mono_div(lcm, lt_g)
    out = {}
    for m, c in f.items():
        out[mono_mul(m, uf)] = lc_g * c
    for m, c in g.items():
        k = mono_mul(m, ug)
        v = out.get(k, 0) - lc_f * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return _strip(out)


def _buchberger_core(int_gens, keyf):
    """Returns the minimal-then-tail-reduced basis as primitive int dicts."""
    basis = []  # (lt, lc, poly)

    def try_add(f):
        f = _reduce_int(f, basis, keyf)
        if not f:
            return None
        lt = max(f, key=keyf)
        if f[lt] < 0:
            f = {m: -c for m, c in f.items()}
        basis.append((lt, f[lt], f))
        return len(basis) - 1

    heap = []
    done = set()
    counter = 0
    for g in int_gens:
        if not g:
            continue
        idx = try_add(g)
        if idx is None:
            continue
        lt_new = basis[idx][0]
        for j in range(idx):
            lcm = tuple(max(a, b) for a, b in zip(lt_new, basis[j][0]))
            counter += 1
            heapq.heappush(heap, (sum(lcm), counter, j, idx, lcm))

    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        done.add((i, j))
        lt_i, lt_j = basis[i][0], basis[j][0]
        if tuple(max(a, b) for a, b in zip(lt_i, lt_j)) != lcm:
            continue  # stale entry (cannot happen with immutable basis, kept for safety)
        # Buchberger's coprime criterion
        if all(a == 0 or b == 0 for a, b in zip(lt_i, lt_j)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(basis[k][0], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly_int(basis[i][2], lt_i, basis[i][1], basis[j][2], lt_j, basis[j][1])
        idx = try_add(s)
        if idx is not None:
            lt_new = basis[idx][0]
            for k in range(idx):
                lcm2 = tuple(max(a, b) for a, b in zip(lt_new, basis[k][0]))
                counter += 1
                heapq.heappush(heap, (sum(lcm2), counter, k, idx, lcm2))

    # minimalize leading terms
    keep = []
    for i, (lt, _, _) in enumerate(basis):
        if not any(j != i and mono_divides(basis[j][0], lt)
                   and (basis[j][0] != lt or j < i) for j in range(len(basis))):
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # tail reduction
    reduced = []
    for i, (lt, lc, f) in enumerate(minimal):
        others = [minimal[j] for j in range(len(minimal)) if j != i]
        r = _reduce_int(f, others, keyf)
        if max(r, key=keyf) != lt:
            raise AssertionError("leading term lost during tail reduction")
        if r[max(r, key=keyf)] < 0:
            r = {m: -c for m, c in r.items()}
        reduced.append(r)
    return reduced


_GB_CACHE = {}


def buchberger(ideal, order=RLEX):
    """Reduced monic Groebner basis of a homogeneous ideal."""
    key = (ideal.frozen(), order.kind)
    hit = _GB_CACHE.get(key)
    if hit is not None:
        return hit
    keyf = order.key
    int_gens = [_to_int_poly(g) for g in ideal.gens]
    raw = _buchberger_core(int_gens, keyf)
    elements = []
    for f in raw:
        lt = max(f, key=keyf)
        lc = Fraction(f[lt])
        elements.append(Poly(ideal.ring, {m: Fraction(c) / lc for m, c in f.items()}))
    elements.sort(key=lambda p: keyf(p.leading_monomial(order)), reverse=True)
    gb = GroebnerBasis(ideal.ring, order, elements)
    _GB_CACHE[key] = gb
    return gb


def normal_form(f, gb):
    """Remainder of f modulo a Groebner basis; no monomial of the result
    is divisible by a leading monomial of gb."""
    keyf = gb.order.key
    pairs = list(zip(gb.leading_monomials, gb.elements))
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        hit = None
        for lt, g in pairs:
            if mono_divides(lt, m):
                hit = (lt, g)
                break
        if hit is None:
            rem[m] = c
            continue
        lt, g = hit
        u = mono_div(m, lt)
        for gm, gc in g.terms.items():
            if gm == lt:
                continue
            k = mono_mul(gm, u)
            v = work.get(k, 0) - c * gc
            if v:
                work[k] = v
            else:
                work.pop(k, None)
    return Poly(f.ring, rem)


def initial_ideal(ideal, order=RLEX):
    """Minimal monomial generators of ini(I): leading monomials of the
    reduced Groebner basis."""
    gb = buchberger(ideal, order)
    return MonomialIdeal(ideal.ring, gb.leading_monomials)


def quotient_basis(ideal, d, order=RLEX):
    """The degree-d monomials outside ini(I), order-descending."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    ini = initial_ideal(ideal, order)
    return [m for m in ideal.ring.monomials_desc(order, d) if not ini.contains(m)]


def hilbert_dim(ideal, d, order=RLEX):
    """dim_K (S/I)_d."""
    return len(quotient_basis(ideal, d, order))


def ideal_equal(a, b, order=RLEX):
    """Exact ideal equality via reduced Groebner bases."""
    if a.ring != b.ring:
        return False
    return buchberger(a, order) == buchberger(b, order)


# ---------------------------------------------------------------------------
# per-degree Macaulay oracle
# ---------------------------------------------------------------------------

def macaulay_rows(ideal, order, d):
    """Integer Macaulay matrix rows for degree d, plus the column monomials
    (order-descending)."""
    cols = ideal.ring.monomials_desc(order, d)
    col_index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in ideal.gens:
        gi = _to_int_poly(g)
        dg = g.total_degree()
        if dg > d:
            continue
        for u in ideal.ring.monomials(d - dg):
            row = [0] * len(cols)
            for m, c in gi.items():
                row[col_index[mono_mul(m, u)]] = c
            rows.append(row)
    return rows, cols


def macaulay_initial(ideal, order, d):
    """Degree-d monomials of ini(I) by exact row reduction of the Macaulay
    matrix; independent of the Buchberger path."""
    rows, cols = macaulay_rows(ideal, order, d)
    if not rows:
        return []
    _, pivots, _ = linalg.row_reduce(rows, len(cols))
    return [cols[p] for p in pivots]


def macaulay_span_basis(ideal, order, d):
    """Pivot monomials and echelon rows of I_d; used to materialize a
    vector-space basis of a graded slice."""
    rows, cols = macaulay_rows(ideal, order, d)
    if not rows:
        return [], []
    _, _, echelon = linalg.row_reduce(rows, len(cols))
    polys = []
    for row in echelon:
        terms = {cols[i]: Fraction(c) for i, c in enumerate(row) if c}
        polys.append(Poly(ideal.ring, terms))
    return cols, polys


# ---------------------------------------------------------------------------
# prime-field accelerator (pre-check only, never a certified source)
# ---------------------------------------------------------------------------

class UnluckyPrime(ValueError):
    """The chosen prime collapsed a leading coefficient; discard the run."""


def _reduce_modp(f, basis, keyf, p):
    work = dict(f)
    rem = {}
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        hit = next(((lt, g) for lt, g in basis if mono_divides(lt, m)), None)
        if hit is None:
            rem[m] = c
            continue
        lt, g = hit
        u = mono_div(m, lt)
        for gm, gc in g.items():
            if gm == lt:
                continue
            k = mono_mul(gm, u)
            v = (work.get(k, 0) - c * gc) % p
            if v:
                work[k] = v
            else:
                work.pop(k, None)
    return rem


def groebner_modp(ideal, order, p):
    """Reduced monic Groebner basis mod p as dicts mono -> int.

    Raises UnluckyPrime when a generator's content vanishes mod p.
    """
    if p <= 2 ** 20:
        raise ValueError("accelerator prime must exceed 2^20")
    keyf = order.key
    basis = []  # (lt, poly dict, monic)

    def monic(f):
        lt = max(f, key=keyf)
        inv = pow(f[lt], p - 2, p)
        return lt, {m: (c * inv) % p for m, c in f.items()}

    def try_add(f):
        f = _reduce_modp(f, basis, keyf, p)
        if not f:
            return None
        basis.append(monic(f))
        return len(basis) - 1

    heap, counter = [], 0
    for g in ideal.gens:
        gi = {m: int(c.numerator) % p for m, c in _relift(g).items()}
        gi = {m: c for m, c in gi.items() if c}
        if not gi:
            raise UnluckyPrime(f"generator vanishes mod {p}")
        idx = try_add(gi)
        if idx is None:
            continue
        for j in range(idx):
            lcm = tuple(max(a, b) for a, b in zip(basis[idx][0], basis[j][0]))
            counter += 1
            heapq.heappush(heap, (sum(lcm), counter, j, idx))
    while heap:
        _, _, i, j = heapq.heappop(heap)
        lt_i, lt_j = basis[i][0], basis[j][0]
        if all(a == 0 or b == 0 for a, b in zip(lt_i, lt_j)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(lt_i, lt_j))
        s = {}
        for m, c in basis[i][1].items():
            s[mono_mul(m, mono_div(lcm, lt_i))] = c
        for m, c in basis[j][1].items():
            k = mono_mul(m, mono_div(lcm, lt_j))
            v = (s.get(k, 0) - c) % p
            if v:
                s[k] = v
            else:
                s.pop(k, None)
        idx = try_add(s)
        if idx is not None:
            for k in range(idx):
                lcm2 = tuple(max(a, b) for a, b in zip(basis[idx][0], basis[k][0]))
                counter += 1
                heapq.heappush(heap, (sum(lcm2), counter, k, idx))
    lts = [lt for lt, _ in basis]
    keep = [i for i, lt in enumerate(lts)
            if not any(j != i and mono_divides(lts[j], lt)
                       and (lts[j] != lt or j < i) for j in range(len(lts)))]
    return [basis[i] for i in keep]


def _relift(poly):
    """Clear denominators of a rational polynomial into integer coefficients."""
    den = 1
    for c in poly.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: Fraction(c * den) for m, c in poly.terms.items()}
