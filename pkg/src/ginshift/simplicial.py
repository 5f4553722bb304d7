"""Simplicial complexes, Stanley-Reisner ideals and symmetric shifting.

Complexes are stored by facets (antichain of 1-based vertex sets);
full face enumeration is capped at 20 vertices.  Delta^s is realized as
complex_of_ideal(sigma(gin(I_Gamma))) and errors loudly when the sigma
image escapes the vertex set -- containment is a theorem, so an escape
signals a defective gin.
"""

from __future__ import annotations

from itertools import combinations

from .constructions import is_squarefree_strongly_stable
from .ginengine import gin
from .groebner import Ideal, MonomialIdeal
from .ring import RLEX, Ring

FACE_ENUM_CAP = 20


class ShiftOverflow(RuntimeError):
    """A sigma image left the vertex set; the underlying gin is suspect."""


class SimplicialComplex:
    """Inclusion-closed face family on vertices 1..n, stored by facets.

    The complex {emptyset} (only the empty face) is facets == {frozenset()};
    a complex with no faces at all is not representable (and not needed).
    """

    __slots__ = ("n", "facets")

    def __init__(self, n, facets):
        if n < 1:
            raise ValueError("need at least one vertex")
        if n > FACE_ENUM_CAP:
            raise ValueError(f"vertex count capped at {FACE_ENUM_CAP}")
        fs = {frozenset(f) for f in facets}
        if not fs:
            fs = {frozenset()}
        for f in fs:
            if any(v < 1 or v > n for v in f):
                raise ValueError("facet vertex out of range")
        # keep only maximal faces
        self.n = n
        self.facets = frozenset(f for f in fs
                                if not any(f < g for g in fs))

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.n == other.n and self.facets == other.facets)

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        body = "; ".join(",".join(map(str, sorted(f))) or "-"
                         for f in sorted(self.facets, key=lambda f: (len(f), sorted(f))))
        return f"Complex(n={self.n}: {body})"

    def faces(self):
        """All faces including the empty face."""
        seen = set()
        for f in self.facets:
            f = sorted(f)
            for k in range(len(f) + 1):
                seen.update(map(frozenset, combinations(f, k)))
        return seen

    def is_face(self, s):
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def dim(self):
        return max(len(f) for f in self.facets) - 1

    def vertices_used(self):
        out = set()
        for f in self.facets:
            out |= f
        return out


def f_vector(cx):
    """(f_{-1}, f_0, ..., f_dim): face counts by dimension."""
    counts = {}
    for f in cx.faces():
        counts[len(f)] = counts.get(len(f), 0) + 1
    return tuple(counts.get(k, 0) for k in range(cx.dim() + 2))


def is_subcomplex(sub, cx):
    """Every face of sub is a face of cx (same vertex universe)."""
    if sub.n != cx.n:
        raise ValueError("subcomplex test needs a common vertex universe")
    return all(cx.is_face(f) for f in sub.facets)


def is_shifted(cx):
    """Exchange property: F a face, i < j, x_i in F, x_j not in F implies
    F - x_i + x_j is a face.  Equivalent to I_Gamma squarefree strongly
    stable."""
    faces = cx.faces()
    for f in faces:
        for i in f:
            for j in range(i + 1, cx.n + 1):
                if j in f:
                    continue
                if frozenset(f - {i} | {j}) not in faces:
                    return False
    return True


# ---------------------------------------------------------------------------
# Stanley-Reisner translation
# ---------------------------------------------------------------------------

def stanley_reisner(cx):
    """I_Gamma: generated by the minimal non-faces (a vertex in no face
    contributes its variable)."""
    ring = Ring(cx.n)
    nonfaces = []
    found = []
    for k in range(1, cx.n + 1):
        for combo in combinations(range(1, cx.n + 1), k):
            s = frozenset(combo)
            if any(m <= s for m in found):
                continue
            if not cx.is_face(s):
                found.append(s)
                nonfaces.append(tuple(1 if v + 1 in s else 0 for v in range(cx.n)))
    return MonomialIdeal(ring, nonfaces)


def complex_of_ideal(M):
    """Inverse translation: faces are the vertex sets supporting no
    generator.  Requires a squarefree monomial ideal."""
    if not M.is_squarefree():
        raise ValueError("Stanley-Reisner translation needs squarefree generators")
    n = M.ring.nvars
    supports = [frozenset(i + 1 for i, e in enumerate(g) if e) for g in M.gens]
    faces = []
    for k in range(n, -1, -1):
        for combo in combinations(range(1, n + 1), k):
            s = frozenset(combo)
            if any(sup <= s for sup in supports):
                continue
            if any(s <= f for f in faces):
                continue
            faces.append(s)
    return SimplicialComplex(n, faces)


# ---------------------------------------------------------------------------
# the sigma operator and symmetric shifting
# ---------------------------------------------------------------------------

def sigma_monomial(mono):
    """x_{i_1}...x_{i_t} (indices weakly increasing with multiplicity) to
    x_{i_1} x_{i_2+1} ... x_{i_t+t-1}; returns the new 1-based index set."""
    idx = []
    for i, e in enumerate(mono):
        idx.extend([i + 1] * e)
    return [v + t for t, v in enumerate(idx)]


def sigma(M):
    """Apply sigma to every minimal generator; the target ring gains
    maxdeg - 1 variables.  Images of a strongly stable ideal are squarefree."""
    if not M.gens:
        return MonomialIdeal(M.ring, [])
    maxdeg = max(sum(g) for g in M.gens)
    target = Ring(M.ring.nvars + max(maxdeg - 1, 0))
    gens = []
    for g in M.gens:
        img = [0] * target.nvars
        for v in sigma_monomial(g):
            img[v - 1] += 1
        gens.append(tuple(img))
    return MonomialIdeal(target, gens)


def delta_s(cx, order=RLEX, seed=0, bound=1000, trials=2):
    """Symmetric algebraic shifted complex: I_{Delta^s} = gin(I_Gamma)^sigma."""
    ideal_gamma = stanley_reisner(cx)
    if not ideal_gamma.gens:
        return cx  # full simplex: gin(0) = 0
    g = gin(ideal_gamma.to_ideal(), order, seed=seed, bound=bound, trials=trials).gin
    shifted = sigma(g)
    ring_n = Ring(cx.n)
    gens = []
    for m in shifted.gens:
        if any(m[cx.n:]):
            raise ShiftOverflow(
                f"sigma image {m} needs more than {cx.n} vertices; "
                f"gin is suspect (seed {seed})")
        gens.append(m[:cx.n])
    return complex_of_ideal(MonomialIdeal(ring_n, gens))


def disjoint_union(cx1, cx2):
    """Facets of cx1 plus the facets of cx2 relabeled by +n1."""
    facets = set(cx1.facets)
    for f in cx2.facets:
        facets.add(frozenset(v + cx1.n for v in f))
    return SimplicialComplex(cx1.n + cx2.n, facets)


def random_complex(rng, n):
    """Seeded random complex: facet count in [1,6], facet size in [1,4]."""
    facets = []
    for _ in range(rng.randint(1, 6)):
        size = rng.randint(1, min(4, n))
        facets.append(frozenset(rng.sample(range(1, n + 1), size)))
    return SimplicialComplex(n, facets)


def random_subcomplex(rng, cx):
    """A random subcomplex on the same vertex universe."""
    faces = sorted(cx.faces(), key=lambda f: (len(f), sorted(f)))
    picked = [f for f in faces if rng.random() < 0.6]
    if not picked:
        picked = [frozenset()]
    return SimplicialComplex(cx.n, picked)
