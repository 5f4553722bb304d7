"""Simplicial complexes, Stanley-Reisner translation, symmetric shifting."""

import random

import pytest

from ginshift.constructions import is_squarefree_strongly_stable
from ginshift.simplicial import (SimplicialComplex, complex_of_ideal, delta_s,
                                 disjoint_union, f_vector, is_shifted,
                                 is_subcomplex, random_complex, sigma,
                                 sigma_monomial, stanley_reisner)
from ginshift.groebner import MonomialIdeal
from ginshift.ring import Ring


def triangle_boundary():
    return SimplicialComplex(3, [{1, 2}, {1, 3}, {2, 3}])


def two_disjoint_edges():
    return SimplicialComplex(4, [{1, 2}, {3, 4}])


def test_facets_keep_only_maximal():
    cx = SimplicialComplex(3, [{1}, {1, 2}, {2}])
    assert cx.facets == frozenset({frozenset({1, 2}), frozenset({2})}) or \
        cx.facets == frozenset({frozenset({1, 2})})
    # {1} and {2} are both inside {1,2}
    assert cx.facets == frozenset({frozenset({1, 2})})


def test_f_vector_examples():
    assert f_vector(triangle_boundary()) == (1, 3, 3)
    assert f_vector(two_disjoint_edges()) == (1, 4, 2)
    assert f_vector(SimplicialComplex(1, [{1}])) == (1, 1)
    assert f_vector(SimplicialComplex(2, [frozenset()])) == (1,)


def test_faces_and_dim():
    cx = triangle_boundary()
    assert cx.dim() == 1
    assert len(cx.faces()) == 7
    assert cx.is_face({1, 2}) and not cx.is_face({1, 2, 3})


def test_is_subcomplex():
    cx = triangle_boundary()
    sub = SimplicialComplex(3, [{1, 2}, {3}])
    assert is_subcomplex(sub, cx)
    assert not is_subcomplex(SimplicialComplex(3, [{1, 2, 3}]), cx)
    with pytest.raises(ValueError):
        is_subcomplex(SimplicialComplex(2, [{1}]), cx)


def test_is_shifted_examples():
    assert is_shifted(SimplicialComplex(4, [{2, 4}, {3, 4}, {1}]))
    assert not is_shifted(two_disjoint_edges())
    assert is_shifted(SimplicialComplex(3, [{1, 2, 3}]))  # full simplex
    # a single top vertex is shifted only if it is the largest one
    assert is_shifted(SimplicialComplex(2, [{2}]))
    assert not is_shifted(SimplicialComplex(2, [{1}]))


def test_shifted_iff_sr_ideal_squarefree_strongly_stable():
    rng = random.Random(7)
    for _ in range(40):
        cx = random_complex(rng, rng.randint(2, 5))
        I = stanley_reisner(cx)
        assert is_shifted(cx) == is_squarefree_strongly_stable(I)


def test_stanley_reisner_roundtrip():
    rng = random.Random(11)
    for _ in range(40):
        cx = random_complex(rng, rng.randint(1, 6))
        assert complex_of_ideal(stanley_reisner(cx)) == cx


def test_stanley_reisner_examples():
    I = stanley_reisner(triangle_boundary())
    assert I.gens == frozenset({(1, 1, 1)})
    J = stanley_reisner(two_disjoint_edges())
    assert J.gens == frozenset({(1, 0, 1, 0), (1, 0, 0, 1),
                                (0, 1, 1, 0), (0, 1, 0, 1)})


def test_complex_of_ideal_rejects_non_squarefree():
    with pytest.raises(ValueError):
        complex_of_ideal(MonomialIdeal(Ring(2), [(2, 0)]))


def test_sigma_monomial():
    assert sigma_monomial((2, 0, 0)) == [1, 2]        # x1^2 -> x1 x2
    assert sigma_monomial((1, 1, 0)) == [1, 3]        # x1 x2 -> x1 x3
    assert sigma_monomial((0, 0, 3)) == [3, 4, 5]     # x3^3 -> x3 x4 x5
    assert sigma_monomial((0, 0, 0)) == []


def test_sigma_of_strongly_stable_is_squarefree():
    M = MonomialIdeal(Ring(3), [(2, 0, 0), (1, 1, 0), (0, 2, 0)])
    S = sigma(M)
    assert S.is_squarefree()
    assert len(S.gens) == len(M.gens)
    assert {sum(g) for g in S.gens} == {sum(g) for g in M.gens}


def test_delta_s_fixes_shifted_complexes():
    rng = random.Random(3)
    fixed = 0
    for _ in range(30):
        cx = random_complex(rng, rng.randint(2, 4))
        if not is_shifted(cx):
            continue
        fixed += 1
        assert delta_s(cx, seed=1, bound=100) == cx
    assert fixed >= 3  # the sample actually exercised the property


def test_delta_s_triangle_boundary():
    # I_Gamma = (x1 x2 x3), gin = (x1^3), sigma -> x1 x2 x3: fixed point
    assert delta_s(triangle_boundary(), seed=1, bound=100) == triangle_boundary()


def test_delta_s_two_disjoint_edges():
    got = delta_s(two_disjoint_edges(), seed=1, bound=100)
    assert got == SimplicialComplex(4, [{1}, {2, 4}, {3, 4}])
    assert f_vector(got) == f_vector(two_disjoint_edges())
    assert is_shifted(got)


def test_delta_s_preserves_f_vector_and_shifts():
    rng = random.Random(17)
    for _ in range(10):
        cx = random_complex(rng, rng.randint(2, 5))
        got = delta_s(cx, seed=2, bound=200)
        assert f_vector(got) == f_vector(cx)
        assert is_shifted(got)


def test_disjoint_union():
    u = disjoint_union(SimplicialComplex(2, [{1, 2}]),
                       SimplicialComplex(2, [{1, 2}]))
    assert u == SimplicialComplex(4, [{1, 2}, {3, 4}])
    # f-vector is additive except for the shared empty face
    fu, f1 = f_vector(u), f_vector(SimplicialComplex(2, [{1, 2}]))
    assert fu == (1,) + tuple(2 * x for x in f1[1:])
