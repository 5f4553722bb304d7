"""Groebner bases, normal forms, Macaulay oracles."""

import random

import pytest

from ginshift.groebner import (Ideal, MonomialIdeal, UnluckyPrime, buchberger,
                               groebner_modp, hilbert_dim, ideal_equal,
                               initial_ideal, macaulay_initial,
                               macaulay_span_basis, normal_form,
                               quotient_basis)
from ginshift.ring import LEX, RLEX, Poly, Ring, parse_poly

from oracles import slice_span_membership


def ideal_of(ring, *texts):
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


def test_ideal_rejects_inhomogeneous():
    ring = Ring(2)
    with pytest.raises(ValueError):
        ideal_of(ring, "x1 + x2^2")


def test_buchberger_known_example():
    # in(x1^2, x1*x2 + x2^2) under rlex needs the syzygy element x2^3
    ring = Ring(2)
    I = ideal_of(ring, "x1^2", "x1*x2 + x2^2")
    ini = initial_ideal(I, RLEX)
    assert ini == MonomialIdeal(ring, [(2, 0), (1, 1), (0, 3)])


def test_initial_ideal_principal():
    ring = Ring(3)
    I = ideal_of(ring, "x1*x3 + x2^2")
    assert initial_ideal(I, RLEX) == MonomialIdeal(ring, [(0, 2, 0)])
    assert initial_ideal(I, LEX) == MonomialIdeal(ring, [(1, 0, 1)])


def test_normal_form_properties():
    ring = Ring(2)
    I = ideal_of(ring, "x1^2 - x2^2")
    gb = buchberger(I, RLEX)
    f = parse_poly("x1^3 + x1*x2^2", ring)
    nf = normal_form(f, gb)
    assert normal_form(nf, gb) == nf
    assert normal_form(f - nf, gb) == Poly.zero(ring)  # f - nf lies in I


def rand_ideal(rng, ring, max_deg):
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, max_deg)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            m = [0] * ring.nvars
            for _ in range(d):
                m[rng.randrange(ring.nvars)] += 1
            terms[tuple(m)] = rng.randint(-9, 9)
        p = Poly(ring, terms)
        if p:
            gens.append(p)
    return Ideal(ring, gens) if gens else ideal_of(ring, "x1^2")


def test_groebner_membership_vs_span_oracle():
    """Monomial membership via normal form agrees with raw slice spans."""
    rng = random.Random(7)
    for _ in range(15):
        ring = Ring(rng.randint(2, 3))
        I = rand_ideal(rng, ring, 3)
        gb = buchberger(I, RLEX)
        for d in range(1, 4):
            for mono in ring.monomials(d):
                by_nf = normal_form(Poly.monomial(ring, mono), gb) == \
                    Poly.zero(ring)
                assert by_nf == slice_span_membership(I, mono)


def test_macaulay_initial_matches_buchberger():
    rng = random.Random(13)
    for _ in range(15):
        ring = Ring(rng.randint(2, 4))
        I = rand_ideal(rng, ring, 3)
        ini = initial_ideal(I, RLEX)
        for d in range(7):
            assert set(macaulay_initial(I, RLEX, d)) == ini.slice(d)


def test_quotient_basis_and_hilbert():
    ring = Ring(2)
    I = ideal_of(ring, "x1^2", "x2^3")
    assert hilbert_dim(I, 0) == 1
    assert hilbert_dim(I, 1) == 2
    assert hilbert_dim(I, 2) == 2
    assert hilbert_dim(I, 3) == 1
    assert hilbert_dim(I, 4) == 0
    assert quotient_basis(I, 2) == sorted(
        [(1, 1), (0, 2)], key=RLEX.key, reverse=True)


def test_ideal_equal():
    ring = Ring(2)
    a = ideal_of(ring, "x1^2 - x2^2", "x1*x2")
    b = ideal_of(ring, "x1^2 - x2^2", "x1*x2", "x1^3")
    c = ideal_of(ring, "x1^2", "x1*x2")
    assert ideal_equal(a, b)
    assert not ideal_equal(a, c)


def test_macaulay_span_basis_spans_slice():
    ring = Ring(2)
    I = ideal_of(ring, "x1^2 - x2^2")
    _, basis = macaulay_span_basis(I, RLEX, 3)
    assert len(basis) == 2  # x1^3 - x1x2^2, x1^2x2 - x2^3
    for p in basis:
        assert normal_form(p, buchberger(I, RLEX)) == Poly.zero(ring)


def test_monomial_ideal_minimalizes():
    ring = Ring(2)
    M = MonomialIdeal(ring, [(2, 0), (2, 1), (1, 2)])
    assert M.gens == frozenset({(2, 0), (1, 2)})
    assert M.contains((3, 5))
    assert not M.contains((1, 1))


def test_monomial_ideal_power():
    ring = Ring(2)
    M = MonomialIdeal(ring, [(1, 0), (0, 1)])
    assert M.power(2).gens == frozenset({(2, 0), (1, 1), (0, 2)})


def test_monomial_ideal_squarefree():
    ring = Ring(3)
    assert MonomialIdeal(ring, [(1, 1, 0)]).is_squarefree()
    assert not MonomialIdeal(ring, [(2, 0, 0)]).is_squarefree()


def test_modp_agrees_with_rational_leading_terms():
    rng = random.Random(99)
    p = 1048583  # first prime past 2^20
    for _ in range(10):
        ring = Ring(rng.randint(2, 3))
        I = rand_ideal(rng, ring, 3)
        try:
            gb_modp = groebner_modp(I, RLEX, p)
        except UnluckyPrime:
            continue
        ini = initial_ideal(I, RLEX)
        assert MonomialIdeal(ring, [lt for lt, _ in gb_modp]) == ini


def test_zero_ideal():
    ring = Ring(2)
    I = Ideal.zero(ring)
    assert initial_ideal(I, RLEX).gens == frozenset()
    assert hilbert_dim(I, 3) == 4
