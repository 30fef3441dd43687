import random
from pathlib import Path

import pytest

from pbei.algebra import DEGREVLEX, Poly, Ring, poly_from_str
from pbei.graphs import complete, from_edge_list, path
from pbei.groebner import (
    Ideal,
    basis_from_text,
    basis_to_text,
    buchberger,
    eliminate,
    ideal_intersection,
    ideal_sum,
    min_generator_degrees,
    normal_form,
    s_polynomial,
)
from pbei.ideals import parity_ideal

GOLDENS = Path(__file__).parent / "goldens"

R2 = Ring(2)
R3 = Ring(3)


def P(ring, text):
    return poly_from_str(ring, text)


# ---------------------------------------------------------------------------
# division


def test_normal_form_member_is_zero():
    f = P(R2, "x1*x2 - y1*y2")
    assert not normal_form(f, [f])


def test_normal_form_single_step():
    f = P(R2, "x1*x2")
    g = P(R2, "x1*x2 - y1*y2")
    assert normal_form(f, [g]) == P(R2, "y1*y2")


def test_normal_form_low_degree_untouched():
    basis = [P(R2, "x1*x2 - y1*y2"), P(R2, "x1*y2 - x2*y1")]
    y1 = P(R2, "y1")
    assert normal_form(y1, basis) == y1


def test_normal_form_empty_and_zero_basis():
    f = P(R2, "x1")
    assert normal_form(f, []) == f
    with pytest.raises(ValueError):
        normal_form(f, [Poly.zero(R2)])


def test_normal_form_idempotent_random():
    rng = random.Random(7)
    basis = parity_ideal(complete(3)).groebner_basis()
    ring = basis[0].ring
    for _ in range(100):
        terms = {}
        for _ in range(rng.randint(1, 5)):
            m = tuple(rng.randint(0, 2) for _ in range(ring.nvars))
            terms[m] = rng.randint(1, ring.p - 1)
        f = Poly(ring, terms)
        r = normal_form(f, basis)
        assert normal_form(r, basis) == r


# ---------------------------------------------------------------------------
# S-polynomials


def test_s_polynomial_self_is_zero():
    f = P(R3, "x1*x2 - y1*y2")
    assert not s_polynomial(f, f)


def test_s_polynomial_adjacent_edges():
    f = P(R3, "x1*x2 - y1*y2")
    g = P(R3, "x2*x3 - y2*y3")
    assert s_polynomial(f, g) == P(R3, "x1*y2*y3 - x3*y1*y2")


def test_s_polynomial_coprime_reduces_to_zero():
    ring = Ring(4)
    f = P(ring, "x1*x2 - y1*y2")
    g = P(ring, "x3*x4 - y3*y4")
    assert not normal_form(s_polynomial(f, g), [f, g])


# ---------------------------------------------------------------------------
# Buchberger


def test_principal_ideal_basis():
    f = P(R2, "2*x1*x2 - 2*y1*y2")
    (g,) = buchberger([f])
    assert g == P(R2, "x1*x2 - y1*y2")


def test_path_golden_basis():
    # path 1-4-3 inside a 4-vertex ring; basis derived by hand
    ideal = parity_ideal(from_edge_list([(1, 4), (3, 4)], n=4))
    ring, expected = basis_from_text((GOLDENS / "basis_path_1_4_3.txt").read_text())
    assert ideal.ring == ring
    assert ideal.groebner_basis() == expected


def test_triangle_membership():
    ideal = parity_ideal(from_edge_list([(1, 3), (1, 4), (3, 4)], n=4))
    basis = ideal.groebner_basis()
    for gen in ideal.gens:
        assert not normal_form(gen, basis)


def test_all_s_pairs_reduce_to_zero():
    for g in (path(3), complete(3), complete(4)):
        basis = parity_ideal(g).groebner_basis()
        for i in range(len(basis)):
            for j in range(i):
                assert not normal_form(s_polynomial(basis[i], basis[j]), basis)


def test_basis_cache_reused():
    ideal = parity_ideal(path(3))
    assert ideal.groebner_basis() is ideal.groebner_basis()


# ---------------------------------------------------------------------------
# sums, elimination, intersections


def test_ideal_sum_identity():
    ideal = parity_ideal(path(3))
    zero = Ideal(ideal.ring, [])
    assert ideal_sum(ideal, zero).same_ideal(ideal)


def test_ideal_sum_ring_mismatch():
    with pytest.raises(ValueError):
        ideal_sum(parity_ideal(path(2)), parity_ideal(path(3)))


def test_edge_disjoint_sum_equals_whole():
    claw = parity_ideal(from_edge_list([(1, 2), (2, 3), (2, 4)], n=4))
    tri = parity_ideal(from_edge_list([(1, 3), (1, 4), (3, 4)], n=4))
    assert ideal_sum(tri, claw).same_ideal(parity_ideal(complete(4)))


def test_eliminate_examples():
    ring = Ring(1, aux=1)  # x1 y1 t
    t = Poly.variable(ring, ring.t(1))
    assert eliminate(Ideal(ring, [t]), [ring.t(1)]).is_zero()

    x1 = Poly.variable(ring, ring.x(1))
    y1 = Poly.variable(ring, ring.y(1))
    out = eliminate(Ideal(ring, [t * x1 - y1, t]), [ring.t(1)])
    assert len(out.gens) == 1
    assert out.gens[0] == y1

    ideal = parity_ideal(path(3))
    assert eliminate(ideal, []).groebner_basis() == ideal.groebner_basis()


def test_intersection_with_self():
    ideal = parity_ideal(path(3))
    assert ideal_intersection(ideal, ideal).same_ideal(ideal)


def test_intersection_coprime_principal_is_product():
    ring = Ring(4)
    f = P(ring, "x1*x2 - y1*y2")
    g = P(ring, "x3*x4 - y3*y4")
    inter = ideal_intersection(Ideal(ring, [f]), Ideal(ring, [g]))
    assert inter.same_ideal(Ideal(ring, [f * g]))


def test_intersection_double_membership():
    claw = parity_ideal(from_edge_list([(1, 2), (2, 3), (2, 4)], n=4))
    tri = parity_ideal(from_edge_list([(1, 3), (1, 4), (3, 4)], n=4))
    inter = ideal_intersection(tri, claw)
    assert inter.gens
    rng = random.Random(3)
    ring = inter.ring
    for gen in inter.gens:
        assert tri.contains(gen) and claw.contains(gen)
    # random ring combinations of the output generators stay in both ideals
    for _ in range(10):
        combo = Poly.zero(ring)
        for gen in inter.gens:
            m = tuple(rng.randint(0, 1) for _ in range(ring.nvars))
            combo = combo + gen.mul_term(m, rng.randint(1, ring.p - 1))
        assert tri.contains(combo) and claw.contains(combo)
    # a product of one generator from each side need not lie in the intersection,
    # but it does lie in both ideals
    prod = tri.gens[0] * claw.gens[0]
    assert tri.contains(prod) and claw.contains(prod)


def test_intersection_ring_mismatch():
    with pytest.raises(ValueError):
        ideal_intersection(parity_ideal(path(2)), parity_ideal(path(3)))


# ---------------------------------------------------------------------------
# minimal generator degrees


def test_min_generator_degrees_single_quadric():
    assert min_generator_degrees(parity_ideal(path(2))) == [2]


def test_min_generator_degrees_claw():
    claw = parity_ideal(from_edge_list([(1, 2), (2, 3), (2, 4)], n=4))
    assert min_generator_degrees(claw) == [2, 2, 2]


def test_min_generator_degrees_intersection_at_least_four():
    claw = parity_ideal(from_edge_list([(1, 2), (2, 3), (2, 4)], n=4))
    edge = parity_ideal(from_edge_list([(1, 3)], n=4))
    degs = min_generator_degrees(ideal_intersection(edge, claw))
    assert degs and min(degs) >= 4


def test_min_generator_degrees_rejects_inhomogeneous():
    ideal = Ideal(R2, [P(R2, "x1*x2 - y1")])
    with pytest.raises(ValueError):
        min_generator_degrees(ideal)


def test_min_generator_degrees_zero_ideal():
    assert min_generator_degrees(Ideal(R2, [])) == []


# ---------------------------------------------------------------------------
# golden files


def test_basis_text_roundtrip():
    ideal = parity_ideal(path(3))
    text = basis_to_text(ideal)
    ring, basis = basis_from_text(text)
    assert ring == ideal.ring
    assert basis == ideal.groebner_basis()
    assert text.splitlines()[0] == "# order=degrevlex p=32003 n=3"


def test_computed_bases_stay_multihomogeneous():
    # reduced bases of edge ideals, their sums and their intersections
    claw = parity_ideal(from_edge_list([(1, 2), (2, 3), (2, 4)], n=4))
    tri = parity_ideal(from_edge_list([(1, 3), (1, 4), (3, 4)], n=4))
    for ideal in (claw, tri, ideal_sum(tri, claw), ideal_intersection(tri, claw)):
        for g in ideal.groebner_basis():
            assert g.is_multihomogeneous()


def test_basis_reduced_properties():
    basis = parity_ideal(complete(4)).groebner_basis()
    for i, g in enumerate(basis):
        assert g.leading()[1] == 1  # monic
        others = basis[:i] + basis[i + 1 :]
        assert normal_form(g, others) == g  # inter-reduced
    keys = [DEGREVLEX.key(g.leading()[0]) for g in basis]
    assert keys == sorted(keys)
