from fractions import Fraction

import pytest
from conftest import mono

from diagmin import (
    InputError,
    ResourceGuardError,
    buchberger,
    diagonal_minor,
    enumerate_connected,
    family,
    minor_ideal,
    reduce_basis,
)
from diagmin.monomials import DEGREVLEX, LEX
from diagmin.oracles import (
    GenericPoly,
    evaluate,
    exhaustive_vertex_cover,
    gb_sets_equal,
    generic_buchberger,
    reduced_gb_via_oracle,
    twoterm_gb_as_generic,
)


def dense(n, *coords):
    out = [0] * (n * n)
    for r, c in coords:
        out[(r - 1) * n + (c - 1)] += 1
    return tuple(out)


def test_single_generator_is_its_own_reduced_basis():
    f12 = GenericPoly.from_twoterm(diagonal_minor(2, 1, 2, LEX))
    out = generic_buchberger([f12], LEX)
    assert gb_sets_equal(out, [f12])


def test_oracle_completes_the_two_edge_path_like_the_engine():
    gens = minor_ideal(family("path", 2), LEX)
    oracle = reduced_gb_via_oracle(gens)
    engine = twoterm_gb_as_generic(reduce_basis(buchberger(gens)))
    assert len(oracle) == 3
    assert gb_sets_equal(oracle, engine)


def test_oracle_reduces_a_binomial_against_a_variable():
    n = 2
    f = GenericPoly(n, {dense(n, (1, 1), (2, 2)): Fraction(1), dense(n, (1, 2), (2, 1)): Fraction(-1)})
    x11 = GenericPoly(n, {dense(n, (1, 1)): Fraction(1)})
    out = generic_buchberger([f, x11], LEX)
    expect = [
        x11,
        GenericPoly(n, {dense(n, (1, 2), (2, 1)): Fraction(1)}),
    ]
    assert gb_sets_equal(out, expect)


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
def test_engine_matches_oracle_on_small_graphs(order):
    for m in range(1, 4):
        for g in enumerate_connected(m):
            gens = minor_ideal(g, order)
            assert gb_sets_equal(
                twoterm_gb_as_generic(reduce_basis(buchberger(gens))),
                reduced_gb_via_oracle(gens),
            )


def test_vertex_cover_examples():
    assert exhaustive_vertex_cover([{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}]) == 3
    assert exhaustive_vertex_cover([{"a", "b"}, {"b", "c"}]) == 1
    assert exhaustive_vertex_cover([{"a"}, {"b"}, {"a", "b"}]) == 2
    assert exhaustive_vertex_cover([]) == 0


def test_vertex_cover_guard():
    with pytest.raises(ResourceGuardError):
        exhaustive_vertex_cover([{i} for i in range(21)])


def test_evaluate_two_term():
    f12 = diagonal_minor(2, 1, 2, LEX)
    point = {(1, 1): 1, (2, 2): 1, (1, 2): 1, (2, 1): 1}
    assert evaluate(f12, point, 2) == 0
    point = {(1, 1): 1, (2, 2): 1, (1, 2): 0, (2, 1): 0}
    assert evaluate(f12, point, 2) == 1
    zeros = {v: 0 for v in point}
    assert evaluate(f12, zeros, 5) == 0


def test_evaluate_generic_poly():
    n = 2
    p = GenericPoly(n, {dense(n, (1, 1), (1, 1)): Fraction(3, 2)})
    assert evaluate(p, {(1, 1): 2}, 5) == (3 * pow(2, -1, 5) * 4) % 5


def test_evaluate_requires_a_full_assignment():
    f12 = diagonal_minor(2, 1, 2, LEX)
    with pytest.raises(InputError):
        evaluate(f12, {(1, 1): 1}, 2)
