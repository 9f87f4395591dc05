import pytest
from conftest import binom, mono
from hypothesis import given, strategies as st

from diagmin import (
    GeneratorSet,
    InputError,
    Monomial,
    TwoTermPoly,
    buchberger,
    diagonal_minor,
    initial_ideal,
    is_reduced,
    minor_ideal,
    monomial_ideal_height,
    normal_form,
    reduce_basis,
    spoly,
)
from diagmin.graphs import enumerate_connected, family
from diagmin.monomials import DEGREVLEX, LEX
from diagmin.oracles import exhaustive_vertex_cover


def f(n, i, j, order=LEX):
    return diagonal_minor(n, i, j, order)


# --- S-polynomials: the three ways two minors can share a diagonal variable


def test_spoly_shared_middle_index():
    s = spoly(f(3, 1, 2), f(3, 2, 3), LEX)
    assert s == binom(3, [(1, 1), (2, 3), (3, 2)], [(3, 3), (1, 2), (2, 1)], LEX)


def test_spoly_shared_first_index():
    s = spoly(f(3, 1, 2), f(3, 1, 3), LEX)
    assert s == binom(3, [(2, 2), (1, 3), (3, 1)], [(3, 3), (1, 2), (2, 1)], LEX)
    # the greater monomial leads after normalization
    assert s.lead == mono(3, (3, 3), (1, 2), (2, 1))


def test_spoly_shared_second_index():
    s = spoly(f(3, 1, 3), f(3, 2, 3), LEX)
    assert s == binom(3, [(1, 1), (3, 2), (2, 3)], [(2, 2), (3, 1), (1, 3)], LEX)


def test_spoly_of_identical_inputs_is_zero():
    assert spoly(f(3, 1, 2), f(3, 1, 2), LEX).is_zero


def test_spoly_of_two_monomials_is_zero():
    a = TwoTermPoly.mono(mono(2, (1, 1)))
    b = TwoTermPoly.mono(mono(2, (1, 1), (2, 2)))
    assert spoly(a, b, LEX).is_zero


def test_spoly_zero_input_rejected():
    with pytest.raises(InputError):
        spoly(TwoTermPoly.zero(), f(2, 1, 2), LEX)


def test_spoly_mixed_monomial_and_binomial():
    # lcm cancels the monomial side, leaving a single rewritten term
    s = spoly(f(2, 1, 2), TwoTermPoly.mono(mono(2, (1, 1))), LEX)
    assert s == TwoTermPoly.mono(mono(2, (1, 2), (2, 1)))


# --- normal forms


def path2_lex_basis():
    return GeneratorSet([f(3, 1, 2), f(3, 2, 3)], LEX, 3)


def test_normal_form_irreducible_element_is_fixed():
    s = spoly(f(3, 1, 2), f(3, 2, 3), LEX)
    assert normal_form(s, path2_lex_basis()) == s


def test_normal_form_of_member_is_zero():
    basis = GeneratorSet([f(2, 1, 2)], LEX, 2)
    assert normal_form(f(2, 1, 2), basis).is_zero


def test_normal_form_rewrites_a_monomial():
    basis = GeneratorSet([f(2, 1, 2)], LEX, 2)
    p = TwoTermPoly.mono(mono(2, (1, 1), (2, 2)))
    assert normal_form(p, basis) == TwoTermPoly.mono(mono(2, (1, 2), (2, 1)))


def test_normal_form_deletes_terms_with_monomial_divisors():
    basis = GeneratorSet([TwoTermPoly.mono(mono(2, (1, 1)))], LEX, 2)
    assert normal_form(f(2, 1, 2), basis) == TwoTermPoly.mono(mono(2, (1, 2), (2, 1)))


# --- Buchberger completion


def test_single_generator_has_no_pairs():
    gens = minor_ideal(family("path", 1), LEX)
    assert buchberger(gens) == gens


def test_path2_lex_completion_adds_exactly_one_element():
    gens = minor_ideal(family("path", 2), LEX)
    gb = buchberger(gens)
    assert len(gb) == 3
    extra = set(gb.polys) - set(gens.polys)
    assert extra == {binom(3, [(1, 1), (2, 3), (3, 2)], [(3, 3), (1, 2), (2, 1)], LEX)}


@pytest.mark.parametrize("g", [family("path", 3), family("star", 3), family("complete", 3)])
def test_degrevlex_generators_are_already_a_groebner_basis(g):
    gens = minor_ideal(g, DEGREVLEX)
    gb = buchberger(gens)
    assert gb == gens


def test_buchberger_postcondition_every_pair_reduces_to_zero():
    for g in enumerate_connected(3):
        for order in (LEX, DEGREVLEX):
            gb = buchberger(minor_ideal(g, order))
            for a in gb:
                for b in gb:
                    if a != b:
                        assert normal_form(spoly(a, b, order), gb).is_zero


# --- reduced bases


def test_reduce_basis_keeps_an_already_reduced_basis():
    gb = buchberger(minor_ideal(family("path", 2), LEX))
    assert reduce_basis(gb) == gb
    assert is_reduced(gb)


def test_reduce_basis_drops_redundant_multiples():
    f12 = f(2, 1, 2)
    multiple = binom(2, [(1, 1), (1, 1), (2, 2)], [(1, 1), (1, 2), (2, 1)], LEX)
    gb = GeneratorSet([f12, multiple], LEX, 2)
    assert reduce_basis(gb) == GeneratorSet([f12], LEX, 2)


def test_reduce_basis_is_idempotent_on_the_corpus():
    for g in enumerate_connected(4):
        for order in (LEX, DEGREVLEX):
            red = reduce_basis(buchberger(minor_ideal(g, order)))
            assert reduce_basis(red) == red
            assert is_reduced(red)


def test_reduce_basis_reduces_tails():
    # coprime leads, so this is a basis; the tail is killed by the monomial
    g1 = TwoTermPoly.mono(mono(3, (3, 3)))
    g2 = binom(3, [(1, 1), (2, 2)], [(2, 1), (3, 3)], LEX)
    red = reduce_basis(GeneratorSet([g1, g2], LEX, 3))
    assert red == GeneratorSet(
        [g1, TwoTermPoly.mono(mono(3, (1, 1), (2, 2)))], LEX, 3
    )


# --- initial ideals and heights


def test_initial_ideal_under_degrevlex_is_the_antidiagonal_products():
    g = family("path", 2)
    gb = buchberger(minor_ideal(g, DEGREVLEX))
    assert set(initial_ideal(gb)) == {
        mono(3, (1, 2), (2, 1)),
        mono(3, (2, 3), (3, 2)),
    }


def test_initial_ideal_of_path2_lex():
    gb = reduce_basis(buchberger(minor_ideal(family("path", 2), LEX)))
    assert set(initial_ideal(gb)) == {
        mono(3, (1, 1), (2, 2)),
        mono(3, (2, 2), (3, 3)),
        mono(3, (1, 1), (2, 3), (3, 2)),
    }


def test_initial_ideal_of_empty_basis():
    assert initial_ideal(GeneratorSet([], LEX, 2)) == []


def test_height_disjoint_fast_path():
    assert monomial_ideal_height([mono(3, (1, 2), (2, 1)), mono(3, (2, 3), (3, 2))]) == 2


def test_height_with_a_shared_variable():
    assert monomial_ideal_height([mono(3, (1, 1), (2, 2)), mono(3, (2, 2), (3, 3))]) == 1


def test_height_rejects_non_minimal_input():
    with pytest.raises(InputError):
        monomial_ideal_height([mono(3, (1, 2), (2, 1)), mono(3, (2, 1))])


def test_height_rejects_non_squarefree_input():
    with pytest.raises(InputError):
        monomial_ideal_height([mono(3, (1, 1), (1, 1))])


def test_height_of_no_generators_is_zero():
    assert monomial_ideal_height([]) == 0


st_support = st.lists(
    st.frozensets(st.integers(1, 12), min_size=1, max_size=4), min_size=1, max_size=5
)


@given(supports=st_support)
def test_height_matches_the_exhaustive_cover_oracle(supports):
    # keep only divisibility-minimal supports, as the contract requires
    minimal = [
        s for s in supports if not any(t != s and t <= s for t in supports)
    ]
    minimal = list(dict.fromkeys(minimal))
    monos = [Monomial.product_of(12, [(v, v + 0) for v in sorted(s)]) for s in minimal]
    # supports here are diagonal variables (v, v), distinct per index
    assert monomial_ideal_height(monos) == exhaustive_vertex_cover(
        [m.support() for m in monos]
    )
