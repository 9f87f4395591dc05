import pytest
from conftest import mono
from hypothesis import given, strategies as st

from diagmin import InputError, Monomial
from diagmin.monomials import DEGREVLEX, LEX, MonomialOrder, var_position


def test_variable_positions_follow_row_major_order():
    assert var_position(3, 1, 1) == 0
    assert var_position(3, 1, 3) == 2
    assert var_position(3, 2, 1) == 3
    assert var_position(3, 3, 3) == 8


def test_variable_outside_grid_rejected():
    with pytest.raises(InputError):
        Monomial.variable(2, 3, 1)
    with pytest.raises(InputError):
        Monomial.variable(2, 0, 1)


def test_lex_picks_the_diagonal_product():
    a = mono(2, (1, 1), (2, 2))
    b = mono(2, (1, 2), (2, 1))
    assert LEX.compare(a, b) == 1


def test_degrevlex_picks_the_antidiagonal_product():
    a = mono(2, (1, 1), (2, 2))
    b = mono(2, (1, 2), (2, 1))
    assert DEGREVLEX.compare(a, b) == -1


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
def test_compare_is_reflexive(order):
    m = mono(3, (1, 2), (2, 1), (3, 3))
    assert order.compare(m, m) == 0


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_minor_lead_orientation_for_every_index_pair(order, n):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diag = mono(n, (i, i), (j, j))
            anti = mono(n, (i, j), (j, i))
            expected = 1 if order is LEX else -1
            assert order.compare(diag, anti) == expected


def test_grid_mismatch_is_an_input_error():
    with pytest.raises(InputError):
        LEX.compare(mono(2, (1, 1)), mono(3, (1, 1)))
    with pytest.raises(InputError):
        mono(2, (1, 1)) * mono(3, (1, 1))


def test_multiplication_and_exact_division():
    a = mono(3, (1, 1), (2, 3))
    b = mono(3, (2, 3), (3, 1))
    p = a * b
    assert p.degree == 4
    assert p / b == a
    assert b.divides(p) and not p.divides(b)
    with pytest.raises(ValueError):
        _ = a / b


def test_lcm_and_coprime():
    a = mono(3, (1, 1), (2, 2))
    b = mono(3, (2, 2), (3, 3))
    assert a.lcm(b) == mono(3, (1, 1), (2, 2), (3, 3))
    assert not a.coprime(b)
    assert a.coprime(mono(3, (3, 3)))


def test_squarefree():
    assert mono(2, (1, 2), (2, 1)).is_squarefree
    assert not mono(2, (1, 1), (1, 1)).is_squarefree
    assert Monomial.one(2).is_squarefree


def test_render_orders_variables_and_shows_exponents():
    assert mono(3, (2, 1), (1, 2)).render() == "x[1,2]*x[2,1]"
    assert mono(2, (1, 1), (1, 1)).render() == "x[1,1]^2"
    assert Monomial.one(2).render() == "1"


st_mono = st.builds(
    lambda pos_exps: Monomial(
        4, tuple(x for p, e in sorted(dict(pos_exps).items()) for x in (p, e))
    ),
    st.lists(
        st.tuples(st.integers(0, 15), st.integers(1, 3)), min_size=0, max_size=5
    ),
)


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
@given(a=st_mono, b=st_mono)
def test_compare_is_antisymmetric_and_matches_keys(order: MonomialOrder, a, b):
    c = order.compare(a, b)
    assert c == -order.compare(b, a)
    ka, kb = order.key(a), order.key(b)
    assert c == (ka > kb) - (ka < kb)


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
@given(a=st_mono, b=st_mono, t=st_mono)
def test_order_is_multiplicative(order: MonomialOrder, a, b, t):
    assert order.compare(a * t, b * t) == order.compare(a, b)


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
@given(a=st_mono)
def test_one_is_the_minimum(order: MonomialOrder, a):
    one = Monomial.one(4)
    assert order.compare(a, one) >= 0


@given(a=st_mono, b=st_mono)
def test_divisibility_agrees_with_lcm_and_division(a, b):
    l = a.lcm(b)
    assert a.divides(l) and b.divides(l)
    if a.divides(b):
        assert (b / a) * a == b
