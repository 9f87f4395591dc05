"""The compiled and pure kernels must be indistinguishable."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from diagmin import _kernel_py as pure
from diagmin import kernel

speedups = pytest.importorskip("diagmin._speedups")


st_mono = st.builds(
    lambda pos_exps: tuple(
        x for p, e in sorted(dict(pos_exps).items()) for x in (p, e)
    ),
    st.lists(st.tuples(st.integers(0, 24), st.integers(1, 3)), max_size=5),
)


@given(a=st_mono, b=st_mono)
def test_monomial_ops_agree(a, b):
    assert speedups.mono_mul(a, b) == pure.mono_mul(a, b)
    assert speedups.mono_lcm(a, b) == pure.mono_lcm(a, b)
    assert speedups.mono_divides(a, b) == pure.mono_divides(a, b)
    assert speedups.mono_coprime(a, b) == pure.mono_coprime(a, b)
    assert speedups.mono_degree(a) == pure.mono_degree(a)
    assert speedups.cmp_lex(a, b) == pure.cmp_lex(a, b)
    assert speedups.cmp_degrevlex(a, b) == pure.cmp_degrevlex(a, b)


@given(a=st_mono, b=st_mono)
def test_division_errors_agree(a, b):
    try:
        expect = pure.mono_div(a, b)
    except ValueError:
        with pytest.raises(ValueError):
            speedups.mono_div(a, b)
    else:
        assert speedups.mono_div(a, b) == expect


st_poly = st.tuples(
    st.lists(st.integers(0, 5), min_size=1, max_size=3).map(tuple),
    st.one_of(st.none(), st.lists(st.integers(0, 5), min_size=1, max_size=3).map(tuple)),
)
st_ideal = st.lists(st_poly, max_size=3)


@settings(max_examples=50)
@given(
    common=st_ideal,
    lhs=st_ideal,
    wits=st.lists(st_ideal, max_size=3),
    q=st.sampled_from([2, 3]),
)
def test_variety_compare_agrees(common, lhs, wits, q):
    nvars = 6
    assert speedups.variety_compare(common, lhs, wits, nvars, q) == tuple(
        pure.variety_compare(common, lhs, wits, nvars, q)
    )


@settings(max_examples=80)
@given(
    n=st.integers(2, 6),
    data=st.data(),
)
def test_canonical_bits_agree(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    masks = [0] * n
    for a, b in chosen:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    adj = tuple(masks)
    assert speedups.canonical_bits(n, adj) == pure.canonical_bits(n, adj)


def test_set_implementation_switches_and_restores():
    before = kernel.ACTIVE
    try:
        kernel.set_implementation("python")
        assert kernel.ACTIVE == "python"
        assert kernel.mono_mul is pure.mono_mul
        kernel.set_implementation("c")
        assert kernel.mono_mul is speedups.mono_mul
        with pytest.raises(ValueError):
            kernel.set_implementation("rust")
    finally:
        kernel.set_implementation(before)
