import itertools

import pytest
from conftest import brute_isomorphic
from hypothesis import given, settings, strategies as st

from diagmin import InputError, ResourceGuardError, from_edges, is_connected
from diagmin.graphs import (
    canonical_form,
    enumerate_connected,
    family,
    graph_from_bits,
    iso_key,
    parse_edge_list,
    parse_family,
    relabel,
    standard_relabelings,
)


def test_from_edges_accepts_a_path():
    g = from_edges(3, [(2, 3), (1, 2)])
    assert g.edges == ((1, 2), (2, 3))
    assert g.degrees() == (1, 2, 1)
    assert g.neighbors(2) == (1, 3)


def test_loop_duplicate_and_range_errors_are_distinct():
    with pytest.raises(InputError, match="loop"):
        from_edges(2, [(1, 1)])
    with pytest.raises(InputError, match="duplicate"):
        from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(InputError, match="outside"):
        from_edges(2, [(1, 3)])


def test_families():
    assert family("path", 1).edges == ((1, 2),)
    assert family("star", 4).edges == ((1, 2), (1, 3), (1, 4), (1, 5))
    assert family("cycle", 3).edges == ((1, 2), (1, 3), (2, 3))
    assert family("complete", 3).edges == ((1, 2), (1, 3), (2, 3))
    assert family("path", 3).degrees() == (1, 2, 2, 1)


def test_family_parameter_guards():
    with pytest.raises(InputError):
        family("cycle", 2)
    with pytest.raises(InputError):
        family("path", 0)
    with pytest.raises(InputError):
        family("complete", 1)
    with pytest.raises(InputError):
        family("wheel", 4)


def test_parse_family():
    assert parse_family("path:4") == family("path", 4)
    with pytest.raises(InputError):
        parse_family("path4")
    with pytest.raises(InputError):
        parse_family("path:x")


def test_connectivity():
    assert is_connected(family("path", 3))
    assert not is_connected(from_edges(4, [(1, 2), (3, 4)]))
    assert is_connected(from_edges(1, []))
    # an isolated vertex breaks connectivity
    assert not is_connected(from_edges(3, [(1, 2)]))


def test_parse_edge_list_with_header_and_comments():
    g = parse_edge_list("# a path\nn 4\n1 2\n2 3  # middle\n\n3 4\n")
    assert g == family("path", 3)


def test_parse_edge_list_infers_the_vertex_count():
    assert parse_edge_list("1 2\n2 3\n").n == 3


def test_parse_edge_list_reports_line_numbers():
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("1 2\n2 3 4\n")
    with pytest.raises(InputError, match="line 3"):
        parse_edge_list("n 3\n1 2\ntwo 3\n")


def test_enumeration_counts_match_the_known_sequence():
    assert [len(enumerate_connected(m)) for m in range(1, 7)] == [1, 1, 3, 5, 12, 30]


def test_enumeration_members_for_three_edges():
    keys = {iso_key(g) for g in enumerate_connected(3)}
    assert keys == {
        iso_key(family("path", 3)),
        iso_key(family("star", 3)),
        iso_key(family("complete", 3)),
    }


def test_enumeration_output_is_connected_with_the_right_size():
    for g in enumerate_connected(4):
        assert g.m == 4
        assert is_connected(g)
        assert g.n <= 5


def test_enumeration_is_pairwise_non_isomorphic_by_brute_force():
    graphs = enumerate_connected(4)
    for g, h in itertools.combinations(graphs, 2):
        assert not brute_isomorphic(g, h)


def test_enumeration_guard_and_overrides():
    with pytest.raises(ResourceGuardError):
        enumerate_connected(8)
    with pytest.raises(InputError):
        enumerate_connected(3, max_vertices=9)
    with pytest.raises(InputError):
        enumerate_connected(0)


def test_max_vertices_restricts_the_classes():
    assert len(enumerate_connected(3, max_vertices=3)) == 1  # triangle only


def test_canonical_form_collisions_require_the_vertex_count():
    # same bit pattern, different vertex counts: not isomorphic
    tri = family("complete", 3)
    star3 = family("star", 3)
    assert canonical_form(tri) == canonical_form(star3)
    assert iso_key(tri) != iso_key(star3)


def test_graph_from_bits_round_trip():
    for g in enumerate_connected(4):
        assert graph_from_bits(g.n, canonical_form(g)) == g


def test_relabelings_are_isomorphic():
    g = family("path", 3)
    for h in standard_relabelings(g):
        assert brute_isomorphic(g, h)
        assert iso_key(h) == iso_key(g)


@settings(max_examples=60)
@given(
    edges=st.sets(
        st.tuples(st.integers(1, 5), st.integers(1, 5)).filter(lambda e: e[0] < e[1]),
        max_size=6,
    ),
    perm=st.permutations(list(range(1, 6))),
)
def test_canonical_form_is_a_relabeling_invariant(edges, perm):
    g = from_edges(5, sorted(edges))
    h = relabel(g, {v: perm[v - 1] for v in range(1, 6)})
    assert iso_key(g) == iso_key(h)
