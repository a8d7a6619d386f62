import random

import pytest

from matchspec.graphs import (Graph, all_pairs, are_isomorphic,
                              brute_force_is_isomorphic, complete_graph,
                              components, cycle_graph, delete_vertices,
                              disjoint_union, empty_graph, from_edge_list,
                              is_connected, join, min_degree, odd_components,
                              parse_edge_list_text, parse_graph6, path_graph,
                              to_graph6)


def reference_graph6_decode(line):
    """Independent bit-level decoder used as the codec oracle."""
    n = ord(line[0]) - 63
    bits = []
    for ch in line[1:]:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return n, sorted(edges)


def random_graph(rng, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return from_edge_list(n, edges)


# --- construction -----------------------------------------------------------

def test_from_edge_list_basic():
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.n == 4 and c4.m == 4
    assert c4 == cycle_graph(4)


def test_trivial_graph():
    g = from_edge_list(1, [])
    assert g.n == 1 and g.m == 0


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (0, 1)])
    assert g.m == 1


def test_construction_errors():
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric adjacency
    with pytest.raises(ValueError):
        Graph(2, (0, 0, 0))


def test_adjacency_invariants_after_constructors():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(0, 10))
        for v in range(g.n):
            assert not g.has_edge(v, v)
            for u in g.neighbors(v):
                assert g.has_edge(u, v)
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


# --- graph6 codec -----------------------------------------------------------

def test_graph6_known_values():
    assert to_graph6(complete_graph(4)) == "C~"
    assert parse_graph6("C~") == complete_graph(4)
    assert to_graph6(empty_graph(5)) == "D??"
    # bit-level oracle: "A_" has its single upper-triangle bit set
    n, edges = reference_graph6_decode("A_")
    assert (n, edges) == (2, [(0, 1)])
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("A?") == empty_graph(2)


def test_graph6_errors():
    with pytest.raises(ValueError):
        parse_graph6("B")  # truncated body
    with pytest.raises(ValueError):
        parse_graph6("~??")  # long format header
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("A" + chr(20))  # char below 63
    with pytest.raises(ValueError):
        parse_graph6("A~")  # nonzero padding bits (only 1 data bit for n=2)
    with pytest.raises(ValueError):
        to_graph6(empty_graph(63))


def test_graph6_round_trip_and_oracle():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(0, 14)
        g = random_graph(rng, n)
        line = to_graph6(g)
        assert parse_graph6(line) == g
        rn, redges = reference_graph6_decode(line)
        assert rn == n and redges == g.edges()
    # and at the format ceiling
    g = random_graph(rng, 62, p=0.1)
    assert parse_graph6(to_graph6(g)) == g


def test_parse_edge_list_text():
    g = parse_edge_list_text("4\n0 1\n1 2\n# comment\n2 3\n")
    assert g == path_graph(4)
    with pytest.raises(ValueError):
        parse_edge_list_text("")


# --- construction algebra ---------------------------------------------------

def test_join_and_union_examples():
    g = join(complete_graph(2), disjoint_union(complete_graph(3), empty_graph(1)))
    assert g.n == 6 and g.m == 12  # 1 + 3 + 2*4
    star = join(complete_graph(1), empty_graph(5))
    assert star.degree_sequence() == (5, 1, 1, 1, 1, 1)
    three_k1 = disjoint_union(disjoint_union(empty_graph(1), empty_graph(1)),
                              empty_graph(1))
    assert three_k1.n == 3 and three_k1.m == 0
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert two_k2.m == 2 and not is_connected(two_k2)


def test_join_edge_count_property():
    rng = random.Random(5)
    for _ in range(100):
        a = random_graph(rng, rng.randint(1, 7))
        b = random_graph(rng, rng.randint(1, 7))
        j = join(a, b)
        assert j.m == a.m + b.m + a.n * b.n
        u = disjoint_union(a, b)
        assert u.m == a.m + b.m and u.n == a.n + b.n


def test_delete_vertices():
    sub, kept = delete_vertices(complete_graph(4), [0])
    assert sub == complete_graph(3) and kept == (1, 2, 3)
    sub, kept = delete_vertices(cycle_graph(6), [0, 3])
    assert sub.n == 4 and sub.m == 2 and not is_connected(sub)
    assert kept == (1, 2, 4, 5)
    g = random_graph(random.Random(1), 8)
    same, kept = delete_vertices(g, [])
    assert same == g and kept == tuple(range(8))
    with pytest.raises(ValueError):
        delete_vertices(g, [9])


def test_relabeling_preserves_adjacency():
    rng = random.Random(9)
    g = random_graph(rng, 9)
    drop = [1, 4, 7]
    sub, kept = delete_vertices(g, drop)
    for i in range(sub.n):
        for j in range(sub.n):
            assert sub.has_edge(i, j) == g.has_edge(kept[i], kept[j])


# --- structure queries ------------------------------------------------------

def test_connectivity_queries():
    assert is_connected(cycle_graph(6))
    assert min_degree(cycle_graph(6)) == 2
    assert len(components(cycle_graph(6))) == 1
    g = disjoint_union(complete_graph(3), empty_graph(1))
    assert not is_connected(g)
    assert components(g) == [frozenset({0, 1, 2}), frozenset({3})]
    pendant = from_edge_list(6, [(i, j) for i in range(5) for j in range(i + 1, 5)]
                             + [(4, 5)])
    assert is_connected(pendant) and min_degree(pendant) == 1


def test_odd_components():
    g = join(complete_graph(1), disjoint_union(complete_graph(5), empty_graph(2)))
    assert odd_components(g, {0}) == 3
    assert odd_components(cycle_graph(6), set()) == 0
    k3_3k1 = join(complete_graph(3), empty_graph(3))
    assert odd_components(k3_3k1, {0, 1, 2}) == 3
    # component orders always partition the surviving vertices
    rng = random.Random(2)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 9))
        s = {v for v in range(g.n) if rng.random() < 0.3}
        sub, _ = delete_vertices(g, s)
        sizes = [len(c) for c in components(sub)] if sub.n else []
        assert sum(sizes) == g.n - len(s)
        assert odd_components(g, s) == sum(1 for x in sizes if x % 2 == 1)


# --- isomorphism ------------------------------------------------------------

def test_isomorphism_basics():
    assert not are_isomorphic(cycle_graph(6),
                              disjoint_union(complete_graph(3), complete_graph(3)))
    g = join(complete_graph(2), disjoint_union(complete_graph(3), empty_graph(1)))
    rng = random.Random(7)
    perm = list(range(6))
    rng.shuffle(perm)
    shuffled = from_edge_list(6, [(perm[u], perm[v]) for u, v in g.edges()])
    assert are_isomorphic(g, shuffled)


def test_isomorphism_equal_size_different_degrees():
    a = join(complete_graph(4), disjoint_union(complete_graph(2), empty_graph(4)))
    b = join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(7)))
    assert a.n == b.n == 10 and a.m == b.m == 31
    assert a.degree_sequence() != b.degree_sequence()
    assert not are_isomorphic(a, b)


def test_isomorphism_vs_brute_force():
    rng = random.Random(13)
    pool = [random_graph(rng, 5, p) for p in (0.3, 0.5, 0.7) for _ in range(6)]
    for a in pool:
        for b in pool:
            assert are_isomorphic(a, b) == brute_force_is_isomorphic(a, b)


def test_isomorphism_equivalence_relation():
    rng = random.Random(17)
    pool = [random_graph(rng, 6) for _ in range(8)]
    for g in pool:
        assert are_isomorphic(g, g)
    for a in pool:
        for b in pool:
            assert are_isomorphic(a, b) == are_isomorphic(b, a)
    for a in pool:
        for b in pool:
            for c in pool:
                if are_isomorphic(a, b) and are_isomorphic(b, c):
                    assert are_isomorphic(a, c)


def test_all_pairs_order_matches_graph6():
    assert all_pairs(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
