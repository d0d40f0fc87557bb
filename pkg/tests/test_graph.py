import itertools

import pytest

from sgeo import (
    DimensionTooLarge,
    Disconnected,
    DisconnectedFamily,
    GeodesicExplosion,
    IndexOutOfRange,
    ParseError,
    Unreachable,
    complete_bipartite,
    count_geodesics,
    crown,
    diameter,
    distances_from,
    enumerate_geodesics,
    from_edge_list,
    graph_from_edges,
    hypercube,
    to_edge_list,
)


def brute_force_shortest_paths(g, u, v):
    """Oracle: enumerate all simple paths by DFS, keep the shortest ones."""
    best = None
    found = []
    stack = [(u, [u])]
    while stack:
        w, path = stack.pop()
        if best is not None and len(path) - 1 > best:
            continue
        if w == v:
            d = len(path) - 1
            if best is None or d < best:
                best = d
                found = [path]
            elif d == best:
                found.append(path)
            continue
        for x in range(g.n):
            if g.has_edge(w, x) and x not in path:
                stack.append((x, path + [x]))
    return sorted(found)


class TestGenerators:
    def test_hypercube_tiny(self):
        g = hypercube(0)
        assert g.n == 1 and g.edge_count() == 0

    def test_hypercube_q3(self):
        g = hypercube(3)
        assert g.n == 8 and g.edge_count() == 12

    def test_hypercube_q4_structure(self):
        g = hypercube(4)
        assert g.n == 16
        # Count edges by popcount scan as an independent check.
        edges = sum(
            1
            for i in range(16)
            for j in range(i + 1, 16)
            if (i ^ j).bit_count() == 1
        )
        assert g.edge_count() == edges == 32
        assert diameter(g) == 4

    def test_hypercube_rejects_large(self):
        with pytest.raises(DimensionTooLarge):
            hypercube(25)

    def test_hypercube_distance_is_popcount(self):
        for n in range(1, 6):
            g = hypercube(n)
            for u in range(g.n):
                dist = distances_from(g, u)
                for v in range(g.n):
                    assert dist[v] == (u ^ v).bit_count()

    def test_complete_bipartite_star(self):
        g = complete_bipartite(1, 3)
        assert g.n == 4 and g.edge_count() == 3
        assert g.degree(0) == 3

    def test_complete_bipartite_33(self):
        g = complete_bipartite(3, 3)
        assert g.edge_count() == 9
        assert diameter(g) == 2

    def test_complete_bipartite_degrees(self):
        g = complete_bipartite(2, 5)
        degs = sorted((g.degree(v) for v in range(g.n)), reverse=True)
        assert degs == [5, 5, 2, 2, 2, 2, 2]

    def test_crown_3_is_hexagon(self):
        g = crown(3)
        assert g.n == 6 and g.edge_count() == 6
        assert all(g.degree(v) == 2 for v in range(6))
        assert diameter(g) == 3

    def test_crown_4_matches_q3(self):
        # Same graph up to relabeling: x_i y_j adjacency with the
        # matching removed is 3-regular, bipartite, 8 vertices, 12 edges.
        g = crown(4)
        q = hypercube(3)
        assert g.n == q.n and g.edge_count() == q.edge_count()
        assert sorted(g.degree(v) for v in range(8)) == sorted(
            q.degree(v) for v in range(8)
        )
        # Explicit isomorphism: x_i -> strings of weight pattern mapping.
        mapping = {0: 0, 1: 3, 2: 5, 3: 6, 4: 7, 5: 4, 6: 2, 7: 1}
        for u in range(8):
            for v in range(8):
                assert g.has_edge(u, v) == q.has_edge(mapping[u], mapping[v])

    def test_crown_5_degrees(self):
        g = crown(5)
        assert g.edge_count() == 10 * 2
        assert all(g.degree(v) == 4 for v in range(10))

    def test_crown_distances(self):
        for n in (3, 4, 5, 6):
            g = crown(n)
            dist = distances_from(g, 0)
            assert dist[n] == 3  # matched partner
            for j in range(1, n):
                assert dist[n + j] == 1
            for i in range(1, n):
                assert dist[i] == 2

    def test_crown_rejects_disconnected(self):
        with pytest.raises(DisconnectedFamily):
            crown(2)

    def test_vertex_labels(self):
        assert hypercube(3).label(5) == "101"
        assert crown(4).label(0) == "x0"
        assert crown(4).label(6) == "y2"
        assert complete_bipartite(2, 3).label(4) == "y2"
        g = graph_from_edges(2, [(0, 1)])
        assert g.label(1) == "1"


class TestEdgeList:
    def test_parse_k2(self):
        g = from_edge_list("p 2 1\ne 0 1\n")
        assert g.n == 2 and g.edge_count() == 1

    def test_parse_triangle(self):
        g = from_edge_list("p 3 3\ne 0 1\ne 1 2\ne 0 2\n")
        assert g.edge_count() == 3

    def test_parse_dedup(self):
        g = from_edge_list("p 2 2\ne 0 1\ne 0 1\n")
        assert g.edge_count() == 1

    def test_parse_comments_and_blanks(self):
        g = from_edge_list("c a comment\n\np 3 2\ne 0 1\nc another\ne 1 2\n")
        assert g.edge_count() == 2

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            from_edge_list("e 0 1\n")
        with pytest.raises(ParseError):
            from_edge_list("p 2 1\ne 0\n")
        with pytest.raises(ParseError):
            from_edge_list("p 2 1\nq 0 1\n")
        with pytest.raises(ParseError):
            from_edge_list("p 2 1\ne 1 1\n")
        with pytest.raises(IndexOutOfRange):
            from_edge_list("p 2 1\ne 0 5\n")

    @pytest.mark.parametrize(
        "g",
        [hypercube(3), complete_bipartite(3, 4), crown(4), hypercube(0)],
        ids=["q3", "k34", "crown4", "q0"],
    )
    def test_round_trip(self, g):
        assert from_edge_list(to_edge_list(g)) == g


class TestGeodesics:
    def test_q3_two_flips(self):
        g = hypercube(3)
        paths = enumerate_geodesics(g, 0b000, 0b011)
        assert len(paths) == 2
        assert paths == sorted(paths)

    def test_q3_antipodal(self):
        g = hypercube(3)
        paths = enumerate_geodesics(g, 0, 7)
        assert len(paths) == 6

    def test_crown4_matched_pair(self):
        g = crown(4)
        paths = enumerate_geodesics(g, 0, 4)
        assert len(paths) == 6
        for p in paths:
            assert len(p) == 4
            s, t = p[1] - 4, p[2]
            assert s != 0 and t != 0 and s != t

    def test_count_q4_antipodal(self):
        assert count_geodesics(hypercube(4), 0, 15) == 24

    def test_explosion_raises(self):
        g = hypercube(4)
        with pytest.raises(GeodesicExplosion):
            enumerate_geodesics(g, 0, 15, cap=10)

    def test_unreachable(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(Unreachable):
            enumerate_geodesics(g, 0, 3)
        assert distances_from(g, 0)[3] is None

    def test_lexicographic_and_valid(self):
        for g in (hypercube(3), crown(4), complete_bipartite(3, 4)):
            dist = {u: distances_from(g, u) for u in range(g.n)}
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    paths = enumerate_geodesics(g, u, v)
                    assert paths == sorted(paths)
                    d = dist[u][v]
                    for p in paths:
                        assert len(p) - 1 == d
                        for w in p[1:-1]:
                            assert dist[u][w] + dist[w][v] == d

    def test_count_matches_enumeration_all_pairs(self):
        graphs = [
            hypercube(3),
            hypercube(4),
            crown(4),
            crown(5),
            complete_bipartite(3, 5),
            complete_bipartite(4, 4),
        ]
        for g in graphs:
            assert g.n <= 16
            for u, v in itertools.combinations(range(g.n), 2):
                assert count_geodesics(g, u, v) == len(enumerate_geodesics(g, u, v))

    def test_enumeration_matches_brute_force(self):
        for g in (hypercube(3), crown(3), complete_bipartite(2, 3)):
            for u, v in itertools.combinations(range(g.n), 2):
                assert enumerate_geodesics(g, u, v) == brute_force_shortest_paths(g, u, v)


class TestDiameter:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_hypercube_diameter(self, n):
        assert diameter(hypercube(n)) == n

    @pytest.mark.parametrize("nm", [(2, 2), (2, 5), (3, 3), (4, 7)])
    def test_bipartite_diameter(self, nm):
        assert diameter(complete_bipartite(*nm)) == 2

    def test_disconnected_raises(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(Disconnected):
            diameter(g)
