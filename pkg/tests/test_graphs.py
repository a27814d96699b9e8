import json

import pytest

from chiprank.graphs import MultiGraph, check_config, degree, laplacian_row, topple


def test_complete_graph_shape(K5):
    assert K5.n == 5
    assert K5.m == 10
    assert K5.degrees == (4, 4, 4, 4, 4)
    assert K5.is_complete()


def test_wheel_shape(W5):
    # 5 rim vertices, hub last (the sink); rim vertices touch two rim
    # neighbours and the hub.
    assert W5.n == 6
    assert W5.m == 10
    assert W5.degrees == (3, 3, 3, 3, 3, 5)
    assert not W5.is_complete()


def test_wheel_too_small():
    with pytest.raises(ValueError):
        MultiGraph.wheel(2)


def test_from_edges_accumulates_multiplicity():
    G = MultiGraph.from_edges(3, [(1, 2), (1, 2), (2, 3, 2), (1, 3)])
    assert G.multiplicity(1, 2) == 2
    assert G.multiplicity(2, 3) == 2
    assert G.multiplicity(3, 1) == 1
    assert G.degrees == (3, 4, 3)


def test_loops_rejected():
    with pytest.raises(ValueError):
        MultiGraph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        MultiGraph([[1, 1], [1, 0]])


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        MultiGraph([[0, 1], [2, 0]])


def test_negative_multiplicity_rejected():
    with pytest.raises(ValueError):
        MultiGraph([[0, -1], [-1, 0]])


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        MultiGraph([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    with pytest.raises(ValueError):
        MultiGraph.from_edges(3, [(1, 2)])


def test_json_roundtrip(multi4):
    text = multi4.to_json()
    again = MultiGraph.from_json(text)
    assert again == multi4
    assert hash(again) == hash(multi4)
    payload = json.loads(text)
    assert payload["n"] == 4
    assert all(len(e) == 3 for e in payload["edges"])


def test_laplacian_rows_sum_to_zero(W5):
    for i in range(1, W5.n + 1):
        row = laplacian_row(W5, i)
        assert sum(row) == 0
        assert row[i - 1] == W5.degree(i)
    with pytest.raises(ValueError):
        laplacian_row(W5, 0)
    with pytest.raises(ValueError):
        laplacian_row(W5, 7)


def test_topple_moves_chips_along_edges(K3):
    f = (3, 0, 0)
    assert topple(K3, f, 1) == (1, 1, 1)
    # toppling never changes the total
    assert degree(topple(K3, f, 2)) == degree(f)


def test_check_config_validates_length(K3):
    assert check_config(K3, [1, 2, 3]) == (1, 2, 3)
    with pytest.raises(ValueError):
        check_config(K3, (1, 2))
    with pytest.raises(ValueError):
        check_config(K3, (1, 2, 3, 4))


def test_spanning_tree_counts(K3, K4, K5, W5):
    assert K3.spanning_tree_count() == 3
    assert K4.spanning_tree_count() == 16
    # Cayley: n^(n-2)
    assert K5.spanning_tree_count() == 125
    assert W5.spanning_tree_count() == 121


def test_spanning_trees_multigraph():
    # doubling every edge of K3 scales the count by 2^(edges in a tree)
    G = MultiGraph.from_edges(3, [(1, 2, 2), (2, 3, 2), (1, 3, 2)])
    assert G.spanning_tree_count() == 3 * 2 * 2


def test_flat_buffer_matches_matrix(multi4):
    n, degs, flat = multi4.flat()
    assert n == multi4.n
    assert list(degs) == list(multi4.degrees)
    for i in range(n):
        for j in range(n):
            assert flat[i * n + j] == multi4.multiplicity(i + 1, j + 1)
