import itertools

import numpy as np
import pytest

from rdenergy.errors import DisconnectedGraph, NoSuchEdge, PreconditionViolated
from rdenergy.graphs import (PartitionSpec, add_edge, apsp, complete_multipartite,
                             complete_split, delete_edge, from_edges, multipartite_minus_edge,
                             read_edge_list, turan)
from rdenergy.extremal import partitions


def test_partition_spec_is_canonical():
    assert PartitionSpec((1, 3, 2)).parts == (3, 2, 1)
    assert PartitionSpec.parse("2, 3,2") == PartitionSpec((3, 2, 2))
    spec = PartitionSpec((4, 1, 1))
    assert (spec.n, spec.k) == (6, 3)


@pytest.mark.parametrize("bad", [(), (2, 0), (-1, 3)])
def test_partition_spec_rejects_bad_parts(bad):
    with pytest.raises(PreconditionViolated):
        PartitionSpec(bad)


def test_partition_parse_rejects_garbage():
    with pytest.raises(PreconditionViolated):
        PartitionSpec.parse("3,a")


@pytest.mark.parametrize("parts, edges", [((1, 1), 1), ((2, 2), 4), ((2, 2, 2), 12)])
def test_complete_multipartite_edge_count(parts, edges):
    g = complete_multipartite(parts)
    assert g.num_edges == edges
    n = sum(parts)
    assert g.num_edges == (n * n - sum(p * p for p in parts)) // 2


def test_k22_is_c4():
    g = complete_multipartite((2, 2))
    assert (g.degrees() == 2).all()
    assert g.is_connected()


def test_vertex_blocks_follow_canonical_order():
    g = complete_multipartite((1, 3))
    # block 0 holds vertices 0..2
    assert not g.has_edge(0, 1) and not g.has_edge(1, 2)
    assert g.has_edge(0, 3)


def test_single_part_rejected():
    with pytest.raises(DisconnectedGraph):
        complete_multipartite((3,))


@pytest.mark.parametrize("n, k, expected", [(5, 1, (4, 1)), (4, 3, (1, 1, 1, 1)), (6, 2, (4, 1, 1))])
def test_complete_split(n, k, expected):
    assert complete_split(n, k).parts == expected


@pytest.mark.parametrize("n, k", [(5, 0), (5, 5)])
def test_complete_split_range(n, k):
    with pytest.raises(PreconditionViolated):
        complete_split(n, k)


@pytest.mark.parametrize("n, k, expected", [(5, 2, (3, 2)), (6, 3, (2, 2, 2)), (10, 3, (4, 3, 3))])
def test_turan(n, k, expected):
    assert turan(n, k).parts == expected


def test_turan_rejects_k_above_n():
    with pytest.raises(PreconditionViolated):
        turan(3, 4)


def test_delete_edge_examples():
    p4 = delete_edge(complete_multipartite((2, 2)), 0, 2)
    assert sorted(p4.degrees().tolist()) == [1, 1, 2, 2]
    assert p4.is_connected()

    k2 = delete_edge(complete_multipartite((1, 1)), 0, 1)
    assert not k2.is_connected()
    with pytest.raises(DisconnectedGraph):
        apsp(k2)

    p3 = delete_edge(complete_multipartite((1, 1, 1)), 0, 1)
    assert p3.num_edges == 2 and p3.is_connected()


def test_delete_missing_edge():
    with pytest.raises(NoSuchEdge):
        delete_edge(complete_multipartite((2, 2)), 0, 1)


def test_delete_then_add_restores():
    g = complete_multipartite((3, 2, 2))
    for u, v in g.edges():
        assert add_edge(delete_edge(g, u, v), u, v) == g


def test_apsp_small_cases():
    k3 = apsp(complete_multipartite((1, 1, 1)))
    assert k3.diam == 1
    assert (k3.matrix == 1 - np.eye(3, dtype=int)).all()

    c4 = apsp(complete_multipartite((2, 2)))
    assert c4.diam == 2
    assert c4.matrix[0, 1] == 2 and c4.matrix[0, 2] == 1

    p4 = apsp(multipartite_minus_edge((2, 2)))
    assert p4.diam == 3
    assert p4.matrix[0, 2] == 3


@pytest.mark.parametrize("n", range(2, 9))
def test_multipartite_distances_are_one_or_two(n):
    for k in range(2, n + 1):
        for spec in partitions(n, k):
            d = apsp(complete_multipartite(spec)).matrix
            labels = np.repeat(np.arange(spec.k), spec.parts)
            same = labels[:, None] == labels[None, :]
            off = ~np.eye(spec.n, dtype=bool)
            assert (d[same & off] == 2).all()
            assert (d[~same] == 1).all()


def _floyd_warshall(adj):
    n = adj.shape[0]
    d = np.where(adj, 1, n + 1)
    np.fill_diagonal(d, 0)
    for w in range(n):
        d = np.minimum(d, d[:, [w]] + d[[w], :])
    return d


@pytest.mark.parametrize("seed", range(12))
def test_apsp_against_floyd_warshall_and_triangle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 13))
    while True:
        upper = np.triu(rng.random((n, n)) < 0.35, 1)
        g = from_edges(n, zip(*np.nonzero(upper)))
        if g.is_connected():
            break
    d = apsp(g).matrix
    assert (d == _floyd_warshall(g.adj)).all()
    assert (d == d.T).all() and (np.diag(d) == 0).all()
    for u, v, w in itertools.product(range(n), repeat=3):
        assert d[u, w] <= d[u, v] + d[v, w]


def test_read_edge_list(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("# path on four vertices\n0 1\n1 2  # middle\n\n2 3\n", encoding="utf-8")
    g = read_edge_list(path)
    assert g.n == 4 and g.edges() == [(0, 1), (1, 2), (2, 3)]


@pytest.mark.parametrize("text", ["0 1 2\n", "0 x\n", "", "1 1\n"])
def test_read_edge_list_rejects(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(PreconditionViolated):
        read_edge_list(path)


def test_graph_is_immutable():
    g = complete_multipartite((2, 2))
    with pytest.raises(ValueError):
        g.adj[0, 1] = False
