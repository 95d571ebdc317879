import random

import pytest

from rainbow_brooms import (
    BroomSpec,
    ColoredGraph,
    EdgeColoring,
    Graph,
    RainbowCertificate,
    build_broom,
    certificate_from_json_dict,
    complete_graph,
    find_rainbow_broom2,
    find_rainbow_tree,
    good_subgraph,
    k_edge_color,
    one_factorization,
    verify_certificate,
)

from conftest import k5_minus_class, random_colored_graph


def test_broom_spec_validation():
    assert BroomSpec(4, 2).bristles == 2
    assert BroomSpec(2, 2).bristles == 0
    with pytest.raises(ValueError):
        BroomSpec(1, 2)
    with pytest.raises(ValueError):
        BroomSpec(3, 0)


def test_build_broom_shapes():
    p2 = build_broom(BroomSpec(2, 2))
    assert p2.n == 3 and p2.edges == ((0, 1), (1, 2))

    b72 = build_broom(BroomSpec(7, 2))
    assert b72.n == 8 and b72.edge_count == 7
    assert b72.degree(2) == 6  # center: handle edge plus 5 bristles

    for l in (1, 2, 3, 4):
        path = build_broom(BroomSpec(l, l))
        assert path.n == l + 1 and path.max_degree() <= 2
        assert path.edge_count == l


def test_detector_on_deleted_class_subgraph(k5_minus_class_cg):
    cert = find_rainbow_broom2(k5_minus_class_cg, 4)
    assert cert is not None
    assert verify_certificate(k5_minus_class_cg, cert, 4)
    # center sits at the end of the handle and must have enough neighbors
    assert k5_minus_class_cg.graph.degree(cert.handle[-1]) >= 3


def test_detector_known_copy(k5_minus_class_cg):
    # handle 0-1-3 with bristles {2, 4} is a rainbow copy in the fixture
    cert = RainbowCertificate(
        (0, 1, 3),
        (2, 4),
        tuple(
            k5_minus_class_cg.color_of(*e)
            for e in ((0, 1), (1, 3), (3, 2), (3, 4))
        ),
    )
    assert verify_certificate(k5_minus_class_cg, cert, 4)


def test_detector_absent_on_odd_complete():
    cg = one_factorization(4)  # the proper 3-coloring of K_4
    assert find_rainbow_broom2(cg, 3) is None


def test_detector_absent_low_degree():
    # max degree 2 < k-1 = 3: no center exists
    g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    cg = ColoredGraph(g, EdgeColoring(tuple((e, i % 2) for i, e in enumerate(g.edges))))
    assert find_rainbow_broom2(cg, 4) is None


def test_detector_k2_any_path():
    g = Graph(3, ((0, 1), (1, 2)))
    cg = ColoredGraph(g, EdgeColoring((((0, 1), 0), ((1, 2), 1))))
    cert = find_rainbow_broom2(cg, 2)
    assert cert is not None and cert.bristle_ends == ()
    with pytest.raises(ValueError):
        find_rainbow_broom2(cg, 1)


def test_detector_determinism(k5_minus_class_cg):
    a = find_rainbow_broom2(k5_minus_class_cg, 4)
    b = find_rainbow_broom2(k5_minus_class_cg, 4)
    assert a == b


def test_monotonicity_on_fixture(k5_minus_class_cg):
    for k in (2, 3, 4):
        assert find_rainbow_broom2(k5_minus_class_cg, k) is not None


def test_monotonicity_random():
    rng = random.Random(97)
    for _ in range(100):
        cg = random_colored_graph(rng, n_max=7)
        found = [k for k in range(2, 8) if find_rainbow_broom2(cg, k) is not None]
        # a copy at k contains copies at every smaller k (drop bristles)
        if found:
            assert found == list(range(2, max(found) + 1))


def test_tree_single_edge():
    cg = one_factorization(4)
    emb = find_rainbow_tree(cg, Graph(2, ((0, 1),)))
    assert emb is not None and len(emb.mapping) == 2


def test_tree_finds_broom_in_fixture(k5_minus_class_cg):
    emb = find_rainbow_tree(k5_minus_class_cg, build_broom(BroomSpec(4, 2)))
    assert emb is not None
    assert len(set(emb.mapping)) == 5
    assert len(set(emb.colors_used)) == 4


def test_tree_absent_on_good_subgraph():
    cg = k_edge_color(good_subgraph(6).graph, 6)
    assert cg is not None
    # no degree-5 vertex means no rainbow 6-edge broom under this coloring
    assert find_rainbow_tree(cg, build_broom(BroomSpec(6, 2))) is None


def test_tree_rejects_non_trees():
    cg = one_factorization(4)
    with pytest.raises(ValueError):
        find_rainbow_tree(cg, complete_graph(3))
    with pytest.raises(ValueError):
        find_rainbow_tree(cg, Graph(4, ((0, 1), (2, 3))))


def test_detectors_agree_random():
    rng = random.Random(12345)
    for _ in range(150):
        cg = random_colored_graph(rng, n_max=7)
        for k in (3, 4, 5):
            cert = find_rainbow_broom2(cg, k)
            emb = find_rainbow_tree(cg, build_broom(BroomSpec(k, 2)))
            assert (cert is None) == (emb is None)
            if cert is not None:
                assert verify_certificate(cg, cert, k)


def test_verify_certificate_rejects_garbage(k5_minus_class_cg):
    good = find_rainbow_broom2(k5_minus_class_cg, 4)
    assert verify_certificate(k5_minus_class_cg, good, 4)
    # duplicated color
    bad = RainbowCertificate(good.handle, good.bristle_ends, (1, 1, 2, 3))
    assert not verify_certificate(k5_minus_class_cg, bad, 4)
    # wrong bristle count for k
    assert not verify_certificate(k5_minus_class_cg, good, 5)
    # repeated vertex
    bad = RainbowCertificate((0, 1, 0), good.bristle_ends, good.colors_used)
    assert not verify_certificate(k5_minus_class_cg, bad, 4)
    # vertex out of range
    bad = RainbowCertificate((0, 1, 9), good.bristle_ends, good.colors_used)
    assert not verify_certificate(k5_minus_class_cg, bad, 4)
    # missing edge
    bad = RainbowCertificate((3, 0, 1), (2, 4), good.colors_used)
    assert not verify_certificate(k5_minus_class_cg, bad, 4)


def test_certificate_json_round_trip(k5_minus_class_cg):
    cert = find_rainbow_broom2(k5_minus_class_cg, 4)
    d = cert.to_json_dict()
    assert set(d) == {"handle", "bristles", "colors"}
    assert certificate_from_json_dict(d) == cert
