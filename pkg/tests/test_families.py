from math import comb

import pytest

from lmrttg import (
    DomainError,
    FamilyDoesNotExist,
    FamilyParams,
    FamilyTag,
    Graph,
    build_family,
    build_h_optimal,
    build_lmrttg,
    build_lmrttg_sparse,
    candidate_set,
    canonical_key,
    classify,
    complement,
    family_exists,
    graph_key,
    is_universal,
    quasi_complete_params,
    quasi_star_params,
    zagreb1,
)
from lmrttg.classify import Sign
from lmrttg.graphs import disjoint_union, join


def test_quasi_complete_params_examples():
    assert quasi_complete_params(5) == (3, 1)
    assert quasi_complete_params(6) == (4, 4)
    assert quasi_complete_params(0) == (1, 1)
    assert quasi_complete_params(12) == (5, 3)
    with pytest.raises(DomainError):
        quasi_complete_params(-1)


def test_quasi_star_params_examples():
    assert quasi_star_params(6, 6) == (4, 1)
    assert quasi_star_params(6, 8) == (4, 3)
    assert quasi_star_params(7, 9) == (5, 3)
    with pytest.raises(DomainError):
        quasi_star_params(5, 11)


def test_decomposition_consistency_exhaustive():
    for n in range(101):
        c = comb(n, 2)
        for m in range(c + 1):
            k, j = quasi_complete_params(m)
            assert 1 <= j <= k and m == comb(k + 1, 2) - j
            assert quasi_star_params(n, m) == quasi_complete_params(c - m)


def test_family_params_bundle():
    fp = FamilyParams.from_nm(6, 7)
    assert (fp.k, fp.j, fp.kp, fp.jp) == (4, 3, 4, 2)


def test_build_family_known_graphs():
    c166 = build_family(6, 6, FamilyTag.C1)
    assert graph_key(c166) == graph_key(disjoint_union(Graph.complete(4), Graph.empty(2)))

    c179 = build_family(7, 9, FamilyTag.C1)
    k5_minus_edge = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)][:-1])
    assert graph_key(c179) == graph_key(disjoint_union(k5_minus_edge, Graph.empty(2)))

    c255 = build_family(5, 5, FamilyTag.C2)
    target = join(Graph.complete(1), disjoint_union(Graph.complete(2), Graph.empty(2)))
    assert graph_key(c255) == graph_key(target)
    assert graph_key(c255) == graph_key(build_family(5, 5, FamilyTag.S1))

    s267 = build_family(6, 7, FamilyTag.S2)
    target = disjoint_union(join(Graph.complete(2), Graph.empty(3)), Graph.complete(1))
    assert graph_key(s267) == graph_key(target)

    s279 = build_family(7, 9, FamilyTag.S2)
    target = disjoint_union(join(Graph.complete(2), Graph.empty(4)), Graph.complete(1))
    assert graph_key(s279) == graph_key(target)


def test_family_existence():
    assert not family_exists(6, 6, FamilyTag.C3)
    assert not family_exists(6, 6, FamilyTag.S2)
    with pytest.raises(FamilyDoesNotExist):
        build_family(6, 6, FamilyTag.C3)
    with pytest.raises(DomainError):
        build_family(6, 20, FamilyTag.C1)


def test_candidate_set():
    tags = {tag for tag, _ in candidate_set(6, 7)}
    assert FamilyTag.C3 in tags and FamilyTag.S2 in tags
    by_tag = dict(candidate_set(6, 7))
    assert graph_key(by_tag[FamilyTag.C3]) == graph_key(by_tag[FamilyTag.S2])

    assert {tag for tag, _ in candidate_set(6, 6)} == {FamilyTag.C1, FamilyTag.S1}

    empties = candidate_set(5, 0)
    assert empties and all(g.m == 0 for _, g in empties)
    assert {tag for tag, _ in empties} >= {FamilyTag.C1, FamilyTag.S1}


def test_family_counts_match_for_all_small_nm():
    for n in range(41):
        for m in range(comb(n, 2) + 1):
            for tag in FamilyTag:
                if family_exists(n, m, tag):
                    g = build_family(n, m, tag)
                    assert (g.n, g.m) == (n, m), (n, m, tag)


def test_complement_duality_of_families():
    import networkx as nx

    from oracles import to_networkx

    pairs = [(FamilyTag.S1, FamilyTag.C1), (FamilyTag.S2, FamilyTag.C2), (FamilyTag.S3, FamilyTag.C3)]
    for n in range(13):
        c = comb(n, 2)
        for m in range(c + 1):
            for s_tag, c_tag in pairs:
                assert family_exists(n, m, s_tag) == family_exists(n, c - m, c_tag)
                if family_exists(n, m, s_tag):
                    a = complement(build_family(n, m, s_tag))
                    b = build_family(n, c - m, c_tag)
                    if n <= 8:
                        assert graph_key(a) == graph_key(b), (n, m, s_tag)
                    else:
                        assert nx.is_isomorphic(to_networkx(a), to_networkx(b)), (n, m, s_tag)


def test_h_optimal_examples():
    assert build_h_optimal(5, 5)[0] is FamilyTag.S1
    assert build_h_optimal(7, 12)[0] is FamilyTag.S2
    for n in range(5, 12):
        tag, g = build_h_optimal(n, 3)
        assert tag is FamilyTag.S1
        assert sorted(g.degrees(), reverse=True) == [3, 1, 1, 1] + [0] * (n - 4)
    tag, g = build_h_optimal(6, 5)
    assert tag is FamilyTag.S1
    assert graph_key(g) == graph_key(join(Graph.complete(1), Graph.empty(5)))


def test_h_optimal_small_n_outside_range():
    tag, g = build_h_optimal(4, 5)
    assert tag is FamilyTag.S1 and (g.n, g.m) == (4, 5)
    tag, g = build_h_optimal(2, 1)
    assert tag is FamilyTag.S1 and g == Graph.complete(2)


def test_h_optimal_is_always_m_optimal():
    for n in range(1, 31):
        for m in range(comb(n, 2) + 1):
            _, g = build_h_optimal(n, m)
            best = max(zagreb1(h) for _, h in candidate_set(n, m))
            assert zagreb1(g) == best, (n, m)


def test_edge_count_five_never_reaches_c_side():
    for n in range(5, 61):
        assert classify(n, 5).sign in (Sign.PLUS, Sign.TIE)


def test_sparse_construction_examples():
    g45 = build_lmrttg_sparse(4, 5)
    assert set(g45.graph.edges()) == {(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)}
    g56 = build_lmrttg_sparse(5, 6)
    assert set(g56.graph.edges()) == {(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)}
    assert g56.graph.degree(4) == 0
    g46 = build_lmrttg_sparse(4, 6)
    assert g46.graph == Graph.complete(4)
    with pytest.raises(DomainError):
        build_lmrttg_sparse(4, 7)
    with pytest.raises(DomainError):
        build_lmrttg_sparse(5, 4)


def test_sparse_construction_shape():
    for n in range(4, 12):
        for m in range(5, 2 * n - 2):
            tg = build_lmrttg_sparse(n, m)
            assert (tg.graph.n, tg.graph.m) == (n, m)
            assert tg.graph.has_edge(tg.s, tg.t)


def test_lmrttg_construction():
    assert build_lmrttg(4, 6).graph == Graph.complete(4)
    assert build_lmrttg(6, 15).graph == Graph.complete(6)

    tg = build_lmrttg(7, 20)
    assert is_universal(tg, tg.s) and is_universal(tg, tg.t)
    # the core is the (5,9) optimum, a near-complete quasi-star tie case
    core_tag, core = build_h_optimal(5, 9)
    assert core_tag is FamilyTag.S1
    rows = [tg.graph.rows[v] >> 2 for v in range(2, 7)]
    assert graph_key(Graph(5, rows)) == graph_key(core)

    with pytest.raises(DomainError):
        build_lmrttg(4, 4)
    with pytest.raises(DomainError):
        build_lmrttg(3, 5)


def test_lmrttg_boundary_agrees_with_dense_form():
    # at m = 2n-3 the sparse graph already has universal terminals
    for n in (4, 5, 6, 7):
        tg = build_lmrttg(n, 2 * n - 3)
        assert is_universal(tg, tg.s) and is_universal(tg, tg.t)
        dense = join(Graph.complete(2), build_h_optimal(n - 2, 0)[1])
        from lmrttg import TwoTerminalGraph

        assert canonical_key(tg) == canonical_key(TwoTerminalGraph(dense, 0, 1))
