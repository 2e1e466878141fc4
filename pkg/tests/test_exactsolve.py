import random
from itertools import product

import pytest

from kneserturan import (
    Hypergraph,
    SizeCapError,
    UNBOUNDED,
    augment_representation,
    build_named_family,
    build_named_kneser,
    chromatic_number_graph,
    chromatic_number_hypergraph,
    cover_coloring,
    covering_number,
    dsatur_coloring,
    family_of,
    independence_number,
    kneser_of_family,
    kneser_power,
    max_clique,
    validate_graph_coloring,
    validate_hypergraph_coloring,
)
from conftest import random_graph, random_hypergraph


def _brute_chi_graph(g):
    """Reference chromatic number by scanning k-colorings; shares no code
    with the solver under test."""
    if g.n_vertices == 0:
        return 0
    pairs = [tuple(sorted(e)) for e in g.edges]
    for k in range(1, g.n_vertices + 1):
        for assignment in product(range(k), repeat=g.n_vertices):
            if all(assignment[u] != assignment[v] for u, v in pairs):
                return k
    raise AssertionError("unreachable")


def test_petersen_chromatic_number():
    pet = build_named_kneser("kneser", n=5, k=2).graph
    report = chromatic_number_graph(pet)
    assert report.value == 3
    assert validate_graph_coloring(pet, report.coloring.assignment)
    assert len(set(report.coloring.assignment)) == 3


def test_schrijver_6_2_chromatic_number():
    g = build_named_kneser("schrijver", n=6, k=2).graph
    assert chromatic_number_graph(g).value == 4


def test_two_edge_path_kneser_graph_of_k4():
    g = kneser_of_family(build_named_family("complete", n=4),
                         family_of(build_named_family("path", length=2))).result
    assert chromatic_number_graph(g).value == 4


def test_order_three_kneser_hypergraph():
    inst = kneser_of_family(build_named_family("matching", n=7),
                            family_of(build_named_family("matching", n=2)), r=3)
    report = chromatic_number_hypergraph(inst.result)
    assert report.value == 2
    assert validate_hypergraph_coloring(inst.result, report.coloring.assignment)


def test_singleton_edge_is_unbounded():
    h = Hypergraph(2, (frozenset({0}),))
    report = chromatic_number_hypergraph(h)
    assert report.value is UNBOUNDED
    assert report.value > 10 ** 9
    assert report.value.to_json() == "unbounded"


def test_chromatic_matches_brute_force():
    rng = random.Random(31)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 6), rng.choice((0.3, 0.6)))
        report = chromatic_number_graph(g)
        assert report.value == _brute_chi_graph(g)
        assert validate_graph_coloring(g, report.coloring.assignment)


def test_independence_covering_duality():
    rng = random.Random(32)
    for _ in range(30):
        h = random_hypergraph(rng, max_vertices=7, max_edges=6)
        alpha, ind = independence_number(h)
        beta, cover = covering_number(h)
        assert alpha + beta == h.n_vertices
        assert len(ind) == alpha and len(cover) == beta
        for em, e in zip(h.edge_masks, h.edges):
            assert not e <= ind  # no edge fully inside the independent set
            assert e & cover  # every edge is met by the cover


def test_max_clique_values():
    assert max_clique(build_named_family("complete", n=5))[0] == 5
    assert max_clique(build_named_family("cycle", n=5))[0] == 2
    size, verts = max_clique(build_named_family("complete", n=4))
    assert len(verts) == size == 4


def test_dsatur_is_proper_upper_bound():
    rng = random.Random(33)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 7), 0.5)
        assignment = dsatur_coloring(g)
        assert validate_graph_coloring(g, assignment)
        assert len(set(assignment)) >= chromatic_number_graph(g).value


def test_solver_cap_is_enforced():
    g = build_named_family("complete", n=5)
    with pytest.raises(SizeCapError):
        chromatic_number_graph(g, cap=4)
    with pytest.raises(SizeCapError):
        independence_number(g, cap=4)


def test_cover_coloring_on_disjoint_edges():
    rep = build_named_family("matching", n=5)
    cert, meta = cover_coloring(rep)
    kg = kneser_power(rep).result  # complete graph on the five edge ids
    assert validate_graph_coloring(kg, cert.assignment)
    assert cert.num_colors == 5
    assert meta["r"] == 2
    assert all(len(b) == 1 for b in meta["blocks"])


def test_cover_coloring_tracks_alpha():
    rng = random.Random(34)
    for _ in range(15):
        rep = random_hypergraph(rng, max_vertices=7, max_edges=5, min_edge_size=2)
        cert, meta = cover_coloring(rep)
        kg = kneser_power(rep).result
        assert validate_graph_coloring(kg, cert.assignment)
        alpha, _ = independence_number(rep)
        assert cert.num_colors == rep.n_vertices - alpha


def test_augment_representation_makes_covering_equal_chi():
    rep = build_named_family("matching", n=3)
    chi = chromatic_number_graph(kneser_power(rep).result).value
    report = chromatic_number_graph(kneser_power(rep).result)
    augmented = augment_representation(rep, report.coloring)
    beta, _ = covering_number(augmented)
    assert beta == chi == 3


def test_chromatic_report_carries_lower_witness():
    g = build_named_family("complete", n=4)
    report = chromatic_number_graph(g)
    assert report.value == 4
    doc = report.to_json_dict()
    assert doc["value"] == 4
    assert doc["witness"]
