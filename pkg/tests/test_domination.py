import pytest

from convdom import (
    DominatingPair,
    Graph,
    PreconditionError,
    ResourceLimitError,
    SizeGuardError,
    WrongClassError,
    all_pairs_distances,
    convex_hull,
    find_dominating_pair,
    find_dominating_shortest_path,
    gamma_bruteforce,
    gamma_con_bruteforce,
    gamma_con_hull4,
    gamma_iso,
    gamma_iso_bruteforce,
    gamma_iso_pair,
    is_chordal_dp_graph,
    is_dominating_pair,
    make_A1,
    make_complete,
    make_cycle,
    make_path,
    make_star,
    mask_of,
    vertices_of,
)

from oracles import gamma_plain

# One connected weak-dp graph whose different verified pairs drive the staged
# solver through stages 2, 3, and 5 (found by scanning seeded random graphs,
# then frozen; gamma_iso is 5 however it is reached).
STAGED_EDGES = [(0, 1), (0, 6), (0, 8), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 7)]

# Two x->y corridors: the short one under-dominates with leftovers on both
# endpoint neighborhoods, so only a distance d(x,y)-1 path through the long
# corridor dominates, which is exactly the stage-4 situation.
STAGE4_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
    (0, 6), (5, 10),
    (6, 7), (7, 8), (8, 9), (9, 10),
    (1, 7), (2, 8), (3, 9), (4, 9),
]


def staged_graph():
    return Graph.from_edges(9, STAGED_EDGES)


def stage4_graph():
    return Graph.from_edges(11, STAGE4_EDGES)


# -- brute-force oracles --------------------------------------------------------


def test_gamma_con_bruteforce_examples():
    star = gamma_con_bruteforce(make_star(5))
    assert (star.value, star.witness) == (1, mask_of([0]))
    p4 = gamma_con_bruteforce(make_path(4))
    assert (p4.value, vertices_of(p4.witness)) == (2, (1, 2))
    p6 = gamma_con_bruteforce(make_path(6))
    assert (p6.value, vertices_of(p6.witness)) == (4, (1, 2, 3, 4))
    assert p6.certificate.dominating and p6.certificate.convex


def test_gamma_iso_bruteforce_examples():
    c4 = gamma_iso_bruteforce(make_cycle(4))
    assert (c4.value, vertices_of(c4.witness)) == (2, (0, 1))
    p6 = gamma_iso_bruteforce(make_path(6))
    assert (p6.value, vertices_of(p6.witness)) == (4, (1, 2, 3, 4))
    k1 = gamma_iso_bruteforce(make_complete(1))
    assert (k1.value, k1.witness) == (1, 1)
    assert k1.certificate.isometric


def test_bruteforce_guards():
    with pytest.raises(SizeGuardError):
        gamma_con_bruteforce(make_path(15))
    with pytest.raises(SizeGuardError):
        gamma_iso_bruteforce(make_path(15), bound=10)
    with pytest.raises(PreconditionError):
        gamma_con_bruteforce(Graph.from_edges(4, [(0, 1), (2, 3)]))


# -- hull-of-small-seeds solver ---------------------------------------------------


def test_gamma_con_hull4_examples():
    star = gamma_con_hull4(make_star(5))
    assert (star.value, star.seed, star.witness) == (1, mask_of([0]), mask_of([0]))

    # adjacent dominating pair, no universal vertex: the edge itself wins
    p4 = gamma_con_hull4(make_path(4))
    assert is_dominating_pair(make_path(4), 1, 2)
    assert (p4.value, vertices_of(p4.seed), vertices_of(p4.witness)) == (2, (1, 2), (1, 2))

    p6 = gamma_con_hull4(make_path(6))
    assert (p6.value, vertices_of(p6.seed)) == (4, (1, 4))
    assert vertices_of(p6.witness) == (1, 2, 3, 4)
    assert p6.method == "hull4"


def test_hull4_result_invariants(connected_corpus):
    for name, g in connected_corpus:
        if g.n > 10 or not is_chordal_dp_graph(g).holds:
            continue
        result = gamma_con_hull4(g)
        assert result.seed.bit_count() <= 4, name
        assert convex_hull(g, result.seed).hull == result.witness, name
        assert result.certificate.dominating and result.certificate.convex, name
        assert result.trace.hull == result.witness


def test_hull4_matches_bruteforce_on_chordal_dp_corpus(connected_corpus):
    checked = 0
    for name, g in connected_corpus:
        if g.n > 10 or not is_chordal_dp_graph(g).holds:
            continue
        assert gamma_con_hull4(g).value == gamma_con_bruteforce(g).value, name
        checked += 1
    assert checked >= 20


def test_hull4_universal_vertex_law(connected_corpus):
    for name, g in connected_corpus:
        if g.n > 10 or not is_chordal_dp_graph(g).holds:
            continue
        universal = any(g.closed_adj[v] == g.full_mask for v in range(g.n))
        assert (gamma_con_hull4(g).value == 1) == universal, name


def test_hull_of_pair_upper_bound(connected_corpus):
    # |CH({x,y})| bounds gamma_con from above for any verified pair
    for name, g in connected_corpus:
        if g.n > 10 or not is_chordal_dp_graph(g).holds:
            continue
        optimum = gamma_con_bruteforce(g).value
        for x in range(g.n):
            for y in range(x, g.n):
                if is_dominating_pair(g, x, y):
                    hull = convex_hull(g, mask_of({x, y})).hull
                    assert hull.bit_count() >= optimum, (name, x, y)


def test_hull4_wrong_class_errors():
    with pytest.raises(WrongClassError) as err:
        gamma_con_hull4(make_cycle(7))
    assert err.value.hole is not None

    with pytest.raises(WrongClassError) as err:
        gamma_con_hull4(make_A1())
    assert err.value.witness is not None and err.value.witness.family == "A1"

    # trust skips recognition; A1 has gamma_con at most 4, so the sweep still
    # matches the oracle even off the promised class
    trusted = gamma_con_hull4(make_A1(), trust=True)
    assert trusted.value == gamma_con_bruteforce(make_A1()).value == 4


def test_hull4_jobs_reproduce_sequential():
    for g in (make_path(6), make_star(5), stage4_graph().induced(mask_of(range(8)))[0]):
        if not g.is_connected():
            continue
        sequential = gamma_con_hull4(g, trust=True)
        parallel = gamma_con_hull4(g, trust=True, jobs=2)
        assert (sequential.value, sequential.witness, sequential.seed) == (
            parallel.value,
            parallel.witness,
            parallel.seed,
        )


# -- dominating shortest-path search ------------------------------------------------


def test_find_dominating_shortest_path_examples():
    assert find_dominating_shortest_path(make_path(6), 1, 4, 3) == (1, 2, 3, 4)
    assert find_dominating_shortest_path(make_cycle(6), 0, 3, 3) == (0, 1, 2, 3)
    # the unique shortest 0,3-path of C7 leaves vertex 5 undominated
    assert find_dominating_shortest_path(make_cycle(7), 0, 3, 3) is None
    with pytest.raises(PreconditionError):
        find_dominating_shortest_path(make_path(6), 0, 5, 4)
    with pytest.raises(ResourceLimitError):
        find_dominating_shortest_path(make_cycle(6), 0, 3, 3, cap=1)


# -- staged isometric solver ----------------------------------------------------------


def test_gamma_iso_pair_stage1_examples():
    p6 = gamma_iso_pair(make_path(6), DominatingPair(0, 5, True))
    assert (p6.value, vertices_of(p6.witness), p6.stage) == (4, (1, 2, 3, 4), 1)

    # gamma_iso(C6) is 4: no pair of vertices is isometric and dominating at
    # once, and the consecutive triples all miss one vertex
    c6 = gamma_iso_pair(make_cycle(6), DominatingPair(0, 3, True))
    assert (c6.value, vertices_of(c6.witness), c6.stage) == (4, (0, 1, 2, 3), 1)
    assert gamma_iso_bruteforce(make_cycle(6)).value == 4

    star = gamma_iso_pair(make_star(5), DominatingPair(1, 2, True))
    assert (star.value, star.witness, star.stage) == (1, mask_of([0]), 1)


def test_gamma_iso_pair_rejects_unverified_pairs():
    with pytest.raises(PreconditionError):
        gamma_iso_pair(make_path(6), DominatingPair(0, 5, False))


def test_staged_solver_reaches_every_stage():
    g = staged_graph()
    oracle = gamma_iso_bruteforce(g).value
    assert oracle == 5
    expectations = {(6, 7): 2, (0, 7): 3, (0, 5): 5}
    for (x, y), stage in expectations.items():
        assert is_dominating_pair(g, x, y)
        result = gamma_iso_pair(g, DominatingPair(x, y, True))
        assert result.value == oracle, (x, y)
        assert result.stage == stage, (x, y)
        assert result.certificate.dominating and result.certificate.isometric

    g4 = stage4_graph()
    assert is_dominating_pair(g4, 0, 5)
    result = gamma_iso_pair(g4, DominatingPair(0, 5, True))
    assert (result.value, result.stage) == (5, 4)
    assert result.value == gamma_iso_bruteforce(g4).value
    assert vertices_of(result.witness) == (1, 7, 8, 9, 10)


def test_staged_values_are_pair_independent():
    for g in (staged_graph(), stage4_graph(), make_path(8)):
        oracle = gamma_iso_bruteforce(g).value
        dist = all_pairs_distances(g)
        pairs = [
            (x, y)
            for x in range(g.n)
            for y in range(x, g.n)
            if is_dominating_pair(g, x, y)
        ]
        assert pairs
        for x, y in pairs:
            result = gamma_iso_pair(g, DominatingPair(x, y, True))
            assert result.value == oracle, (x, y)
            assert dist.d(x, y) - 1 <= result.value <= dist.d(x, y) + 1


def test_gamma_iso_jobs_reproduce_sequential():
    for g in (staged_graph(), stage4_graph()):
        pair = find_dominating_pair(g)
        sequential = gamma_iso_pair(g, pair)
        parallel = gamma_iso_pair(g, pair, jobs=2)
        assert (sequential.value, sequential.witness, sequential.stage) == (
            parallel.value,
            parallel.witness,
            parallel.stage,
        )


def test_gamma_iso_entry_point():
    p7 = gamma_iso(make_path(7))
    assert p7.value == 5 == gamma_iso_bruteforce(make_path(7)).value
    assert gamma_iso(make_complete(2)).value == 1
    with pytest.raises(WrongClassError):
        gamma_iso(make_cycle(7))
    with pytest.raises(PreconditionError):
        gamma_iso(Graph.from_edges(4, [(0, 1), (2, 3)]))


# -- cross-solver invariants -------------------------------------------------------


def test_domination_chain(connected_corpus):
    for name, g in connected_corpus:
        if g.n > 9:
            continue
        plain = gamma_plain(g)
        iso = gamma_iso_bruteforce(g).value
        con = gamma_con_bruteforce(g).value
        assert plain <= iso <= con, name
        assert gamma_bruteforce(g).value == plain, name
