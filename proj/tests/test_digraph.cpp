#include <doctest.h>

#include <sstream>

#include "dgs/constructions.hpp"
#include "dgs/digraph.hpp"
#include "oracles.hpp"

using dgs::Digraph;
using dgs::Edge;

TEST_CASE("from_edge_list basic instances") {
    const Digraph loop(1, {{0, 0, 1}});
    CHECK(loop.order() == 1);
    CHECK(loop.degree() == 1);

    const Digraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(cycle.degree() == 1);

    const Digraph doubled(2, {{0, 1, 2}, {1, 0, 2}});
    CHECK(doubled.degree() == 2);
    CHECK(doubled.multiplicity(0, 1) == 2);
}

TEST_CASE("from_edge_list merges duplicate pairs") {
    const Digraph d(2, {{0, 1, 1}, {0, 1, 1}, {1, 0, 2}});
    CHECK(d.multiplicity(0, 1) == 2);
    CHECK(d.edges().size() == 2);
}

TEST_CASE("from_edge_list rejects irregular input") {
    CHECK_THROWS_AS(Digraph(2, {{0, 1, 1}, {1, 0, 2}}), dgs::NonRegularError);
    CHECK_THROWS_AS(Digraph(3, {{0, 1, 1}, {1, 0, 1}, {2, 2, 1}, {2, 2, 1}}), dgs::NonRegularError);
}

TEST_CASE("strongly_connected") {
    const Digraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(dgs::strongly_connected(cycle));

    const Digraph two_loops(2, {{0, 0, 1}, {1, 1, 1}});
    CHECK_FALSE(dgs::strongly_connected(two_loops));

    CHECK(dgs::strongly_connected(dgs::paley_digraph(7)));
}

TEST_CASE("strongly_connected agrees with transitive-closure oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Digraph d = dgs::random_regular_digraph(1 + static_cast<int>(seed % 17) * 3, 1 + seed % 3, seed);
        CHECK(dgs::strongly_connected(d) == oracles::strongly_connected_bruteforce(d));
    }
}

TEST_CASE("period of a directed cycle") {
    const Digraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    const auto pd = dgs::period(cycle);
    CHECK(pd.m == 3);
    CHECK(pd.classes == std::vector<int>{0, 1, 2});
}

TEST_CASE("period of the complete 2-regular 3-periodic digraph") {
    CHECK(dgs::period(dgs::complete_digraph(2, 3)).m == 3);
}

TEST_CASE("period of Paley(7) is 1, matching the closed-walk oracle") {
    const Digraph d = dgs::paley_digraph(7);
    CHECK(dgs::period(d).m == 1);
    CHECK(oracles::closed_walk_gcd(d, 6) == 1);
}

TEST_CASE("period rejects non-strongly-connected digraphs") {
    const Digraph two_loops(2, {{0, 0, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(dgs::period(two_loops), dgs::NotStronglyConnectedError);
}

TEST_CASE("period classes advance by one along every edge") {
    for (const auto& d : {dgs::complete_digraph(2, 3), dgs::complete_digraph(3, 4),
                          dgs::line_digraph(dgs::builtin_graph("complete(4)")).digraph}) {
        const auto pd = dgs::period(d);
        for (const Edge& e : d.edges())
            CHECK(pd.classes[static_cast<std::size_t>(e.to)] ==
                  (pd.classes[static_cast<std::size_t>(e.from)] + 1) % pd.m);
    }
}

TEST_CASE("symmetrize directed 3-cycle gives undirected 3-cycle") {
    const Digraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    const dgs::UGraph g = dgs::symmetrize(cycle);
    CHECK(g.degree() == 2);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(g.multiplicity(1, 0) == 1);
}

TEST_CASE("symmetrize Paley(7) is the complete graph K7") {
    const dgs::UGraph g = dgs::symmetrize(dgs::paley_digraph(7));
    CHECK(g.degree() == 6);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) CHECK(g.multiplicity(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("symmetrize a self-adjoint digraph doubles multiplicities") {
    const Digraph fano = dgs::projective_incidence(2, 2);
    const dgs::UGraph g = dgs::symmetrize(fano);
    CHECK(g.degree() == 2 * fano.degree());
    for (const Edge& e : fano.edges()) CHECK(g.multiplicity(e.from, e.to) == 2 * e.mult);
}

TEST_CASE("power_digraph") {
    const Digraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});

    SUBCASE("ell=1 is the identity transform") {
        const Digraph p = dgs::power_digraph(cycle, 1);
        CHECK(p.edges() == cycle.edges());
    }
    SUBCASE("directed 3-cycle cubed is three loops") {
        const Digraph p = dgs::power_digraph(cycle, 3);
        for (int v = 0; v < 3; ++v) CHECK(p.multiplicity(v, v) == 1);
        CHECK(p.edges().size() == 3);
    }
    SUBCASE("De Bruijn DB(2,3) cubed is the all-ones matrix") {
        const Digraph db = dgs::de_bruijn(2, 3);
        const Digraph p = dgs::power_digraph(db, 3);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) {
                CHECK(p.multiplicity(u, v) == 1);
                CHECK(oracles::count_walks(db, u, v, 3) == 1);
            }
    }
    SUBCASE("multiplicities match the walk-counting oracle") {
        const Digraph d = dgs::paley_digraph(7);
        const Digraph p = dgs::power_digraph(d, 3);
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v) CHECK(p.multiplicity(u, v) == oracles::count_walks(d, u, v, 3));
    }
}

TEST_CASE("power_digraph overflow guard") {
    const Digraph d = dgs::complete_digraph(3, 1);
    CHECK_THROWS_AS(dgs::power_digraph(d, 50), dgs::OverflowError);
}

TEST_CASE("power of the period renders each component aperiodic") {
    const Digraph d = dgs::complete_digraph(2, 3);
    const auto pd = dgs::period(d);
    const Digraph p = dgs::power_digraph(d, pd.m);
    // extract the strongly connected component of vertex v and re-index
    for (int v0 : {0, 2, 4}) {
        std::vector<int> members;
        for (int v = 0; v < p.order(); ++v)
            if (pd.classes[static_cast<std::size_t>(v)] == pd.classes[static_cast<std::size_t>(v0)]) members.push_back(v);
        std::vector<int> index(static_cast<std::size_t>(p.order()), -1);
        for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (const Edge& e : p.edges())
            if (index[static_cast<std::size_t>(e.from)] >= 0 && index[static_cast<std::size_t>(e.to)] >= 0)
                edges.push_back({index[static_cast<std::size_t>(e.from)], index[static_cast<std::size_t>(e.to)], e.mult});
        const Digraph comp(static_cast<int>(members.size()), edges);
        CHECK(dgs::period(comp).m == 1);
    }
}

TEST_CASE("regularity invariant on constructed digraphs") {
    for (const auto& d : {dgs::paley_digraph(11), dgs::de_bruijn(3, 2), dgs::complete_digraph(2, 3),
                          dgs::random_regular_digraph(40, 3, 7)}) {
        std::vector<std::int64_t> outdeg(static_cast<std::size_t>(d.order()), 0), indeg(static_cast<std::size_t>(d.order()), 0);
        for (const Edge& e : d.edges()) {
            outdeg[static_cast<std::size_t>(e.from)] += e.mult;
            indeg[static_cast<std::size_t>(e.to)] += e.mult;
        }
        for (int v = 0; v < d.order(); ++v) {
            CHECK(outdeg[static_cast<std::size_t>(v)] == d.degree());
            CHECK(indeg[static_cast<std::size_t>(v)] == d.degree());
        }
    }
}

TEST_CASE("symmetrize degrees are 2k") {
    for (const auto& d : {dgs::paley_digraph(7), dgs::de_bruijn(2, 3), dgs::random_regular_digraph(20, 2, 3)})
        CHECK(dgs::symmetrize(d).degree() == 2 * d.degree());
}

TEST_CASE("edge list round trip") {
    const Digraph d = dgs::paley_digraph(7);
    const std::string text = dgs::to_edge_list(d);
    const Digraph back = dgs::digraph_from_string(text);
    CHECK(back.order() == d.order());
    CHECK(back.degree() == d.degree());
    CHECK(back.edges() == d.edges());
    CHECK(dgs::to_edge_list(back) == text);
}

TEST_CASE("edge list parser rejects deviations") {
    const std::string good = "#dregular-digraph v1\nn=1 k=1 edges=1\n0 0 1\n";
    CHECK_NOTHROW(dgs::digraph_from_string(good));

    CHECK_THROWS_AS(dgs::digraph_from_string("#dregular v1\nn=1 k=1 edges=1\n0 0 1\n"), dgs::ParseError);
    CHECK_THROWS_AS(dgs::digraph_from_string("#dregular-digraph v1\nn=1 k=1\n0 0 1\n"), dgs::ParseError);
    CHECK_THROWS_AS(dgs::digraph_from_string("#dregular-digraph v1\nn=1 k=1 edges=2\n0 0 1\n"), dgs::ParseError);
    CHECK_THROWS_AS(dgs::digraph_from_string("#dregular-digraph v1\nn=1 k=1 edges=1\n0 0 01\n"), dgs::ParseError);
    CHECK_THROWS_AS(dgs::digraph_from_string("#dregular-digraph v1\nn=1 k=2 edges=1\n0 0 1\n"), dgs::ParseError);
    CHECK_THROWS_AS(dgs::digraph_from_string("#dregular-digraph v1\nn=1 k=1 edges=1\n0 0 1\nextra\n"), dgs::ParseError);
    // unsorted edges
    CHECK_THROWS_AS(
        dgs::digraph_from_string("#dregular-digraph v1\nn=2 k=1 edges=2\n1 0 1\n0 1 1\n"), dgs::ParseError);
}

TEST_CASE("trace counts loops with multiplicity") {
    const Digraph d(2, {{0, 0, 2}, {1, 1, 2}});
    CHECK(d.trace() == 4);
}
