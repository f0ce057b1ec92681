#include <doctest.h>

#include <set>

#include "dgs/constructions.hpp"
#include "dgs/digraph.hpp"
#include "oracles.hpp"

using dgs::Digraph;
using dgs::Edge;
using dgs::UGraph;

namespace {

UGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
    return UGraph::from_pairs(a + b, pairs);
}

}  // namespace

TEST_CASE("complete_digraph") {
    const Digraph single = dgs::complete_digraph(1, 1);
    CHECK(single.order() == 1);
    CHECK(single.multiplicity(0, 0) == 1);

    const Digraph d23 = dgs::complete_digraph(2, 3);
    CHECK(d23.order() == 6);
    CHECK(d23.degree() == 2);
    CHECK(dgs::period(d23).m == 3);

    const Digraph d31 = dgs::complete_digraph(3, 1);
    CHECK(d31.order() == 3);
    CHECK(d31.degree() == 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(d31.multiplicity(u, v) == 1);
}

TEST_CASE("paley_digraph") {
    SUBCASE("p=3 is the directed 3-cycle") {
        const Digraph d = dgs::paley_digraph(3);
        CHECK(d.degree() == 1);
        CHECK(d.multiplicity(0, 1) == 1);
        CHECK(d.multiplicity(1, 2) == 1);
        CHECK(d.multiplicity(2, 0) == 1);
    }
    SUBCASE("p=7 out-neighborhood of 0 is the squares") {
        const Digraph d = dgs::paley_digraph(7);
        CHECK(d.degree() == 3);
        std::set<int> nbrs;
        for (const auto& [v, m] : d.out(0)) nbrs.insert(v);
        CHECK(nbrs == std::set<int>{1, 2, 4});
        CHECK(oracles::squares_mod(7) == std::set<std::int64_t>{1, 2, 4});
    }
    SUBCASE("p=11 is 5-regular") { CHECK(dgs::paley_digraph(11).degree() == 5); }
    SUBCASE("loop-free by construction") {
        const Digraph d = dgs::paley_digraph(19);
        for (const Edge& e : d.edges()) CHECK(e.from != e.to);
    }
    SUBCASE("bad primes are rejected") {
        CHECK_THROWS_AS(dgs::paley_digraph(5), dgs::BadPrimeError);   // 1 mod 4
        CHECK_THROWS_AS(dgs::paley_digraph(15), dgs::BadPrimeError);  // composite
    }
    SUBCASE("translation invariance: out(a) = a + out(0)") {
        const Digraph d = dgs::paley_digraph(11);
        for (int shift : {1, 3, 5, 8, 10}) {
            for (const auto& [v, m] : d.out(0)) CHECK(d.multiplicity(shift, (v + shift) % 11) == m);
        }
    }
}

TEST_CASE("projective_incidence") {
    SUBCASE("Fano plane: n=14, k=3") {
        const Digraph d = dgs::projective_incidence(2, 2);
        CHECK(d.order() == 14);
        CHECK(d.degree() == 3);
    }
    SUBCASE("p=3: n=26, k=4") {
        const Digraph d = dgs::projective_incidence(3, 2);
        CHECK(d.order() == 26);
        CHECK(d.degree() == 4);
    }
    SUBCASE("lines against 3-spaces in F_2^4: n=30, k=7") {
        const Digraph d = dgs::projective_incidence(2, 3);
        CHECK(d.order() == 30);
        CHECK(d.degree() == 7);
        // subspace oracle: 1-dim subspaces of F_2^4 = 15 nonzero vectors
        CHECK(d.order() == 2 * 15);
    }
    SUBCASE("self-adjoint: adjacency equals its transpose") {
        const Digraph d = dgs::projective_incidence(2, 2);
        for (const Edge& e : d.edges()) CHECK(d.multiplicity(e.to, e.from) == e.mult);
    }
    SUBCASE("bipartite structure: period 2 as a digraph") {
        CHECK(dgs::period(dgs::projective_incidence(2, 2)).m == 2);
    }
}

TEST_CASE("de_bruijn") {
    const Digraph d21 = dgs::de_bruijn(2, 1);
    CHECK(d21.order() == 2);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) CHECK(d21.multiplicity(u, v) == 1);

    const Digraph d23 = dgs::de_bruijn(2, 3);
    CHECK(d23.order() == 8);
    CHECK(d23.degree() == 2);
    CHECK(dgs::period(d23).m == 1);

    const Digraph d32 = dgs::de_bruijn(3, 2);
    CHECK(d32.order() == 9);
    CHECK(d32.degree() == 3);

    SUBCASE("words shift: successor of (a1 a2 a3) drops a1") {
        // vertex 0b110 = 6 steps to 0b100 = 4 and 0b101 = 5
        CHECK(d23.multiplicity(6, 4) == 1);
        CHECK(d23.multiplicity(6, 5) == 1);
        CHECK(d23.multiplicity(6, 3) == 0);
    }
}

TEST_CASE("line_digraph") {
    SUBCASE("K4 gives 12 vertices, 2-regular") {
        const auto ld = dgs::line_digraph(dgs::builtin_graph("complete(4)"));
        CHECK(ld.digraph.order() == 12);
        CHECK(ld.digraph.degree() == 2);
        CHECK(ld.arc_labels.size() == 12);
    }
    SUBCASE("Petersen gives 30 vertices, 2-regular") {
        const auto ld = dgs::line_digraph(dgs::builtin_graph("petersen"));
        CHECK(ld.digraph.order() == 30);
        CHECK(ld.digraph.degree() == 2);
    }
    SUBCASE("K33 gives 18 vertices with period 2") {
        const auto ld = dgs::line_digraph(complete_bipartite(3, 3));
        CHECK(ld.digraph.order() == 18);
        CHECK(ld.digraph.degree() == 2);
        CHECK(dgs::period(ld.digraph).m == 2);
    }
    SUBCASE("arcs are non-backtracking length-2 paths") {
        const UGraph g = dgs::builtin_graph("petersen");
        const auto ld = dgs::line_digraph(g);
        for (const Edge& e : ld.digraph.edges()) {
            const auto [v, w] = ld.arc_labels[static_cast<std::size_t>(e.from)];
            const auto [w2, u] = ld.arc_labels[static_cast<std::size_t>(e.to)];
            CHECK(w == w2);
            CHECK(u != v);
            CHECK(g.multiplicity(v, w) == 1);
            CHECK(g.multiplicity(w, u) == 1);
        }
    }
    SUBCASE("multigraphs are rejected") {
        std::vector<Edge> tripled;
        for (int i = 0; i < 6; ++i) {
            tripled.push_back({i, (i + 1) % 6, 3});
            tripled.push_back({(i + 1) % 6, i, 3});
        }
        const UGraph bad(6, tripled);
        CHECK(bad.degree() == 6);
        CHECK_THROWS_AS(dgs::line_digraph(bad), dgs::NotSimpleError);
    }
    SUBCASE("degree-1 graphs are rejected") {
        CHECK_THROWS_AS(dgs::line_digraph(dgs::builtin_graph("complete(2)")), dgs::NonRegularError);
    }
    SUBCASE("period is 2 exactly for bipartite sources") {
        CHECK(dgs::period(dgs::line_digraph(dgs::builtin_graph("complete(4)")).digraph).m == 1);
        CHECK(dgs::period(dgs::line_digraph(complete_bipartite(4, 4)).digraph).m == 2);
        CHECK(dgs::period(dgs::line_digraph(oracles::circular_ladder(5)).digraph).m == 1);  // odd prism
        CHECK(dgs::period(dgs::line_digraph(oracles::circular_ladder(6)).digraph).m == 2);  // even prism
    }
}

TEST_CASE("random_regular_digraph") {
    SUBCASE("1-regular sample is a permutation digraph") {
        const Digraph d = dgs::random_regular_digraph(12, 1, 5);
        CHECK(d.degree() == 1);
        CHECK(d.edges().size() == 12);
    }
    SUBCASE("equal seeds are bit-identical") {
        const Digraph a = dgs::random_regular_digraph(5, 2, 123);
        const Digraph b = dgs::random_regular_digraph(5, 2, 123);
        CHECK(a.edges() == b.edges());
        CHECK(dgs::to_edge_list(a) == dgs::to_edge_list(b));
    }
    SUBCASE("different seeds differ") {
        const Digraph a = dgs::random_regular_digraph(100, 4, 1);
        const Digraph b = dgs::random_regular_digraph(100, 4, 2);
        CHECK(a.edges() != b.edges());
    }
    SUBCASE("degrees are all k") {
        const Digraph d = dgs::random_regular_digraph(100, 4, 9);
        CHECK(d.degree() == 4);
    }
}

TEST_CASE("builtin_graph") {
    const UGraph k4 = dgs::builtin_graph("complete(4)");
    CHECK(k4.order() == 4);
    CHECK(k4.degree() == 3);

    const UGraph c10 = dgs::builtin_graph("cycle(10)");
    CHECK(c10.order() == 10);
    CHECK(c10.degree() == 2);

    const UGraph pet = dgs::builtin_graph("petersen");
    CHECK(pet.order() == 10);
    CHECK(pet.degree() == 3);
    CHECK(pet.simple());

    CHECK_THROWS_AS(dgs::builtin_graph("torus(3)"), dgs::UnknownNameError);
    CHECK_THROWS_AS(dgs::builtin_graph("complete(x)"), dgs::UnknownNameError);
}
