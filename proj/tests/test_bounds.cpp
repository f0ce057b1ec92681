#include <doctest.h>

#include <cmath>

#include "dgs/bounds.hpp"
#include "dgs/constructions.hpp"
#include "dgs/spectral.hpp"
#include "dgs/walks.hpp"
#include "oracles.hpp"

using dgs::Digraph;
using dgs::UGraph;

TEST_CASE("moore_bound") {
    CHECK(dgs::moore_bound(4, 2) == 17);
    CHECK(dgs::moore_bound(3, 1) == 4);  // K4 is extremal
    CHECK(dgs::moore_bound(3, 80) == std::numeric_limits<std::int64_t>::max());  // saturates

    SUBCASE("holds on the undirected corpus with measured diameters") {
        for (const char* name : {"complete(4)", "complete(6)", "petersen", "cycle(9)"}) {
            const UGraph g = dgs::builtin_graph(name);
            if (g.degree() < 3) continue;
            const int diam = dgs::diameter(g.as_digraph());
            CHECK(static_cast<std::int64_t>(g.order()) <= dgs::moore_bound(g.degree(), diam));
        }
    }
}

TEST_CASE("quant_alon_boppana") {
    SUBCASE("C10: second eigenvalue beats the bound") {
        const double bound = dgs::quant_alon_boppana(2, 5);
        CHECK(bound == doctest::Approx(2 * std::cos(2 * std::numbers::pi / 5)));
        const double lambda2 = 2 * std::cos(std::numbers::pi / 5);
        CHECK(lambda2 >= bound);
    }
    SUBCASE("Petersen: diameter 2 gives a negative, trivially satisfied bound") {
        const UGraph g = dgs::builtin_graph("petersen");
        CHECK(dgs::diameter(g.as_digraph()) == 2);
        const double bound = dgs::quant_alon_boppana(3, 2);
        CHECK(bound == doctest::Approx(-2 * std::numbers::sqrt2));
        const auto verdict = dgs::ramanujan_graph_test(g);
        CHECK(verdict.eigenvalues[1] >= bound);
    }
    SUBCASE("second eigenvalue dominates the bound across the corpus (diam >= 2)") {
        for (const char* name : {"petersen", "cycle(10)", "cycle(9)", "complete(6)"}) {
            const UGraph g = dgs::builtin_graph(name);
            const int diam = dgs::diameter(g.as_digraph());
            if (diam < 2) continue;
            const auto verdict = dgs::ramanujan_graph_test(g);
            CHECK(verdict.eigenvalues[1] >= dgs::quant_alon_boppana(g.degree(), diam) - 1e-9);
        }
    }
}

TEST_CASE("normal_size_bound holds on the normal corpus") {
    // Paley(7): k=3, m=1
    CHECK(7.0 <= dgs::normal_size_bound(3, 1));
    CHECK(dgs::normal_size_bound(3, 1) == doctest::Approx(2 * std::pow(5.0, 10.4)));
    // Fano: k=3, m=2
    CHECK(14.0 <= dgs::normal_size_bound(3, 2));
    CHECK(dgs::normal_size_bound(3, 2) == doctest::Approx(4 * std::pow(17.0, 10.4)));
    // complete 2-regular 3-periodic
    CHECK(6.0 <= dgs::normal_size_bound(2, 3));
}

TEST_CASE("power_bound_rhs and majorant_row_sum") {
    SUBCASE("r=1 collapses to lambda^ell") {
        for (int ell : {1, 3, 7}) {
            CHECK(dgs::power_bound_rhs(3, 1.5, 1, ell) == doctest::Approx(std::pow(1.5, ell)));
            CHECK(dgs::majorant_row_sum(1, 1.5, 3, ell) == doctest::Approx(std::pow(1.5, ell)));
        }
    }
    SUBCASE("r=2,k=2,lambda=sqrt2,ell=1: bound 4 dominates the measured norm 2") {
        const double rhs = dgs::power_bound_rhs(2, std::numbers::sqrt2, 2, 1);
        CHECK(rhs == doctest::Approx(4.0));
        const auto ld = dgs::line_digraph(dgs::builtin_graph("complete(4)"));
        CHECK(dgs::restricted_power_norm(ld.digraph, 1) <= rhs);
    }
    SUBCASE("closed form equals the literal matrix row sum on a grid") {
        for (int k : {2, 3, 4})
            for (int r = 1; r <= 6; ++r)
                for (int ell = 1; ell <= 12; ++ell) {
                    const double lambda = std::sqrt(static_cast<double>(k));
                    const double closed = dgs::majorant_row_sum(r, lambda, k, ell);
                    const double literal = dgs::majorant_matrix_row_sum(r, lambda, k, ell);
                    CHECK(closed == doctest::Approx(literal).epsilon(1e-9));
                    CHECK(closed <= dgs::power_bound_rhs(k, lambda, r, ell) * (1 + 1e-12));
                }
    }
}

TEST_CASE("digraph_alon_boppana_lower") {
    SUBCASE("vacuous for tiny n") {
        CHECK(dgs::digraph_alon_boppana_lower(20, 4, 1, 1) == 0.0);
    }
    SUBCASE("k=4 sequence rises toward sqrt(k)") {
        const double b3 = dgs::digraph_alon_boppana_best(1e3, 4, 1).bound;
        const double b6 = dgs::digraph_alon_boppana_best(1e6, 4, 1).bound;
        const double b9 = dgs::digraph_alon_boppana_best(1e9, 4, 1).bound;
        CHECK(b3 <= b6);
        CHECK(b6 <= b9);
        CHECK(b9 >= 0.9 * 2.0);
    }
    SUBCASE("2-normal corpus: measured rho0 respects the best valid lower bound") {
        for (const UGraph& g : {dgs::builtin_graph("complete(4)"), dgs::builtin_graph("petersen")}) {
            const Digraph d = dgs::line_digraph(g).digraph;
            const double rho0 = dgs::classify_spectrum(d).rho0;
            const auto best = dgs::digraph_alon_boppana_best(d.order(), d.degree(), 2);
            CHECK(rho0 >= best.bound - 1e-9);
        }
    }
}

TEST_CASE("symmetrized_power_bound") {
    SUBCASE("r=1: the symmetrized spectrum is {lambda + conj(lambda)}") {
        const Digraph d = dgs::paley_digraph(7);
        const auto report = dgs::classify_spectrum(d);
        const UGraph sym = dgs::symmetrize(d);  // K7
        const auto verdict = dgs::ramanujan_graph_test(sym);
        // nontrivial spectrum of K7 is -1 six times; 2 Re((-1 +- i sqrt7)/2) = -1
        std::vector<dgs::Complex> doubled_re, sym_nontrivial;
        for (const auto& z : report.nontrivial) doubled_re.emplace_back(2 * z.real(), 0.0);
        for (std::size_t i = 1; i < verdict.eigenvalues.size(); ++i)
            sym_nontrivial.emplace_back(verdict.eigenvalues[i], 0.0);
        CHECK(oracles::multiset_distance(doubled_re, sym_nontrivial) < 1e-9);
    }
    SUBCASE("r=2 bound literal evaluation and domination for the line digraph of K4") {
        const auto bounds = dgs::symmetrized_power_bound(2, std::numbers::sqrt2, 2);
        CHECK(bounds.at_r_minus_1 ==
              doctest::Approx((std::numbers::sqrt2 + (std::numbers::sqrt2 + 2.0)) / 4.0));

        const Digraph d = dgs::line_digraph(dgs::builtin_graph("complete(4)")).digraph;
        const UGraph g1 = dgs::symmetrize(d);
        const auto verdict = dgs::ramanujan_graph_test(g1);
        double top = 0;
        for (std::size_t i = 1; i < verdict.eigenvalues.size(); ++i)
            top = std::max(top, std::abs(verdict.eigenvalues[i]));
        if (verdict.bipartite) top = std::max(top, 0.0);
        CHECK(top / g1.degree() <= bounds.at_r_minus_1 + 1e-9);
    }
    SUBCASE("lambda=0 sends the ell=r bound to zero") {
        const auto bounds = dgs::symmetrized_power_bound(2, 0.0, 2);
        CHECK(bounds.at_r == 0.0);
    }
}

TEST_CASE("power bound dominates measured restricted norms") {
    SUBCASE("line digraphs, r=2") {
        for (const char* name : {"complete(4)", "petersen"}) {
            const Digraph d = dgs::line_digraph(dgs::builtin_graph(name)).digraph;
            const double rho0 = dgs::classify_spectrum(d).rho0;
            for (int ell = 1; ell <= 12; ++ell)
                CHECK(dgs::restricted_power_norm(d, ell) <=
                      dgs::power_bound_rhs(d.degree(), rho0, 2, ell) * (1 + 1e-6));
        }
    }
    SUBCASE("normal digraphs, r=1") {
        for (const Digraph& d : {dgs::paley_digraph(7), dgs::paley_digraph(11), dgs::projective_incidence(2, 2)}) {
            const double rho0 = dgs::classify_spectrum(d).rho0;
            for (int ell = 1; ell <= 12; ++ell)
                CHECK(dgs::restricted_power_norm(d, ell) <=
                      dgs::power_bound_rhs(d.degree(), rho0, 1, ell) * (1 + 1e-6));
        }
    }
}

TEST_CASE("default power length follows sqrt(ln(n/2))") {
    CHECK(dgs::default_power_length(1e3) == 2);
    CHECK(dgs::default_power_length(1e9) == 4);
    // the asymptotic choice is vacuous at laboratory sizes
    CHECK(dgs::digraph_alon_boppana_lower(1e6, 4, 1, dgs::default_power_length(1e6)) == 0.0);
}
