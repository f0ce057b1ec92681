#include <doctest.h>

#include <cmath>

#include "dgs/constructions.hpp"
#include "dgs/experiments.hpp"
#include "oracles.hpp"

using dgs::Digraph;

TEST_CASE("alon_experiment determinism") {
    const auto a = dgs::alon_experiment(2, {4}, 1, 0.3, 77);
    const auto b = dgs::alon_experiment(2, {4}, 1, 0.3, 77);
    REQUIRE(a.results.size() == 1);
    CHECK(a.results[0].rho0 == b.results[0].rho0);
    CHECK(a.results[0].connected == b.results[0].connected);
}

TEST_CASE("alon_experiment per-trial seeds replay in isolation") {
    const auto exp = dgs::alon_experiment(3, {12}, 5, 0.3, 1000);
    for (const auto& row : exp.results) {
        CHECK(row.seed == 1000 + static_cast<std::uint64_t>(row.trial));
        const Digraph replay = dgs::random_regular_digraph(row.n, 3, row.seed);
        CHECK(dgs::strongly_connected(replay) == row.connected);
    }
}

TEST_CASE("alon_experiment accounting and ordering") {
    const auto exp = dgs::alon_experiment(2, {6, 10}, 8, 0.5, 3);
    REQUIRE(exp.results.size() == 16);
    for (std::size_t i = 0; i < 8; ++i) CHECK(exp.results[i].n == 6);
    for (std::size_t i = 8; i < 16; ++i) CHECK(exp.results[i].n == 10);
    REQUIRE(exp.summaries.size() == 2);
    for (const auto& s : exp.summaries) {
        CHECK(s.connected_count + s.discarded == 8);
        CHECK(s.fraction_within >= 0.0);
        CHECK(s.fraction_within <= 1.0);
    }
}

TEST_CASE("alon_experiment parallel run is bit-identical to serial") {
    const auto serial = dgs::alon_experiment(3, {20, 30}, 6, 0.3, 9, 1);
    const auto parallel = dgs::alon_experiment(3, {20, 30}, 6, 0.3, 9, 4);
    REQUIRE(serial.results.size() == parallel.results.size());
    for (std::size_t i = 0; i < serial.results.size(); ++i) {
        CHECK(serial.results[i].connected == parallel.results[i].connected);
        if (serial.results[i].connected) CHECK(serial.results[i].rho0 == parallel.results[i].rho0);
    }
}

TEST_CASE("gelfand_estimate") {
    SUBCASE("normal digraph: constant sequence at rho0") {
        const auto seq = dgs::gelfand_estimate(dgs::paley_digraph(7), 6);
        for (double term : seq) CHECK(term == doctest::Approx(std::numbers::sqrt2).epsilon(1e-6));
    }
    SUBCASE("line digraph of K4 decreases toward sqrt(2)") {
        const auto seq = dgs::gelfand_estimate(dgs::line_digraph(dgs::builtin_graph("complete(4)")).digraph, 12);
        CHECK(seq[0] == doctest::Approx(2.0));  // ell=1 is the operator norm k
        CHECK(std::abs(seq[11] - std::numbers::sqrt2) < 0.2);
        CHECK(seq[11] < seq[0]);  // convergent from above, though not monotone step by step
    }
    SUBCASE("De Bruijn dies at the word length") {
        const auto seq = dgs::gelfand_estimate(dgs::de_bruijn(2, 3), 5);
        CHECK(seq[2] < 1e-6);
        CHECK(seq[3] < 1e-6);
        CHECK(seq[4] < 1e-6);
    }
    SUBCASE("every term upper-bounds rho0") {
        for (const Digraph& d : {dgs::paley_digraph(7), dgs::projective_incidence(2, 2),
                                 dgs::line_digraph(dgs::builtin_graph("petersen")).digraph}) {
            const double rho0 = dgs::classify_spectrum(d).rho0;
            for (double term : dgs::gelfand_estimate(d, 8)) CHECK(term >= rho0 - 1e-6);
        }
    }
}

TEST_CASE("alternating_word_trace matches the dense computation") {
    const Digraph d = dgs::paley_digraph(7);
    const Eigen::MatrixXd a = d.dense();
    const Eigen::MatrixXd gram = a.transpose() * a;
    CHECK(dgs::alternating_word_trace(d, 1, 1) == doctest::Approx(gram.trace()));
    CHECK(dgs::alternating_word_trace(d, 1, 2) == doctest::Approx((gram * gram).trace()));
    // normal digraph: tr((A^T A)^2) = sum |lambda|^4 = 81 + 6*4
    CHECK(dgs::alternating_word_trace(d, 1, 2) == doctest::Approx(105.0));

    const Eigen::MatrixXd a2 = a * a;
    CHECK(dgs::alternating_word_trace(d, 2, 1) == doctest::Approx((a2.transpose() * a2).trace()));
}
