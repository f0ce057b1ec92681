#ifndef DGS_EXPERIMENTS_HPP
#define DGS_EXPERIMENTS_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "dgs/constructions.hpp"
#include "dgs/digraph.hpp"
#include "dgs/spectral.hpp"

namespace dgs {

struct AlonTrial {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    bool connected = false;
    double rho0 = std::numeric_limits<double>::quiet_NaN();
};

struct AlonSummary {
    int n = 0;
    int connected_count = 0;
    int discarded = 0;
    double mean_rho0 = 0.0;
    double max_rho0 = 0.0;
    double fraction_within = 0.0;  // fraction of connected samples with rho0 <= sqrt(k) + epsilon
};

struct AlonExperiment {
    int k = 0;
    std::vector<int> n_list;
    int trials_per_n = 0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    std::vector<AlonTrial> results;     // ordered by (n, trial)
    std::vector<AlonSummary> summaries;  // one per n
};

// Samples the permutation model, discards non-strongly-connected draws from
// the statistics (counted), and measures rho0 of the rest. Per-trial seed is
// seed + trial index, so any single trial reruns in isolation.
inline AlonExperiment alon_experiment(int k, const std::vector<int>& n_list, int trials, double epsilon,
                                      std::uint64_t seed, int jobs = 1) {
    if (k < 2) throw ParseError("Alon experiment needs k >= 2");
    AlonExperiment exp;
    exp.k = k;
    exp.n_list = n_list;
    exp.trials_per_n = trials;
    exp.seed = seed;
    exp.epsilon = epsilon;
    exp.results.resize(n_list.size() * static_cast<std::size_t>(trials));

    auto run_trial = [&](std::size_t n_idx, int trial) {
        const int n = n_list[n_idx];
        if (n < k) throw ParseError("Alon experiment needs n >= k");
        AlonTrial& row = exp.results[n_idx * static_cast<std::size_t>(trials) + static_cast<std::size_t>(trial)];
        row.n = n;
        row.trial = trial;
        row.seed = seed + static_cast<std::uint64_t>(trial);
        const Digraph d = random_regular_digraph(n, k, row.seed);
        row.connected = strongly_connected(d);
        if (row.connected)
            row.rho0 = (n <= kDenseCap) ? classify_spectrum(d).rho0 : rho0_sparse(d).rho0;
    };

    if (jobs <= 1) {
        for (std::size_t n_idx = 0; n_idx < n_list.size(); ++n_idx)
            for (int trial = 0; trial < trials; ++trial) run_trial(n_idx, trial);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> cursor{0};
        const std::size_t total = exp.results.size();
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < total; i = cursor.fetch_add(1))
                    run_trial(i / static_cast<std::size_t>(trials), static_cast<int>(i % static_cast<std::size_t>(trials)));
            });
        for (auto& t : workers) t.join();
    }

    const double threshold = std::sqrt(static_cast<double>(k)) + epsilon;
    for (std::size_t n_idx = 0; n_idx < n_list.size(); ++n_idx) {
        AlonSummary s;
        s.n = n_list[n_idx];
        double sum = 0.0;
        int within = 0;
        for (int trial = 0; trial < trials; ++trial) {
            const AlonTrial& row = exp.results[n_idx * static_cast<std::size_t>(trials) + static_cast<std::size_t>(trial)];
            if (!row.connected) {
                ++s.discarded;
                continue;
            }
            ++s.connected_count;
            sum += row.rho0;
            s.max_rho0 = std::max(s.max_rho0, row.rho0);
            if (row.rho0 <= threshold) ++within;
        }
        if (s.connected_count > 0) {
            s.mean_rho0 = sum / s.connected_count;
            s.fraction_within = static_cast<double>(within) / s.connected_count;
        }
        exp.summaries.push_back(s);
    }
    return exp;
}

// Gelfand sequence ||A^ell restricted||^{1/ell}; every term upper-bounds rho0.
inline std::vector<double> gelfand_estimate(const Digraph& d, int ellmax) {
    if (ellmax < 1) throw ParseError("Gelfand estimate needs ellmax >= 1");
    std::vector<double> seq;
    seq.reserve(static_cast<std::size_t>(ellmax));
    for (int ell = 1; ell <= ellmax; ++ell)
        seq.push_back(std::pow(restricted_power_norm(d, ell), 1.0 / ell));
    return seq;
}

// Raw diagnostic: tr((A^{*ell} A^{ell})^t), the count of closed
// ell-alternating walks, by exact columnwise evaluation. Small n only.
inline double alternating_word_trace(const Digraph& d, int ell, int t) {
    if (d.order() > 2048) throw TooLargeError("alternating trace capped at n <= 2048");
    if (ell < 1 || t < 1) throw ParseError("alternating trace needs ell,t >= 1");
    const int n = d.order();
    double trace = 0.0;
    Eigen::VectorXd x(n), y(n);
    for (int col = 0; col < n; ++col) {
        x.setZero();
        x[col] = 1.0;
        for (int rep = 0; rep < t; ++rep) {
            for (int i = 0; i < ell; ++i) {
                d.apply(x, y);
                x.swap(y);
            }
            for (int i = 0; i < ell; ++i) {
                d.apply_transpose(x, y);
                x.swap(y);
            }
        }
        trace += x[col];
    }
    return trace;
}

}  // namespace dgs

#endif
