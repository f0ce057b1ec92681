#ifndef DGS_WALKS_HPP
#define DGS_WALKS_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "dgs/digraph.hpp"
#include "dgs/rng.hpp"
#include "dgs/spectral.hpp"

namespace dgs {

inline constexpr int kWalkCap = 100'000;

// p_ell of the uniform random walk started at v0, by ell sparse matvecs.
inline Eigen::VectorXd walk_distribution(const Digraph& d, int v0, int ell) {
    if (v0 < 0 || v0 >= d.order()) throw ParseError("start vertex out of range");
    if (d.order() > kWalkCap) throw TooLargeError("walk operations capped at n <= 100000");
    Eigen::VectorXd p = Eigen::VectorXd::Zero(d.order());
    p[v0] = 1.0;
    Eigen::VectorXd next(d.order());
    for (int step = 0; step < ell; ++step) {
        d.apply_transpose(p, next);
        p = next / static_cast<double>(d.degree());
    }
    return p;
}

struct WalkStep {
    int ell = 0;
    double tv_distance = 0.0;
    double l2_distance = 0.0;
    std::int64_t support_size = 0;
};

struct WalkProfile {
    int start = 0;
    int n = 0;
    int k = 0;
    std::vector<WalkStep> steps;

    // first step with tv < 1/e, if reached
    std::optional<int> cutoff_step() const {
        for (const WalkStep& s : steps)
            if (s.tv_distance < 1.0 / std::numbers::e) return s.ell;
        return std::nullopt;
    }
};

// Total-variation / L2 profile against the uniform distribution, which is
// stationary for aperiodic regular digraphs. Periodic inputs are rejected
// rather than silently averaged.
inline WalkProfile cutoff_profile(const Digraph& d, int v0, int ellmax) {
    if (period(d).m != 1) throw PeriodicError("cutoff profile needs an aperiodic digraph");
    if (d.order() > kWalkCap) throw TooLargeError("walk operations capped at n <= 100000");
    const int n = d.order();
    WalkProfile profile;
    profile.start = v0;
    profile.n = n;
    profile.k = d.degree();

    Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
    p[v0] = 1.0;
    Eigen::VectorXd next(n);
    const double uniform = 1.0 / n;
    for (int ell = 0; ell <= ellmax; ++ell) {
        WalkStep step;
        step.ell = ell;
        step.tv_distance = 0.5 * (p.array() - uniform).abs().sum();
        step.l2_distance = std::sqrt((p.array() - uniform).square().sum());
        step.support_size = (p.array() > 0.0).count();
        profile.steps.push_back(step);
        if (ell < ellmax) {
            d.apply_transpose(p, next);
            p = next / static_cast<double>(d.degree());
        }
    }
    return profile;
}

// |S_ell(v0)| where S_ell is the set of endpoints of length-ell walks from
// v0 (the support of p_ell). The list stops once the set repeats, detected
// by a 64-bit set hash.
inline std::vector<std::int64_t> sphere_sizes(const Digraph& d, int v0) {
    if (!strongly_connected(d)) throw NotStronglyConnectedError("sphere sizes need a strongly connected digraph");
    const int n = d.order();
    std::vector<char> frontier(static_cast<std::size_t>(n), 0);
    frontier[static_cast<std::size_t>(v0)] = 1;

    auto fnv_hash = [](const std::vector<char>& bits) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char b : bits) h = (h ^ static_cast<std::uint64_t>(b)) * 0x100000001b3ULL;
        return h;
    };

    std::vector<std::int64_t> sizes{1};
    std::set<std::uint64_t> seen{fnv_hash(frontier)};
    for (int ell = 1; ell <= 4 * n + 4; ++ell) {
        std::vector<char> next(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u) {
            if (!frontier[static_cast<std::size_t>(u)]) continue;
            for (const auto& [v, m] : d.out(u)) next[static_cast<std::size_t>(v)] = 1;
        }
        frontier = std::move(next);
        if (!seen.insert(fnv_hash(frontier)).second) break;
        sizes.push_back(std::count(frontier.begin(), frontier.end(), 1));
    }
    return sizes;
}

inline int diameter(const Digraph& d) {
    if (d.order() > 20'000) throw TooLargeError("all-pairs BFS capped at n <= 20000");
    if (!strongly_connected(d)) throw NotStronglyConnectedError("diameter needs a strongly connected digraph");
    const int n = d.order();
    int diam = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, src);
        dist[static_cast<std::size_t>(src)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (const auto& [v, m] : d.out(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
    }
    return diam;
}

struct ChernoffResult {
    double tail_frequency = 0.0;
    double std_error = 0.0;      // binomial
    std::optional<double> exponent;  // -ln(freq)/ell when freq > 0
    int trials = 0;
};

// Empirical tail of (1/ell) sum f(v_i) over seeded random walks from uniform
// starts. Per-trial seed is seed + trial index, so any trial replays alone
// and the aggregate is independent of the thread count.
inline ChernoffResult chernoff_experiment(const Digraph& d, const std::vector<double>& f, int ell, int trials,
                                          double gamma, std::uint64_t seed, int jobs = 1) {
    const int n = d.order();
    if (static_cast<int>(f.size()) != n) throw ParseError("function length must equal the vertex count");
    double fsum = 0.0;
    for (double x : f) {
        if (std::abs(x) > 1.0 + 1e-12) throw ParseError("function values must lie in [-1,1]");
        fsum += x;
    }
    if (std::abs(fsum) > 1e-9 * n) throw ParseError("function must sum to zero");

    // out-edges expanded by multiplicity for O(1) uniform steps
    std::vector<std::vector<int>> steps(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (const auto& [v, m] : d.out(u))
            for (std::int64_t rep = 0; rep < m; ++rep) steps[static_cast<std::size_t>(u)].push_back(v);

    auto run_trial = [&](int trial) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(trial));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        double acc = 0.0;
        for (int i = 0; i < ell; ++i) {
            v = steps[static_cast<std::size_t>(v)][rng.next_below(static_cast<std::uint64_t>(d.degree()))];
            acc += f[static_cast<std::size_t>(v)];
        }
        return acc / ell > gamma;
    };

    std::atomic<int> tail_count{0};
    if (jobs <= 1) {
        int local = 0;
        for (int trial = 0; trial < trials; ++trial) local += run_trial(trial) ? 1 : 0;
        tail_count = local;
    } else {
        std::vector<std::thread> workers;
        std::atomic<int> cursor{0};
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (int t = cursor.fetch_add(1); t < trials; t = cursor.fetch_add(1))
                    if (run_trial(t)) tail_count.fetch_add(1);
            });
        for (auto& t : workers) t.join();
    }

    ChernoffResult result;
    result.trials = trials;
    result.tail_frequency = static_cast<double>(tail_count.load()) / trials;
    result.std_error = std::sqrt(result.tail_frequency * (1.0 - result.tail_frequency) / trials);
    if (tail_count.load() > 0) result.exponent = -std::log(result.tail_frequency) / ell;
    return result;
}

}  // namespace dgs

#endif
