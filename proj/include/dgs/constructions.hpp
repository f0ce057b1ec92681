#ifndef DGS_CONSTRUCTIONS_HPP
#define DGS_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/fields.hpp"
#include "dgs/rng.hpp"

namespace dgs {

// Complete k-regular m-periodic digraph: vertices (x,y) with x in Z/m,
// y in [k]; every (x,y) points to every (x+1,z). Vertex index is x*k+y.
inline Digraph complete_digraph(int k, int m) {
    if (k < 1 || m < 1) throw ParseError("complete digraph needs k,m >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * k * k);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) edges.push_back({x * k + y, ((x + 1) % m) * k + z, 1});
    return Digraph(k * m, std::move(edges));
}

// Paley digraph on F_p for p = 3 mod 4: a -> b iff b-a is a nonzero square.
// Loop-free since b-a=0 has Legendre symbol 0.
inline Digraph paley_digraph(std::int64_t p) {
    if (!is_prime(p) || p % 4 != 3) throw BadPrimeError("Paley digraph needs a prime p = 3 (mod 4)");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>((p - 1) / 2));
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            if (legendre(b - a, p) == 1) edges.push_back({static_cast<int>(a), static_cast<int>(b), 1});
    return Digraph(static_cast<int>(p), std::move(edges));
}

namespace detail {

// Points of the projective space P(F_p^dim): one vector per line, scaled so
// its first nonzero coordinate is 1. Lexicographic order.
inline std::vector<std::vector<std::int64_t>> projective_points(std::int64_t p, int dim) {
    std::vector<std::vector<std::int64_t>> points;
    std::vector<std::int64_t> v(static_cast<std::size_t>(dim), 0);
    for (;;) {
        int lead = -1;
        for (int i = 0; i < dim; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) {
                lead = i;
                break;
            }
        if (lead >= 0 && v[static_cast<std::size_t>(lead)] == 1) points.push_back(v);
        int i = dim - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == p - 1) v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return points;
}

}  // namespace detail

// Incidence graph of lines against d-spaces (hyperplanes) in F_p^{d+1},
// with every edge doubled into both directions: a self-adjoint digraph.
// A d-space is the kernel of a functional, so both sides are indexed by
// projective points; incidence is <a,v> = 0.
inline Digraph projective_incidence(std::int64_t p, int d) {
    if (!is_prime(p)) throw BadPrimeError("projective incidence needs prime p");
    if (d < 2) throw ParseError("projective incidence needs d >= 2");
    const auto points = detail::projective_points(p, d + 1);
    const int half = static_cast<int>(points.size());
    std::vector<Edge> edges;
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
            std::int64_t dot = 0;
            for (int t = 0; t <= d; ++t)
                dot = (dot + points[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                                 points[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]) %
                      p;
            if (dot == 0) {
                edges.push_back({i, half + j, 1});
                edges.push_back({half + j, i, 1});
            }
        }
    return Digraph(2 * half, std::move(edges));
}

// De Bruijn digraph on words [k]^s: word w steps to (w shifted left, t).
inline Digraph de_bruijn(int k, int s) {
    if (k < 2 || s < 1) throw ParseError("De Bruijn digraph needs k >= 2, s >= 1");
    std::int64_t n = 1;
    for (int i = 0; i < s; ++i) {
        n *= k;
        if (n > 200'000) throw TooLargeError("De Bruijn instance too large");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * k);
    const std::int64_t shift = n / k;
    for (std::int64_t w = 0; w < n; ++w)
        for (int t = 0; t < k; ++t) edges.push_back({static_cast<int>(w), static_cast<int>((w % shift) * k + t), 1});
    return Digraph(static_cast<int>(n), std::move(edges));
}

struct LineDigraph {
    Digraph digraph;
    std::vector<std::pair<int, int>> arc_labels;  // vertex index -> (v,w) in G
};

// Line digraph of a (k+1)-regular simple graph: vertices are the directed
// edges of G, arcs are the non-backtracking length-2 paths. k-regular on
// 2|E| vertices.
inline LineDigraph line_digraph(const UGraph& g) {
    if (g.degree() < 2) throw NonRegularError("line digraph needs degree >= 2");
    if (!g.simple()) throw NotSimpleError("line digraph needs a simple graph (no loops or multi-edges)");

    std::vector<std::pair<int, int>> arcs;
    for (const Edge& e : g.entries()) arcs.emplace_back(e.from, e.to);
    std::sort(arcs.begin(), arcs.end());
    std::map<std::pair<int, int>, int> arc_index;
    for (std::size_t i = 0; i < arcs.size(); ++i) arc_index[arcs[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.entries()) nbrs[static_cast<std::size_t>(e.from)].push_back(e.to);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto [v, w] = arcs[i];
        for (int u : nbrs[static_cast<std::size_t>(w)]) {
            if (u == v) continue;
            edges.push_back({static_cast<int>(i), arc_index.at({w, u}), 1});
        }
    }
    return LineDigraph{Digraph(static_cast<int>(arcs.size()), std::move(edges)), std::move(arcs)};
}

// Permutation model: adjacency is the sum of k independent uniform n x n
// permutation matrices drawn from the seeded SplitMix64 stream.
inline Digraph random_regular_digraph(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) throw ParseError("random digraph needs n,k >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < k; ++i) {
        const auto perm = random_permutation(n, rng);
        for (int u = 0; u < n; ++u) edges.push_back({u, perm[static_cast<std::size_t>(u)], 1});
    }
    return Digraph(n, std::move(edges));
}

// Named test-corpus graphs: complete(r), cycle(n), petersen.
inline UGraph builtin_graph(const std::string& name) {
    auto parse_arg = [&](const std::string& prefix) -> int {
        if (!name.starts_with(prefix + "(") || name.back() != ')') return -1;
        const std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        try {
            return static_cast<int>(detail::parse_int_strict(inner));
        } catch (const ParseError&) {
            return -1;
        }
    };

    if (name == "petersen") {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i) {
            pairs.emplace_back(i, (i + 1) % 5);           // outer 5-cycle
            pairs.emplace_back(i, i + 5);                 // spokes
            pairs.emplace_back(5 + i, 5 + (i + 2) % 5);   // inner pentagram
        }
        return UGraph::from_pairs(10, pairs);
    }
    if (int r = parse_arg("complete"); r >= 2) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
        return UGraph::from_pairs(r, pairs);
    }
    if (int n = parse_arg("cycle"); n >= 3) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
        return UGraph::from_pairs(n, pairs);
    }
    throw UnknownNameError("unknown builtin graph '" + name + "'");
}

}  // namespace dgs

#endif
