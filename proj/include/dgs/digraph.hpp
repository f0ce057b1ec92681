#ifndef DGS_DIGRAPH_HPP
#define DGS_DIGRAPH_HPP

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "dgs/error.hpp"

namespace dgs {

inline constexpr int kDenseCap = 4096;

struct Edge {
    int from = 0;
    int to = 0;
    std::int64_t mult = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

// Groups duplicate (u,v) pairs, sums multiplicities, keeps lexicographic order.
inline std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges) {
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw ParseError("edge endpoint out of range");
        if (e.mult < 1) throw ParseError("edge multiplicity must be positive");
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!out.empty() && out.back().from == e.from && out.back().to == e.to)
            out.back().mult += e.mult;
        else
            out.push_back(e);
    }
    return out;
}

}  // namespace detail

// Finite k-regular multidigraph. Immutable after construction; loops and
// multiple edges are allowed and multiplicity enters all degree and
// spectral computations.
class Digraph {
public:
    Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(detail::normalize_edges(n, std::move(edges))) {
        if (n < 1) throw ParseError("vertex count must be positive");
        build_adjacency();
        validate_regularity();
    }

    int order() const { return n_; }
    int degree() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Out-neighbors of u as (vertex, multiplicity), sorted by vertex.
    const std::vector<std::pair<int, std::int64_t>>& out(int u) const { return out_[static_cast<std::size_t>(u)]; }
    const std::vector<std::pair<int, std::int64_t>>& in(int v) const { return in_[static_cast<std::size_t>(v)]; }

    std::int64_t multiplicity(int u, int v) const {
        const auto& row = out_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(row.begin(), row.end(), v,
                                   [](const auto& p, int x) { return p.first < x; });
        return (it != row.end() && it->first == v) ? it->second : 0;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (const Edge& e : edges_)
            if (e.from == e.to) t += e.mult;
        return t;
    }

    // y = A x,  y[v] = sum_u A(u,v) x(u) is apply_transpose.
    template <typename Scalar>
    void apply(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
               Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) const {
        y.setZero(n_);
        for (int u = 0; u < n_; ++u) {
            Scalar acc{};
            for (const auto& [v, m] : out_[static_cast<std::size_t>(u)])
                acc += static_cast<double>(m) * x[v];
            y[u] = acc;
        }
    }

    template <typename Scalar>
    void apply_transpose(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
                         Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) const {
        y.setZero(n_);
        for (int v = 0; v < n_; ++v) {
            Scalar acc{};
            for (const auto& [u, m] : in_[static_cast<std::size_t>(v)])
                acc += static_cast<double>(m) * x[u];
            y[v] = acc;
        }
    }

    Eigen::MatrixXd dense() const {
        if (n_ > kDenseCap) throw TooLargeError("dense adjacency capped at n <= " + std::to_string(kDenseCap));
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (const Edge& e : edges_) a(e.from, e.to) = static_cast<double>(e.mult);
        return a;
    }

private:
    void build_adjacency() {
        out_.assign(static_cast<std::size_t>(n_), {});
        in_.assign(static_cast<std::size_t>(n_), {});
        for (const Edge& e : edges_) {
            out_[static_cast<std::size_t>(e.from)].emplace_back(e.to, e.mult);
            in_[static_cast<std::size_t>(e.to)].emplace_back(e.from, e.mult);
        }
        for (auto& row : in_) std::sort(row.begin(), row.end());
    }

    void validate_regularity() {
        std::vector<std::int64_t> outdeg(static_cast<std::size_t>(n_), 0), indeg(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : edges_) {
            outdeg[static_cast<std::size_t>(e.from)] += e.mult;
            indeg[static_cast<std::size_t>(e.to)] += e.mult;
        }
        const std::int64_t k = outdeg[0];
        for (int v = 0; v < n_; ++v) {
            if (outdeg[static_cast<std::size_t>(v)] != k || indeg[static_cast<std::size_t>(v)] != k)
                throw NonRegularError("vertex " + std::to_string(v) + " breaks regularity");
        }
        if (k < 1) throw NonRegularError("degree must be positive");
        if (k > std::numeric_limits<int>::max()) throw OverflowError("degree exceeds int range");
        k_ = static_cast<int>(k);
    }

    int n_;
    std::vector<Edge> edges_;
    int k_ = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> out_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> in_;
};

// Undirected k-regular multigraph, stored as its symmetric adjacency.
class UGraph {
public:
    UGraph(int n, std::vector<Edge> entries) : n_(n), entries_(detail::normalize_edges(n, std::move(entries))) {
        if (n < 1) throw ParseError("vertex count must be positive");
        validate();
    }

    // Build from undirected edge pairs {u,v}; a pair is stored in both directions.
    static UGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Edge> entries;
        entries.reserve(2 * pairs.size());
        for (auto [u, v] : pairs) {
            entries.push_back({u, v, 1});
            if (u != v) entries.push_back({v, u, 1});
        }
        return UGraph(n, std::move(entries));
    }

    int order() const { return n_; }
    int degree() const { return k_; }
    const std::vector<Edge>& entries() const { return entries_; }

    std::int64_t multiplicity(int u, int v) const {
        Edge probe{u, v, 0};
        auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                                   [](const Edge& a, const Edge& b) {
                                       return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                                   });
        return (it != entries_.end() && it->from == u && it->to == v) ? it->mult : 0;
    }

    bool simple() const {
        for (const Edge& e : entries_)
            if (e.from == e.to || e.mult > 1) return false;
        return true;
    }

    // Neighbor list with multiplicity, sorted.
    std::vector<std::pair<int, std::int64_t>> neighbors(int u) const {
        std::vector<std::pair<int, std::int64_t>> row;
        for (const Edge& e : entries_)
            if (e.from == u) row.emplace_back(e.to, e.mult);
        return row;
    }

    Eigen::MatrixXd dense() const {
        if (n_ > kDenseCap) throw TooLargeError("dense adjacency capped at n <= " + std::to_string(kDenseCap));
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (const Edge& e : entries_) a(e.from, e.to) = static_cast<double>(e.mult);
        return a;
    }

    // Every edge doubled into both directions; adjacency matrix is unchanged.
    Digraph as_digraph() const { return Digraph(n_, entries_); }

private:
    void validate() {
        std::vector<std::int64_t> deg(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : entries_) {
            if (multiplicity(e.to, e.from) != e.mult)
                throw ParseError("adjacency is not symmetric");
            deg[static_cast<std::size_t>(e.from)] += e.mult;
        }
        const std::int64_t k = deg[0];
        for (int v = 0; v < n_; ++v)
            if (deg[static_cast<std::size_t>(v)] != k)
                throw NonRegularError("vertex " + std::to_string(v) + " breaks regularity");
        if (k < 1) throw NonRegularError("degree must be positive");
        k_ = static_cast<int>(k);
    }

    int n_;
    std::vector<Edge> entries_;
    int k_ = 0;
};

// Period m and the residue classes V_0,...,V_{m-1}; every edge advances
// the class by one mod m.
struct PeriodData {
    int m = 1;
    std::vector<int> classes;
};

inline std::vector<Edge> edges_with_mult_one(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 1});
    return edges;
}

inline Digraph from_edge_list(int n, const std::vector<Edge>& edges) { return Digraph(n, edges); }

inline bool strongly_connected(const Digraph& d) {
    const int n = d.order();
    auto bfs_covers = [&](bool forward) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const auto& row = forward ? d.out(u) : d.in(u);
            for (const auto& [v, m] : row) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
        return queue.size() == static_cast<std::size_t>(n);
    };
    return bfs_covers(true) && bfs_covers(false);
}

// BFS-potential method: m = gcd over all edges u->v of level(u)+1-level(v).
inline PeriodData period(const Digraph& d) {
    if (!strongly_connected(d)) throw NotStronglyConnectedError("period needs a strongly connected digraph");
    const int n = d.order();
    std::vector<int> level(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (const auto& [v, m] : d.out(u)) {
            if (level[static_cast<std::size_t>(v)] < 0) {
                level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    std::int64_t g = 0;
    for (const Edge& e : d.edges()) {
        const std::int64_t defect = level[static_cast<std::size_t>(e.from)] + 1 - level[static_cast<std::size_t>(e.to)];
        g = std::gcd(g, defect);
    }
    PeriodData pd;
    pd.m = static_cast<int>(g);
    pd.classes.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        pd.classes[static_cast<std::size_t>(v)] = ((level[static_cast<std::size_t>(v)] % pd.m) + pd.m) % pd.m;
    return pd;
}

// Adjacency of the symmetrization is A + A^T; the result is 2k-regular.
inline UGraph symmetrize(const Digraph& d) {
    std::vector<Edge> entries;
    entries.reserve(2 * d.edges().size());
    for (const Edge& e : d.edges()) {
        entries.push_back(e);
        entries.push_back({e.to, e.from, e.mult});
    }
    return UGraph(d.order(), std::move(entries));
}

// Digraph with adjacency A^ell; multiplicities count length-ell paths.
inline Digraph power_digraph(const Digraph& d, int ell) {
    if (ell < 1) throw ParseError("power exponent must be >= 1");
    const int n = d.order();
    // Row sums of A^ell are exactly k^ell; if that overflows, some entry may.
    std::int64_t cap = 1;
    for (int i = 0; i < ell; ++i) {
        if (cap > std::numeric_limits<std::int64_t>::max() / d.degree())
            throw OverflowError("path multiplicities exceed 64-bit range");
        cap *= d.degree();
    }
    std::vector<std::map<int, std::int64_t>> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (const auto& [v, m] : d.out(u)) rows[static_cast<std::size_t>(u)][v] = m;
    for (int step = 1; step < ell; ++step) {
        std::vector<std::map<int, std::int64_t>> next(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            for (const auto& [w, m1] : rows[static_cast<std::size_t>(u)])
                for (const auto& [v, m2] : d.out(w)) next[static_cast<std::size_t>(u)][v] += m1 * m2;
        rows = std::move(next);
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (const auto& [v, m] : rows[static_cast<std::size_t>(u)]) edges.push_back({u, v, m});
    return Digraph(n, std::move(edges));
}

// --- edge-list text format -------------------------------------------------
//
//   #dregular-digraph v1
//   n=<int> k=<int> edges=<int>
//   <u> <v> <mult>        (one line per distinct edge, sorted by (u,v))
//
// The parser accepts exactly this shape and nothing else.

inline void write_edge_list(std::ostream& os, const Digraph& d) {
    os << "#dregular-digraph v1\n";
    os << "n=" << d.order() << " k=" << d.degree() << " edges=" << d.edges().size() << "\n";
    for (const Edge& e : d.edges()) os << e.from << " " << e.to << " " << e.mult << "\n";
}

inline std::string to_edge_list(const Digraph& d) {
    std::ostringstream os;
    write_edge_list(os, d);
    return os.str();
}

namespace detail {

inline std::int64_t parse_int_strict(std::string_view s) {
    std::int64_t value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParseError("malformed integer '" + std::string(s) + "'");
    // canonical decimal only: no leading zeros, no signs
    if (std::to_string(value) != std::string(s)) throw ParseError("non-canonical integer '" + std::string(s) + "'");
    return value;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t next = line.find(' ', pos);
        if (next == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

}  // namespace detail

inline Digraph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "#dregular-digraph v1")
        throw ParseError("missing '#dregular-digraph v1' header");
    if (!std::getline(is, line)) throw ParseError("missing size line");
    const auto fields = detail::split_fields(line);
    if (fields.size() != 3 || !fields[0].starts_with("n=") || !fields[1].starts_with("k=") ||
        !fields[2].starts_with("edges="))
        throw ParseError("size line must be 'n=<int> k=<int> edges=<int>'");
    const auto n = detail::parse_int_strict(fields[0].substr(2));
    const auto k = detail::parse_int_strict(fields[1].substr(2));
    const auto edge_count = detail::parse_int_strict(fields[2].substr(6));
    if (n < 1 || n > std::numeric_limits<int>::max()) throw ParseError("bad vertex count");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    for (std::int64_t i = 0; i < edge_count; ++i) {
        if (!std::getline(is, line)) throw ParseError("fewer edge lines than declared");
        const auto f = detail::split_fields(line);
        if (f.size() != 3) throw ParseError("edge line must be '<u> <v> <mult>'");
        Edge e{static_cast<int>(detail::parse_int_strict(f[0])), static_cast<int>(detail::parse_int_strict(f[1])),
               detail::parse_int_strict(f[2])};
        if (!edges.empty() && std::tie(edges.back().from, edges.back().to) >= std::tie(e.from, e.to))
            throw ParseError("edges must be strictly sorted by (u,v)");
        edges.push_back(e);
    }
    if (std::getline(is, line) && !line.empty()) throw ParseError("trailing content after edge list");

    Digraph d(static_cast<int>(n), std::move(edges));
    if (d.degree() != k) throw ParseError("declared k does not match edge data");
    return d;
}

inline Digraph digraph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

}  // namespace dgs

#endif
