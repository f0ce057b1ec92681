#ifndef DGS_ZETA_HPP
#define DGS_ZETA_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dgs/constructions.hpp"
#include "dgs/digraph.hpp"
#include "dgs/spectral.hpp"

namespace dgs {

// Eigenvalues whose modulus falls below this are treated as the algebraic
// multiplicity of zero (defective-noise floor of the dense solver).
inline constexpr double kZetaZeroTol = 1e-6;

struct ZetaReport {
    int n = 0;
    int k = 0;
    std::vector<double> reciprocal_poly;  // det(I - uA), ascending coefficients
    bool integer_snapped = false;         // true when all coefficients were within 1e-6 of integers
    std::vector<Complex> poles;           // u-plane: 1/lambda for lambda != 0
    std::vector<Complex> s_points;        // s = log(lambda)/log(k), principal branch
    bool rh_digraph = false;
    std::optional<bool> rh_ihara;
    double relation_distance = 0.0;  // zeta_ihara: pole multiset vs the line-digraph relation
};

namespace detail {

// det(I - uA) assembled from the eigenvalue multiset as prod (1 - u*lambda);
// zero eigenvalues contribute the factor 1.
inline ZetaReport zeta_from_eigenvalues(const std::vector<Complex>& values, int n, int k, double tolerance) {
    ZetaReport report;
    report.n = n;
    report.k = k;

    std::vector<Complex> poly = {Complex(1, 0)};
    for (const Complex& lambda : values) {
        if (std::abs(lambda) <= kZetaZeroTol) continue;
        poly.push_back(Complex(0, 0));
        for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] -= lambda * poly[i - 1];
        report.poles.push_back(1.0 / lambda);
        report.s_points.push_back(std::log(lambda) / std::log(static_cast<double>(k)));
    }

    report.reciprocal_poly.reserve(poly.size());
    bool snappable = true;
    for (const Complex& c : poly) {
        if (std::abs(c.real() - std::round(c.real())) > 1e-6 || std::abs(c.imag()) > 1e-6) snappable = false;
        report.reciprocal_poly.push_back(c.real());
    }
    report.integer_snapped = snappable;
    if (snappable)
        for (double& c : report.reciprocal_poly) c = std::round(c);

    // operational digraph RH: |lambda| = k (trivial) or |lambda| <= sqrt(k)
    report.rh_digraph = true;
    for (const Complex& lambda : values) {
        if (std::abs(lambda) <= kZetaZeroTol) continue;
        const double mod = std::abs(lambda);
        const bool trivial_circle = std::abs(mod - k) <= tolerance * k;
        const bool small = mod <= std::sqrt(static_cast<double>(k)) * (1.0 + tolerance) + tolerance;
        if (!trivial_circle && !small) {
            report.rh_digraph = false;
            break;
        }
    }
    return report;
}

}  // namespace detail

// Z_D(u) = det(I - u A_D)^{-1}; poles, their s-plane images under u = k^{-s},
// and the Ramanujan reading of the Riemann hypothesis.
inline ZetaReport zeta_digraph(const Digraph& d, double tolerance = kDefaultTolerance) {
    return detail::zeta_from_eigenvalues(eigenvalues_dense(d), d.order(), d.degree(), tolerance);
}

// Ihara zeta of a (k+1)-regular graph through its non-backtracking operator:
// zeta_G(u) = det(I - u A_{D_L(G)})^{-1}. rh_ihara demands Re s = 1/2 on the
// critical strip 0 < Re s < 1; the pole multiset is cross-checked against
// the closed-form spectrum relation applied to Spec(G).
inline ZetaReport zeta_ihara(const UGraph& g, double tolerance = kDefaultTolerance) {
    const int k = g.degree() - 1;
    if (k < 2) throw NonRegularError("Ihara zeta s-plane analysis needs degree >= 3");
    const LineDigraph ld = line_digraph(g);
    ZetaReport report = detail::zeta_from_eigenvalues(eigenvalues_dense(ld.digraph), ld.digraph.order(), k, tolerance);

    bool rh = true;
    for (const Complex& s : report.s_points) {
        if (s.real() <= kZetaZeroTol || s.real() >= 1.0 - kZetaZeroTol) continue;  // outside the open strip
        if (std::abs(s.real() - 0.5) > kZetaZeroTol) {
            rh = false;
            break;
        }
    }
    report.rh_ihara = rh;

    // cross-check the poles against {1/mu : mu from the spectrum relation};
    // both roots are nonzero since their product is k
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.dense(), Eigen::EigenvaluesOnly);
    std::vector<Complex> relation;
    for (int i = 0; i < g.order(); ++i) {
        const double lambda = es.eigenvalues()[i];
        const Complex root = std::sqrt(Complex(lambda * lambda - 4.0 * k, 0));
        relation.push_back(2.0 / (lambda + root));
        relation.push_back(2.0 / (lambda - root));
    }
    const int tail = g.order() * (g.degree() - 2) / 2;  // |E| - |V|
    for (int rep = 0; rep < tail; ++rep) {
        relation.emplace_back(1, 0);
        relation.emplace_back(-1, 0);
    }
    // greedy nearest matching distance
    std::vector<Complex> pool = report.poles;
    double worst = relation.size() == pool.size() ? 0.0 : std::numeric_limits<double>::infinity();
    if (relation.size() == pool.size()) {
        for (const Complex& z : relation) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_idx = 0;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (std::abs(z - pool[i]) < best) {
                    best = std::abs(z - pool[i]);
                    best_idx = i;
                }
            worst = std::max(worst, best);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_idx));
        }
    }
    report.relation_distance = worst;
    return report;
}

struct RhEquivalenceRow {
    std::string name;
    bool zeta_verdict = false;
    bool spectral_verdict = false;
    bool agree = false;
};

struct RhEquivalenceReport {
    std::vector<RhEquivalenceRow> rows;
    bool all_agree = true;
};

// zeta-side RH verdict against the direct Ramanujan verdict, for digraphs
// and for (k+1)-regular graphs.
inline RhEquivalenceReport rh_equivalence_suite(const std::vector<std::pair<std::string, Digraph>>& digraphs,
                                                const std::vector<std::pair<std::string, UGraph>>& graphs,
                                                double tolerance = kDefaultTolerance) {
    RhEquivalenceReport report;
    for (const auto& [name, d] : digraphs) {
        RhEquivalenceRow row;
        row.name = name;
        row.zeta_verdict = zeta_digraph(d, tolerance).rh_digraph;
        row.spectral_verdict = classify_spectrum(d, tolerance).ramanujan;
        row.agree = (row.zeta_verdict == row.spectral_verdict);
        report.all_agree = report.all_agree && row.agree;
        report.rows.push_back(std::move(row));
    }
    for (const auto& [name, g] : graphs) {
        RhEquivalenceRow row;
        row.name = name;
        row.zeta_verdict = zeta_ihara(g, tolerance).rh_ihara.value();
        row.spectral_verdict = ramanujan_graph_test(g, tolerance).ramanujan;
        row.agree = (row.zeta_verdict == row.spectral_verdict);
        report.all_agree = report.all_agree && row.agree;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace dgs

#endif
