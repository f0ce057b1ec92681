#ifndef DGS_SPECTRAL_HPP
#define DGS_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dgs/constructions.hpp"
#include "dgs/digraph.hpp"
#include "dgs/rng.hpp"

namespace dgs {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kTrivialMatchTol = 1e-6;

// --- trivial spectrum --------------------------------------------------------

// The m trivial eigenpairs forced by regularity and m-periodicity:
// eigenvalue k*e^{2*pi*i*t/m} with eigenfunction v -> e^{2*pi*i*t*class(v)/m}.
// Constructed in closed form from PeriodData, never from a numeric solver.
struct TrivialSpectrum {
    int m = 1;
    std::vector<Complex> values;
    Eigen::MatrixXcd vectors;  // n x m, orthonormal
    PeriodData period_data;
};

inline TrivialSpectrum trivial_spectrum(const Digraph& d) {
    const PeriodData pd = period(d);
    const int n = d.order();
    TrivialSpectrum ts;
    ts.m = pd.m;
    ts.period_data = pd;
    ts.vectors.resize(n, pd.m);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int t = 0; t < pd.m; ++t) {
        ts.values.push_back(static_cast<double>(d.degree()) *
                            std::polar(1.0, 2.0 * std::numbers::pi * t / pd.m));
        for (int v = 0; v < n; ++v)
            ts.vectors(v, t) =
                norm * std::polar(1.0, 2.0 * std::numbers::pi * t * pd.classes[static_cast<std::size_t>(v)] / pd.m);
    }
    return ts;
}

// Real orthogonal projector onto the complement of the trivial eigenfunctions.
// The span of the m exponentials equals the span of the period-class
// indicators, so the projector is real: P = I - sum_j |1_{V_j}><1_{V_j}|/|V_j|.
class TrivialProjector {
public:
    explicit TrivialProjector(const PeriodData& pd) : classes_(pd.classes), sizes_(static_cast<std::size_t>(pd.m), 0) {
        for (int c : classes_) ++sizes_[static_cast<std::size_t>(c)];
    }

    int codimension() const { return static_cast<int>(sizes_.size()); }

    template <typename Scalar>
    void apply_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) const {
        std::vector<Scalar> class_sum(sizes_.size(), Scalar{});
        for (std::size_t v = 0; v < classes_.size(); ++v) class_sum[static_cast<std::size_t>(classes_[v])] += x[static_cast<Eigen::Index>(v)];
        for (std::size_t j = 0; j < sizes_.size(); ++j) class_sum[j] /= static_cast<double>(sizes_[j]);
        for (std::size_t v = 0; v < classes_.size(); ++v) x[static_cast<Eigen::Index>(v)] -= class_sum[static_cast<std::size_t>(classes_[v])];
    }

    Eigen::MatrixXd dense(int n) const {
        Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (classes_[static_cast<std::size_t>(u)] == classes_[static_cast<std::size_t>(v)])
                    p(u, v) -= 1.0 / static_cast<double>(sizes_[static_cast<std::size_t>(classes_[static_cast<std::size_t>(u)])]);
        return p;
    }

private:
    std::vector<int> classes_;
    std::vector<std::int64_t> sizes_;
};

// --- dense eigenvalues -------------------------------------------------------

// Defective spectra (De Bruijn-type Jordan blocks of size s) lose accuracy
// like eps^{1/s} under QR iteration; extended precision keeps the noise on
// a size-3 block below 1e-6. Only small instances pay for it; the defective
// families in range (De Bruijn words, complete digraphs, small line
// digraphs) all live below this cap.
inline constexpr int kExtendedPrecisionCap = 64;

inline std::vector<Complex> eigenvalues_dense(const Digraph& d) {
    const Eigen::MatrixXd a = d.dense();  // throws TooLarge above the cap
    if (d.order() <= kExtendedPrecisionCap) {
        using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
        Eigen::EigenSolver<MatL> solver(a.cast<long double>(), /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) throw NoConvergenceError("dense QR iteration did not converge");
        std::vector<Complex> values;
        values.reserve(static_cast<std::size_t>(d.order()));
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
            const auto z = solver.eigenvalues()[i];
            values.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        }
        return values;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NoConvergenceError("dense QR iteration did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

inline void sort_by_modulus_phase(std::vector<Complex>& values) {
    std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        return std::arg(a) < std::arg(b);
    });
}

// --- classification ----------------------------------------------------------

struct SpectrumReport {
    int n = 0;
    int k = 0;
    int m = 1;
    std::string method = "dense";
    double tolerance = kDefaultTolerance;
    std::vector<Complex> eigenvalues;   // sorted by (-modulus, phase)
    std::vector<int> trivial_indices;   // positions of the matched trivial values
    std::vector<Complex> trivial;
    std::vector<Complex> nontrivial;
    double rho0 = 0.0;
    bool ramanujan = false;
    double margin = 0.0;  // rho0 - sqrt(k)
};

inline bool ramanujan_verdict(double rho0, int k, double tol) {
    return rho0 <= std::sqrt(static_cast<double>(k)) * (1.0 + tol) + tol;
}

// Splits the dense spectrum into the m Perron-Frobenius trivial values and
// the rest; each predicted trivial value k*e^{2*pi*i*t/m} absorbs exactly
// one nearest computed eigenvalue.
inline SpectrumReport classify_spectrum(const Digraph& d, double tolerance = kDefaultTolerance) {
    const TrivialSpectrum ts = trivial_spectrum(d);
    std::vector<Complex> values = eigenvalues_dense(d);
    sort_by_modulus_phase(values);

    SpectrumReport report;
    report.n = d.order();
    report.k = d.degree();
    report.m = ts.m;
    report.tolerance = tolerance;
    report.eigenvalues = values;
    report.trivial = ts.values;

    std::vector<char> taken(values.size(), 0);
    for (const Complex& predicted : ts.values) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (taken[i]) continue;
            const double dist = std::abs(values[i] - predicted);
            if (dist < best_dist) {
                best_dist = dist;
                best = static_cast<int>(i);
            }
        }
        if (best < 0 || best_dist > kTrivialMatchTol * d.degree())
            throw TrivialMatchError("no eigenvalue within tolerance of trivial value; eigensolver failure");
        taken[static_cast<std::size_t>(best)] = 1;
        report.trivial_indices.push_back(best);
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!taken[i]) report.nontrivial.push_back(values[i]);

    report.rho0 = 0.0;
    for (const Complex& z : report.nontrivial) report.rho0 = std::max(report.rho0, std::abs(z));
    report.ramanujan = ramanujan_verdict(report.rho0, report.k, tolerance);
    report.margin = report.rho0 - std::sqrt(static_cast<double>(report.k));
    return report;
}

// --- Arnoldi on the nontrivial subspace --------------------------------------

struct SparseSpectrum {
    std::vector<Complex> ritz_values;  // top values by modulus, converged
    std::vector<double> residuals;
    double rho0 = 0.0;
    int matvecs = 0;
    int subspace_dim = 0;
};

namespace detail {

// One Arnoldi factorization of the projected operator x -> P A (P x),
// with full re-orthogonalization.
template <typename Real>
struct ArnoldiFactorization {
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> basis;       // n x (steps+1)
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> hessenberg;  // (steps+1) x steps
    int steps = 0;
    bool breakdown = false;
};

template <typename Real>
ArnoldiFactorization<Real> arnoldi_factorize(const Digraph& d, const TrivialProjector& proj,
                                             Eigen::Matrix<Real, Eigen::Dynamic, 1> start, int max_steps,
                                             int* matvec_counter) {
    using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    const int n = d.order();
    ArnoldiFactorization<Real> f;
    f.basis.resize(n, max_steps + 1);
    f.hessenberg.setZero(max_steps + 1, max_steps);

    proj.apply_in_place(start);
    const Real nrm = start.norm();
    if (nrm == Real(0)) throw NoConvergenceError("start vector lies in the trivial subspace");
    f.basis.col(0) = start / nrm;

    Vec w(n);
    for (int j = 0; j < max_steps; ++j) {
        Vec vj = f.basis.col(j);
        d.apply(vj, w);
        ++*matvec_counter;
        proj.apply_in_place(w);
        // modified Gram-Schmidt with one re-orthogonalization pass
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i <= j; ++i) {
                const Real h = f.basis.col(i).dot(w);
                w -= h * f.basis.col(i);
                f.hessenberg(i, j) += h;
            }
        const Real beta = w.norm();
        f.hessenberg(j + 1, j) = beta;
        f.steps = j + 1;
        if (beta < std::numeric_limits<Real>::epsilon() * 100 * d.degree()) {
            f.breakdown = true;  // Krylov space is (numerically) invariant
            return f;
        }
        f.basis.col(j + 1) = w / beta;
    }
    return f;
}

template <typename Real>
SparseSpectrum rho0_sparse_impl(const Digraph& d, const TrivialSpectrum& ts, double tolerance, int requested,
                                std::uint64_t seed) {
    using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    const TrivialProjector proj(ts.period_data);
    const int n = d.order();
    const int space_dim = n - ts.m;
    requested = std::min(requested, space_dim);

    SplitMix64 rng(seed ^ 0x5eedULL);
    Vec start(n);
    for (int i = 0; i < n; ++i) start[i] = Real(rng.next_unit()) - Real(0.5);

    int mdim = std::min(space_dim, std::max(80, 4 * requested + 20));
    const int mdim_cap = std::min(space_dim, std::max(800, 4 * requested));
    const double resid_bound = tolerance * d.degree();

    SparseSpectrum result;
    for (int restart = 0; restart < 24; ++restart) {
        const auto fact = arnoldi_factorize<Real>(d, proj, start, mdim, &result.matvecs);
        const int m = fact.steps;
        result.subspace_dim = m;
        const Mat h = fact.hessenberg.topLeftCorner(m, m);
        const Real beta = fact.hessenberg(m, m - 1);

        Eigen::EigenSolver<Mat> es(h, /*computeEigenvectors=*/true);
        if (es.info() != Eigen::Success) throw NoConvergenceError("Hessenberg eigensolve failed");

        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(es.eigenvalues()[a]) > std::abs(es.eigenvalues()[b]);
        });

        const int take = std::min(requested, m);
        result.ritz_values.clear();
        result.residuals.clear();
        bool converged = true;
        for (int i = 0; i < take; ++i) {
            const int idx = order[static_cast<std::size_t>(i)];
            const std::complex<Real> theta = es.eigenvalues()[idx];
            const auto y = es.eigenvectors().col(idx).normalized();
            const double resid = fact.breakdown ? 0.0 : static_cast<double>(std::abs(beta * y[m - 1]));
            result.ritz_values.emplace_back(static_cast<double>(theta.real()), static_cast<double>(theta.imag()));
            result.residuals.push_back(resid);
            if (resid > resid_bound) converged = false;
        }
        if (converged || fact.breakdown) {
            result.rho0 = 0.0;
            for (const Complex& z : result.ritz_values) result.rho0 = std::max(result.rho0, std::abs(z));
            return result;
        }

        // explicit restart: combine the wanted Ritz directions, grow the space
        Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> combo(n);
        combo.setZero();
        for (int i = 0; i < take; ++i) {
            const int idx = order[static_cast<std::size_t>(i)];
            combo += fact.basis.leftCols(m) * es.eigenvectors().col(idx);
        }
        start = combo.real();
        if (start.norm() < Real(1e-12)) start = combo.imag();
        if (mdim < mdim_cap) mdim = std::min(mdim_cap, 2 * mdim);
    }
    throw NoConvergenceError("Arnoldi iteration exhausted restarts");
}

}  // namespace detail

// Largest-modulus eigenvalues of the adjacency operator restricted to the
// nontrivial subspace, by restarted Arnoldi iteration. Residual certificate
// |h_{m+1,m} e_m^T y| <= tolerance * k for each reported pair. Small
// instances run in extended precision for the same Jordan-block reason as
// the dense path.
inline SparseSpectrum rho0_sparse(const Digraph& d, double tolerance = 1e-6, int requested = 6,
                                  std::uint64_t seed = 0) {
    const TrivialSpectrum ts = trivial_spectrum(d);
    if (d.order() - ts.m <= 0) return SparseSpectrum{{}, {}, 0.0, 0, 0};
    if (d.order() <= kExtendedPrecisionCap)
        return detail::rho0_sparse_impl<long double>(d, ts, tolerance, requested, seed);
    return detail::rho0_sparse_impl<double>(d, ts, tolerance, requested, seed);
}

// --- restricted power norms ----------------------------------------------

inline constexpr int kDenseSvdCap = 1024;

// Operator norm of A^ell on the nontrivial subspace: the largest singular
// value of P A^ell P. Dense SVD for small n, power iteration on the normal
// equations otherwise.
inline double restricted_power_norm(const Digraph& d, int ell, std::uint64_t seed = 0) {
    if (ell < 1) throw ParseError("power norm needs ell >= 1");
    const TrivialSpectrum ts = trivial_spectrum(d);
    const TrivialProjector proj(ts.period_data);
    const int n = d.order();

    if (n <= kDenseSvdCap) {
        const Eigen::MatrixXd p = proj.dense(n);
        const Eigen::MatrixXd a = d.dense();
        Eigen::MatrixXd apow = p;
        for (int i = 0; i < ell; ++i) apow = a * apow;
        const Eigen::MatrixXd b = p * apow;
        Eigen::BDCSVD<Eigen::MatrixXd> svd(b);
        return svd.singularValues()[0];
    }

    // power iteration on B^T B with B = P A^ell P
    SplitMix64 rng(seed ^ 0x90eaULL);
    Eigen::VectorXd z(n), w(n), tmp(n);
    for (int i = 0; i < n; ++i) z[i] = rng.next_unit() - 0.5;
    proj.apply_in_place(z);
    z.normalize();

    auto apply_b = [&](const Eigen::VectorXd& x, Eigen::VectorXd& out) {
        out = x;
        proj.apply_in_place(out);
        for (int i = 0; i < ell; ++i) {
            d.apply(out, tmp);
            out.swap(tmp);
        }
        proj.apply_in_place(out);
    };
    auto apply_bt = [&](const Eigen::VectorXd& x, Eigen::VectorXd& out) {
        out = x;
        proj.apply_in_place(out);
        for (int i = 0; i < ell; ++i) {
            d.apply_transpose(out, tmp);
            out.swap(tmp);
        }
        proj.apply_in_place(out);
    };

    double sigma = 0.0;
    for (int iter = 0; iter < 2000; ++iter) {
        apply_b(z, w);
        if (w.norm() == 0.0) return 0.0;  // A^ell kills the whole subspace
        apply_bt(w, z);
        const double zn = z.norm();  // ||B^T B z|| -> sigma^2 for unit z
        if (zn == 0.0) return 0.0;
        z /= zn;
        const double est = std::sqrt(zn);
        if (iter > 4 && std::abs(est - sigma) <= 1e-8 * std::max(est, 1e-300)) return est;
        sigma = est;
    }
    throw NoConvergenceError("power iteration for restricted norm did not converge");
}

inline std::vector<double> singular_values_dense(const Digraph& d) {
    const Eigen::MatrixXd a = d.dense();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

// --- line-digraph block decomposition ---------------------------------------

struct SpectralBlock {
    Eigen::MatrixXd basis;   // n x dim, orthonormal
    Eigen::MatrixXd action;  // dim x dim; A * basis = basis * action
    double source_eigenvalue = 0.0;  // the eigenvalue of G the block came from
};

struct BlockDecomposition {
    std::vector<SpectralBlock> blocks;
    double residual = 0.0;  // max over blocks of ||A*basis - basis*action||
    int complement_dim = 0;
    std::vector<Complex> complement_eigenvalues;
    int plus_one_count = 0;   // measured multiplicity split of the +-1 tail
    int minus_one_count = 0;
};

// Constructive 2-normality certificate for line digraphs: every eigenpair
// (lambda, f) of G spans an invariant subspace of D_L(G) via
// g1(v,w) = f(w), g2(v,w) = f(v); the 2x2 action has characteristic
// polynomial mu^2 - lambda*mu + k. The orthogonal complement is invariant
// too and carries only eigenvalues +-1, whose split is measured, not assumed.
inline BlockDecomposition line_digraph_blocks(const UGraph& g) {
    const LineDigraph ld = line_digraph(g);
    const Digraph& dl = ld.digraph;
    const int nl = dl.order();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.dense());
    if (es.info() != Eigen::Success) throw NoConvergenceError("symmetric eigensolve failed");

    const Eigen::MatrixXd a = dl.dense();
    BlockDecomposition decomp;
    Eigen::MatrixXd all_basis(nl, 0);

    for (int i = 0; i < g.order(); ++i) {
        const double lambda = es.eigenvalues()[i];
        const Eigen::VectorXd f = es.eigenvectors().col(i);
        Eigen::VectorXd g1(nl), g2(nl);
        for (int arc = 0; arc < nl; ++arc) {
            const auto [v, w] = ld.arc_labels[static_cast<std::size_t>(arc)];
            g1[arc] = f[w];
            g2[arc] = f[v];
        }
        // Gram-Schmidt; the pair collapses to one dimension when f is
        // constant (lambda = k+1) or alternating (lambda = -(k+1)).
        Eigen::MatrixXd basis(nl, 2);
        basis.col(0) = g1.normalized();
        Eigen::VectorXd g2p = g2 - basis.col(0).dot(g2) * basis.col(0);
        int dim = 1;
        if (g2p.norm() > 1e-9 * g2.norm()) {
            basis.col(1) = g2p.normalized();
            dim = 2;
        }
        basis.conservativeResize(nl, dim);

        SpectralBlock block;
        block.basis = basis;
        block.action = basis.transpose() * (a * basis);
        block.source_eigenvalue = lambda;
        decomp.residual = std::max(decomp.residual, (a * basis - basis * block.action).norm());
        decomp.blocks.push_back(std::move(block));

        all_basis.conservativeResize(nl, all_basis.cols() + dim);
        all_basis.rightCols(dim) = basis;
    }

    // complement basis via full QR of the block span
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(all_basis);
    const Eigen::MatrixXd q_full = qr.householderQ();
    const int covered = static_cast<int>(all_basis.cols());
    decomp.complement_dim = nl - covered;
    if (decomp.complement_dim > 0) {
        const Eigen::MatrixXd comp = q_full.rightCols(decomp.complement_dim);
        const Eigen::MatrixXd restricted = comp.transpose() * (a * comp);
        Eigen::EigenSolver<Eigen::MatrixXd> ces(restricted, false);
        for (int i = 0; i < decomp.complement_dim; ++i) {
            const Complex z = ces.eigenvalues()[i];
            decomp.complement_eigenvalues.push_back(z);
            if (std::abs(z - Complex(1, 0)) < 1e-6)
                ++decomp.plus_one_count;
            else if (std::abs(z - Complex(-1, 0)) < 1e-6)
                ++decomp.minus_one_count;
        }
    }
    return decomp;
}

// --- undirected Ramanujan test -----------------------------------------------

struct GraphVerdict {
    bool ramanujan = false;
    double margin = 0.0;  // max nontrivial modulus - 2*sqrt(k-1)
    double bound = 0.0;
    std::vector<double> eigenvalues;  // descending
    bool bipartite = false;
};

namespace detail {

inline bool ugraph_connected(const UGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.entries()) adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int v : adj[static_cast<std::size_t>(queue[head])])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
    return queue.size() == static_cast<std::size_t>(n);
}

inline bool ugraph_bipartite(const UGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.entries()) {
        if (e.from == e.to) return false;
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (color[static_cast<std::size_t>(v)] < 0) {
                color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                queue.push_back(v);
            } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

// Ramanujan graph test: nontrivial spectrum within 2*sqrt(k-1). Trivial
// eigenvalues are k, and -k when bipartite.
inline GraphVerdict ramanujan_graph_test(const UGraph& g, double tolerance = kDefaultTolerance) {
    if (!detail::ugraph_connected(g)) throw DisconnectedError("Ramanujan test needs a connected graph");
    const int k = g.degree();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.dense(), Eigen::EigenvaluesOnly);
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + g.order());
    std::sort(vals.begin(), vals.end(), std::greater<>());

    GraphVerdict verdict;
    verdict.bipartite = detail::ugraph_bipartite(g);
    verdict.eigenvalues = vals;
    verdict.bound = 2.0 * std::sqrt(static_cast<double>(k - 1));

    std::vector<double> nontrivial(vals.begin() + 1, vals.end());  // drop one k
    if (verdict.bipartite) nontrivial.pop_back();                   // drop one -k
    double top = 0.0;
    for (double v : nontrivial) top = std::max(top, std::abs(v));
    verdict.margin = top - verdict.bound;
    verdict.ramanujan = top <= verdict.bound * (1.0 + tolerance) + tolerance;
    return verdict;
}

struct LineEquivalence {
    bool graph_ramanujan = false;
    bool digraph_ramanujan = false;
    bool agree = false;
};

// Ramanujan(G) <=> Ramanujan(D_L(G)); both sides computed independently.
inline LineEquivalence equivalence_check_line(const UGraph& g, double tolerance = kDefaultTolerance) {
    LineEquivalence eq;
    eq.graph_ramanujan = ramanujan_graph_test(g, tolerance).ramanujan;
    eq.digraph_ramanujan = classify_spectrum(line_digraph(g).digraph, tolerance).ramanujan;
    eq.agree = (eq.graph_ramanujan == eq.digraph_ramanujan);
    return eq;
}

// --- spectral regions ---------------------------------------------------

// Target regions in the complex plane: a disk, a set of circles, and a set
// of isolated points, in any combination.
struct SpectralRegion {
    double disk_radius = -1.0;
    std::vector<double> circle_radii;
    std::vector<Complex> points;

    static SpectralRegion disk(double r) { return SpectralRegion{r, {}, {}}; }
    // spectrum of the line digraph of the (k+1)-regular tree: {+-1} and |z|=sqrt(k)
    static SpectralRegion line_tree(int k) {
        return SpectralRegion{-1.0, {std::sqrt(static_cast<double>(k))}, {Complex(1, 0), Complex(-1, 0)}};
    }
    // two-circle region |z|=k^{1/4} or |z|=sqrt(k)
    static SpectralRegion two_circles(int k) {
        return SpectralRegion{
            -1.0, {std::pow(static_cast<double>(k), 0.25), std::sqrt(static_cast<double>(k))}, {}};
    }

    bool contains(const Complex& z, double tol) const {
        if (disk_radius >= 0.0 && std::abs(z) <= disk_radius + tol) return true;
        for (double r : circle_radii)
            if (std::abs(std::abs(z) - r) <= tol) return true;
        for (const Complex& p : points)
            if (std::abs(z - p) <= tol) return true;
        return false;
    }
};

inline bool spectrum_in_region(const SpectrumReport& report, const SpectralRegion& region, double tol = 1e-6) {
    for (const Complex& z : report.nontrivial)
        if (!region.contains(z, tol)) return false;
    return true;
}

}  // namespace dgs

#endif
