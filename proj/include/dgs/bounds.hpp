#ifndef DGS_BOUNDS_HPP
#define DGS_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dgs/error.hpp"

namespace dgs {

struct BoundCheck {
    std::string name;
    std::string inputs;
    double bound_value = 0.0;
    std::optional<double> measured_value;
    bool satisfied = false;
};

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// n <= 1 + k_G * sum_{j=1}^{diam} (k_G - 1)^{j-1}, saturating at int64 max.
inline std::int64_t moore_bound(int k_g, int diam) {
    if (k_g < 3 || diam < 1) throw ParseError("Moore bound needs k_G >= 3, diam >= 1");
    __int128 total = 1, term = k_g;
    const __int128 cap = std::numeric_limits<std::int64_t>::max();
    for (int j = 1; j <= diam; ++j) {
        total += term;
        if (total > cap) return std::numeric_limits<std::int64_t>::max();
        term *= (k_g - 1);
        if (term > cap) term = cap;
    }
    return static_cast<std::int64_t>(total);
}

// lower bound 2 sqrt(k_G - 1) cos(2 pi / diam) on the second eigenvalue;
// the cosine argument degenerates at diam 1, so checkers require diam >= 2.
inline double quant_alon_boppana(int k_g, int diam) {
    if (k_g < 2 || diam < 1) throw ParseError("bound needs k_G >= 2, diam >= 1");
    return 2.0 * std::sqrt(static_cast<double>(k_g - 1)) * std::cos(2.0 * std::numbers::pi / diam);
}

// size cap 2m(2k^m - 1)^{10.4} for k-regular m-periodic normal Ramanujan
// digraphs. The exponent is used verbatim.
inline double normal_size_bound(int k, int m) {
    if (k < 2 || m < 1) throw ParseError("size bound needs k >= 2, m >= 1");
    return 2.0 * m * std::pow(2.0 * std::pow(static_cast<double>(k), m) - 1.0, 10.4);
}

// C(ell+r-1, r-1) k^{r-1} lambda^{ell-r+1}
inline double power_bound_rhs(int k, double lambda, int r, int ell) {
    if (ell < 1 || r < 1 || lambda < 0) throw ParseError("power bound needs ell,r >= 1 and lambda >= 0");
    return binomial(ell + r - 1, r - 1) * std::pow(static_cast<double>(k), r - 1) *
           std::pow(lambda, ell - r + 1);
}

// sum_t C(r-1,t) C(ell,t) k^t lambda^{ell-t}: the first-row sum of the
// ell-th power of the majorant matrix.
inline double majorant_row_sum(int r, double lambda, int k, int ell) {
    if (ell < 1 || r < 1 || lambda < 0) throw ParseError("row sum needs ell,r >= 1 and lambda >= 0");
    double total = 0.0;
    for (int t = 0; t < r; ++t)
        total += binomial(r - 1, t) * binomial(ell, t) * std::pow(static_cast<double>(k), t) *
                 std::pow(lambda, ell - t);
    return total;
}

// The same row sum from the literal matrix: lambda on the diagonal, k on
// every entry above it.
inline double majorant_matrix_row_sum(int r, double lambda, int k, int ell) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) {
        m(i, i) = lambda;
        for (int j = i + 1; j < r; ++j) m(i, j) = static_cast<double>(k);
    }
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(r, r);
    for (int i = 0; i < ell; ++i) p = m * p;
    return p.row(0).sum();
}

// Explicit spectral-radius lower bound for r-normal k-regular digraphs on n
// vertices:
//   lambda^{2(ell-r+1)} >= [2 sqrt(k^{2 ell}-1) / (C(ell+r-1,r-1)^2 k^{2r-2})]
//                          * [1 - 2 pi^2 / log^2_{k^{2 ell}-1}(n/2)]
// Returns 0 when the bracket is nonpositive (vacuous bound).
inline double digraph_alon_boppana_lower(double n, int k, int r, int ell) {
    if (ell < r || r < 1 || k < 2 || n < 4) return 0.0;
    const double log_base = 2.0 * ell * std::log(static_cast<double>(k));  // ~ log(k^{2 ell} - 1)
    const double base_exact = std::log(std::pow(static_cast<double>(k), 2.0 * ell) - 1.0);
    const double log_ratio = std::log(n / 2.0) / (std::isfinite(base_exact) && base_exact > 0 ? base_exact : log_base);
    const double bracket = 1.0 - 2.0 * std::numbers::pi * std::numbers::pi / (log_ratio * log_ratio);
    if (bracket <= 0.0) return 0.0;
    const double c = binomial(ell + r - 1, r - 1);
    const double front = 2.0 * std::sqrt(std::pow(static_cast<double>(k), 2.0 * ell) - 1.0) /
                         (c * c * std::pow(static_cast<double>(k), 2 * r - 2));
    const double rhs = front * bracket;
    return std::pow(rhs, 1.0 / (2.0 * (ell - r + 1)));
}

// the proof's asymptotic choice ell = sqrt(ln(n/2))
inline int default_power_length(double n) {
    return std::max(1, static_cast<int>(std::llround(std::sqrt(std::log(n / 2.0)))));
}

struct BestLowerBound {
    double bound = 0.0;
    int ell = 0;
};

inline BestLowerBound digraph_alon_boppana_best(double n, int k, int r, int ell_max = 64) {
    BestLowerBound best;
    for (int ell = r; ell <= ell_max; ++ell) {
        const double b = digraph_alon_boppana_lower(n, k, r, ell);
        if (b > best.bound) {
            best.bound = b;
            best.ell = ell;
        }
    }
    return best;
}

struct SymmetrizedBounds {
    double at_r_minus_1 = 0.0;  // rho(G_{r-1}) / deg G_{r-1} upper bound; 0 when r = 1
    double at_r = 0.0;          // rho(G_r) / deg G_r upper bound
};

// Normalized spectral-radius bounds for the symmetrization of the
// (r-1)-th and r-th powers:
//   (1 / 2k^ell) [lambda^ell + sum_t C(r-1,t) C(ell,t) k^t lambda^{ell-t}]
inline SymmetrizedBounds symmetrized_power_bound(int k, double lambda, int r) {
    if (r < 1 || k < 1 || lambda < 0) throw ParseError("bound needs r >= 1, k >= 1, lambda >= 0");
    auto eval = [&](int ell) {
        double row = 0.0;
        for (int t = 0; t < r; ++t)
            row += binomial(r - 1, t) * binomial(ell, t) * std::pow(static_cast<double>(k), t) *
                   std::pow(lambda, ell - t);
        return (std::pow(lambda, ell) + row) / (2.0 * std::pow(static_cast<double>(k), ell));
    };
    SymmetrizedBounds bounds;
    bounds.at_r_minus_1 = (r >= 2) ? eval(r - 1) : 0.0;
    bounds.at_r = eval(r);
    return bounds;
}

}  // namespace dgs

#endif
