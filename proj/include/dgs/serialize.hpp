#ifndef DGS_SERIALIZE_HPP
#define DGS_SERIALIZE_HPP

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dgs/bounds.hpp"
#include "dgs/experiments.hpp"
#include "dgs/spectral.hpp"
#include "dgs/walks.hpp"
#include "dgs/zeta.hpp"

namespace dgs {

using nlohmann::json;

inline json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const SpectrumReport& report) {
    json j;
    j["version"] = 1;
    j["n"] = report.n;
    j["k"] = report.k;
    j["m"] = report.m;
    j["method"] = report.method;
    j["tolerance"] = report.tolerance;
    json values = json::array();
    for (const Complex& z : report.eigenvalues) values.push_back(complex_pair(z));
    j["eigenvalues"] = values;
    j["trivial_indices"] = report.trivial_indices;
    j["rho0"] = report.rho0;
    j["ramanujan"] = report.ramanujan;
    j["margin"] = report.margin;
    return j;
}

inline json to_json(const SparseSpectrum& spectrum, int n, int k, double tolerance) {
    json j;
    j["version"] = 1;
    j["n"] = n;
    j["k"] = k;
    j["method"] = "arnoldi";
    j["tolerance"] = tolerance;
    json values = json::array();
    for (const Complex& z : spectrum.ritz_values) values.push_back(complex_pair(z));
    j["ritz_values"] = values;
    j["residuals"] = spectrum.residuals;
    j["rho0"] = spectrum.rho0;
    j["matvecs"] = spectrum.matvecs;
    j["subspace_dim"] = spectrum.subspace_dim;
    return j;
}

// complex-plane scatter rows for external plotting
inline std::string spectrum_csv(const SpectrumReport& report) {
    std::ostringstream os;
    os << "re,im,is_trivial\n";
    for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        const bool trivial = std::find(report.trivial_indices.begin(), report.trivial_indices.end(),
                                       static_cast<int>(i)) != report.trivial_indices.end();
        os << report.eigenvalues[i].real() << "," << report.eigenvalues[i].imag() << "," << (trivial ? 1 : 0)
           << "\n";
    }
    return os.str();
}

inline std::string walk_profile_csv(const WalkProfile& profile) {
    std::ostringstream os;
    os << "ell,tv,l2,support\n";
    for (const WalkStep& s : profile.steps)
        os << s.ell << "," << s.tv_distance << "," << s.l2_distance << "," << s.support_size << "\n";
    return os.str();
}

// JSON summary with the measured cutoff step and the theoretical markers
// log_k n and ell_0 = log_k n + (2r-1) log_k log n.
inline json to_json(const WalkProfile& profile, int r = 2) {
    json j;
    j["version"] = 1;
    j["start"] = profile.start;
    j["n"] = profile.n;
    j["k"] = profile.k;
    const double logk_n = std::log(static_cast<double>(profile.n)) / std::log(static_cast<double>(profile.k));
    const double logk_logn =
        std::log(std::log(static_cast<double>(profile.n))) / std::log(static_cast<double>(profile.k));
    j["log_k_n"] = logk_n;
    j["ell0"] = logk_n + (2 * r - 1) * logk_logn;
    if (profile.cutoff_step())
        j["cutoff_step"] = *profile.cutoff_step();
    else
        j["cutoff_step"] = nullptr;
    json steps = json::array();
    for (const WalkStep& s : profile.steps)
        steps.push_back({{"ell", s.ell}, {"tv", s.tv_distance}, {"l2", s.l2_distance}, {"support", s.support_size}});
    j["steps"] = steps;
    return j;
}

inline json to_json(const ZetaReport& report) {
    json j;
    j["version"] = 1;
    j["n"] = report.n;
    j["k"] = report.k;
    j["reciprocal_poly"] = report.reciprocal_poly;
    j["integer_snapped"] = report.integer_snapped;
    json poles = json::array(), s_points = json::array();
    for (const Complex& z : report.poles) poles.push_back(complex_pair(z));
    for (const Complex& z : report.s_points) s_points.push_back(complex_pair(z));
    j["poles"] = poles;
    j["s_points"] = s_points;
    j["rh_digraph"] = report.rh_digraph;
    if (report.rh_ihara)
        j["rh_ihara"] = *report.rh_ihara;
    else
        j["rh_ihara"] = nullptr;
    if (report.rh_ihara) j["relation_distance"] = report.relation_distance;
    return j;
}

inline std::string zeta_splane_csv(const ZetaReport& report) {
    std::ostringstream os;
    os << "re_s,im_s\n";
    for (const Complex& s : report.s_points) os << s.real() << "," << s.imag() << "\n";
    return os.str();
}

inline std::string bound_checks_csv(const std::vector<BoundCheck>& checks) {
    std::ostringstream os;
    os << "name,inputs,bound,measured,satisfied\n";
    for (const BoundCheck& c : checks) {
        os << c.name << "," << c.inputs << "," << c.bound_value << ",";
        if (c.measured_value)
            os << *c.measured_value;
        else
            os << "nan";
        os << "," << (c.satisfied ? 1 : 0) << "\n";
    }
    return os.str();
}

inline std::string alon_csv(const AlonExperiment& exp) {
    std::ostringstream os;
    os << "k,n,trial,seed,connected,rho0\n";
    for (const AlonTrial& row : exp.results) {
        os << exp.k << "," << row.n << "," << row.trial << "," << row.seed << "," << (row.connected ? 1 : 0)
           << ",";
        if (row.connected)
            os << row.rho0;
        else
            os << "nan";
        os << "\n";
    }
    return os.str();
}

inline json to_json(const AlonExperiment& exp) {
    json j;
    j["version"] = 1;
    j["k"] = exp.k;
    j["n_list"] = exp.n_list;
    j["trials_per_n"] = exp.trials_per_n;
    j["seed"] = exp.seed;
    j["epsilon"] = exp.epsilon;
    j["threshold"] = std::sqrt(static_cast<double>(exp.k)) + exp.epsilon;
    json summaries = json::array();
    for (const AlonSummary& s : exp.summaries)
        summaries.push_back({{"n", s.n},
                             {"connected", s.connected_count},
                             {"discarded", s.discarded},
                             {"mean_rho0", s.mean_rho0},
                             {"max_rho0", s.max_rho0},
                             {"fraction_within", s.fraction_within}});
    j["summaries"] = summaries;
    return j;
}

}  // namespace dgs

#endif
