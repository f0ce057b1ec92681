#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dgs/bounds.hpp"
#include "dgs/constructions.hpp"
#include "dgs/digraph.hpp"
#include "dgs/experiments.hpp"
#include "dgs/projective.hpp"
#include "dgs/serialize.hpp"
#include "dgs/spectral.hpp"
#include "dgs/walks.hpp"
#include "dgs/zeta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailed = 1;
constexpr int kExitInputError = 2;

dgs::Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dgs::ParseError("cannot open '" + path + "'");
    return dgs::read_edge_list(in);
}

// a symmetric simple digraph file read back as an undirected graph
dgs::UGraph load_ugraph(const std::string& path) {
    const dgs::Digraph d = load_digraph(path);
    for (const dgs::Edge& e : d.edges())
        if (d.multiplicity(e.to, e.from) != e.mult)
            throw dgs::ParseError("input is not symmetric; an undirected graph is required");
    return dgs::UGraph(d.order(), d.edges());
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
    if (path) {
        std::ofstream out(*path);
        if (!out) throw dgs::ParseError("cannot write '" + *path + "'");
        out << content;
    } else {
        std::cout << content;
    }
}

dgs::SpectralRegion parse_region(const std::string& text, int k) {
    if (text.starts_with("disk:")) return dgs::SpectralRegion::disk(std::stod(text.substr(5)));
    if (text == "line-tree") return dgs::SpectralRegion::line_tree(k);
    if (text == "two-circles") return dgs::SpectralRegion::two_circles(k);
    throw dgs::ParseError("unknown region '" + text + "' (use disk:R, line-tree, two-circles)");
}

struct FieldFlag {
    std::int64_t p = 0;
    int e = 1;
};

FieldFlag parse_field_flag(const std::string& text) {
    FieldFlag flag;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.starts_with("p="))
            flag.p = std::stoll(tok.substr(2));
        else if (tok.starts_with("e="))
            flag.e = std::stoi(tok.substr(2));
        else
            throw dgs::ParseError("bad --field component '" + tok + "'");
    }
    if (flag.p == 0) throw dgs::ParseError("--field needs p=<prime>");
    return flag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-regular digraph spectra: constructions, Ramanujan tests, walks, zeta functions"};
    app.require_subcommand(1);

    std::optional<std::string> output;
    bool as_json = false, as_csv = false;
    std::uint64_t seed = 0;
    double tolerance = dgs::kDefaultTolerance;

    auto add_common = [&](CLI::App* cmd, bool with_formats = true) {
        cmd->add_option("-o,--output", output, "output path (default: stdout)");
        if (with_formats) {
            cmd->add_flag("--json", as_json, "machine-readable JSON output");
            cmd->add_flag("--csv", as_csv, "CSV output for plotting");
        }
        cmd->add_option("--tolerance", tolerance, "numerical tolerance override");
        cmd->add_option("--seed", seed, "random seed (default 0)");
    };

    // ---- construct -----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a named digraph family");
    construct->require_subcommand(1);
    std::int64_t paley_p = 7;
    int cd_k = 2, cd_m = 1, pr_d = 2, db_k = 2, db_s = 3, rr_n = 10, rr_k = 2;
    std::int64_t pr_p = 2;
    std::string graph_name = "petersen";

    auto* c_paley = construct->add_subcommand("paley", "Paley digraph on F_p, p = 3 mod 4");
    c_paley->add_option("--p", paley_p, "prime, 3 mod 4")->required();
    add_common(c_paley, false);

    auto* c_complete = construct->add_subcommand("complete", "complete k-regular m-periodic digraph");
    c_complete->add_option("--k", cd_k)->required();
    c_complete->add_option("--m", cd_m)->required();
    add_common(c_complete, false);

    auto* c_proj = construct->add_subcommand("projective", "incidence of lines vs hyperplanes in F_p^{d+1}");
    c_proj->add_option("--p", pr_p)->required();
    c_proj->add_option("--d", pr_d)->required();
    add_common(c_proj, false);

    auto* c_db = construct->add_subcommand("debruijn", "De Bruijn digraph on [k]^s");
    c_db->add_option("--k", db_k)->required();
    c_db->add_option("--s", db_s)->required();
    add_common(c_db, false);

    auto* c_rand = construct->add_subcommand("random", "sum of k random permutation matrices");
    c_rand->add_option("--n", rr_n)->required();
    c_rand->add_option("--k", rr_k)->required();
    add_common(c_rand, false);

    auto* c_graph = construct->add_subcommand("graph", "builtin undirected graph as a self-adjoint digraph");
    c_graph->add_option("--name", graph_name, "complete(r), cycle(n), petersen")->required();
    add_common(c_graph, false);

    // ---- spectrum --------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, trivial split, Ramanujan verdict");
    std::string spectrum_input;
    bool sparse = false;
    int top = 6;
    spectrum->add_option("input", spectrum_input, "edge-list file")->required();
    spectrum->add_flag("--sparse", sparse, "Arnoldi path (required above the dense cap)");
    spectrum->add_option("--top", top, "number of Ritz values for --sparse");
    add_common(spectrum);

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand("check", "verdicts with exit-code semantics");
    std::string check_input, region_text;
    bool check_ramanujan = false, check_rh = false, check_graph_mode = false;
    check->add_option("input", check_input)->required();
    check->add_flag("--ramanujan", check_ramanujan, "Ramanujan digraph test");
    check->add_flag("--rh", check_rh, "zeta Riemann-hypothesis verdict");
    check->add_flag("--graph", check_graph_mode, "treat input as an undirected graph");
    check->add_option("--region", region_text, "spectrum containment: disk:R, line-tree, two-circles");
    add_common(check);

    // ---- line-digraph -----------------------------------------------------
    auto* linedg = app.add_subcommand("line-digraph", "non-backtracking arc digraph of a regular graph");
    std::string line_input, labels_path;
    linedg->add_option("input", line_input, "symmetric edge-list file")->required();
    linedg->add_option("--labels", labels_path, "arc label file (default <output>.labels)");
    add_common(linedg, false);

    // ---- cayley -----------------------------------------------------------
    auto* cayley = app.add_subcommand("cayley", "group closure of generator matrices");
    std::string gen_path, field_text;
    int cayley_dim = 0;
    std::size_t closure_cap = 1'000'000;
    cayley->add_option("--generators", gen_path, "generator matrix file")->required();
    cayley->add_option("--field", field_text, "cross-check, e.g. p=31 or p=2,e=2");
    cayley->add_option("--dim", cayley_dim, "cross-check matrix dimension");
    cayley->add_option("--cap", closure_cap, "closure size budget");
    add_common(cayley);

    // ---- walk ------------------------------------------------------------
    auto* walk = app.add_subcommand("walk", "distribution profile, spheres, diameter");
    std::string walk_input;
    int walk_start = 0, walk_lmax = -1;
    bool walk_spheres = false, walk_diameter = false;
    walk->add_option("input", walk_input)->required();
    walk->add_option("--start", walk_start, "start vertex (default 0)");
    walk->add_option("--lmax", walk_lmax, "profile length (default 2 log_k n + 12)");
    walk->add_flag("--spheres", walk_spheres, "emit sphere sizes instead of the tv profile");
    walk->add_flag("--diameter", walk_diameter, "emit the directed diameter");
    add_common(walk);

    // ---- chernoff -----------------------------------------------------------
    auto* chernoff = app.add_subcommand("chernoff", "empirical sampling tail over random walks");
    std::string chern_input;
    int chern_indicator = 0, chern_lmax = 100, chern_trials = 10000, jobs = 1;
    double chern_gamma = 0.25;
    chernoff->add_option("input", chern_input)->required();
    chernoff->add_option("--indicator", chern_indicator, "centered indicator of the first N vertices")->required();
    chernoff->add_option("--gamma", chern_gamma, "tail threshold");
    chernoff->add_option("--lmax", chern_lmax, "walk length");
    chernoff->add_option("--trials", chern_trials, "number of walks");
    chernoff->add_option("--jobs", jobs, "worker threads");
    add_common(chernoff);

    // ---- zeta -----------------------------------------------------------
    auto* zeta = app.add_subcommand("zeta", "Bowen-Lanford / Ihara zeta function and pole report");
    std::string zeta_input;
    bool zeta_graph_mode = false;
    zeta->add_option("input", zeta_input)->required();
    zeta->add_flag("--graph", zeta_graph_mode, "Ihara zeta of an undirected input");
    add_common(zeta);

    // ---- bounds -----------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "closed-form bounds against measured spectra");
    std::string bounds_input;
    int bounds_r = 1, bounds_lmax = 8;
    bounds->add_option("input", bounds_input)->required();
    bounds->add_option("--r", bounds_r, "certified normality degree r");
    bounds->add_option("--lmax", bounds_lmax, "power-norm range");
    add_common(bounds);

    // ---- alon -----------------------------------------------------------
    auto* alon = app.add_subcommand("alon", "random-digraph spectral-radius experiment");
    int alon_k = 4, alon_trials = 20;
    double alon_eps = 0.3;
    std::vector<int> alon_n;
    alon->add_option("--k", alon_k)->required();
    alon->add_option("--n", alon_n, "vertex counts")->required()->delimiter(',');
    alon->add_option("--trials", alon_trials, "trials per n");
    alon->add_option("--epsilon", alon_eps, "threshold offset over sqrt(k)");
    alon->add_option("--jobs", jobs, "worker threads");
    add_common(alon);

    // ---- gelfand ----------------------------------------------------------
    auto* gelfand = app.add_subcommand("gelfand", "restricted power-norm roots converging to rho0");
    std::string gelfand_input;
    int gelfand_lmax = 10;
    gelfand->add_option("input", gelfand_input)->required();
    gelfand->add_option("--lmax", gelfand_lmax);
    add_common(gelfand);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (c_paley->parsed()) {
            write_output(output, dgs::to_edge_list(dgs::paley_digraph(paley_p)));
        } else if (c_complete->parsed()) {
            write_output(output, dgs::to_edge_list(dgs::complete_digraph(cd_k, cd_m)));
        } else if (c_proj->parsed()) {
            write_output(output, dgs::to_edge_list(dgs::projective_incidence(pr_p, pr_d)));
        } else if (c_db->parsed()) {
            write_output(output, dgs::to_edge_list(dgs::de_bruijn(db_k, db_s)));
        } else if (c_rand->parsed()) {
            write_output(output, dgs::to_edge_list(dgs::random_regular_digraph(rr_n, rr_k, seed)));
            if (output) std::cout << "{\"seed\":" << seed << ",\"n\":" << rr_n << ",\"k\":" << rr_k << "}\n";
        } else if (c_graph->parsed()) {
            write_output(output, dgs::to_edge_list(dgs::builtin_graph(graph_name).as_digraph()));
        } else if (spectrum->parsed()) {
            const dgs::Digraph d = load_digraph(spectrum_input);
            if (sparse || d.order() > dgs::kDenseCap) {
                const auto result = dgs::rho0_sparse(d, std::min(tolerance * 100, 1e-6), top, seed);
                dgs::json j = dgs::to_json(result, d.order(), d.degree(), tolerance);
                j["seed"] = seed;
                write_output(output, j.dump(2) + "\n");
            } else {
                const auto report = dgs::classify_spectrum(d, tolerance);
                if (as_csv)
                    write_output(output, dgs::spectrum_csv(report));
                else if (as_json)
                    write_output(output, dgs::to_json(report).dump(2) + "\n");
                else {
                    std::ostringstream os;
                    os << "n=" << report.n << " k=" << report.k << " m=" << report.m << " rho0=" << report.rho0
                       << " ramanujan=" << (report.ramanujan ? "true" : "false") << " margin=" << report.margin
                       << "\n";
                    write_output(output, os.str());
                }
            }
        } else if (check->parsed()) {
            bool ok = true;
            std::ostringstream os;
            if (check_graph_mode) {
                const dgs::UGraph g = load_ugraph(check_input);
                if (check_ramanujan) {
                    const auto verdict = dgs::ramanujan_graph_test(g, tolerance);
                    os << "ramanujan=" << (verdict.ramanujan ? "true" : "false") << " margin=" << verdict.margin
                       << "\n";
                    ok = ok && verdict.ramanujan;
                }
                if (check_rh) {
                    const auto report = dgs::zeta_ihara(g, tolerance);
                    os << "rh=" << (*report.rh_ihara ? "true" : "false") << "\n";
                    ok = ok && *report.rh_ihara;
                }
            } else {
                const dgs::Digraph d = load_digraph(check_input);
                if (check_ramanujan) {
                    const auto report = dgs::classify_spectrum(d, tolerance);
                    os << "ramanujan=" << (report.ramanujan ? "true" : "false") << " rho0=" << report.rho0
                       << " margin=" << report.margin << "\n";
                    ok = ok && report.ramanujan;
                }
                if (check_rh) {
                    const auto report = dgs::zeta_digraph(d, tolerance);
                    os << "rh=" << (report.rh_digraph ? "true" : "false") << "\n";
                    ok = ok && report.rh_digraph;
                }
                if (!region_text.empty()) {
                    const auto report = dgs::classify_spectrum(d, tolerance);
                    const bool inside = dgs::spectrum_in_region(report, parse_region(region_text, d.degree()),
                                                                std::max(tolerance, 1e-6));
                    os << "in_region=" << (inside ? "true" : "false") << "\n";
                    ok = ok && inside;
                }
            }
            write_output(output, os.str());
            return ok ? kExitOk : kExitVerdictFailed;
        } else if (linedg->parsed()) {
            const dgs::UGraph g = load_ugraph(line_input);
            const auto ld = dgs::line_digraph(g);
            write_output(output, dgs::to_edge_list(ld.digraph));
            const std::string lpath = !labels_path.empty() ? labels_path : (output ? *output + ".labels" : "");
            if (!lpath.empty()) {
                std::ofstream lout(lpath);
                for (std::size_t i = 0; i < ld.arc_labels.size(); ++i)
                    lout << i << " " << ld.arc_labels[i].first << " " << ld.arc_labels[i].second << "\n";
            }
        } else if (cayley->parsed()) {
            std::ifstream in(gen_path);
            if (!in) throw dgs::ParseError("cannot open '" + gen_path + "'");
            const auto gf = dgs::read_generator_file(in);
            if (!field_text.empty()) {
                const auto flag = parse_field_flag(field_text);
                if (flag.p != gf.field.p || flag.e != gf.field.e)
                    throw dgs::ParseError("--field does not match the generator file header");
            }
            if (cayley_dim != 0 && cayley_dim != gf.d)
                throw dgs::ParseError("--dim does not match the generator file");
            const dgs::Field field(gf.field);
            const auto result = dgs::cayley_digraph(field, gf.d, gf.generators, closure_cap);
            dgs::json j;
            j["order"] = result.digraph.order();
            j["k"] = result.digraph.degree();
            j["strongly_connected"] = dgs::strongly_connected(result.digraph);
            j["period"] = dgs::period(result.digraph).m;
            if (output) {
                std::ofstream out(*output);
                dgs::write_edge_list(out, result.digraph);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
        } else if (walk->parsed()) {
            const dgs::Digraph d = load_digraph(walk_input);
            if (walk_diameter) {
                dgs::json j;
                j["diameter"] = dgs::diameter(d);
                write_output(output, j.dump(2) + "\n");
            } else if (walk_spheres) {
                dgs::json j;
                j["start"] = walk_start;
                j["sizes"] = dgs::sphere_sizes(d, walk_start);
                write_output(output, j.dump(2) + "\n");
            } else {
                const int lmax = walk_lmax > 0
                                     ? walk_lmax
                                     : static_cast<int>(2 * std::log(static_cast<double>(d.order())) /
                                                        std::log(static_cast<double>(std::max(d.degree(), 2)))) + 12;
                const auto profile = dgs::cutoff_profile(d, walk_start, lmax);
                if (as_csv)
                    write_output(output, dgs::walk_profile_csv(profile));
                else
                    write_output(output, dgs::to_json(profile).dump(2) + "\n");
            }
        } else if (chernoff->parsed()) {
            const dgs::Digraph d = load_digraph(chern_input);
            const int n = d.order();
            if (chern_indicator < 1 || chern_indicator >= n) throw dgs::ParseError("--indicator must be in [1, n)");
            const double p = static_cast<double>(chern_indicator) / n;
            std::vector<double> f(static_cast<std::size_t>(n), -p);
            for (int i = 0; i < chern_indicator; ++i) f[static_cast<std::size_t>(i)] = 1.0 - p;
            const auto result = dgs::chernoff_experiment(d, f, chern_lmax, chern_trials, chern_gamma, seed, jobs);
            dgs::json j;
            j["seed"] = seed;
            j["gamma"] = chern_gamma;
            j["ell"] = chern_lmax;
            j["trials"] = result.trials;
            j["tail_frequency"] = result.tail_frequency;
            j["std_error"] = result.std_error;
            if (result.exponent)
                j["exponent"] = *result.exponent;
            else
                j["exponent"] = nullptr;
            write_output(output, j.dump(2) + "\n");
        } else if (zeta->parsed()) {
            const auto report = zeta_graph_mode ? dgs::zeta_ihara(load_ugraph(zeta_input), tolerance)
                                                : dgs::zeta_digraph(load_digraph(zeta_input), tolerance);
            if (as_csv)
                write_output(output, dgs::zeta_splane_csv(report));
            else
                write_output(output, dgs::to_json(report).dump(2) + "\n");
        } else if (bounds->parsed()) {
            const dgs::Digraph d = load_digraph(bounds_input);
            const auto report = dgs::classify_spectrum(d, tolerance);
            std::vector<dgs::BoundCheck> rows;
            for (int ell = 1; ell <= bounds_lmax; ++ell) {
                dgs::BoundCheck row;
                row.name = "power_bound";
                row.inputs = "r=" + std::to_string(bounds_r) + " ell=" + std::to_string(ell);
                row.bound_value = dgs::power_bound_rhs(d.degree(), report.rho0, bounds_r, ell);
                row.measured_value = dgs::restricted_power_norm(d, ell);
                row.satisfied = *row.measured_value <= row.bound_value * (1 + 1e-6) + 1e-9;
                rows.push_back(row);
            }
            {
                dgs::BoundCheck row;
                row.name = "normal_size_bound";
                row.inputs = "k=" + std::to_string(d.degree()) + " m=" + std::to_string(report.m);
                row.bound_value = dgs::normal_size_bound(d.degree(), report.m);
                row.measured_value = d.order();
                row.satisfied = *row.measured_value <= row.bound_value + 1e-9;
                rows.push_back(row);
            }
            {
                const auto best = dgs::digraph_alon_boppana_best(d.order(), d.degree(), bounds_r);
                dgs::BoundCheck row;
                row.name = "alon_boppana_lower";
                row.inputs = "r=" + std::to_string(bounds_r) + " ell=" + std::to_string(best.ell);
                row.bound_value = best.bound;
                row.measured_value = report.rho0;
                row.satisfied = *row.measured_value >= row.bound_value - 1e-9;
                rows.push_back(row);
            }
            write_output(output, dgs::bound_checks_csv(rows));
        } else if (alon->parsed()) {
            const auto exp = dgs::alon_experiment(alon_k, alon_n, alon_trials, alon_eps, seed, jobs);
            if (as_csv)
                write_output(output, dgs::alon_csv(exp));
            else
                write_output(output, dgs::to_json(exp).dump(2) + "\n");
        } else if (gelfand->parsed()) {
            const dgs::Digraph d = load_digraph(gelfand_input);
            const auto seq = dgs::gelfand_estimate(d, gelfand_lmax);
            dgs::json j;
            j["sequence"] = seq;
            if (d.order() <= dgs::kDenseCap) j["rho0"] = dgs::classify_spectrum(d, tolerance).rho0;
            write_output(output, j.dump(2) + "\n");
        }
    } catch (const dgs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
