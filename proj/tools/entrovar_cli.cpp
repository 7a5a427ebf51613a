// entrovar: entropy estimates, uncertainty bounds, stationary-point tables,
// and multinomial sampling experiments for count histograms.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entrovar/estimators.hpp"
#include "entrovar/experiment.hpp"
#include "entrovar/io.hpp"
#include "entrovar/maxvar.hpp"
#include "entrovar/population.hpp"
#include "entrovar/types.hpp"

namespace {

using entrovar::Error;
using entrovar::ErrorKind;
using entrovar::format_double;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("ENTROPY_SEED")) {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || errno == ERANGE) {
            throw Error(ErrorKind::ParseError,
                        std::string("ENTROPY_SEED is not an unsigned integer: '") + env + "'");
        }
        return v;
    }
    return entrovar::kDefaultSeed;
}

std::vector<std::uint64_t> parse_n_grid(const std::string& spec) {
    double start = 0.0;
    double stop = 0.0;
    unsigned ppd = 9;
    const auto first = spec.find(':');
    if (first == std::string::npos) {
        throw Error(ErrorKind::ParseError, "n-grid spec must be START:STOP[:POINTS_PER_DECADE]");
    }
    const auto second = spec.find(':', first + 1);
    try {
        start = std::stod(spec.substr(0, first));
        stop = std::stod(spec.substr(first + 1, second == std::string::npos
                                                    ? std::string::npos
                                                    : second - first - 1));
        if (second != std::string::npos) {
            ppd = static_cast<unsigned>(std::stoul(spec.substr(second + 1)));
        }
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "cannot parse n-grid spec '" + spec + "'");
    }
    if (!(start >= 1.0) || !(stop >= start) || ppd < 1) {
        throw Error(ErrorKind::ParseError, "n-grid needs 1 <= START <= STOP and PPD >= 1");
    }

    const auto lo = static_cast<std::uint64_t>(std::llround(start));
    const auto hi = static_cast<std::uint64_t>(std::llround(stop));
    std::vector<std::uint64_t> grid;
    const double x0 = std::log10(static_cast<double>(lo));
    for (unsigned j = 0;; ++j) {
        const double x = x0 + static_cast<double>(j) / ppd;
        const auto n = static_cast<std::uint64_t>(std::llround(std::pow(10.0, x)));
        if (n >= hi) break;
        if (grid.empty() || n > grid.back()) grid.push_back(n);
    }
    if (grid.empty() || grid.back() != hi) grid.push_back(hi);
    return grid;
}

// ---- analyze ----------------------------------------------------------

struct AnalyzeOptions {
    std::string file;
    std::optional<std::uint64_t> support;
    std::string format = "text";
    std::string output;
};

int run_analyze(const AnalyzeOptions& opt) {
    const entrovar::CountHistogram hist = entrovar::load_histogram(opt.file);
    std::optional<std::size_t> declared;
    if (opt.support) declared = static_cast<std::size_t>(*opt.support);
    const entrovar::EntropyEstimate est = entrovar::estimate_entropy(hist, declared);
    const entrovar::WorstCaseBound wc = entrovar::worst_case_error_bar(est.m_declared, est.n);
    const double ak = entrovar::antos_kontoyiannis_bound(est.n);

    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    if (opt.format == "json") {
        nlohmann::json doc{{"n", est.n},
                           {"bins", hist.size()},
                           {"support_observed", est.m_support},
                           {"support_declared", est.m_declared},
                           {"h_plugin", est.h_plugin},
                           {"h_miller_madow", est.h_miller_madow},
                           {"lambda0_hat", est.lambda0_hat},
                           {"lambda0_clamped", est.lambda0_clamped},
                           {"sigma_h", est.sigma_h},
                           {"worst_case_sigma", wc.sigma},
                           {"worst_case_sigma_asymptotic", wc.sigma_asymptotic},
                           {"antos_kontoyiannis_var", ak},
                           {"antos_kontoyiannis_sigma", std::sqrt(ak)}};
        out << doc.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << "n,bins,support_observed,support_declared,h_plugin,h_miller_madow,"
               "lambda0_hat,sigma_h,worst_case_sigma,worst_case_sigma_asymptotic,"
               "antos_kontoyiannis_var\n";
        out << est.n << ',' << hist.size() << ',' << est.m_support << ',' << est.m_declared
            << ',' << format_double(est.h_plugin) << ',' << format_double(est.h_miller_madow)
            << ',' << format_double(est.lambda0_hat) << ',' << format_double(est.sigma_h) << ','
            << format_double(wc.sigma) << ',' << format_double(wc.sigma_asymptotic) << ','
            << format_double(ak) << '\n';
    } else {
        out << "n                            " << est.n << '\n'
            << "bins                         " << hist.size() << '\n'
            << "support_observed             " << est.m_support << '\n'
            << "support_declared             " << est.m_declared << '\n'
            << "h_plugin                     " << format_double(est.h_plugin) << '\n'
            << "h_miller_madow               " << format_double(est.h_miller_madow) << '\n'
            << "lambda0_hat                  " << format_double(est.lambda0_hat) << '\n'
            << "sigma_h                      " << format_double(est.sigma_h) << '\n'
            << "worst_case_sigma             " << format_double(wc.sigma) << '\n'
            << "worst_case_sigma_asymptotic  " << format_double(wc.sigma_asymptotic) << '\n'
            << "antos_kontoyiannis_var       " << format_double(ak) << '\n'
            << "antos_kontoyiannis_sigma     " << format_double(std::sqrt(ak)) << '\n';
        if (est.lambda0_clamped) {
            out << "note: lambda0_hat clamped at 0 (uniform rates)\n";
        }
    }
    return kExitOk;
}

// ---- population -------------------------------------------------------

struct PopulationOptions {
    std::string file;
    bool normalize = false;
    std::vector<std::uint64_t> n_values;
    std::string format = "text";
    std::string output;
};

int run_population(const PopulationOptions& opt) {
    if (opt.format == "csv" && !opt.n_values.empty()) {
        throw Error(ErrorKind::DomainError,
                    "--n prediction rows are available with --format text or json only");
    }
    const entrovar::ProbabilityDistribution dist =
        entrovar::load_distribution(opt.file, opt.normalize);
    const entrovar::PopulationStats st = entrovar::population_stats(dist);

    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    if (opt.format == "json") {
        nlohmann::json doc{{"m", dist.size()},     {"h", st.h},
                           {"lambda0", st.lambda0}, {"mu2", st.mu2()},
                           {"mu3", st.mu3},         {"mu4", st.mu4},
                           {"gamma", st.gamma},     {"big_gamma", st.big_gamma}};
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint64_t n : opt.n_values) {
            const double dn = static_cast<double>(n);
            rows.push_back({{"n", n},
                            {"pred_mean_lambda0", st.lambda0 + st.gamma / dn},
                            {"pred_var_lambda0", st.big_gamma / dn},
                            {"pred_var_h", st.lambda0 / dn}});
        }
        doc["predictions"] = rows;
        out << doc.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << "m,h,lambda0,mu2,mu3,mu4,gamma,big_gamma\n";
        out << dist.size() << ',' << format_double(st.h) << ',' << format_double(st.lambda0)
            << ',' << format_double(st.mu2()) << ',' << format_double(st.mu3) << ','
            << format_double(st.mu4) << ',' << format_double(st.gamma) << ','
            << format_double(st.big_gamma) << '\n';
    } else {
        out << "m           " << dist.size() << '\n'
            << "h           " << format_double(st.h) << '\n'
            << "lambda0     " << format_double(st.lambda0) << '\n'
            << "mu2         " << format_double(st.mu2()) << '\n'
            << "mu3         " << format_double(st.mu3) << '\n'
            << "mu4         " << format_double(st.mu4) << '\n'
            << "gamma       " << format_double(st.gamma) << '\n'
            << "big_gamma   " << format_double(st.big_gamma) << '\n';
        if (!opt.n_values.empty()) {
            out << "n,pred_mean_lambda0,pred_var_lambda0,pred_var_h\n";
            for (std::uint64_t n : opt.n_values) {
                const double dn = static_cast<double>(n);
                out << n << ',' << format_double(st.lambda0 + st.gamma / dn) << ','
                    << format_double(st.big_gamma / dn) << ','
                    << format_double(st.lambda0 / dn) << '\n';
            }
        }
    }
    return kExitOk;
}

// ---- maxvar -----------------------------------------------------------

struct MaxvarOptions {
    std::optional<std::uint64_t> m;
    std::vector<std::uint64_t> m_range;
    std::uint64_t k = 1;
    std::string output;
};

void maxvar_row(std::ostream& out, std::size_t m, std::size_t k) {
    const entrovar::MaxVarSolution sol = entrovar::solve_stationary(m, k);
    out << m << ',' << k << ',' << format_double(sol.v_pos) << ',' << format_double(sol.v_neg)
        << ',' << format_double(sol.p0) << ',' << format_double(sol.q0) << ','
        << format_double(sol.lambda0) << ',' << format_double(entrovar::approx_root(m)) << ','
        << format_double(entrovar::lambda0_max_asymptotic(m)) << '\n';
}

int run_maxvar(const MaxvarOptions& opt) {
    if (!opt.m.has_value() == opt.m_range.empty()) {
        throw Error(ErrorKind::DomainError, "exactly one of --m or --m-range is required");
    }
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    out << "m,k,v_pos,v_neg,p0,q0,lambda0_max,approx_v,lambda0_asymptotic\n";
    if (opt.m) {
        maxvar_row(out, static_cast<std::size_t>(*opt.m), static_cast<std::size_t>(opt.k));
    } else {
        const std::uint64_t lo = opt.m_range[0];
        const std::uint64_t hi = opt.m_range[1];
        if (lo < 2 || hi < lo) {
            throw Error(ErrorKind::DomainError, "--m-range needs 2 <= A <= B");
        }
        for (std::uint64_t m = lo; m <= hi; ++m) {
            maxvar_row(out, static_cast<std::size_t>(m), 1);
        }
    }
    return kExitOk;
}

// ---- simulate ---------------------------------------------------------

struct SimulateOptions {
    std::string dist_file;
    bool normalize = false;
    std::string preset;
    std::uint64_t m = 0;
    std::string n_grid = "1e2:1e6:9";
    std::uint32_t trials = 10000;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::uint64_t budget = entrovar::kDefaultBudget;
    std::string output;
};

entrovar::ProbabilityDistribution simulate_distribution(const SimulateOptions& opt) {
    if (opt.dist_file.empty() == opt.preset.empty()) {
        throw Error(ErrorKind::DomainError, "exactly one of --dist or --preset is required");
    }
    if (!opt.dist_file.empty()) {
        return entrovar::load_distribution(opt.dist_file, opt.normalize);
    }
    if (opt.m < 1) {
        throw Error(ErrorKind::DomainError, "--preset requires --m");
    }
    if (opt.preset == "arithmetic") {
        return entrovar::arithmetic_distribution(static_cast<std::size_t>(opt.m));
    }
    if (opt.preset == "maxvar") {
        return entrovar::build_stationary_distribution(
            entrovar::max_variance(static_cast<std::size_t>(opt.m)), 0);
    }
    throw Error(ErrorKind::DomainError, "unknown preset '" + opt.preset + "'");
}

int run_simulate(const SimulateOptions& opt) {
    entrovar::ExperimentConfig config;
    config.dist = simulate_distribution(opt);
    config.n_values = parse_n_grid(opt.n_grid);
    config.trials = opt.trials;
    config.seed = resolve_seed(opt.seed);
    config.threads = opt.threads;
    config.budget = opt.budget;

    const entrovar::ExperimentResult result = entrovar::run_experiment(config);

    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    out << "n,mean_lh,se_mean_lh,var_lh,se_var_lh,pred_mean,pred_var,mean_h,var_h,"
           "pred_var_h,mean_roulston\n";
    for (const entrovar::ExperimentRow& row : result.rows) {
        out << row.n << ',' << format_double(row.mean_lambda0_hat) << ','
            << format_double(row.se_mean_lambda0_hat) << ','
            << format_double(row.var_lambda0_hat) << ','
            << format_double(row.se_var_lambda0_hat) << ','
            << format_double(row.predicted_mean) << ',' << format_double(row.predicted_var)
            << ',' << format_double(row.mean_h_hat) << ',' << format_double(row.var_h_hat)
            << ',' << format_double(row.predicted_var_h) << ','
            << format_double(row.mean_roulston) << '\n';
    }
    return kExitOk;
}

// ---- simplex-grid -----------------------------------------------------

struct SimplexGridOptions {
    std::uint64_t m = 3;
    std::uint64_t resolution = 200;
    std::string output;
};

int run_simplex_grid(const SimplexGridOptions& opt) {
    if (opt.m != 3) {
        throw Error(ErrorKind::DomainError, "simplex grid export is implemented for --m 3 only");
    }
    if (opt.resolution < 2) {
        throw Error(ErrorKind::DomainError, "--resolution must be at least 2");
    }
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    out << "s0,s1,s2,lambda0,entropy\n";
    const auto r = static_cast<double>(opt.resolution);
    for (std::uint64_t i = 0; i <= opt.resolution; ++i) {
        for (std::uint64_t j = 0; i + j <= opt.resolution; ++j) {
            const std::uint64_t k = opt.resolution - i - j;
            const double probs[3] = {static_cast<double>(i) / r, static_cast<double>(j) / r,
                                     static_cast<double>(k) / r};
            const entrovar::ProbabilityDistribution dist =
                entrovar::make_distribution(probs, true);
            out << format_double(probs[0]) << ',' << format_double(probs[1]) << ','
                << format_double(probs[2]) << ','
                << format_double(entrovar::variance_parameter(dist)) << ','
                << format_double(entrovar::shannon_entropy(dist)) << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shannon entropy estimates and their uncertainty from count histograms"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "entropy estimate and error bars for a histogram file");
    analyze_cmd->add_option("file", analyze.file, "histogram file (text/CSV/JSON)")->required();
    analyze_cmd->add_option("--support", analyze.support,
                            "declared support size M (default: histogram length)");
    analyze_cmd->add_option("--format", analyze.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    analyze_cmd->add_option("--output", analyze.output, "write data to file instead of stdout");

    PopulationOptions population;
    CLI::App* population_cmd =
        app.add_subcommand("population", "exact functionals of a known distribution");
    population_cmd->add_option("file", population.file, "distribution file")->required();
    population_cmd->add_flag("--normalize", population.normalize,
                             "normalize the input values to unit sum");
    population_cmd->add_option("--n", population.n_values,
                               "sample sizes for prediction rows (repeatable)");
    population_cmd->add_option("--format", population.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    population_cmd->add_option("--output", population.output, "write data to file");

    MaxvarOptions maxvar;
    CLI::App* maxvar_cmd =
        app.add_subcommand("maxvar", "stationary points and maxima of the variance parameter");
    maxvar_cmd->add_option("--m", maxvar.m, "support size");
    maxvar_cmd->add_option("--m-range", maxvar.m_range, "inclusive support-size range A B")
        ->expected(2);
    maxvar_cmd->add_option("--k", maxvar.k, "number of outlier bins (with --m; default 1)");
    maxvar_cmd->add_option("--output", maxvar.output, "write CSV to file");

    SimulateOptions simulate;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "multinomial sampling experiment across sample sizes");
    simulate_cmd->add_option("--dist", simulate.dist_file, "distribution file");
    simulate_cmd->add_flag("--normalize", simulate.normalize, "normalize --dist values");
    simulate_cmd->add_option("--preset", simulate.preset, "arithmetic or maxvar")
        ->check(CLI::IsMember({"arithmetic", "maxvar"}));
    simulate_cmd->add_option("--m", simulate.m, "support size for --preset");
    simulate_cmd->add_option("--n-grid", simulate.n_grid,
                             "START:STOP[:POINTS_PER_DECADE], default 1e2:1e6:9");
    simulate_cmd->add_option("--trials", simulate.trials, "evolutions per sample size");
    simulate_cmd->add_option("--seed", simulate.seed,
                             "RNG seed (default: ENTROPY_SEED or a fixed constant)");
    simulate_cmd->add_option("--threads", simulate.threads, "worker threads");
    simulate_cmd->add_option("--budget", simulate.budget, "cap on trials * max(n)");
    simulate_cmd->add_option("--output", simulate.output, "write CSV to file");

    SimplexGridOptions simplex;
    CLI::App* simplex_cmd = app.add_subcommand(
        "simplex-grid", "variance parameter and entropy on a barycentric grid (M = 3)");
    simplex_cmd->add_option("--m", simplex.m, "support size (must be 3)");
    simplex_cmd->add_option("--resolution", simplex.resolution, "grid subdivisions per edge");
    simplex_cmd->add_option("--output", simplex.output, "write CSV to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze);
        if (*population_cmd) return run_population(population);
        if (*maxvar_cmd) return run_maxvar(maxvar);
        if (*simulate_cmd) return run_simulate(simulate);
        if (*simplex_cmd) return run_simplex_grid(simplex);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::ResourceBudget ? kExitBudget : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
