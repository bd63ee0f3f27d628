#include "dlab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dlab/errors.hpp"
#include "dlab/gcdsums.hpp"
#include "dlab/norms.hpp"
#include "dlab/randmult.hpp"
#include "dlab/rng.hpp"
#include "dlab/zeta.hpp"

namespace dlab {

namespace {

constexpr const char* kArtifactVersion = "0.1.0";

enum class ParamKind { pos_int, pos_int_list, real, pos_real, pos_real_list, string, boolean };

struct ParamSpec {
    std::string name;
    ParamKind kind;
    bool required;
    nlohmann::json default_value;  // for optional params
};

// Accumulates the CSV as a string: '#' preamble, header, rows; written
// atomically at the end of the run.
class CsvWriter {
public:
    void comment(const std::string& line) { preamble_ += "# " + line + "\n"; }
    void header(const std::string& h) { header_ = h + "\n"; }
    void row(const std::string& r) {
        body_ += r + "\n";
        ++rows_;
    }
    std::uint64_t rows() const { return rows_; }
    std::string str() const { return preamble_ + header_ + body_; }

private:
    std::string preamble_, header_, body_;
    std::uint64_t rows_ = 0;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(std::uint64_t x) { return std::to_string(x); }

struct ExperimentDef {
    std::vector<ParamSpec> params;
    std::string description;
    std::function<void(const ExperimentConfig&, CsvWriter&)> run;
};

std::uint64_t get_u64(const nlohmann::json& params, const std::string& key) {
    return params.at(key).get<std::uint64_t>();
}

double get_real(const nlohmann::json& params, const std::string& key) {
    return params.at(key).get<double>();
}

std::vector<std::uint64_t> get_u64_list(const nlohmann::json& params, const std::string& key) {
    return params.at(key).get<std::vector<std::uint64_t>>();
}

std::vector<double> get_real_list(const nlohmann::json& params, const std::string& key) {
    return params.at(key).get<std::vector<double>>();
}

std::string join(const std::vector<std::uint64_t>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

bool is_even_norm_exponent(double p) {
    double r = std::round(p);
    return std::abs(p - r) < 1e-12 && (r == 2.0 || r == 4.0 || r == 6.0 || r == 8.0);
}

DirichletPolynomial ones_polynomial(std::uint64_t n_max, double sigma) {
    DirichletPolynomial::CoeffMap coeffs;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        coeffs[n] = Complex{std::pow(static_cast<double>(n), -sigma), 0.0};
    return DirichletPolynomial{std::move(coeffs)};
}

SearchStrategy parse_strategy(const std::string& s) {
    if (s == "exhaustive")
        return SearchStrategy::exhaustive;
    if (s == "greedy")
        return SearchStrategy::greedy;
    if (s == "smooth")
        return SearchStrategy::smooth;
    throw validation_error("unknown strategy '" + s + "' (expected exhaustive, greedy or smooth)");
}

RandomModel parse_model(const std::string& s) {
    if (s == "steinhaus")
        return RandomModel::steinhaus;
    if (s == "rademacher")
        return RandomModel::rademacher;
    throw validation_error("unknown model '" + s + "' (expected steinhaus or rademacher)");
}

void run_norms(const ExperimentConfig& cfg, CsvWriter& csv) {
    DirichletPolynomial F = ones_polynomial(get_u64(cfg.params, "n_max"),
                                            get_real(cfg.params, "sigma"));
    std::uint64_t samples = get_u64(cfg.params, "samples");
    csv.header("p,method,value,stderr,samples");
    for (double p : get_real_list(cfg.params, "p_list")) {
        if (is_even_norm_exponent(p)) {
            double v = norm_h_even(F, static_cast<unsigned>(std::llround(p)));
            csv.row(fmt(p) + ",exact," + fmt(v) + ",0,0");
        } else {
            EstimateWithError est = norm_hp_mc(F, p, samples, cfg.seed);
            csv.row(fmt(p) + ",mc," + fmt(est.value) + "," + fmt(est.stderr_of_value) + "," +
                    fmt(est.samples));
        }
    }
}

void run_gcdsum(const ExperimentConfig& cfg, CsvWriter& csv) {
    SearchStrategy strategy = parse_strategy(cfg.params.at("strategy").get<std::string>());
    std::uint64_t universe = get_u64(cfg.params, "universe_limit");
    std::vector<double> alphas = get_real_list(cfg.params, "alpha_list");
    for (double alpha : alphas)
        if (alpha == 1.0)
            csv.comment("note: alpha=1 reference shape follows the unnormalized-sum convention "
                        "(log log N)^2; the normalized form differs by one log log factor");
    csv.header("N,alpha,strategy,gamma,lambda,set");
    for (double alpha : alphas)
        for (std::uint64_t N : get_u64_list(cfg.params, "N_list")) {
            GcdExtremalResult r = optimize_gamma(N, universe, alpha, strategy);
            csv.row(fmt(N) + "," + fmt(alpha) + "," + cfg.params.at("strategy").get<std::string>() +
                    "," + fmt(r.gamma) + "," + fmt(r.lambda) + "," + join(r.set, " "));
        }
}

void run_randmult(const ExperimentConfig& cfg, CsvWriter& csv) {
    RandomModel model = parse_model(cfg.params.at("model").get<std::string>());
    double exponent = get_real(cfg.params, "exponent");
    std::uint64_t trials = get_u64(cfg.params, "trials");
    csv.header("N,model,exponent,estimate,stderr,trials,seed");
    for (std::uint64_t N : get_u64_list(cfg.params, "N_list")) {
        EstimateWithError est = moment_estimate(model, N, exponent, trials, cfg.seed);
        csv.row(fmt(N) + "," + cfg.params.at("model").get<std::string>() + "," + fmt(exponent) +
                "," + fmt(est.value) + "," + fmt(est.stderr_of_value) + "," + fmt(trials) + "," +
                fmt(cfg.seed));
    }
}

void run_helson(const ExperimentConfig& cfg, CsvWriter& csv) {
    std::uint64_t trials = get_u64(cfg.params, "trials");
    csv.header("N,mean_abs_sum,stderr,ratio_to_sqrtN");
    for (std::uint64_t N : get_u64_list(cfg.params, "N_list")) {
        EstimateWithError est = moment_estimate(RandomModel::steinhaus, N, 1.0, trials, cfg.seed);
        double ratio = est.value / std::sqrt(static_cast<double>(N));
        csv.row(fmt(N) + "," + fmt(est.value) + "," + fmt(est.stderr_of_value) + "," + fmt(ratio));
    }
}

void run_zetamax(const ExperimentConfig& cfg, CsvWriter& csv) {
    std::uint64_t N = get_u64(cfg.params, "N");
    double t_lo = get_real(cfg.params, "t_lo");
    double t_hi = get_real(cfg.params, "t_hi");
    std::uint64_t gridpoints = get_u64(cfg.params, "gridpoints");
    bool refine = cfg.params.at("refine").get<bool>();
    MaxSearchResult r = max_abs_partial(N, t_lo, t_hi, gridpoints, refine);
    csv.header("N,t_lo,t_hi,gridpoints,t_star,value");
    csv.row(fmt(N) + "," + fmt(t_lo) + "," + fmt(t_hi) + "," + fmt(gridpoints) + "," +
            fmt(r.t_star) + "," + fmt(r.value));
}

void run_sidon(const ExperimentConfig& cfg, CsvWriter& csv) {
    std::uint32_t grid = static_cast<std::uint32_t>(get_u64(cfg.params, "grid_per_dim"));
    std::uint32_t restarts = static_cast<std::uint32_t>(get_u64(cfg.params, "restarts"));
    csv.header("N,S_N_estimate,grid_per_dim,restarts");
    for (std::uint64_t N : get_u64_list(cfg.params, "N_list")) {
        double s = sidon_constant(static_cast<std::uint32_t>(N), grid, restarts, cfg.seed);
        csv.row(fmt(N) + "," + fmt(s) + "," + fmt(static_cast<std::uint64_t>(grid)) + "," +
                fmt(static_cast<std::uint64_t>(restarts)));
    }
}

void run_hilbert(const ExperimentConfig& cfg, CsvWriter& csv) {
    std::uint64_t max_size = get_u64(cfg.params, "max_size");
    csv.header("M,norm");
    for (std::uint64_t M = 1; M <= max_size; ++M)
        csv.row(fmt(M) + "," + fmt(hilbert_norm(hilbert_truncation(M))));
}

void run_field(const ExperimentConfig& cfg, CsvWriter& csv) {
    std::uint64_t prime_limit = get_u64(cfg.params, "prime_limit");
    std::uint64_t draws = get_u64(cfg.params, "draws");
    std::uint64_t gridpoints = get_u64(cfg.params, "gridpoints");
    std::vector<FieldMax> results(draws);
    std::vector<std::uint64_t> primes = sieve_primes(prime_limit);
    std::vector<double> grid(gridpoints);
    for (std::uint64_t k = 0; k < gridpoints; ++k)
        grid[k] = static_cast<double>(k) / static_cast<double>(gridpoints - 1);
    parallel_for(draws, [&](std::size_t begin, std::size_t end) {
        for (std::size_t d = begin; d < end; ++d) {
            std::vector<double> thetas = field_thetas(prime_limit, mix64(cfg.seed, d));
            results[d] = field_max_over(primes, thetas, grid);
        }
    });
    csv.header("prime_limit,draw,x_star,m");
    for (std::uint64_t d = 0; d < draws; ++d)
        csv.row(fmt(prime_limit) + "," + fmt(d) + "," + fmt(results[d].x_star) + "," +
                fmt(results[d].m));
}

void run_partialsum(const ExperimentConfig& cfg, CsvWriter& csv) {
    DirichletPolynomial F = ones_polynomial(get_u64(cfg.params, "n_max"), 0.0);
    double p = get_real(cfg.params, "p");
    std::uint64_t samples = get_u64(cfg.params, "samples");
    csv.header("N,p,ratio,stderr,samples");
    for (std::uint64_t N : get_u64_list(cfg.params, "N_list")) {
        EstimateWithError est = partial_sum_ratio(F, N, p, samples, cfg.seed);
        csv.row(fmt(N) + "," + fmt(p) + "," + fmt(est.value) + "," + fmt(est.stderr_of_value) +
                "," + fmt(samples));
    }
}

const std::map<std::string, ExperimentDef>& registry() {
    static const std::map<std::string, ExperimentDef> defs = {
        {"norms",
         {{{"n_max", ParamKind::pos_int, true, {}},
           {"p_list", ParamKind::pos_real_list, true, {}},
           {"sigma", ParamKind::real, false, 0.0},
           {"samples", ParamKind::pos_int, false, 100000}},
          "H^p norms of sum_{n<=n_max} n^{-sigma} n^{-s}: exact for even p, Monte Carlo otherwise",
          run_norms}},
        {"gcdsum",
         {{{"N_list", ParamKind::pos_int_list, true, {}},
           {"universe_limit", ParamKind::pos_int, true, {}},
           {"alpha_list", ParamKind::pos_real_list, true, {}},
           {"strategy", ParamKind::string, true, {}}},
          "extremal GCD-sum search: Gamma and Lambda over N-element sets under a search strategy",
          run_gcdsum}},
        {"randmult",
         {{{"model", ParamKind::string, true, {}},
           {"N_list", ParamKind::pos_int_list, true, {}},
           {"exponent", ParamKind::pos_real, true, {}},
           {"trials", ParamKind::pos_int, true, {}}},
          "moments E|sum_{n<=N} chi(n)|^exponent of random multiplicative character sums",
          run_randmult}},
        {"helson",
         {{{"N_list", ParamKind::pos_int_list, true, {}},
           {"trials", ParamKind::pos_int, true, {}}},
          "first absolute moment of Steinhaus character sums and the ratio E|sum chi(n)|/sqrt(N)",
          run_helson}},
        {"zetamax",
         {{{"N", ParamKind::pos_int, true, {}},
           {"t_lo", ParamKind::real, true, {}},
           {"t_hi", ParamKind::real, true, {}},
           {"gridpoints", ParamKind::pos_int, true, {}},
           {"refine", ParamKind::boolean, false, true}},
          "maximum of |sum_{n<=N} n^{-1/2-it}| over a critical-line segment",
          run_zetamax}},
        {"sidon",
         {{{"N_list", ParamKind::pos_int_list, true, {}},
           {"grid_per_dim", ParamKind::pos_int, false, 128},
           {"restarts", ParamKind::pos_int, false, 16}},
          "numerical Sidon constant S(N) via Bohr-torus grid sup and coefficient ascent",
          run_sidon}},
        {"hilbert",
         {{{"max_size", ParamKind::pos_int, true, {}}},
          "spectral norms of multiplicative Hilbert matrix truncations M = 1..max_size",
          run_hilbert}},
        {"field",
         {{{"prime_limit", ParamKind::pos_int, true, {}},
           {"draws", ParamKind::pos_int, true, {}},
           {"gridpoints", ParamKind::pos_int, false, 4096}},
          "max over [0,1] of the random Euler-product field, one row per draw",
          run_field}},
        {"partialsum",
         {{{"n_max", ParamKind::pos_int, true, {}},
           {"N_list", ParamKind::pos_int_list, true, {}},
           {"p", ParamKind::pos_real, true, {}},
           {"samples", ParamKind::pos_int, false, 100000}},
          "norm ratio ||S_N F||_p / ||F||_p for F = sum_{n<=n_max} n^{-s}",
          run_partialsum}},
    };
    return defs;
}

void check_param(const std::string& experiment, const ParamSpec& spec, const nlohmann::json& v) {
    auto fail = [&](const std::string& why) {
        throw validation_error("experiment '" + experiment + "', param '" + spec.name + "': " + why);
    };
    switch (spec.kind) {
        case ParamKind::pos_int:
            if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
                fail("expected a positive integer");
            break;
        case ParamKind::pos_int_list: {
            if (!v.is_array() || v.empty())
                fail("expected a nonempty array of positive integers");
            for (const auto& x : v)
                if (!x.is_number_integer() || x.get<std::int64_t>() <= 0)
                    fail("expected a positive integer entry");
            break;
        }
        case ParamKind::real:
            if (!v.is_number())
                fail("expected a number");
            break;
        case ParamKind::pos_real:
            if (!v.is_number() || v.get<double>() <= 0.0)
                fail("expected a positive number");
            break;
        case ParamKind::pos_real_list: {
            if (!v.is_array() || v.empty())
                fail("expected a nonempty array of positive numbers");
            for (const auto& x : v)
                if (!x.is_number() || x.get<double>() <= 0.0)
                    fail("expected a positive number entry");
            break;
        }
        case ParamKind::string:
            if (!v.is_string())
                fail("expected a string");
            break;
        case ParamKind::boolean:
            if (!v.is_boolean())
                fail("expected a boolean");
            break;
    }
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object())
        throw validation_error("config must be a JSON object");
    for (const auto& [key, val] : doc.items())
        if (key != "experiment" && key != "params" && key != "seed" && key != "output_path")
            throw validation_error("unknown config key '" + key + "'");
    if (!doc.contains("experiment") || !doc["experiment"].is_string())
        throw validation_error("config requires a string 'experiment' key");

    ExperimentConfig cfg;
    cfg.experiment = doc["experiment"].get<std::string>();
    auto it = registry().find(cfg.experiment);
    if (it == registry().end()) {
        std::string names;
        for (const auto& [name, def] : registry())
            names += (names.empty() ? "" : ", ") + name;
        throw validation_error("unknown experiment '" + cfg.experiment + "' (valid: " + names +
                               ")");
    }

    nlohmann::json params =
        doc.contains("params") ? doc["params"] : nlohmann::json::object();
    if (!params.is_object())
        throw validation_error("'params' must be a JSON object");
    const ExperimentDef& def = it->second;
    for (const auto& [key, val] : params.items()) {
        bool known = false;
        for (const ParamSpec& spec : def.params)
            if (spec.name == key) {
                check_param(cfg.experiment, spec, val);
                known = true;
                break;
            }
        if (!known)
            throw validation_error("experiment '" + cfg.experiment + "': unknown param '" + key +
                                   "'");
    }
    for (const ParamSpec& spec : def.params) {
        if (params.contains(spec.name))
            continue;
        if (spec.required)
            throw validation_error("experiment '" + cfg.experiment + "': missing required param '" +
                                   spec.name + "'");
        params[spec.name] = spec.default_value;  // record the default
    }
    cfg.params = params;

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() &&
                                                   doc["seed"].get<std::int64_t>() >= 0))
            throw validation_error("'seed' must be a nonnegative integer");
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("output_path")) {
        if (!doc["output_path"].is_string())
            throw validation_error("'output_path' must be a string");
        cfg.output_path = doc["output_path"].get<std::string>();
    } else {
        cfg.output_path = "out.csv";
    }
    return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
    nlohmann::json doc;
    doc["experiment"] = cfg.experiment;
    doc["params"] = cfg.params;
    doc["seed"] = cfg.seed;
    doc["output_path"] = cfg.output_path;
    return doc.dump();
}

RunReport run_experiment(const ExperimentConfig& cfg) {
    auto it = registry().find(cfg.experiment);
    if (it == registry().end())
        throw validation_error("unknown experiment '" + cfg.experiment + "'");
    auto start = std::chrono::steady_clock::now();

    CsvWriter csv;
    std::string canonical = serialize_config(cfg);
    csv.comment(std::string("artifact_version=") + kArtifactVersion);
    csv.comment("config_hash=" + hex64(fnv1a64(canonical)));
    csv.comment("seed=" + std::to_string(cfg.seed));
    it->second.run(cfg, csv);

    namespace fs = std::filesystem;
    fs::path target(cfg.output_path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot open '" + tmp.string() + "' for writing");
        out << csv.str();
        out.flush();
        if (!out)
            throw io_error("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw io_error("cannot move output into place at '" + target.string() + "': " +
                       ec.message());
    }

    RunReport report;
    report.config_echo = cfg;
    report.rows_written = csv.rows();
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.artifact_version = kArtifactVersion;
    return report;
}

std::vector<ExperimentInfo> list_experiments() {
    std::vector<ExperimentInfo> infos;
    for (const auto& [name, def] : registry()) {
        ExperimentInfo info;
        info.name = name;
        for (const ParamSpec& spec : def.params)
            (spec.required ? info.required_params : info.optional_params).push_back(spec.name);
        info.description = def.description;
        infos.push_back(std::move(info));
    }
    return infos;
}

}  // namespace dlab
