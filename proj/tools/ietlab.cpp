// ietlab: command-line front end for the interval exchange toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iet/dimension_group.hpp"
#include "iet/error.hpp"
#include "iet/induction.hpp"
#include "iet/io.hpp"
#include "iet/measures.hpp"
#include "iet/random.hpp"
#include "iet/rotation.hpp"
#include "iet/symbolic.hpp"

namespace {

using iet::io::Json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// ── Run configuration ───────────────────────────────────────────────────

struct RunConfig {
    std::string subcommand;
    std::string spec;
    std::string sequence;
    std::string matrix;
    std::string ray;
    std::string x = "0";
    std::size_t steps = 1000;
    std::size_t depth = 40;
    std::size_t n_iter = 100000;
    std::optional<double> tol;
    std::size_t bins = iet::kDefaultBins;
    std::size_t max_block = iet::kDefaultMaxBlock;
    std::size_t min_repeats = iet::kDefaultMinRepeats;
    std::size_t k = 0;
    std::size_t block = 2;
    std::size_t block_max = 12;
    std::size_t starts = 16;
    std::size_t n = 0;
    std::size_t random_n = 0;
    std::size_t period = 0;
    bool flips = false;
    bool oriented = false;
    std::vector<std::string> target;
    std::vector<std::string> equiv;
    std::string dot;
    std::uint64_t seed = 1;
    std::string output;
    std::string format = "json";

    double tol_or(double fallback) const { return tol.value_or(fallback); }

    Json to_json() const {
        auto opt = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); };
        return Json{{"subcommand", subcommand},
                    {"spec", opt(spec)},
                    {"sequence", opt(sequence)},
                    {"matrix", opt(matrix)},
                    {"ray", opt(ray)},
                    {"x", x},
                    {"steps", steps},
                    {"depth", depth},
                    {"N", n_iter},
                    {"tol", tol ? Json(*tol) : Json(nullptr)},
                    {"bins", bins},
                    {"max_block", max_block},
                    {"min_repeats", min_repeats},
                    {"k", k},
                    {"block", block},
                    {"block_max", block_max},
                    {"starts", starts},
                    {"n", n},
                    {"random_n", random_n},
                    {"period", period},
                    {"flips", flips},
                    {"oriented", oriented},
                    {"target", target},
                    {"equiv", equiv},
                    {"dot", opt(dot)},
                    {"seed", seed},
                    {"output", output},
                    {"format", format}};
    }
};

struct Output {
    Json result = Json::object();
    std::string text;
    std::optional<std::string> csv;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) { return iet::ScalarTraits<double>::to_string(v); }

// ── Input helpers ───────────────────────────────────────────────────────

iet::io::AnyExchange require_spec(const RunConfig& cfg) {
    if (cfg.spec.empty()) throw UsageError("--spec is required");
    return iet::io::load_spec(cfg.spec);
}

template <iet::Scalar S>
iet::MatrixSequence induced_sequence(const iet::IntervalExchange<S>& spec, std::size_t depth, Json& meta) {
    auto run = iet::induce(spec, depth);
    if (run.failure)
        meta["induction_failure"] = Json{{"kind", iet::to_string(run.failure->kind)},
                                         {"step", run.failure->step},
                                         {"message", run.failure->message}};
    return std::move(run.sequence);
}

// Sequence from --sequence, or from inducing --spec for --depth steps.
iet::MatrixSequence require_sequence(const RunConfig& cfg, Json& meta) {
    if (!cfg.sequence.empty()) {
        meta["source"] = "file";
        return iet::io::load_sequence(cfg.sequence);
    }
    if (cfg.spec.empty()) throw UsageError("--spec or --sequence is required");
    meta["source"] = "induction";
    return std::visit([&](const auto& spec) { return induced_sequence(spec, cfg.depth, meta); }, iet::io::load_spec(cfg.spec));
}

iet::IntegerMatrix require_matrix(const RunConfig& cfg) {
    if (cfg.matrix.empty()) throw UsageError("--matrix is required");
    std::string text = cfg.matrix;
    if (std::filesystem::exists(text)) {
        std::ifstream in(text);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return iet::io::matrix_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        iet::fail(iet::ErrorKind::ParseError, std::string("matrix: ") + e.what());
    }
}

// ── Subcommands ─────────────────────────────────────────────────────────

Output cmd_eval(const RunConfig& cfg) {
    return std::visit(
        [&](const auto& spec) {
            using S = std::decay_t<decltype(spec.lengths().front())>;
            const S x = iet::io::parse_point<S>(cfg.x);
            const S y = spec(x);
            Output out;
            out.result = Json{{"x", iet::scalar_to_string(x)},
                              {"interval", spec.interval_of(x) + 1},
                              {"image", iet::scalar_to_string(y)},
                              {"image_value", iet::to_double(y)}};
            out.text = fmt(iet::to_double(y));
            if constexpr (iet::ScalarTraits<S>::exact) out.text += " (" + y.to_string() + ")";
            out.text += "\n";
            return out;
        },
        require_spec(cfg));
}

Output cmd_orbit(const RunConfig& cfg) {
    return std::visit(
        [&](const auto& spec) {
            using S = std::decay_t<decltype(spec.lengths().front())>;
            const auto orb = iet::orbit(spec, iet::io::parse_point<S>(cfg.x), cfg.steps);
            Output out;
            Json points = Json::array();
            for (const auto& p : orb.points) points.push_back(iet::scalar_to_string(p));
            out.result = Json{{"spec", iet::io::spec_to_json(spec)},
                              {"points", std::move(points)},
                              {"interval_indices", orb.interval_indices}};
            std::ostringstream csv;
            iet::io::write_orbit_csv(csv, orb);
            out.csv = csv.str();
            std::ostringstream text;
            for (std::size_t t = 0; t < orb.points.size(); ++t)
                text << t << "  " << iet::scalar_to_string(orb.points[t]) << "  v" << orb.interval_indices[t] << '\n';
            out.text = text.str();
            return out;
        },
        require_spec(cfg));
}

Output cmd_code(const RunConfig& cfg) {
    iet::Ray ray;
    if (!cfg.ray.empty()) {
        std::ifstream in(cfg.ray);
        if (!in) iet::fail(iet::ErrorKind::InvalidArgument, "cannot open " + cfg.ray);
        ray = iet::io::read_ray(in);
    } else {
        ray = std::visit(
            [&](const auto& spec) {
                using S = std::decay_t<decltype(spec.lengths().front())>;
                return iet::code_orbit(spec, iet::io::parse_point<S>(cfg.x), cfg.steps);
            },
            require_spec(cfg));
    }
    std::vector<iet::BlockStats> stats;
    for (std::size_t n = 1; n <= cfg.block_max && n <= ray.size(); ++n) stats.push_back(iet::block_stats(ray, n));

    Output out;
    Json stats_json = Json::array();
    for (const auto& s : stats) stats_json.push_back(iet::io::block_stats_to_json(s));
    out.result = Json{{"alphabet", ray.alphabet}, {"symbols", ray.symbols}, {"block_stats", std::move(stats_json)}};
    std::ostringstream csv;
    iet::io::write_block_stats_csv(csv, stats);
    out.csv = csv.str();
    std::ostringstream text;
    iet::io::write_ray(text, ray);
    out.text = text.str();
    return out;
}

Output cmd_induce(const RunConfig& cfg) {
    return std::visit(
        [&](const auto& spec) {
            auto run = iet::induce(spec, cfg.depth);
            Output out;
            out.result = Json{{"steps", run.sequence.size()},
                              {"sequence", iet::io::sequence_to_json(run.sequence)},
                              {"tags", run.sequence.tags},
                              {"last", iet::io::spec_to_json(run.last)},
                              {"failure", nullptr}};
            if (run.failure)
                out.result["failure"] = Json{{"kind", iet::to_string(run.failure->kind)},
                                             {"step", run.failure->step},
                                             {"message", run.failure->message}};
            if (!cfg.dot.empty()) {
                std::ofstream dot(cfg.dot);
                if (!dot) iet::fail(iet::ErrorKind::InvalidArgument, "cannot write " + cfg.dot);
                dot << iet::to_bratteli(run.sequence).to_dot();
            }
            std::ostringstream text;
            for (std::size_t i = 0; i < run.sequence.size(); ++i)
                text << i + 1 << ' ' << run.sequence.tags[i] << ' ' << run.sequence.matrices[i].to_string() << '\n';
            if (run.failure) text << "stopped: " << iet::to_string(run.failure->kind) << " at step " << run.failure->step << '\n';
            out.text = text.str();
            return out;
        },
        require_spec(cfg));
}

Output cmd_stationary(const RunConfig& cfg) {
    Json meta = Json::object();
    auto seq = require_sequence(cfg, meta);
    auto witness = iet::detect_stationarity(seq, cfg.max_block, cfg.min_repeats);
    Output out;
    out.result = Json{{"input", meta}, {"length", seq.size()}, {"witness", witness ? iet::io::witness_to_json(*witness) : Json(nullptr)}};
    if (witness) {
        out.result["primitive"] = iet::is_primitive(witness->block_product);
        out.text = "stationary from " + std::to_string(witness->start) + " with block length " +
                   std::to_string(witness->block_length) + ": " + witness->block_product.to_string() + "\n";
    } else {
        out.result["primitive"] = nullptr;
        out.text = "no stationary tail found\n";
    }
    return out;
}

Output cmd_ergodic(const RunConfig& cfg) {
    const double tol = cfg.tol_or(iet::kStateDimTolerance);
    iet::ErgodicityVerdict verdict;
    Json meta = Json::object();
    if (!cfg.sequence.empty()) {
        meta["source"] = "file";
        verdict = iet::classify_sequence(iet::io::load_sequence(cfg.sequence), cfg.max_block, tol, cfg.min_repeats);
    } else {
        meta["source"] = "induction";
        verdict = std::visit(
            [&](const auto& spec) { return iet::strict_ergodicity_verdict(spec, cfg.depth, cfg.max_block, tol); },
            require_spec(cfg));
    }
    Output out;
    out.result = iet::io::verdict_to_json(verdict);
    out.result["input"] = meta;
    std::ostringstream text;
    text << iet::to_string(verdict.status) << '\n';
    if (verdict.witness)
        text << "witness: start " << verdict.witness->start << ", block length " << verdict.witness->block_length << ", product "
             << verdict.witness->block_product.to_string() << '\n';
    if (verdict.perron)
        text << "perron eigenvalue " << fmt(verdict.perron->eigenvalue) << " in [" << fmt(verdict.perron->lower_cw) << ", "
             << fmt(verdict.perron->upper_cw) << "]\n";
    for (const auto& d : verdict.diagnostics) text << "note: " << d << '\n';
    out.text = text.str();
    return out;
}

Output cmd_simplex(const RunConfig& cfg) {
    Json meta = Json::object();
    auto seq = require_sequence(cfg, meta);
    const std::size_t k = cfg.k ? cfg.k : seq.size();
    if (k > seq.size()) iet::fail(iet::ErrorKind::InvalidArgument, "k exceeds the sequence length");
    const double tol = cfg.tol_or(iet::kStateDimTolerance);
    auto diameters = iet::simplex_diameters(seq, k);
    auto last = iet::state_simplex(seq, k);
    const std::size_t dim = iet::estimate_state_dim(seq, k, tol);
    Output out;
    out.result = Json{{"input", meta}, {"k", k}, {"diameters", diameters}, {"columns", last.columns}, {"state_dim", dim}};
    std::ostringstream csv;
    csv << "k,diameter\n";
    for (std::size_t i = 0; i < diameters.size(); ++i) csv << i << ',' << fmt(diameters[i]) << '\n';
    out.csv = csv.str();
    out.text = "state dimension estimate " + std::to_string(dim) + ", diameter " + fmt(diameters.back()) + "\n";
    return out;
}

Output cmd_pf(const RunConfig& cfg) {
    const auto m = require_matrix(cfg);
    const auto pf = iet::perron_frobenius(m, cfg.tol_or(1e-12));
    Output out;
    out.result = iet::io::pf_to_json(pf);
    out.result["matrix"] = iet::io::matrix_to_json(m);
    std::ostringstream csv;
    csv << "iteration,lower,upper\n";
    for (std::size_t i = 0; i < pf.brackets.size(); ++i)
        csv << i << ',' << fmt(pf.brackets[i].first) << ',' << fmt(pf.brackets[i].second) << '\n';
    out.csv = csv.str();
    out.text = fmt(pf.eigenvalue) + "\n";
    return out;
}

bool looks_exact(const std::string& s) {
    return s.find("sqrt") != std::string::npos || s.find('/') != std::string::npos;
}

Output cmd_rotation(const RunConfig& cfg) {
    Output out;
    if (!cfg.equiv.empty()) {
        if (cfg.equiv.size() != 2) throw UsageError("--equiv takes two numbers");
        const bool exact = looks_exact(cfg.equiv[0]) || looks_exact(cfg.equiv[1]);
        bool eq = false;
        if (exact) {
            eq = iet::modular_equivalent(iet::QuadraticNumber::parse(cfg.equiv[0]), iet::QuadraticNumber::parse(cfg.equiv[1]),
                                         cfg.depth);
        } else {
            eq = iet::modular_equivalent(iet::io::parse_point<double>(cfg.equiv[0]), iet::io::parse_point<double>(cfg.equiv[1]),
                                         cfg.depth, cfg.tol_or(1e-15));
        }
        out.result = Json{{"equivalence", Json{{"x", cfg.equiv[0]}, {"y", cfg.equiv[1]}, {"mode", exact ? "exact" : "float"},
                                               {"equivalent", eq}}}};
        out.text = std::string(eq ? "equivalent" : "not equivalent") + "\n";
        return out;
    }

    Json meta = Json::object();
    iet::MatrixSequence seq;
    if (!cfg.sequence.empty()) {
        meta["source"] = "file";
        seq = iet::io::load_sequence(cfg.sequence);
    } else {
        auto raw = require_sequence(cfg, meta);
        if (cfg.block > 1) {
            std::vector<std::size_t> cuts;
            for (std::size_t c = cfg.block; c < raw.size(); c += cfg.block) cuts.push_back(c);
            const std::size_t whole = raw.size() / cfg.block * cfg.block;
            raw.matrices.resize(whole);
            raw.tags.resize(whole);
            while (!cuts.empty() && cuts.back() >= whole) cuts.pop_back();
            seq = raw.empty() ? raw : iet::telescope(raw, cuts);
            meta["source"] = "induction, telescoped in blocks of " + std::to_string(cfg.block);
        } else {
            seq = std::move(raw);
            meta["source"] = "induction, raw Rauzy matrices";
        }
    }
    std::vector<iet::MoebiusMatrix> moebius;
    for (const auto& m : seq.matrices) moebius.push_back(iet::MoebiusMatrix::from_matrix(m));
    const auto rot = iet::rotation_number(moebius, cfg.depth, cfg.tol_or(1e-10));
    out.result = iet::io::rotation_to_json(rot);
    out.result["input"] = meta;
    out.result["surd"] = nullptr;
    std::ostringstream text;
    text << fmt(rot.value) << (rot.converged ? "" : " (not converged)") << '\n';
    if (cfg.period) {
        if (cfg.period > moebius.size()) iet::fail(iet::ErrorKind::InvalidArgument, "period exceeds the sequence length");
        const auto surd = iet::detect_quadratic_surd(std::span(moebius).first(cfg.period));
        out.result["surd"] = iet::io::surd_to_json(surd);
        text << "fixed point of " << surd.a.get_str() << "x^2 + " << surd.b.get_str() << "x + " << surd.c.get_str() << ": "
             << surd.root.to_string() << '\n';
    }
    std::ostringstream csv;
    csv << "k,convergent\n";
    for (std::size_t i = 0; i < rot.convergents.size(); ++i)
        csv << i + 1 << ',' << (rot.convergents[i] ? rot.convergents[i]->get_str() : std::string("inf")) << '\n';
    out.csv = csv.str();
    out.text = text.str();
    return out;
}

template <iet::Scalar S>
Output census_output(const iet::IntervalExchange<S>& spec, iet::Rng& rng, const RunConfig& cfg) {
    std::vector<S> starts;
    for (std::size_t i = 0; i < cfg.starts; ++i)
        starts.push_back(iet::ScalarTraits<S>::from_rational(iet::Rational(rng.uniform())));
    const auto census = iet::estimate_ergodic_count(spec, starts, cfg.n_iter, cfg.tol_or(iet::kDefaultClusterTolerance), cfg.bins);

    Output out;
    out.result = iet::io::census_to_json(census);
    out.result["spec"] = iet::io::spec_to_json(spec);
    out.result["assignment"] = census.assignment;
    Json starts_json = Json::array();
    for (const auto& m : census.per_start) starts_json.push_back(m.x0);
    out.result["starts"] = std::move(starts_json);
    out.result["birkhoff"] = nullptr;
    if (!cfg.target.empty()) {
        if (cfg.target.size() != 2) throw UsageError("--target takes two endpoints");
        const S lo = iet::io::parse_point<S>(cfg.target[0]);
        const S hi = iet::io::parse_point<S>(cfg.target[1]);
        Json averages = Json::array();
        for (const auto& m : census.per_start) {
            const S x0 = iet::io::parse_point<S>(m.x0);
            averages.push_back(iet::birkhoff_average(spec, x0, lo, hi, cfg.n_iter));
        }
        out.result["birkhoff"] = Json{{"target", cfg.target}, {"averages", std::move(averages)}};
    }

    std::ostringstream csv;
    csv << "start,bin_lo,bin_hi,mass\n";
    for (const auto& m : census.per_start) {
        std::ostringstream block;
        iet::io::write_histogram_csv(block, m);
        std::string line;
        std::istringstream lines(block.str());
        std::getline(lines, line);  // header
        while (std::getline(lines, line)) csv << m.x0 << ',' << line << '\n';
    }
    out.csv = csv.str();
    std::ostringstream text;
    text << census.estimated_count << " cluster(s), bound " << census.bound << (census.bound_respected ? " respected" : " exceeded");
    if (census.non_minimal) text << " (non-minimal dynamics: bound informational)";
    text << '\n';
    out.text = text.str();
    return out;
}

Output cmd_measures(const RunConfig& cfg) {
    iet::Rng rng(cfg.seed);
    if (cfg.random_n) {
        auto spec = iet::random_interval_exchange(rng, cfg.random_n, cfg.flips);
        return census_output(spec, rng, cfg);
    }
    return std::visit([&](const auto& spec) { return census_output(spec, rng, cfg); }, require_spec(cfg));
}

Output cmd_bounds(const RunConfig& cfg) {
    if (cfg.flips == cfg.oriented) throw UsageError("give exactly one of --oriented, --flips");
    const std::size_t bound = iet::measure_bounds(cfg.n, cfg.flips);
    Output out;
    out.result = Json{{"n", cfg.n}, {"has_flips", cfg.flips}, {"bound", bound}};
    out.text = std::to_string(bound) + "\n";
    return out;
}

Output cmd_kgroups(const RunConfig& cfg) {
    const auto [k0, k1] = iet::k_groups(cfg.n);
    Output out;
    out.result = Json{{"n", cfg.n}, {"K0_rank", k0}, {"K1_rank", k1}};
    out.text = "K0 = Z^" + std::to_string(k0) + ", K1 = Z^" + std::to_string(k1) + "\n";
    return out;
}

Output cmd_surface(const RunConfig& cfg) {
    const auto types = iet::surface_parameters(cfg.n);
    Output out;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& t : types) {
        list.push_back(Json{{"genus", t.genus}, {"boundary_components", t.boundary_components}});
        text << "g=" << t.genus << " m=" << t.boundary_components << '\n';
    }
    out.result = Json{{"n", cfg.n}, {"surfaces", std::move(list)}};
    out.text = text.str();
    return out;
}

// ── Output ──────────────────────────────────────────────────────────────

std::string render(const RunConfig& cfg, const Output& out) {
    if (cfg.format == "json") return Json{{"config", cfg.to_json()}, {"result", out.result}}.dump(2) + "\n";
    if (cfg.format == "text") return out.text;
    if (!out.csv) throw UsageError("subcommand " + cfg.subcommand + " has no csv output");
    return *out.csv;
}

std::string resolve_output_path(const RunConfig& cfg) {
    if (!cfg.output.empty()) return cfg.output;
    if (const char* dir = std::getenv("IET_OUTPUT_DIR"); dir && *dir) {
        const std::string ext = cfg.format == "text" ? "txt" : cfg.format;
        return (std::filesystem::path(dir) / (cfg.subcommand + "." + ext)).string();
    }
    return "-";
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Interval exchange transformations: dynamics, induction, ergodicity and coding"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("-o,--output", cfg.output, "Output file (default: $IET_OUTPUT_DIR/<subcommand>.<ext> or stdout)");
        sub->add_option("--seed", cfg.seed, "Seed of the random generator");
    };
    auto spec_opt = [&](CLI::App* sub) { sub->add_option("--spec", cfg.spec, "Interval exchange JSON file"); };
    auto seq_opt = [&](CLI::App* sub) { sub->add_option("--sequence", cfg.sequence, "Matrix sequence JSON file"); };
    auto pos = CLI::PositiveNumber;

    auto* eval = app.add_subcommand("eval", "Evaluate the map at a point");
    spec_opt(eval);
    eval->add_option("--x", cfg.x, "Point in [0,1)")->required();

    auto* orbit = app.add_subcommand("orbit", "Forward orbit of a point");
    spec_opt(orbit);
    orbit->add_option("--x", cfg.x, "Starting point")->required();
    orbit->add_option("--steps", cfg.steps, "Number of iterations")->check(pos);

    auto* code = app.add_subcommand("code", "Symbolic coding and block statistics");
    spec_opt(code);
    code->add_option("--x", cfg.x, "Starting point");
    code->add_option("--steps", cfg.steps, "Iterations to code (ray length is steps + 1)")->check(pos);
    code->add_option("--ray", cfg.ray, "Read the ray from a text file instead of coding an orbit");
    code->add_option("--block-max", cfg.block_max, "Largest block length for statistics")->check(pos);

    auto* induce = app.add_subcommand("induce", "Rauzy-Veech induction");
    spec_opt(induce);
    induce->add_option("--depth", cfg.depth, "Number of induction steps")->check(pos);
    induce->add_option("--dot", cfg.dot, "Write the Bratteli diagram as DOT");

    auto* stationary = app.add_subcommand("stationary", "Search for a stationary tail");
    spec_opt(stationary);
    seq_opt(stationary);
    stationary->add_option("--depth", cfg.depth, "Induction depth when reading --spec")->check(pos);
    stationary->add_option("--max-block", cfg.max_block, "Largest block length")->check(pos);
    stationary->add_option("--min-repeats", cfg.min_repeats, "Required block repetitions")->check(pos);

    auto* ergodic = app.add_subcommand("ergodic", "Strict ergodicity verdict");
    spec_opt(ergodic);
    seq_opt(ergodic);
    ergodic->add_option("--depth", cfg.depth, "Induction depth")->check(pos);
    ergodic->add_option("--max-block", cfg.max_block, "Largest block length")->check(pos);
    ergodic->add_option("--min-repeats", cfg.min_repeats, "Required block repetitions")->check(pos);
    ergodic->add_option("--tol", cfg.tol, "State-dimension tolerance")->check(pos);

    auto* simplex = app.add_subcommand("simplex", "State-simplex diameters and dimension");
    spec_opt(simplex);
    seq_opt(simplex);
    simplex->add_option("--depth", cfg.depth, "Induction depth when reading --spec")->check(pos);
    simplex->add_option("--k", cfg.k, "Number of matrices (default: all)")->check(pos);
    simplex->add_option("--tol", cfg.tol, "Relative singular-value threshold")->check(pos);

    auto* pf = app.add_subcommand("pf", "Perron-Frobenius eigenpair");
    pf->add_option("--matrix", cfg.matrix, "Matrix as JSON text or a JSON file")->required();
    pf->add_option("--tol", cfg.tol, "Bracket width at which to stop")->check(pos);

    auto* rotation = app.add_subcommand("rotation", "Matrix continued fraction and modular equivalence");
    spec_opt(rotation);
    seq_opt(rotation);
    rotation->add_option("--depth", cfg.depth, "Truncation depth, or continued-fraction depth with --equiv")->check(pos);
    rotation->add_option("--tol", cfg.tol, "Convergence tolerance")->check(pos);
    rotation->add_option("--block", cfg.block, "Telescope induced matrices in blocks of this size")->check(pos);
    rotation->add_option("--period", cfg.period, "Detect the quadratic surd of the first PERIOD matrices")->check(pos);
    rotation->add_option("--equiv", cfg.equiv, "Test two numbers for modular equivalence")->expected(2);

    auto* measures = app.add_subcommand("measures", "Census of empirical invariant measures");
    spec_opt(measures);
    measures->add_option("--random-n", cfg.random_n, "Use a seeded random irreducible exchange on this many intervals")
        ->check(CLI::Range(2, 1000));
    measures->add_flag("--flips", cfg.flips, "Random exchange with flips");
    measures->add_option("--starts", cfg.starts, "Number of random starting points")->check(CLI::Range(2, 100000));
    measures->add_option("--N", cfg.n_iter, "Iterations per start")->check(pos);
    measures->add_option("--bins", cfg.bins, "Uniform bins before refinement")->check(pos);
    measures->add_option("--tol", cfg.tol, "Single-linkage L1 threshold")->check(pos);
    measures->add_option("--target", cfg.target, "Birkhoff average over [lo, hi)")->expected(2);

    auto* bounds = app.add_subcommand("bounds", "Bound on the number of ergodic measures");
    bounds->add_option("--n", cfg.n, "Number of intervals")->required()->check(pos);
    bounds->add_flag("--oriented", cfg.oriented, "No flips");
    bounds->add_flag("--flips", cfg.flips, "With flips");

    auto* kgroups = app.add_subcommand("kgroups", "K-group ranks");
    kgroups->add_option("--n", cfg.n, "Number of intervals")->required()->check(pos);

    auto* surface = app.add_subcommand("surface", "Surface types (genus, boundary components)");
    surface->add_option("--n", cfg.n, "Number of intervals")->required()->check(pos);

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    cfg.output = resolve_output_path(cfg);

    try {
        Output out;
        const std::string& s = cfg.subcommand;
        if (s == "eval") out = cmd_eval(cfg);
        else if (s == "orbit") out = cmd_orbit(cfg);
        else if (s == "code") out = cmd_code(cfg);
        else if (s == "induce") out = cmd_induce(cfg);
        else if (s == "stationary") out = cmd_stationary(cfg);
        else if (s == "ergodic") out = cmd_ergodic(cfg);
        else if (s == "simplex") out = cmd_simplex(cfg);
        else if (s == "pf") out = cmd_pf(cfg);
        else if (s == "rotation") out = cmd_rotation(cfg);
        else if (s == "measures") out = cmd_measures(cfg);
        else if (s == "bounds") out = cmd_bounds(cfg);
        else if (s == "kgroups") out = cmd_kgroups(cfg);
        else out = cmd_surface(cfg);

        const std::string rendered = render(cfg, out);
        if (cfg.output == "-") {
            std::cout << rendered;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) iet::fail(iet::ErrorKind::InvalidArgument, "cannot write " + cfg.output);
            file << rendered;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const iet::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
