#include "iet/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "iet/error.hpp"

namespace iet::io {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
}

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "not a number: '" + text + "'");
    }
    if (used != text.size()) fail(ErrorKind::ParseError, "trailing characters in '" + text + "'");
    return value;
}

Integer parse_integer(const Json& v) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            fail(ErrorKind::ParseError, "not an integer: '" + v.get<std::string>() + "'");
        return out;
    }
    fail(ErrorKind::ParseError, "matrix entries must be integers or decimal strings");
}

Json optional_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

// ── Interval exchange specs ─────────────────────────────────────────────

AnyExchange parse_spec(const Json& doc) {
    if (!doc.is_object()) fail(ErrorKind::ParseError, "spec must be a JSON object");
    if (!doc.contains("lambda") || !doc["lambda"].is_array()) fail(ErrorKind::ParseError, "spec needs a 'lambda' array");
    if (!doc.contains("pi") || !doc["pi"].is_array()) fail(ErrorKind::ParseError, "spec needs a 'pi' array");
    const Json& lam = doc["lambda"];

    std::string mode;
    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) fail(ErrorKind::ParseError, "'mode' must be a string");
        mode = doc["mode"].get<std::string>();
        if (mode != "exact" && mode != "float") fail(ErrorKind::ParseError, "mode must be 'exact' or 'float'");
    } else {
        bool all_strings = true;
        for (const auto& v : lam) all_strings = all_strings && v.is_string();
        mode = all_strings ? "exact" : "float";
    }

    std::vector<long> images;
    for (const auto& v : doc["pi"]) {
        if (!v.is_number_integer()) fail(ErrorKind::ParseError, "'pi' entries must be integers");
        images.push_back(v.get<long>());
    }
    Permutation pi = Permutation::from_one_based(images);

    std::vector<int> signs(lam.size(), 1);
    if (doc.contains("epsilon")) {
        const Json& eps = doc["epsilon"];
        if (!eps.is_array() || eps.size() != lam.size())
            fail(ErrorKind::InvalidArgument, "'epsilon' must list one sign per interval");
        for (std::size_t i = 0; i < eps.size(); ++i) {
            if (!eps[i].is_number_integer()) fail(ErrorKind::ParseError, "'epsilon' entries must be 1 or -1");
            signs[i] = eps[i].get<int>();
        }
    }

    if (mode == "exact") {
        std::vector<QuadraticNumber> lengths;
        for (const auto& v : lam) {
            if (!v.is_string()) fail(ErrorKind::ParseError, "exact lengths must be strings like \"1/3\"");
            lengths.push_back(QuadraticNumber::parse(v.get<std::string>()));
        }
        return ExactExchange::validate(std::move(lengths), std::move(pi), std::move(signs));
    }
    std::vector<double> lengths;
    for (const auto& v : lam) {
        if (v.is_number()) lengths.push_back(v.get<double>());
        else if (v.is_string()) lengths.push_back(parse_double(v.get<std::string>()));
        else fail(ErrorKind::ParseError, "float lengths must be numbers");
    }
    return FloatExchange::validate(std::move(lengths), std::move(pi), std::move(signs));
}

AnyExchange load_spec(const std::string& path) { return parse_spec(read_json_file(path)); }

template <Scalar S>
Json spec_to_json(const IntervalExchange<S>& spec) {
    Json lam = Json::array();
    for (const auto& l : spec.lengths()) {
        if constexpr (ScalarTraits<S>::exact) lam.push_back(l.to_string());
        else lam.push_back(l);
    }
    return Json{{"lambda", lam},
                {"pi", spec.permutation().to_one_based()},
                {"epsilon", spec.signs()},
                {"mode", ScalarTraits<S>::mode}};
}

template <>
double parse_point<double>(const std::string& text) {
    return parse_double(text);
}

template <>
QuadraticNumber parse_point<QuadraticNumber>(const std::string& text) {
    return QuadraticNumber::parse(text);
}

template Json spec_to_json(const IntervalExchange<double>&);
template Json spec_to_json(const IntervalExchange<QuadraticNumber>&);

// ── Matrices ────────────────────────────────────────────────────────────

Json matrix_to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntegerMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_array() || doc.empty() || !doc[0].is_array() || doc[0].empty())
        fail(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    const std::size_t rows = doc.size();
    const std::size_t cols = doc[0].size();
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!doc[r].is_array() || doc[r].size() != cols) fail(ErrorKind::ParseError, "matrix rows differ in length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_integer(doc[r][c]);
    }
    return m;
}

Json sequence_to_json(const MatrixSequence& seq) {
    Json out = Json::array();
    for (const auto& m : seq.matrices) out.push_back(matrix_to_json(m));
    return out;
}

MatrixSequence sequence_from_json(const Json& doc) {
    const Json* matrices = &doc;
    const Json* tags = nullptr;
    if (doc.is_object()) {
        if (!doc.contains("matrices")) fail(ErrorKind::ParseError, "sequence object needs 'matrices'");
        matrices = &doc["matrices"];
        if (doc.contains("tags")) tags = &doc["tags"];
    }
    if (!matrices->is_array()) fail(ErrorKind::ParseError, "matrix sequence must be an array");
    if (tags && (!tags->is_array() || tags->size() != matrices->size()))
        fail(ErrorKind::ParseError, "'tags' must match the matrices one to one");
    MatrixSequence seq;
    for (std::size_t i = 0; i < matrices->size(); ++i) {
        IntegerMatrix m = matrix_from_json((*matrices)[i]);
        if (!seq.empty() && (m.rows() != seq.dimension() || m.cols() != seq.dimension()))
            fail(ErrorKind::InvalidArgument, "sequence matrices must share one square size");
        if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "sequence matrices must be square");
        std::string tag = tags ? (*tags)[i].get<std::string>() : std::string();
        seq.push_back(std::move(m), std::move(tag));
    }
    return seq;
}

MatrixSequence load_sequence(const std::string& path) { return sequence_from_json(read_json_file(path)); }

// ── Rays ────────────────────────────────────────────────────────────────

void write_ray(std::ostream& out, const Ray& ray) {
    for (std::size_t i = 0; i < ray.symbols.size(); ++i) {
        if (i) out << ' ';
        out << ray.symbols[i];
    }
    out << '\n';
}

Ray read_ray(std::istream& in) {
    Ray ray;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long s = 0;
        try {
            s = std::stol(token, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad ray symbol '" + token + "'");
        }
        if (used != token.size() || s < 1 || s > 0xffff) fail(ErrorKind::ParseError, "bad ray symbol '" + token + "'");
        ray.symbols.push_back(static_cast<int>(s));
        ray.alphabet = std::max(ray.alphabet, static_cast<std::size_t>(s));
    }
    return ray;
}

// ── CSV ─────────────────────────────────────────────────────────────────

template <Scalar S>
void write_orbit_csv(std::ostream& out, const Orbit<S>& orbit) {
    out << "step,x,interval_index\n";
    for (std::size_t t = 0; t < orbit.points.size(); ++t)
        out << t << ',' << scalar_to_string(orbit.points[t]) << ',' << orbit.interval_indices[t] << '\n';
}

template void write_orbit_csv(std::ostream&, const Orbit<double>&);
template void write_orbit_csv(std::ostream&, const Orbit<QuadraticNumber>&);

void write_block_stats_csv(std::ostream& out, const std::vector<BlockStats>& rows) {
    out << "N,p,phi,theta,ratio\n";
    for (const auto& r : rows) {
        out << r.length << ',' << r.distinct_blocks << ',';
        if (r.transitivity) out << *r.transitivity;
        out << ',';
        if (r.covering) out << *r.covering;
        out << ',';
        if (r.transitivity && r.covering && *r.covering > 0)
            out << ScalarTraits<double>::to_string(static_cast<double>(*r.transitivity) / static_cast<double>(*r.covering));
        out << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const EmpiricalMeasure& m) {
    out << "bin_lo,bin_hi,mass\n";
    for (std::size_t b = 0; b < m.masses.size(); ++b)
        out << ScalarTraits<double>::to_string(m.bin_edges[b]) << ',' << ScalarTraits<double>::to_string(m.bin_edges[b + 1])
            << ',' << ScalarTraits<double>::to_string(m.masses[b]) << '\n';
}

// ── Results ─────────────────────────────────────────────────────────────

Json pf_to_json(const PFResult& pf) {
    Json brackets = Json::array();
    for (const auto& [lo, hi] : pf.brackets) brackets.push_back(Json::array({lo, hi}));
    return Json{{"eigenvalue", pf.eigenvalue},   {"eigenvector", pf.eigenvector}, {"lower_cw", pf.lower_cw},
                {"upper_cw", pf.upper_cw},       {"iterations", pf.iterations},   {"residual", pf.residual},
                {"brackets", std::move(brackets)}};
}

Json witness_to_json(const StationarityWitness& w) {
    return Json{{"start", w.start},
                {"block_length", w.block_length},
                {"block_product", matrix_to_json(w.block_product)},
                {"repetitions_verified", w.repetitions_verified}};
}

Json verdict_to_json(const ErgodicityVerdict& v) {
    return Json{{"status", to_string(v.status)},
                {"witness", v.witness ? witness_to_json(*v.witness) : Json(nullptr)},
                {"perron", v.perron ? pf_to_json(*v.perron) : Json(nullptr)},
                {"diameters", v.diameters},
                {"final_diameter", v.final_diameter},
                {"state_dim_estimate", v.state_dim_estimate},
                {"simple", v.simple},
                {"sequence", sequence_to_json(v.sequence)},
                {"tags", v.sequence.tags},
                {"diagnostics", v.diagnostics}};
}

Json measure_to_json(const EmpiricalMeasure& m) {
    return Json{{"x0", m.x0},
                {"iterations", m.iterations},
                {"bin_edges", m.bin_edges},
                {"counts", m.counts},
                {"masses", m.masses}};
}

Json census_to_json(const MeasureCensus& c) {
    Json clusters = Json::array();
    for (const auto& cl : c.clusters)
        clusters.push_back(Json{{"representative", measure_to_json(cl.representative)}, {"members", cl.members}});
    return Json{{"clusters", std::move(clusters)},
                {"estimated_count", c.estimated_count},
                {"bound", c.bound},
                {"bound_respected", c.bound_respected},
                {"non_minimal", c.non_minimal}};
}

Json rotation_to_json(const RotationNumber& r) {
    Json conv = Json::array();
    for (const auto& c : r.convergents) conv.push_back(c ? Json(c->get_str()) : Json("inf"));
    Json value = std::isfinite(r.value) ? Json(r.value) : Json(nullptr);
    return Json{{"value", value}, {"converged", r.converged}, {"depth", r.depth}, {"convergents", std::move(conv)}};
}

Json surd_to_json(const QuadraticSurd& s) {
    return Json{{"a", s.a.get_str()},
                {"b", s.b.get_str()},
                {"c", s.c.get_str()},
                {"root_sign", s.root_sign},
                {"root", s.root.to_string()},
                {"approx", s.approx}};
}

Json keane_to_json(const KeaneVerdict& k) {
    Json collisions = Json::array();
    for (const auto& c : k.collisions)
        collisions.push_back(
            Json{{"source", c.source}, {"target", c.target}, {"step", c.step}, {"point", c.point}, {"gap", c.gap}});
    return Json{{"status", to_string(k.status)}, {"step", k.step}, {"collisions", std::move(collisions)}};
}

Json block_stats_to_json(const BlockStats& b) {
    Json ratio = nullptr;
    if (b.transitivity && b.covering && *b.covering > 0)
        ratio = static_cast<double>(*b.transitivity) / static_cast<double>(*b.covering);
    return Json{{"N", b.length},
                {"p", b.distinct_blocks},
                {"phi", optional_count(b.transitivity)},
                {"theta", optional_count(b.covering)},
                {"ratio", ratio}};
}

}  // namespace iet::io
