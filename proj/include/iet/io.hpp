#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "iet/dimension_group.hpp"
#include "iet/induction.hpp"
#include "iet/interval_exchange.hpp"
#include "iet/measures.hpp"
#include "iet/rotation.hpp"
#include "iet/symbolic.hpp"

namespace iet::io {

using Json = nlohmann::ordered_json;
using AnyExchange = std::variant<FloatExchange, ExactExchange>;

// ── Interval exchange specs ─────────────────────────────────────────────
// {"lambda": [...], "pi": [1-based ints], "epsilon": [1|-1], "mode": "exact"|"float"}
// Exact lengths are strings such as "1/3" or "-1/2+1/2*sqrt(5)"; float
// lengths are numbers or decimal strings. epsilon defaults to all 1, mode
// to "exact" when every length is a string and "float" otherwise.
AnyExchange parse_spec(const Json& doc);
AnyExchange load_spec(const std::string& path);

template <Scalar S>
Json spec_to_json(const IntervalExchange<S>& spec);

// Point in the arithmetic of the given spec.
template <Scalar S>
S parse_point(const std::string& text);

// ── Matrices ────────────────────────────────────────────────────────────
// Entries are written as decimal strings; integers and strings are read.
Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& doc);
// Array of matrices, or {"matrices": [...], "tags": [...]}.
Json sequence_to_json(const MatrixSequence& seq);
MatrixSequence sequence_from_json(const Json& doc);
MatrixSequence load_sequence(const std::string& path);

// ── Rays ────────────────────────────────────────────────────────────────
void write_ray(std::ostream& out, const Ray& ray);
// Whitespace-separated positive symbols; alphabet = largest symbol.
Ray read_ray(std::istream& in);

// ── CSV ─────────────────────────────────────────────────────────────────
template <Scalar S>
void write_orbit_csv(std::ostream& out, const Orbit<S>& orbit);
void write_block_stats_csv(std::ostream& out, const std::vector<BlockStats>& rows);
void write_histogram_csv(std::ostream& out, const EmpiricalMeasure& m);

// ── Results ─────────────────────────────────────────────────────────────
Json pf_to_json(const PFResult& pf);
Json witness_to_json(const StationarityWitness& w);
Json verdict_to_json(const ErgodicityVerdict& v);
Json measure_to_json(const EmpiricalMeasure& m);
Json census_to_json(const MeasureCensus& c);
Json rotation_to_json(const RotationNumber& r);
Json surd_to_json(const QuadraticSurd& s);
Json keane_to_json(const KeaneVerdict& k);
Json block_stats_to_json(const BlockStats& b);

}  // namespace iet::io
