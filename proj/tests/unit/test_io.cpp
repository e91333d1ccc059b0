#include "helpers.hpp"

#include <sstream>

#include "iet/io.hpp"

using namespace iet;
using namespace iet::test;
using iet::io::Json;

TEST_CASE("spec documents") {
    const Json exact = Json::parse(R"j({"lambda": ["3/2-1/2*sqrt(5)", "-1/2+1/2*sqrt(5)"], "pi": [2, 1]})j");
    const auto parsed = io::parse_spec(exact);
    REQUIRE(std::holds_alternative<ExactExchange>(parsed));
    const auto& spec = std::get<ExactExchange>(parsed);
    CHECK(spec.lengths()[1] == golden_alpha());
    CHECK(spec.signs() == std::vector<int>{1, 1});

    const Json round = io::spec_to_json(spec);
    const auto again = std::get<ExactExchange>(io::parse_spec(round));
    CHECK(again.lengths() == spec.lengths());
    CHECK(again.permutation() == spec.permutation());
    CHECK(io::spec_to_json(again) == round);

    const Json flt = Json::parse(R"j({"lambda": [0.25, 0.75], "pi": [2, 1], "epsilon": [-1, 1]})j");
    const auto f = std::get<FloatExchange>(io::parse_spec(flt));
    CHECK(f.signs() == std::vector<int>{-1, 1});
    CHECK(io::spec_to_json(f)["mode"] == "float");

    CHECK_ERROR_KIND(io::parse_spec(Json::parse(R"j({"lambda": ["1/2", "1/3"], "pi": [2, 1]})j")),
                     ErrorKind::LengthSumError);
    CHECK_ERROR_KIND(io::parse_spec(Json::parse(R"j({"lambda": ["1/2", "1/2"], "pi": [1, 1]})j")),
                     ErrorKind::NonBijectivePermutation);
    CHECK_ERROR_KIND(io::parse_spec(Json::parse(R"j({"pi": [1, 2]})j")), ErrorKind::ParseError);
    CHECK(io::parse_point<QuadraticNumber>("1/4") == q("1/4"));
    CHECK(io::parse_point<double>("0.25") == 0.25);
}

TEST_CASE("matrix sequences") {
    MatrixSequence seq;
    seq.push_back(IntegerMatrix{{1, 0}, {1, 1}}, "a");
    seq.push_back(IntegerMatrix{{1, 1}, {0, 1}}, "b");
    const Json doc = io::sequence_to_json(seq);
    const auto back = io::sequence_from_json(doc);
    CHECK(back.matrices == seq.matrices);
    const auto tagged = io::sequence_from_json(
        Json::parse(R"j({"matrices": [[[2, 1], [1, 1]], [["1", "0"], ["0", "1"]]], "tags": ["x", "y"]})j"));
    CHECK(tagged.matrices[0] == IntegerMatrix{{2, 1}, {1, 1}});
    CHECK(tagged.tags == std::vector<std::string>{"x", "y"});
    CHECK(io::matrix_from_json(io::matrix_to_json(IntegerMatrix{{12345678901234L, 0}, {0, 1}})) ==
          IntegerMatrix{{12345678901234L, 0}, {0, 1}});
    CHECK_ERROR_KIND(io::matrix_from_json(Json::parse("[[1, 2], [3]]")), ErrorKind::ParseError);
}

TEST_CASE("rays") {
    const Ray ray{3, {1, 3, 2, 2, 1}};
    std::stringstream buffer;
    io::write_ray(buffer, ray);
    const Ray back = io::read_ray(buffer);
    CHECK(back.symbols == ray.symbols);
    CHECK(back.alphabet == 3);
    std::stringstream bad("1 0 2");
    CHECK_ERROR_KIND(io::read_ray(bad), ErrorKind::ParseError);
}

TEST_CASE("csv output") {
    EmpiricalMeasure m;
    m.bin_edges = {0.0, 0.5, 1.0};
    m.masses = {0.25, 0.75};
    std::ostringstream out;
    io::write_histogram_csv(out, m);
    CHECK(out.str() == "bin_lo,bin_hi,mass\n0,0.5,0.25\n0.5,1,0.75\n");
}
