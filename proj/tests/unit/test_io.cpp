#include <string>

#include "doctest.h"
#include "motionwalk/catalog.hpp"
#include "motionwalk/errors.hpp"
#include "motionwalk/io.hpp"

using namespace motionwalk;

namespace {

const char* kGroup = R"({
  "abelian": {"modulus": 5, "rank": 1},
  "k": {"table": [[0, 1], [1, 0]], "action": [[[1]], [[4]]]}
})";

std::string error_of(const auto& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("group and measure round trip") {
  const auto g = group_from_json(parse_json_text(kGroup, "g"));
  CHECK(g == catalog::order10_group());
  CHECK(group_from_json(group_to_json(g)) == g);

  const auto mu = 0.25 * GroupMeasure::point_mass(g, GElem{{3}, 1}) +
                  Complex(0.5, -0.25) * GroupMeasure::point_mass(g, GElem{{1}, 0});
  const auto back = measure_from_json(g, measure_to_json(mu));
  CHECK((back.weights() - mu.weights()).norm() == 0.0);
  CHECK(measure_to_json(mu)["atoms"].size() == 2);
}

TEST_CASE("repeated atoms add up") {
  const auto g = catalog::order10_group();
  const auto j = parse_json_text(
      R"({"atoms": [{"a": [1], "k": 0, "re": 0.25}, {"a": [6], "k": 0, "re": 0.75}]})", "m");
  const auto mu = measure_from_json(g, j);
  CHECK(mu[g.index_of(GElem{{1}, 0})] == Complex(1.0, 0.0));
}

TEST_CASE("syntax errors carry a location") {
  const auto msg = error_of([] { parse_json_text("{\n  \"abelian\": [1,\n}", "bad.json"); });
  CHECK(msg.rfind("bad.json:3:", 0) == 0);
  CHECK(msg.find("malformed JSON") != std::string::npos);
  CHECK(error_of([] { read_json_file("/nonexistent/file.json"); }).find("cannot open") !=
        std::string::npos);
}

TEST_CASE("schema errors name the pointer") {
  CHECK(error_of([] { group_from_json(parse_json_text(R"({"abelian": {"modulus": 5}})", "g")); })
            .find("/abelian") != std::string::npos);
  CHECK(error_of([] {
          group_from_json(parse_json_text(
              R"({"abelian": {"modulus": 0, "rank": 1}, "k": {"table": [[0]], "action": [[[1]]]}})",
              "g"));
        }).find("/abelian/modulus") != std::string::npos);
  const auto g = catalog::order10_group();
  CHECK(error_of([&] {
          measure_from_json(g, parse_json_text(R"({"atoms": [{"a": [1], "k": 5, "re": 1}]})", "m"));
        }).find("/atoms/0/k") != std::string::npos);
  CHECK(error_of([&] {
          measure_from_json(g, parse_json_text(R"({"atoms": [{"a": [1, 2], "k": 0, "re": 1}]})", "m"));
        }).find("/atoms/0/a") != std::string::npos);
}

TEST_CASE("group validation errors pass through") {
  CHECK_THROWS_AS(group_from_json(parse_json_text(
                      R"({"abelian": {"modulus": 5, "rank": 1},
                          "k": {"table": [[0, 1], [1, 0]], "action": [[[1]], [[2]]]}})",
                      "g")),
                  NotAHomomorphism);
  CHECK_THROWS_AS(group_from_json(parse_json_text(
                      R"({"abelian": {"modulus": 5, "rank": 1},
                          "k": {"table": [[0, 1], [0, 1]], "action": [[[1]], [[4]]]}})",
                      "g")),
                  NotAGroupTable);
}

TEST_CASE("run configuration") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParseError);
  cfg.tol = 1e-8;
  cfg.n_max = 0;
  CHECK_THROWS_AS(cfg.validate(), ParseError);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("reports") {
  const auto g = catalog::order10_group();
  const auto v = classify(GroupMeasure::uniform(g));
  const auto j = to_json(v);
  for (const char* key : {"SR", "S", "A", "ASA", "M", "E", "WM", "consistency_violations"}) {
    CHECK(j.contains(key));
  }
  const auto wrapped = wrap_report("classify", RunConfig{}, j);
  CHECK(wrapped["version"] == kVersion);
  CHECK(wrapped["command"] == "classify");
  const auto q = to_json(QSqrt5(mpq_class(1, 2), mpq_class(-3, 4)));
  CHECK(q["rational"] == "1/2");
  CHECK(q["sqrt5"] == "-3/4");
}
