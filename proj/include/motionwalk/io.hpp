#pragma once

// JSON definitions and reports.
//
// Group:   {"abelian": {"modulus": n, "rank": d},
//           "k": {"table": [[...], ...], "action": [d x d matrix per k]}}
// Measure: {"atoms": [{"a": [a_1, ..., a_d], "k": k, "re": x, "im": y}, ...]}
//          "im" may be omitted; repeated atoms add up.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "motionwalk/classify.hpp"
#include "motionwalk/group_core.hpp"
#include "motionwalk/measures.hpp"
#include "motionwalk/rosenblatt.hpp"
#include "motionwalk/simulate.hpp"
#include "motionwalk/spectral.hpp"

namespace motionwalk {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Csv, Table };
std::string to_string(Format f);
/// Throws ParseError for anything other than json, csv or table.
Format parse_format(const std::string& s);

struct RunConfig {
  std::string group_path;
  std::string measure_path;
  double tol = 1e-8;
  unsigned long n_max = 1024;
  Format format = Format::Json;
  std::uint64_t seed = 0;

  /// Throws ParseError unless tol > 0 and n_max >= 1.
  void validate() const;
};

/// Parses text, reporting syntax errors as "<origin>:<line>:<column>: ...".
Json parse_json_text(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

/// Schema errors name the offending JSON pointer. Group validation errors
/// (NotAGroupTable, ...) pass through.
MotionGroup group_from_json(const Json& j, const std::string& origin = "<group>");
GroupMeasure measure_from_json(const MotionGroup& g, const Json& j,
                               const std::string& origin = "<measure>");

Json group_to_json(const MotionGroup& g);
/// Nonzero atoms only.
Json measure_to_json(const GroupMeasure& mu);

Json to_json(const RunConfig& cfg);
Json to_json(const SpectralCondition& c);
Json to_json(const SubgroupCheck& c);
Json to_json(const DecayCurve& c);
Json to_json(const Verdict& v);
Json to_json(const BlockSpectrum& b);
Json to_json(const SpectralReport& r);
Json to_json(const QSqrt5& q);  // {"rational": "p/q", "sqrt5": "p/q"}
Json to_json(const SimulationRow& r);

/// {"tool": "motionwalk", "version": ..., "config": ..., "command": ..., "result": ...}
Json wrap_report(const std::string& command, const RunConfig& cfg, Json result);

}  // namespace motionwalk
