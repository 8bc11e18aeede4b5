#include "motionwalk/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "motionwalk/errors.hpp"

namespace motionwalk {

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Table: return "table";
  }
  return "?";
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw ParseError("unknown format '" + s + "' (expected json, csv or table)");
}

void RunConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ParseError("--tol must be positive");
  if (n_max < 1) throw ParseError("--n-max must be at least 1");
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Convert the byte offset into line and column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << origin << ":" << line << ":" << column << ": malformed JSON (" << e.what() << ")";
    throw ParseError(msg.str());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

namespace {

[[noreturn]] void schema_error(const std::string& origin, const std::string& pointer,
                               const std::string& what) {
  throw ParseError(origin + ": " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& origin,
                   const std::string& pointer) {
  if (!j.is_object()) schema_error(origin, pointer, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(origin, pointer, std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& origin, const std::string& pointer) {
  if (!j.is_number_integer()) schema_error(origin, pointer, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    schema_error(origin, pointer, "integer out of range");
  }
  return static_cast<int>(v);
}

double as_real(const Json& j, const std::string& origin, const std::string& pointer) {
  if (!j.is_number()) schema_error(origin, pointer, "expected a number");
  return j.get<double>();
}

const Json& as_array(const Json& j, const std::string& origin, const std::string& pointer) {
  if (!j.is_array()) schema_error(origin, pointer, "expected an array");
  return j;
}

}  // namespace

MotionGroup group_from_json(const Json& j, const std::string& origin) {
  const Json& ab = member(j, "abelian", origin, "");
  const int modulus = as_int(member(ab, "modulus", origin, "/abelian"), origin, "/abelian/modulus");
  const int rank = as_int(member(ab, "rank", origin, "/abelian"), origin, "/abelian/rank");
  if (modulus < 1) schema_error(origin, "/abelian/modulus", "must be >= 1");
  if (rank < 1) schema_error(origin, "/abelian/rank", "must be >= 1");

  const Json& k = member(j, "k", origin, "");
  const Json& table_j = as_array(member(k, "table", origin, "/k"), origin, "/k/table");
  IndexTable table;
  for (std::size_t r = 0; r < table_j.size(); ++r) {
    const std::string p = "/k/table/" + std::to_string(r);
    const Json& row = as_array(table_j[r], origin, p);
    std::vector<int> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      out.push_back(as_int(row[c], origin, p + "/" + std::to_string(c)));
    }
    table.push_back(std::move(out));
  }

  const Json& action_j = as_array(member(k, "action", origin, "/k"), origin, "/k/action");
  std::vector<Eigen::MatrixXi> action;
  for (std::size_t i = 0; i < action_j.size(); ++i) {
    const std::string p = "/k/action/" + std::to_string(i);
    const Json& m = as_array(action_j[i], origin, p);
    if (static_cast<int>(m.size()) != rank) schema_error(origin, p, "expected rank rows");
    Eigen::MatrixXi mat(rank, rank);
    for (int r = 0; r < rank; ++r) {
      const std::string pr = p + "/" + std::to_string(r);
      const Json& row = as_array(m[r], origin, pr);
      if (static_cast<int>(row.size()) != rank) schema_error(origin, pr, "expected rank entries");
      for (int c = 0; c < rank; ++c) {
        mat(r, c) = as_int(row[c], origin, pr + "/" + std::to_string(c));
      }
    }
    action.push_back(std::move(mat));
  }
  return build_motion_group(modulus, rank, table, action);
}

GroupMeasure measure_from_json(const MotionGroup& g, const Json& j, const std::string& origin) {
  const Json& atoms = as_array(member(j, "atoms", origin, ""), origin, "/atoms");
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.order()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = "/atoms/" + std::to_string(i);
    const Json& atom = atoms[i];
    const Json& a_j = as_array(member(atom, "a", origin, p), origin, p + "/a");
    if (static_cast<int>(a_j.size()) != g.rank()) schema_error(origin, p + "/a", "expected rank coordinates");
    Coords a;
    for (std::size_t c = 0; c < a_j.size(); ++c) {
      const int v = as_int(a_j[c], origin, p + "/a/" + std::to_string(c));
      a.push_back(((v % g.modulus()) + g.modulus()) % g.modulus());
    }
    const int k = as_int(member(atom, "k", origin, p), origin, p + "/k");
    if (k < 0 || k >= g.k_order()) schema_error(origin, p + "/k", "index outside K");
    const double re = as_real(member(atom, "re", origin, p), origin, p + "/re");
    const double im = atom.contains("im") ? as_real(atom["im"], origin, p + "/im") : 0.0;
    if (!std::isfinite(re) || !std::isfinite(im)) schema_error(origin, p, "weight is not finite");
    w(static_cast<Eigen::Index>(g.index_of(GElem{a, k}))) += Complex(re, im);
  }
  return GroupMeasure(g, std::move(w));
}

Json group_to_json(const MotionGroup& g) {
  Json action = Json::array();
  for (const auto& m : g.k_group().action) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    action.push_back(std::move(rows));
  }
  return {{"abelian", {{"modulus", g.modulus()}, {"rank", g.rank()}}},
          {"k", {{"table", g.k_group().table}, {"action", std::move(action)}}}};
}

Json measure_to_json(const GroupMeasure& mu) {
  Json atoms = Json::array();
  for (std::size_t x : mu.support()) {
    const GElem e = mu.group().element(x);
    atoms.push_back({{"a", e.a}, {"k", e.k}, {"re", mu[x].real()}, {"im", mu[x].imag()}});
  }
  return {{"atoms", std::move(atoms)}};
}

namespace {

// JSON has no infinity; large margins (empty blocks) become null.
Json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

Json character_json(const Character& c) { return c.alpha; }

}  // namespace

Json to_json(const RunConfig& cfg) {
  return {{"group", cfg.group_path}, {"measure", cfg.measure_path}, {"tol", cfg.tol},
          {"n_max", cfg.n_max},      {"format", to_string(cfg.format)}, {"seed", cfg.seed}};
}

Json to_json(const SpectralCondition& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    blocks.push_back({{"representative", character_json(b.representative)},
                      {"complement", b.complement},
                      {"value", number(b.value)}});
  }
  return {{"state", to_string(c.state)},
          {"witness",
           {{"representative", character_json(c.witness.representative)},
            {"complement", c.witness.complement},
            {"value", number(c.witness.value)}}},
          {"blocks", std::move(blocks)}};
}

Json to_json(const SubgroupCheck& c) {
  return {{"state", c.holds ? "HOLDS" : "FAILS"}, {"subgroup_order", c.size}};
}

Json to_json(const DecayCurve& c) {
  Json pts = Json::array();
  for (const auto& [n, v] : c.points) pts.push_back({{"n", n}, {"value", number(v)}});
  return {{"state", to_string(c.verdict)},
          {"threshold", c.threshold},
          {"limit_estimate", number(c.limit_estimate)},
          {"points", std::move(pts)}};
}

Json to_json(const Verdict& v) {
  return {{"SR", to_json(v.sr)},
          {"S", to_json(v.s)},
          {"A", to_json(v.adapted)},
          {"ASA", to_json(v.strictly_aperiodic)},
          {"M", to_json(v.empirical_mixing)},
          {"E", to_json(v.empirical_ergodic)},
          {"WM", to_json(v.weak_mixing_empirical)},
          {"consistency_violations", v.consistency}};
}

Json to_json(const BlockSpectrum& b) {
  return {{"representative", character_json(b.representative)},
          {"complement", b.complement},
          {"radius", number(b.spectral_radius)},
          {"norm", number(b.op_norm)},
          {"margin", number(b.margin)},
          {"one_in_spectrum", b.one_in_spectrum}};
}

Json to_json(const SpectralReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.per_orbit) blocks.push_back(to_json(b));
  return {{"gelfand_radius", r.gelfand_radius_estimate},
          {"squarings", r.squarings},
          {"sup_block_radius", r.sup_radius},
          {"star_norm", r.star_norm},
          {"singular_term", r.singular_term},
          {"singular_reason", r.singular_reason},
          {"formula_gap", r.formula_gap},
          {"tolerance", r.tolerance},
          {"verdict", r.pass ? "PASS" : "FAIL"},
          {"per_orbit", std::move(blocks)},
          {"lambda0_complement", to_json(r.lambda0_complement)}};
}

Json to_json(const QSqrt5& q) {
  return {{"rational", q.rational().get_str()}, {"sqrt5", q.irrational().get_str()}};
}

Json to_json(const SimulationRow& r) {
  return {{"n", r.n},
          {"tv_exact", r.tv_exact},
          {"tv_empirical", r.tv_empirical},
          {"tv_gap", r.tv_gap}};
}

Json wrap_report(const std::string& command, const RunConfig& cfg, Json result) {
  return {{"tool", "motionwalk"},
          {"version", kVersion},
          {"command", command},
          {"config", to_json(cfg)},
          {"result", std::move(result)}};
}

}  // namespace motionwalk
