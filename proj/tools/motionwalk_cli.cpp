// motionwalk: classify, inspect and simulate measures on finite motion groups.
//
// Exit codes: 0 success; 1 verify-srf FAIL; 2 classify found contradictory
// verdicts; 3 classify found no contradiction but some verdict is
// indeterminate or inconclusive; 64 usage, parse or validation error;
// 65 measure is not a probability measure; 70 numerical failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motionwalk/classify.hpp"
#include "motionwalk/errors.hpp"
#include "motionwalk/io.hpp"
#include "motionwalk/representations.hpp"
#include "motionwalk/rosenblatt.hpp"
#include "motionwalk/simulate.hpp"
#include "motionwalk/spectral.hpp"

namespace mw = motionwalk;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitNotProbability = 65;
constexpr int kExitNumerical = 70;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string fmt_coords(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s + ")";
}

void write_csv(std::ostream& out, const Table& t) {
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_table(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  const auto measure = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw mw::ParseError(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const mw::RunConfig& cfg, const std::string& out_path, const std::string& command,
          mw::Json result, const Table& table) {
  Output out(out_path);
  switch (cfg.format) {
    case mw::Format::Json:
      out.stream() << mw::wrap_report(command, cfg, std::move(result)).dump(2) << "\n";
      break;
    case mw::Format::Csv:
      write_csv(out.stream(), table);
      break;
    case mw::Format::Table:
      write_table(out.stream(), table);
      break;
  }
}

struct Loaded {
  mw::MotionGroup group;
  mw::GroupMeasure measure;
};

Loaded load(const mw::RunConfig& cfg) {
  cfg.validate();
  if (cfg.group_path.empty()) throw mw::ParseError("--group is required");
  if (cfg.measure_path.empty()) throw mw::ParseError("--measure is required");
  auto g = mw::group_from_json(mw::read_json_file(cfg.group_path), cfg.group_path);
  auto mu = mw::measure_from_json(g, mw::read_json_file(cfg.measure_path), cfg.measure_path);
  return {g, mu};
}

std::string block_name(const mw::Character& c, bool complement) {
  return complement ? "0-complement" : fmt_coords(c.alpha);
}

int cmd_classify(const mw::RunConfig& cfg, const std::string& out_path) {
  const auto [g, mu] = load(cfg);
  mw::ClassifyOptions opts;
  opts.spectral.tol = cfg.tol;
  opts.mixing_n_max = cfg.n_max;
  opts.ergodic_n_max = std::max(1UL, cfg.n_max / 2);
  opts.weak_mixing.n_max = std::max(2UL, cfg.n_max / 2);
  opts.weak_mixing.seed = cfg.seed;
  const mw::Verdict v = mw::classify(mu, opts);

  Table t{{"condition", "state", "value"}, {}};
  t.rows.push_back({"SR", to_string(v.sr.state), fmt(v.sr.witness.value)});
  t.rows.push_back({"S", to_string(v.s.state), fmt(v.s.witness.value)});
  t.rows.push_back({"A", v.adapted.holds ? "HOLDS" : "FAILS", std::to_string(v.adapted.size)});
  t.rows.push_back({"ASA", v.strictly_aperiodic.holds ? "HOLDS" : "FAILS",
                    std::to_string(v.strictly_aperiodic.size)});
  t.rows.push_back({"M", to_string(v.empirical_mixing.verdict), fmt(v.empirical_mixing.limit_estimate)});
  t.rows.push_back({"E", to_string(v.empirical_ergodic.verdict), fmt(v.empirical_ergodic.limit_estimate)});
  t.rows.push_back({"WM", to_string(v.weak_mixing_empirical.verdict),
                    fmt(v.weak_mixing_empirical.limit_estimate)});
  for (const auto& c : v.consistency) t.rows.push_back({"violation", c, ""});
  emit(cfg, out_path, "classify", mw::to_json(v), t);

  if (!v.consistency.empty()) return 2;
  const bool unsettled = v.sr.state == mw::TriState::Indeterminate ||
                         v.s.state == mw::TriState::Indeterminate ||
                         v.empirical_mixing.verdict == mw::Empirical::Inconclusive ||
                         v.empirical_ergodic.verdict == mw::Empirical::Inconclusive ||
                         v.weak_mixing_empirical.verdict == mw::Empirical::Inconclusive;
  return unsettled ? 3 : 0;
}

int cmd_verify_srf(const mw::RunConfig& cfg, const std::string& out_path) {
  const auto [g, mu] = load(cfg);
  const mw::SpectralReport r = mw::verify_srf(mu, cfg.tol);
  Table t{{"quantity", "value"}, {}};
  t.rows.push_back({"gelfand_radius", fmt(r.gelfand_radius_estimate)});
  t.rows.push_back({"sup_block_radius", fmt(r.sup_radius)});
  t.rows.push_back({"singular_term", fmt(r.singular_term)});
  t.rows.push_back({"star_norm", fmt(r.star_norm)});
  t.rows.push_back({"formula_gap", fmt(r.formula_gap)});
  t.rows.push_back({"verdict", r.pass ? "PASS" : "FAIL"});
  emit(cfg, out_path, "verify-srf", mw::to_json(r), t);
  return r.pass ? 0 : 1;
}

int cmd_spectrum(const mw::RunConfig& cfg, const std::string& out_path, bool matrices) {
  const auto [g, mu] = load(cfg);
  auto blocks = mw::block_spectra(mu, cfg.tol);
  blocks.push_back(mw::complement_spectrum(mu, cfg.tol));
  mw::Json rows = mw::Json::array();
  Table t{{"orbit", "radius", "norm", "margin"}, {}};
  for (const auto& b : blocks) {
    rows.push_back(mw::to_json(b));
    t.rows.push_back({block_name(b.representative, b.complement), fmt(b.spectral_radius),
                      fmt(b.op_norm), fmt(b.margin)});
  }
  if (matrices) {
    // One row per entry of every Fourier block.
    t = Table{{"orbit", "row", "col", "re", "im"}, {}};
    for (const auto& orbit : mw::dual_orbits(g)) {
      const auto m = mw::fourier(mu, orbit.representative).matrix;
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          t.rows.push_back({fmt_coords(orbit.representative.alpha), std::to_string(i),
                            std::to_string(j), fmt(m(i, j).real()), fmt(m(i, j).imag())});
        }
      }
    }
  }
  emit(cfg, out_path, "spectrum", {{"blocks", rows}}, t);
  return 0;
}

int cmd_simulate(const mw::RunConfig& cfg, const std::string& out_path, unsigned long trials) {
  const auto [g, mu] = load(cfg);
  std::vector<unsigned long> steps;
  for (unsigned long n = 1; n <= cfg.n_max; n *= 2) steps.push_back(n);
  if (steps.back() != cfg.n_max) steps.push_back(cfg.n_max);
  const auto rows = mw::simulate_curve(mu, steps, trials, cfg.seed);
  mw::Json j = mw::Json::array();
  Table t{{"n", "tv_exact", "tv_empirical"}, {}};
  for (const auto& r : rows) {
    j.push_back(mw::to_json(r));
    t.rows.push_back({std::to_string(r.n), fmt(r.tv_exact), fmt(r.tv_empirical)});
  }
  emit(cfg, out_path, "simulate", {{"trials", trials}, {"rows", j}}, t);
  return 0;
}

int cmd_rosenblatt(const mw::RunConfig& cfg, const std::string& out_path,
                   const std::vector<long>& ns) {
  const auto ep = mw::eigen_parameter();
  mw::Json rows = mw::Json::array();
  Table t{{"n", "direct", "closed_form"}, {}};
  for (long n : ns) {
    if (n < 3) throw mw::ParseError("rosenblatt: every n must be at least 3");
    const auto d = mw::defect_norm(ep.t, n);
    rows.push_back({{"n", n}, {"direct", d.direct}, {"closed_form", d.closed_form}});
    t.rows.push_back({std::to_string(n), fmt(d.direct), fmt(d.closed_form)});
  }
  mw::Json result{{"lambda", mw::to_json(ep.lambda)},
                  {"t", {mw::to_json(ep.t[0]), mw::to_json(ep.t[1])}},
                  {"rows", rows}};
  emit(cfg, out_path, "rosenblatt", std::move(result), t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify and inspect random walks on finite motion groups"};
  app.set_version_flag("--version", std::string(mw::kVersion));
  app.require_subcommand(1);

  mw::RunConfig cfg;
  std::string format = "json";
  std::string out_path;
  unsigned long trials = 10000;
  bool matrices = false;
  std::vector<long> ns{8, 64, 1024};

  const auto common = [&](CLI::App* sub, bool needs_files) {
    if (needs_files) {
      sub->add_option("--group", cfg.group_path, "group definition (JSON)")->required();
      sub->add_option("--measure", cfg.measure_path, "measure definition (JSON)")->required();
      sub->add_option("--tol", cfg.tol, "spectral tolerance");
      sub->add_option("--n-max", cfg.n_max, "largest power or step count");
      sub->add_option("--seed", cfg.seed, "random seed");
    }
    sub->add_option("--format", format, "json, csv or table");
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* classify = app.add_subcommand("classify", "evaluate every condition");
  common(classify, true);
  auto* srf = app.add_subcommand("verify-srf", "check the spectral radius formula");
  common(srf, true);
  auto* spectrum = app.add_subcommand("spectrum", "per-orbit block spectra");
  common(spectrum, true);
  spectrum->add_flag("--matrices", matrices, "dump the Fourier blocks (csv/table)");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo total variation curve");
  common(simulate, true);
  simulate->add_option("--trials", trials, "walks per step count")->check(CLI::PositiveNumber);
  auto* rosen = app.add_subcommand("rosenblatt", "defect norms on Z^2 x| Z");
  common(rosen, false);
  rosen->add_option("--n", ns, "window lengths")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.format = mw::parse_format(format);
    if (srf->parsed() && srf->get_option("--tol")->count() == 0) cfg.tol = 1e-6;
    if (simulate->parsed() && simulate->get_option("--n-max")->count() == 0) cfg.n_max = 64;
    if (classify->parsed()) return cmd_classify(cfg, out_path);
    if (srf->parsed()) return cmd_verify_srf(cfg, out_path);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out_path, matrices);
    if (simulate->parsed()) return cmd_simulate(cfg, out_path, trials);
    if (rosen->parsed()) return cmd_rosenblatt(cfg, out_path, ns);
  } catch (const mw::NotProbability& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotProbability;
  } catch (const mw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mw::NotAGroupTable& e) {
    std::cerr << "error: invalid group: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mw::NotAHomomorphism& e) {
    std::cerr << "error: invalid group: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mw::NotInvertible& e) {
    std::cerr << "error: invalid group: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
