#include "riemann_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/rational.hpp>

#include "riemann/arithmetic.hpp"
#include "riemann/serialization.hpp"

namespace riemann::cli {
namespace {

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

// Writes to --output when given, else to `out`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& out) : stream_(&out) {
    if (path) {
      file_.open(*path);
      if (!file_) throw std::ios_base::failure("cannot open output file " + *path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

constexpr const char* kHeaderPi = "x,F_analytic,pi_sieve,abs_diff,f_riemann,f_residue,zeros_used";

void emit_pi_table(const PiTableReport& report, Format format, std::ostream& os) {
  if (format == Format::json) {
    os << nlohmann::json(report).dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    os << kHeaderPi << '\n' << std::setprecision(17);
    for (const auto& r : report.rows) {
      os << r.x << ',' << r.f_analytic << ',' << r.pi_sieve << ',' << r.abs_diff << ',' << r.f_riemann.total << ','
         << r.f_residue.total << ',' << r.zeros_used << '\n';
    }
    return;
  }
  os << std::left << std::setw(12) << "x" << std::setw(14) << "F_analytic" << std::setw(10) << "pi_sieve"
     << std::setw(12) << "abs_diff" << std::setw(16) << "f_riemann" << std::setw(16) << "f_residue"
     << "zeros_used\n";
  os << std::fixed;
  for (const auto& r : report.rows) {
    os << std::setw(12) << std::setprecision(4) << r.x << std::setw(14) << std::setprecision(6) << r.f_analytic
       << std::setw(10) << std::setprecision(1) << r.pi_sieve << std::setw(12) << std::setprecision(6)
       << r.abs_diff << std::setw(16) << std::setprecision(10) << r.f_riemann.total << std::setw(16)
       << r.f_residue.total << r.zeros_used << '\n';
  }
  os << (report.passed ? "all rows within " : "tolerance breach: some rows exceed ") << std::defaultfloat
     << report.tolerance << '\n';
}

void emit_verify(const VerifyReport& report, Format format, std::ostream& os) {
  if (format == Format::json) {
    os << nlohmann::json(report).dump(2) << '\n';
    return;
  }
  os << std::setprecision(17);
  if (format == Format::csv) {
    os << "x,check,left,right,difference\n";
    for (const auto& e : report.entries) {
      const double x = e.identity.x;
      os << x << ",identity," << e.identity.lhs << ',' << e.identity.rhs << ',' << e.identity.difference << '\n';
      os << x << ",change_of_variables," << e.identity.cov_left << ',' << e.identity.cov_right << ','
         << e.identity.cov_difference << '\n';
      os << x << ",form_equivalence," << e.f_riemann.total << ',' << e.f_residue.total << ',' << e.form_difference
         << '\n';
    }
    return;
  }
  for (const auto& e : report.entries) {
    os << "x = " << e.identity.x << '\n';
    os << "  Li(x) + tail integral        = " << e.identity.lhs << '\n';
    os << "  P.V. integral + Gamma sum    = " << e.identity.rhs << '\n';
    os << "  difference                   = " << e.identity.difference << '\n';
    os << "  int e^-t/t from 2 log x      = " << e.identity.cov_left << '\n';
    os << "  -int_0^(1/x^2) du/log u      = " << e.identity.cov_right << '\n';
    os << "  difference                   = " << e.identity.cov_difference << '\n';
    os << "  f classical form             = " << e.f_riemann.total << '\n';
    os << "  f residue form               = " << e.f_residue.total << '\n';
    os << "  difference                   = " << e.form_difference << '\n';
  }
  os << (report.passed ? "PASS" : "FAIL") << " (tolerance " << report.tolerance << ")\n";
}

TraceLine horizontal_trace(const branch::Evaluator& f, double height, double sigma_lo,
                           std::span<const ComplexPoint> avoid, bool validate) {
  branch::PathPolyline path;
  path.vertices = {ComplexPoint(2.0, 0.0), ComplexPoint(2.0, height), ComplexPoint(sigma_lo, height)};
  path.max_step = 0.05;
  if (validate) path.validate(avoid);
  const Complex start = std::log(f(Complex(2.0, 0.0)).value);
  const auto trace = branch::continue_log(path, start, f);
  TraceLine line;
  line.height = height;
  bool on_line = false;
  int vertices_seen = 0;
  for (const auto& p : trace.points) {
    if (p.is_vertex) ++vertices_seen;
    on_line = vertices_seen >= 2;
    if (on_line) line.points.push_back({p.s.re(), p.s.im(), p.log_value.real(), p.log_value.imag()});
  }
  return line;
}

}  // namespace

ZeroSpec parse_zero_spec(std::string_view text) {
  ZeroSpec spec;
  if (text.rfind("compute:", 0) == 0) {
    spec.kind = ZeroSpec::Kind::compute;
    spec.height = parse_real(text.substr(8));
    if (!(spec.height > 0.0 && spec.height <= zeros::kMaxHeight)) {
      throw UsageError("compute:T needs 0 < T <= " + std::to_string(static_cast<int>(zeros::kMaxHeight)));
    }
    return spec;
  }
  if (text.rfind("file:", 0) == 0 && text.size() > 5) {
    spec.kind = ZeroSpec::Kind::file;
    spec.path = std::string(text.substr(5));
    return spec;
  }
  throw UsageError("zero source must be compute:T or file:PATH, got '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw UsageError("format must be csv, json or text");
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    values.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw UsageError("trailing comma in list");
  }
  return values;
}

Environment Environment::from_process() {
  Environment env;
  if (const char* file = std::getenv("RIEMANN_ZEROS_FILE"); file != nullptr && *file != '\0') {
    env.zeros_file = file;
  }
  return env;
}

ZeroList load_zero_source(const ZeroSpec& spec) {
  if (spec.kind == ZeroSpec::Kind::compute) return zeros::find_zeros_up_to(spec.height);
  std::ifstream in(spec.path);
  if (!in) throw std::ios_base::failure("cannot open zero table " + spec.path);
  return zeros::load_zeros(in);
}

// ---------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const PiTableRow& v) {
  j = {{"x", v.x},
       {"F_analytic", v.f_analytic},
       {"pi_sieve", v.pi_sieve},
       {"abs_diff", v.abs_diff},
       {"f_riemann", v.f_riemann},
       {"f_residue", v.f_residue},
       {"zeros_used", v.zeros_used}};
}

void from_json(const nlohmann::json& j, PiTableRow& v) {
  j.at("x").get_to(v.x);
  j.at("F_analytic").get_to(v.f_analytic);
  j.at("pi_sieve").get_to(v.pi_sieve);
  j.at("abs_diff").get_to(v.abs_diff);
  j.at("f_riemann").get_to(v.f_riemann);
  j.at("f_residue").get_to(v.f_residue);
  j.at("zeros_used").get_to(v.zeros_used);
}

void to_json(nlohmann::json& j, const PiTableReport& v) {
  j = {{"tolerance", v.tolerance}, {"rows", v.rows}, {"passed", v.passed}};
}

void from_json(const nlohmann::json& j, PiTableReport& v) {
  j.at("tolerance").get_to(v.tolerance);
  j.at("rows").get_to(v.rows);
  j.at("passed").get_to(v.passed);
}

void to_json(nlohmann::json& j, const VerifyEntry& v) {
  j = {{"identity", v.identity},
       {"f_riemann", v.f_riemann},
       {"f_residue", v.f_residue},
       {"form_difference", v.form_difference}};
}

void from_json(const nlohmann::json& j, VerifyEntry& v) {
  j.at("identity").get_to(v.identity);
  j.at("f_riemann").get_to(v.f_riemann);
  j.at("f_residue").get_to(v.f_residue);
  j.at("form_difference").get_to(v.form_difference);
}

void to_json(nlohmann::json& j, const VerifyReport& v) {
  j = {{"tolerance", v.tolerance}, {"entries", v.entries}, {"passed", v.passed}};
}

void from_json(const nlohmann::json& j, VerifyReport& v) {
  j.at("tolerance").get_to(v.tolerance);
  j.at("entries").get_to(v.entries);
  j.at("passed").get_to(v.passed);
}

void to_json(nlohmann::json& j, const ZeroCheckReport& v) {
  j = {{"zeros", v.zeros}, {"certified_through", v.certified_through}, {"count", v.count}};
}

void from_json(const nlohmann::json& j, ZeroCheckReport& v) {
  j.at("zeros").get_to(v.zeros);
  j.at("certified_through").get_to(v.certified_through);
  j.at("count").get_to(v.count);
}

void to_json(nlohmann::json& j, const TraceLine& v) { j = {{"height", v.height}, {"points", v.points}}; }

void from_json(const nlohmann::json& j, TraceLine& v) {
  j.at("height").get_to(v.height);
  j.at("points").get_to(v.points);
}

void to_json(nlohmann::json& j, const TraceReport& v) {
  j = {{"kind", v.kind},           {"height", v.height},       {"offset", v.offset},
       {"jumps", v.jumps},         {"expected", v.expected},   {"tolerance", v.tolerance},
       {"passed", v.passed},       {"traces", v.traces}};
}

void from_json(const nlohmann::json& j, TraceReport& v) {
  j.at("kind").get_to(v.kind);
  j.at("height").get_to(v.height);
  j.at("offset").get_to(v.offset);
  j.at("jumps").get_to(v.jumps);
  j.at("expected").get_to(v.expected);
  j.at("tolerance").get_to(v.tolerance);
  j.at("passed").get_to(v.passed);
  j.at("traces").get_to(v.traces);
}

// ---------------------------------------------------------------- commands

int cmd_pi_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.x_values.empty()) throw UsageError("pi-table needs at least one --x value");
  for (double x : cfg.x_values) {
    if (!(x > 2.0) || x >= static_cast<double>(arith::kMaxSieveLimit)) {
      throw UsageError("pi-table x values must lie in (2, 1e8)");
    }
  }
  cfg.tolerances.validate();
  const ZeroList zl = load_zero_source(cfg.zero_source);
  const double x_max = *std::max_element(cfg.x_values.begin(), cfg.x_values.end());
  const auto primes = arith::sieve(static_cast<std::int64_t>(std::floor(x_max)) + 1);

  PiTableReport report;
  report.tolerance = cfg.count_tolerance;
  for (double x : cfg.x_values) {
    PiTableRow row;
    row.x = x;
    row.f_analytic = formula::big_f_analytic(x, zl, cfg.tolerances);
    row.pi_sieve = boost::rational_cast<double>(arith::big_f_step(x, primes));
    row.abs_diff = std::abs(row.f_analytic - row.pi_sieve);
    row.f_riemann = formula::f_riemann({x, zl, cfg.tolerances, formula::Form::riemann});
    row.f_residue = formula::f_residue({x, zl, cfg.tolerances, formula::Form::residue});
    row.zeros_used = zl.size();
    report.passed = report.passed && row.abs_diff < cfg.count_tolerance;
    report.rows.push_back(std::move(row));
  }
  Sink sink(cfg.output_path, out);
  emit_pi_table(report, cfg.output_format, sink.get());
  return report.passed ? kSuccess : kToleranceBreach;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<double> xs = cfg.x_values;
  if (xs.empty()) xs = {3.0, 5.0, 10.0, 50.0, 200.0};
  for (double x : xs) {
    if (!(x > 1.0)) throw UsageError("verify x values must exceed 1");
  }
  if (!(cfg.identity_tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  cfg.tolerances.validate();
  const ZeroList zl = load_zero_source(cfg.zero_source);

  VerifyReport report;
  report.tolerance = cfg.identity_tolerance;
  for (double x : xs) {
    VerifyEntry e;
    e.identity = formula::verify_identity(x, cfg.tolerances);
    e.f_riemann = formula::f_riemann({x, zl, cfg.tolerances, formula::Form::riemann});
    e.f_residue = formula::f_residue({x, zl, cfg.tolerances, formula::Form::residue});
    e.form_difference = e.f_riemann.total - e.f_residue.total;
    const double worst = std::max({std::abs(e.identity.difference), std::abs(e.identity.cov_difference),
                                   std::abs(e.form_difference)});
    report.passed = report.passed && worst <= cfg.identity_tolerance;
    report.entries.push_back(std::move(e));
  }
  Sink sink(cfg.output_path, out);
  emit_verify(report, cfg.output_format, sink.get());
  return report.passed ? kSuccess : kToleranceBreach;
}

int cmd_branch_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.trace_offset > 0.0 && cfg.trace_offset <= 0.5)) throw UsageError("--offset must lie in (0, 0.5]");
  TraceReport report;
  report.offset = cfg.trace_offset;
  const double measure_offset = 0.05;
  std::vector<ComplexPoint> avoid;
  branch::Evaluator f = branch::zeta_evaluator();
  double sigma_lo = 0.0;
  bool validate = true;

  try {
    switch (cfg.trace_kind) {
      case TraceKind::real: {
        const auto range = cfg.sigma_range.value_or(std::pair{-1.5, 0.5});
        if (!(range.first > -2.0 && range.second < 1.0 && range.first < range.second)) {
          throw UsageError("real-axis sigma range must lie inside (-2, 1)");
        }
        report.kind = "real";
        report.height = 0.0;
        report.expected = {kTwoPi};
        report.tolerance = 1e-3;
        report.jumps = {branch::measure_cut_jump(range, 0.0, measure_offset).jump};
        sigma_lo = range.first;
        break;
      }
      case TraceKind::critical: {
        const auto range = cfg.sigma_range.value_or(std::pair{-3.0, 0.4});
        if (!(range.second < 0.5 && range.first < range.second)) {
          throw UsageError("critical-cut sigma range must lie left of 1/2");
        }
        const ZeroList zl = load_zero_source(cfg.zero_source);
        if (cfg.zero_index < 1 || cfg.zero_index > zl.size()) throw UsageError("--zero-index out of range");
        report.kind = "critical";
        report.height = zl.gamma(cfg.zero_index);
        report.expected = {-kTwoPi};
        report.tolerance = 1e-3;
        report.jumps = {branch::measure_critical_cut_jump(zl, cfg.zero_index, 0.5 * (range.first + range.second),
                                                          measure_offset)};
        for (double g : zl.ordinates()) avoid.emplace_back(0.5, g);
        sigma_lo = range.first;
        break;
      }
      case TraceKind::rogue: {
        double gamma = 0.0;
        if (cfg.rogue_height) {
          gamma = *cfg.rogue_height;
        } else {
          const ZeroList zl = zeros::find_zeros_up_to(30.0);
          gamma = 0.5 * (zl.gamma(1) + zl.gamma(2));
        }
        const ComplexPoint r1(cfg.rogue_sigma1, gamma);
        const ComplexPoint r2(cfg.rogue_sigma2, gamma);
        report.kind = "rogue";
        report.height = gamma;
        report.expected = {2.0 * kTwoPi, kTwoPi};
        report.tolerance = 1e-2;
        const auto jumps = branch::rogue_experiment(r1, r2, measure_offset);
        report.jumps = {jumps.left_jump, jumps.middle_jump};
        f = branch::zeta_with_artificial_zeros(r1, r2);
        validate = false;
        sigma_lo = cfg.sigma_range ? cfg.sigma_range->first : -1.0;
        break;
      }
    }
  } catch (const InconsistencyError& e) {
    err << "riemann: " << e.what() << '\n';
    return kToleranceBreach;
  }
  for (std::size_t i = 0; i < report.jumps.size(); ++i) {
    report.passed = report.passed && std::abs(report.jumps[i] - report.expected[i]) <= report.tolerance;
  }
  report.traces.push_back(horizontal_trace(f, report.height + cfg.trace_offset, sigma_lo, avoid, validate));
  report.traces.push_back(horizontal_trace(f, report.height - cfg.trace_offset, sigma_lo, avoid, validate));

  Sink sink(cfg.output_path, out);
  std::ostream& os = sink.get();
  if (cfg.output_format == Format::json) {
    os << nlohmann::json(report).dump(2) << '\n';
  } else {
    os << "sigma,t,re_log,im_log\n" << std::setprecision(17);
    for (const auto& line : report.traces) {
      for (const auto& p : line.points) os << p[0] << ',' << p[1] << ',' << p[2] << ',' << p[3] << '\n';
    }
    os << "# kind: " << report.kind << ", height: " << report.height << ", offset: " << report.offset << '\n';
    for (std::size_t i = 0; i < report.jumps.size(); ++i) {
      os << "# jump[" << i << "]: " << report.jumps[i] << " (expected " << report.expected[i] << ")\n";
    }
  }
  return report.passed ? kSuccess : kToleranceBreach;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.zeros_action == "find") {
    if (!(cfg.up_to > 0.0 && cfg.up_to <= zeros::kMaxHeight)) {
      throw UsageError("--up-to must lie in (0, " + std::to_string(static_cast<int>(zeros::kMaxHeight)) + "]");
    }
    zeros::FinderOptions options;
    options.grid_step = cfg.grid_step;
    const ZeroList zl = zeros::find_zeros_up_to(cfg.up_to, options);
    Sink sink(cfg.output_path, out);
    std::ostream& os = sink.get();
    if (cfg.output_format == Format::json) {
      os << nlohmann::json(zl).dump(2) << '\n';
    } else {
      os << std::fixed << std::setprecision(12);
      for (double g : zl.ordinates()) os << g << '\n';
    }
    return kSuccess;
  }
  if (cfg.zeros_action != "check") throw UsageError("zeros needs a subcommand: find or check");
  if (cfg.zeros_file.empty()) throw UsageError("zeros check needs --file");
  std::ifstream in(cfg.zeros_file);
  if (!in) throw std::ios_base::failure("cannot open zero table " + cfg.zeros_file);
  const ZeroList loaded = zeros::load_zeros(in);
  if (loaded.empty()) throw ValidationError("zero table is empty", 0.0);

  double height = 0.0;
  if (cfg.check_height) {
    height = *cfg.check_height;
  } else {
    // Midway between the last two reachable ordinates keeps the contour
    // clear of both.
    const std::size_t k = loaded.count_below(zeros::kMaxHeight);
    if (k == 0) throw ValidationError("no ordinate below the certifiable height", loaded.gamma(1));
    height = k == 1 ? 0.5 * loaded.gamma(1) : 0.5 * (loaded.gamma(k - 1) + loaded.gamma(k));
  }
  const ZeroList certified = zeros::certify(loaded, height);
  ZeroCheckReport report;
  report.zeros = certified.size();
  report.certified_through = certified.certified_through();
  report.count = zeros::zero_count_check(height, certified);

  Sink sink(cfg.output_path, out);
  std::ostream& os = sink.get();
  if (cfg.output_format == Format::json) {
    os << nlohmann::json(report).dump(2) << '\n';
  } else if (cfg.output_format == Format::csv) {
    os << "T,count,estimate,band,within_band\n"
       << std::setprecision(17) << report.count.height << ',' << report.count.count << ','
       << report.count.estimate << ',' << report.count.band << ',' << (report.count.within_band ? 1 : 0) << '\n';
  } else {
    os << "ordinates loaded     " << report.zeros << '\n'
       << "certified through T  " << report.certified_through << '\n'
       << "N(T)                 " << report.count.count << '\n'
       << "main terms           " << std::setprecision(10) << report.count.estimate << '\n'
       << "|N(T) - main|        " << std::abs(static_cast<double>(report.count.count) - report.count.estimate)
       << " (band " << report.count.band << ")\n";
  }
  return report.count.within_band ? kSuccess : kToleranceBreach;
}

// ---------------------------------------------------------------- entry

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Prime counting through Riemann's explicit formula", "riemann"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  RunConfig cfg;
  std::string x_text;
  std::string zeros_text;
  std::string format_text;
  std::string output;
  std::string kind_text = "real";
  std::string range_text;
  double rogue_height = 0.0;

  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    format_text = default_format;
    sub->add_option("--format", format_text, "csv, json or text");
    sub->add_option("--output,-o", output, "Write to a file instead of stdout");
    sub->add_option("--abs-tol", cfg.tolerances.abs_tol, "Absolute quadrature tolerance");
    sub->add_option("--rel-tol", cfg.tolerances.rel_tol, "Relative quadrature tolerance");
  };

  auto* pi = app.add_subcommand("pi-table", "F(x) from the explicit formula against the sieve");
  pi->add_option("--x", x_text, "Comma-separated x values")->required();
  pi->add_option("--zeros", zeros_text, "compute:T or file:PATH");
  pi->add_option("--tolerance", cfg.count_tolerance, "Allowed |F_analytic - pi(x)|");

  auto* verify = app.add_subcommand("verify", "Check the identity linking the two forms of f(x)");
  verify->add_option("--x", x_text, "Comma-separated x values");
  verify->add_option("--zeros", zeros_text, "compute:T or file:PATH");
  verify->add_option("--tolerance", cfg.identity_tolerance, "Allowed difference");

  auto* trace = app.add_subcommand("branch-trace", "Im log zeta just above and below a branch cut");
  trace->add_option("--kind", kind_text, "real, critical or rogue");
  trace->add_option("--offset", cfg.trace_offset, "Distance of the traced lines from the cut");
  trace->add_option("--zero-index", cfg.zero_index, "Zero whose cut is traced (critical)");
  trace->add_option("--sigma-range", range_text, "lo,hi");
  trace->add_option("--zeros", zeros_text, "compute:T or file:PATH");
  auto* height_opt = trace->add_option("--height", rogue_height, "Ordinate of the artificial zeros (rogue)");
  trace->add_option("--r1-sigma", cfg.rogue_sigma1, "Abscissa of the first artificial zero");
  trace->add_option("--r2-sigma", cfg.rogue_sigma2, "Abscissa of the second artificial zero");

  auto* zeros_cmd = app.add_subcommand("zeros", "Compute or check zero tables");
  zeros_cmd->require_subcommand(1);
  auto* find = zeros_cmd->add_subcommand("find", "Zeros on the critical line up to height T");
  find->add_option("--up-to", cfg.up_to, "Height T")->required();
  find->add_option("--step", cfg.grid_step, "Scan grid step");
  auto* check = zeros_cmd->add_subcommand("check", "Validate a zero table and compare N(T)");
  check->add_option("--file", cfg.zeros_file, "Zero table")->required();
  auto* check_height = check->add_option("--up-to", cfg.up_to, "Height T for the count");

  add_common(pi, "text");
  add_common(verify, "text");
  add_common(trace, "csv");
  add_common(find, "text");
  add_common(check, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "riemann: " << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.output_format = parse_format(format_text);
    if (!output.empty()) cfg.output_path = output;
    if (!x_text.empty() || (pi->parsed())) cfg.x_values = parse_real_list(x_text);
    if (!zeros_text.empty()) {
      cfg.zero_source = parse_zero_spec(zeros_text);
    } else if (env.zeros_file) {
      cfg.zero_source = ZeroSpec{ZeroSpec::Kind::file, 0.0, *env.zeros_file};
    }
    if (!range_text.empty()) {
      const auto r = parse_real_list(range_text);
      if (r.size() != 2) throw UsageError("--sigma-range needs two values");
      cfg.sigma_range = std::pair{r[0], r[1]};
    }
    if (*height_opt) cfg.rogue_height = rogue_height;
    if (kind_text == "real") {
      cfg.trace_kind = TraceKind::real;
    } else if (kind_text == "critical") {
      cfg.trace_kind = TraceKind::critical;
    } else if (kind_text == "rogue") {
      cfg.trace_kind = TraceKind::rogue;
    } else {
      throw UsageError("--kind must be real, critical or rogue");
    }
    if (*check_height) cfg.check_height = cfg.up_to;
    try {
      cfg.tolerances.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }

    if (pi->parsed()) {
      cfg.command = "pi-table";
      return cmd_pi_table(cfg, out, err);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    if (trace->parsed()) {
      cfg.command = "branch-trace";
      return cmd_branch_trace(cfg, out, err);
    }
    cfg.command = "zeros";
    cfg.zeros_action = find->parsed() ? "find" : "check";
    return cmd_zeros(cfg, out, err);
  } catch (const UsageError& e) {
    err << "riemann: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "riemann: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace riemann::cli
