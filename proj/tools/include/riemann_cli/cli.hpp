#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "riemann/branch.hpp"
#include "riemann/explicit_formula.hpp"
#include "riemann/types.hpp"
#include "riemann/zero_finder.hpp"

namespace riemann::cli {

enum ExitCode : int {
  kSuccess = 0,
  kToleranceBreach = 2,
  kUsage = 64,
  kDataError = 65,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json, text };

struct ZeroSpec {
  enum class Kind { compute, file };
  Kind kind = Kind::compute;
  double height = 100.0;
  std::string path;
};

// "compute:T" or "file:PATH". Throws UsageError.
ZeroSpec parse_zero_spec(std::string_view text);
Format parse_format(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

struct Environment {
  std::optional<std::string> zeros_file;  // RIEMANN_ZEROS_FILE
  static Environment from_process();
};

enum class TraceKind { real, critical, rogue };

struct RunConfig {
  std::string command;
  std::vector<double> x_values;
  ZeroSpec zero_source;
  QuadratureConfig tolerances;
  Format output_format = Format::text;
  std::optional<std::string> output_path;

  // verify
  double identity_tolerance = 1e-7;
  // pi-table
  double count_tolerance = 0.35;
  // branch-trace
  TraceKind trace_kind = TraceKind::real;
  double trace_offset = 0.01;
  std::size_t zero_index = 1;
  std::optional<std::pair<double, double>> sigma_range;
  std::optional<double> rogue_height;
  double rogue_sigma1 = 0.1;
  double rogue_sigma2 = 0.9;
  // zeros
  std::string zeros_action;  // "find" or "check"
  double up_to = 100.0;
  std::optional<double> check_height;
  std::string zeros_file;
  double grid_step = 0.05;
};

ZeroList load_zero_source(const ZeroSpec& spec);

struct PiTableRow {
  double x = 0.0;
  double f_analytic = 0.0;  // F(x) by inversion of the analytic f
  double pi_sieve = 0.0;
  double abs_diff = 0.0;
  formula::FormulaBreakdown f_riemann;
  formula::FormulaBreakdown f_residue;
  std::size_t zeros_used = 0;

  friend bool operator==(const PiTableRow&, const PiTableRow&) = default;
};

struct PiTableReport {
  double tolerance = 0.0;
  std::vector<PiTableRow> rows;
  bool passed = true;

  friend bool operator==(const PiTableReport&, const PiTableReport&) = default;
};

struct VerifyEntry {
  formula::IdentityReport identity;
  formula::FormulaBreakdown f_riemann;
  formula::FormulaBreakdown f_residue;
  double form_difference = 0.0;

  friend bool operator==(const VerifyEntry&, const VerifyEntry&) = default;
};

struct VerifyReport {
  double tolerance = 0.0;
  std::vector<VerifyEntry> entries;
  bool passed = true;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct ZeroCheckReport {
  std::size_t zeros = 0;
  double certified_through = 0.0;
  zeros::ZeroCountReport count;

  friend bool operator==(const ZeroCheckReport&, const ZeroCheckReport&) = default;
};

struct TraceLine {
  double height = 0.0;
  std::vector<std::array<double, 4>> points;  // sigma, t, re_log, im_log

  friend bool operator==(const TraceLine&, const TraceLine&) = default;
};

struct TraceReport {
  std::string kind;
  double height = 0.0;
  double offset = 0.0;
  std::vector<double> jumps;     // real/critical: one value; rogue: left, middle
  std::vector<double> expected;  // same layout as `jumps`
  double tolerance = 0.0;
  bool passed = true;
  std::vector<TraceLine> traces;  // above, then below

  friend bool operator==(const TraceReport&, const TraceReport&) = default;
};

void to_json(nlohmann::json& j, const PiTableRow& v);
void from_json(const nlohmann::json& j, PiTableRow& v);
void to_json(nlohmann::json& j, const PiTableReport& v);
void from_json(const nlohmann::json& j, PiTableReport& v);
void to_json(nlohmann::json& j, const VerifyEntry& v);
void from_json(const nlohmann::json& j, VerifyEntry& v);
void to_json(nlohmann::json& j, const VerifyReport& v);
void from_json(const nlohmann::json& j, VerifyReport& v);
void to_json(nlohmann::json& j, const ZeroCheckReport& v);
void from_json(const nlohmann::json& j, ZeroCheckReport& v);
void to_json(nlohmann::json& j, const TraceLine& v);
void from_json(const nlohmann::json& j, TraceLine& v);
void to_json(nlohmann::json& j, const TraceReport& v);
void from_json(const nlohmann::json& j, TraceReport& v);

int cmd_pi_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_branch_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env);

}  // namespace riemann::cli
