#include "riemann/serialization.hpp"

#include <string>
#include <vector>

namespace riemann {

void to_json(nlohmann::json& j, const QuadratureConfig& v) {
  j = {{"abs_tol", v.abs_tol},
       {"rel_tol", v.rel_tol},
       {"max_subdivisions", v.max_subdivisions},
       {"pv_epsilon_floor", v.pv_epsilon_floor},
       {"tail_terms", v.tail_terms}};
}

void from_json(const nlohmann::json& j, QuadratureConfig& v) {
  j.at("abs_tol").get_to(v.abs_tol);
  j.at("rel_tol").get_to(v.rel_tol);
  j.at("max_subdivisions").get_to(v.max_subdivisions);
  j.at("pv_epsilon_floor").get_to(v.pv_epsilon_floor);
  j.at("tail_terms").get_to(v.tail_terms);
}

void to_json(nlohmann::json& j, const ZeroList& v) {
  j = {{"source", v.source() == ZeroSource::computed ? "computed" : "loaded"},
       {"certified_through", v.certified_through()},
       {"ordinates", std::vector<double>(v.ordinates().begin(), v.ordinates().end())}};
}

void from_json(const nlohmann::json& j, ZeroList& v) {
  const auto source = j.at("source").get<std::string>();
  if (source != "computed" && source != "loaded") throw DomainError("unknown zero source '" + source + "'");
  v = ZeroList(j.at("ordinates").get<std::vector<double>>(),
               source == "computed" ? ZeroSource::computed : ZeroSource::loaded,
               j.at("certified_through").get<double>());
}

}  // namespace riemann

namespace riemann::formula {

void to_json(nlohmann::json& j, const FormulaBreakdown& v) {
  j = {{"form", std::string(to_string(v.form))},
       {"x", v.x},
       {"leading", v.leading},
       {"zero_sum", v.zero_sum},
       {"tail", v.tail},
       {"constant", v.constant},
       {"total", v.total},
       {"imag_residue", v.imag_residue},
       {"zeros_used", v.zeros_used},
       {"est_truncation_error", v.est_truncation_error},
       {"quadrature_error", v.quadrature_error}};
}

void from_json(const nlohmann::json& j, FormulaBreakdown& v) {
  v.form = form_from_string(j.at("form").get<std::string>());
  j.at("x").get_to(v.x);
  j.at("leading").get_to(v.leading);
  j.at("zero_sum").get_to(v.zero_sum);
  j.at("tail").get_to(v.tail);
  j.at("constant").get_to(v.constant);
  j.at("total").get_to(v.total);
  j.at("imag_residue").get_to(v.imag_residue);
  j.at("zeros_used").get_to(v.zeros_used);
  j.at("est_truncation_error").get_to(v.est_truncation_error);
  j.at("quadrature_error").get_to(v.quadrature_error);
}

void to_json(nlohmann::json& j, const IdentityReport& v) {
  j = {{"x", v.x},
       {"li", v.li},
       {"tail_integral", v.tail_integral},
       {"pv_integral", v.pv_integral},
       {"gamma_tail", v.gamma_tail},
       {"lhs", v.lhs},
       {"rhs", v.rhs},
       {"difference", v.difference},
       {"cov_left", v.cov_left},
       {"cov_right", v.cov_right},
       {"cov_difference", v.cov_difference},
       {"error_bound", v.error_bound}};
}

void from_json(const nlohmann::json& j, IdentityReport& v) {
  j.at("x").get_to(v.x);
  j.at("li").get_to(v.li);
  j.at("tail_integral").get_to(v.tail_integral);
  j.at("pv_integral").get_to(v.pv_integral);
  j.at("gamma_tail").get_to(v.gamma_tail);
  j.at("lhs").get_to(v.lhs);
  j.at("rhs").get_to(v.rhs);
  j.at("difference").get_to(v.difference);
  j.at("cov_left").get_to(v.cov_left);
  j.at("cov_right").get_to(v.cov_right);
  j.at("cov_difference").get_to(v.cov_difference);
  j.at("error_bound").get_to(v.error_bound);
}

}  // namespace riemann::formula

namespace riemann::zeros {

void to_json(nlohmann::json& j, const ZeroCountReport& v) {
  j = {{"height", v.height},
       {"count", v.count},
       {"estimate", v.estimate},
       {"band", v.band},
       {"within_band", v.within_band}};
}

void from_json(const nlohmann::json& j, ZeroCountReport& v) {
  j.at("height").get_to(v.height);
  j.at("count").get_to(v.count);
  j.at("estimate").get_to(v.estimate);
  j.at("band").get_to(v.band);
  j.at("within_band").get_to(v.within_band);
}

}  // namespace riemann::zeros

namespace riemann::branch {

void to_json(nlohmann::json& j, const JumpMeasurement& v) {
  j = {{"jump", v.jump},
       {"sigmas", v.sigmas},
       {"jumps", v.jumps},
       {"upper_limits", v.upper_limits},
       {"lower_limits", v.lower_limits},
       {"spread", v.spread}};
}

void from_json(const nlohmann::json& j, JumpMeasurement& v) {
  j.at("jump").get_to(v.jump);
  j.at("sigmas").get_to(v.sigmas);
  j.at("jumps").get_to(v.jumps);
  j.at("upper_limits").get_to(v.upper_limits);
  j.at("lower_limits").get_to(v.lower_limits);
  j.at("spread").get_to(v.spread);
}

void to_json(nlohmann::json& j, const RogueJumps& v) {
  j = {{"left_jump", v.left_jump}, {"middle_jump", v.middle_jump}};
}

void from_json(const nlohmann::json& j, RogueJumps& v) {
  j.at("left_jump").get_to(v.left_jump);
  j.at("middle_jump").get_to(v.middle_jump);
}

}  // namespace riemann::branch
