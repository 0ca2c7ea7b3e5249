#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

namespace warpcon {

/// Structured result of one verification check. `anchor` names the claim the
/// check traces to (or "plumbing" for infrastructure checks); `hard` marks
/// checks whose failure must fail the whole run, as opposed to reported-only
/// demonstrations.
struct CheckReport {
  std::string check_id;
  std::string anchor = "plumbing";
  nlohmann::json params = nlohmann::json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool hard = true;
  std::string note;
  std::int64_t runtime_ms = 0;
};

inline CheckReport make_report(std::string check_id, std::string anchor, double residual,
                               double tolerance, nlohmann::json params = nlohmann::json::object()) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.anchor = std::move(anchor);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  return r;
}

inline void to_json(nlohmann::json& j, const CheckReport& r) {
  j = nlohmann::json{{"check_id", r.check_id}, {"anchor", r.anchor},   {"params", r.params},
                     {"residual", r.residual}, {"tol", r.tolerance},   {"pass", r.pass},
                     {"hard", r.hard},         {"note", r.note},       {"runtime_ms", r.runtime_ms}};
}

inline void from_json(const nlohmann::json& j, CheckReport& r) {
  j.at("check_id").get_to(r.check_id);
  j.at("anchor").get_to(r.anchor);
  r.params = j.at("params");
  j.at("residual").get_to(r.residual);
  j.at("tol").get_to(r.tolerance);
  j.at("pass").get_to(r.pass);
  j.at("hard").get_to(r.hard);
  j.at("note").get_to(r.note);
  j.at("runtime_ms").get_to(r.runtime_ms);
}

}  // namespace warpcon
