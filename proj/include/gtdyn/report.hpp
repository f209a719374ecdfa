#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace gtdyn {

/// Outcome of a single numerical certificate. pass <=> max_residual <=
/// tolerance, established at construction.
struct VerificationReport {
  std::string check;
  nlohmann::json params;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::json diagnostics;

  static VerificationReport make(std::string check, nlohmann::json params, double max_residual,
                                 double tolerance, nlohmann::json diagnostics = {}) {
    VerificationReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    r.pass = max_residual <= tolerance;
    r.diagnostics = std::move(diagnostics);
    return r;
  }

  nlohmann::json to_json() const {
    return {{"check", check},           {"params", params}, {"max_residual", max_residual},
            {"tolerance", tolerance},   {"pass", pass},     {"diagnostics", diagnostics}};
  }
};

}  // namespace gtdyn
