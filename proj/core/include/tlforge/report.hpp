#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tlforge {

/// Outcome of one relation check: Frobenius residual against the pass
/// threshold that was in force.
struct RelationReport {
  std::string relation;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<RelationReport> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
  const RelationReport* failing() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

/// Thrown when a bundle verification (verify_all and friends) rejects its
/// input; carries the first failing relation and its residual.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string relation, double residual)
      : std::runtime_error("relation '" + relation + "' failed, residual " +
                           std::to_string(residual)),
        relation_(std::move(relation)),
        residual_(residual) {}
  const std::string& relation() const { return relation_; }
  double residual() const { return residual_; }

 private:
  std::string relation_;
  double residual_;
};

}  // namespace tlforge
