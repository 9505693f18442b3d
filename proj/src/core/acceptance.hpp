#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schub {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The acceptance matrix: twelve exact checks covering the tableau calculus,
// the tableau algebra, the Chow ring, the explicit instances over small
// prime fields and Q, arrangements, the hyperplane pencil, and the line-set
// identities. threads caps the parallel line scans.
std::vector<CriterionResult> run_acceptance(int threads);

nlohmann::json acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace schub
