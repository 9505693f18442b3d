#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "core/lines.hpp"

namespace schub {

// Points of P^1 in a fixed canonical order: [1,0], [0,1], [1,1], [2,1], ...
// Over F_p the list has length p+1; over Q it is unbounded (count entries).
std::vector<std::pair<Rat, Rat>> canonical_p1_points(const FieldSpec& f, int count);

// Four (n-1)-planes in P^{2n-1} whose common incident lines are the n
// coordinate lines span(e_j, e_{n+j}): three fixed planes plus a fourth cut
// out by the given points of P^1. Predicted lines are verified against all
// four conditions at construction time.
struct SegreInstance {
  SchubertProblem problem;               // four conditions, K = plane, M = all
  std::vector<Subspace> predicted;       // the n solution lines
  std::vector<std::pair<Rat, Rat>> points;
  nlohmann::json to_json() const;
};
SegreInstance segre_instance(int n, const FieldSpec& f,
                             std::vector<std::pair<Rat, Rat>> points = {});

// The rational normal scroll frame in P^{n+1}: the directrix line
// x_2 .. x_{n+1} = 0, the ruling lines lambda(p), and the (n-1)-plane cut out
// by x_2 - y_1 and A_0 x_1 + A_1 y_1 + ... + A_n y_n where the A_i are the
// coefficients of a binary form vanishing exactly at the given roots.
struct ScrollInstance {
  int n = 0;
  FieldSpec field;
  Subspace directrix;                    // the fixed line
  Subspace plane;                        // K_{n+1}
  std::vector<Rat> form;                 // A_0..A_n
  std::vector<std::pair<Rat, Rat>> roots;
  std::vector<Subspace> predicted;       // lambda(root_i)
  nlohmann::json to_json() const;
};
ScrollInstance scroll_instance(int n, const FieldSpec& f,
                               std::vector<std::pair<Rat, Rat>> roots = {});

// the ruling line through p = [a,b]
Subspace scroll_line(int n, const FieldSpec& f, const std::pair<Rat, Rat>& p);

struct ScrollReport {
  ScrollInstance instance;
  bool pullback_matches = false;  // substituted linear form equals the root form
  long long rational_ruling_lines = 0;
  bool exactly_roots_meet = false;
  std::vector<std::pair<Rat, Rat>> meeting_params;
  nlohmann::json to_json() const;
};
// over F_p scans all q+1 ruling lines; over Q checks the predicted roots and
// a deterministic sample of non-roots
ScrollReport scroll_check(const ScrollInstance& inst);

}  // namespace schub
