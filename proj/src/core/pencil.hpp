#pragma once

#include <cstdint>

#include <json.hpp>

#include "core/subspace.hpp"

namespace schub {

// One-parameter family of hyperplanes L_t = span{t e_j + e_{j+1}} in a basis
// adapted to a flag and a hyperplane L_inf: span(e_i..e_n) = F_i and
// span(e_0..e_{n-1}) = L_inf. For t != 0 the sections L_t meet F_i with
// codimension i+1 and their spanning rows degenerate to F_{i+1} at t = 0.
class Pencil {
 public:
  Pencil(Flag flag, Subspace l_inf);  // l_inf must not contain F_n

  int ambient() const { return flag_.ambient(); }
  const FieldSpec& field() const { return flag_.field(); }
  const Flag& flag() const { return flag_; }
  const Subspace& l_inf() const { return l_inf_; }

  Subspace at(const Rat& t) const;  // residue of t taken mod p over F_p
  Subspace at_infinity() const;
  // span of {t e_j + e_{j+1} : j = i..n-1}; the claimed value of L_t meet F_i
  Subspace section_span(const Rat& t, int i) const;
  // the same rows evaluated at t = 0; should span F_{i+1}
  Subspace limit_span(int i) const;

 private:
  Flag flag_;
  Subspace l_inf_;
  Mat<Rat> frame_q_;              // rows e_0..e_n (rational case)
  Mat<std::int64_t> frame_fp_;    // rows e_0..e_n (prime case)
  Subspace rows_to_subspace(const std::vector<int>& js, const Rat& t, bool with_t) const;
};

struct PencilReport {
  bool precondition_ok = true;
  bool pass = false;
  int parameters_checked = 0;
  std::vector<std::string> failures;
  nlohmann::json to_json() const;
};

// over F_p: every nonzero t; over Q: `trials` seeded random nonzero t
PencilReport pencil_verify(const Pencil& p, int trials, std::uint64_t seed);

}  // namespace schub
