#pragma once

#include <vector>

#include "core/partition.hpp"
#include "core/rng.hpp"
#include "core/tableau.hpp"

namespace schub {

// Standard skew tableau of shape outer/inner: the cells of outer not in
// inner, filled with 1..cells, strictly increasing along rows and columns.
class SkewTableau {
 public:
  // filling[r] lists the entries of row r left to right (columns
  // inner_r .. outer_r - 1)
  SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> filling);
  static SkewTableau from_straight(const Tableau& t);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const std::vector<std::vector<int>>& filling() const { return filling_; }
  int cells() const { return outer_.weight() - inner_.weight(); }
  bool straight() const { return inner_.empty(); }
  Tableau as_straight() const;

  enum class CornerRule { top, bottom };
  // jeu de taquin rectification; the corner rule picks which inner corner
  // slides first (the result is rule-independent, which the tests check)
  Tableau rectify(CornerRule rule = CornerRule::top) const;
  Tableau rectify_random(Rng& rng) const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Tableau rectify_impl(int rule, Rng* rng) const;

  Partition outer_, inner_;
  std::vector<std::vector<int>> filling_;
};

// all standard fillings of outer/inner, deterministic order
std::vector<SkewTableau> standard_skew_fillings(const Partition& outer, const Partition& inner);

// true iff u rectifies to t; degrees must agree
bool knuth_equivalent(const SkewTableau& u, const Tableau& t);

// the tableau whose first |shape(s)| entries form s and whose remaining
// entries are u shifted up by |shape(s)|; inner(u) must equal shape(s)
Tableau union_shift(const Tableau& s, const SkewTableau& u);

}  // namespace schub
