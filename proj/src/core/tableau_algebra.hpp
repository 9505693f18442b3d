#pragma once

#include <map>
#include <optional>

#include "core/skew.hpp"
#include "core/tableau.hpp"

namespace schub {

// Integer combination of tableaux with canonical term order.
class FormalSum {
 public:
  FormalSum() = default;
  static FormalSum of(const Tableau& t);

  void add(const Tableau& t, long long c);
  void add_new_term(const Tableau& t);  // coefficient 1, key must be fresh
  FormalSum& operator+=(const FormalSum& o);

  const std::map<Tableau, long long, TableauLess>& terms() const { return terms_; }
  long long coefficient(const Tableau& t) const;
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<Tableau, long long, TableauLess> terms_;
};

// s o t: the sum of union_shift(s, u) over all skew tableaux u, of any outer
// shape, with inner shape = shape(s), that rectify to t. Every term has
// coefficient one.
FormalSum circ(const Tableau& s, const Tableau& t);
FormalSum circ(const FormalSum& a, const FormalSum& b);

// shape label of a tableau, i.e. the Schur-function index it maps to
Partition phi_shape(const Tableau& t);

enum class VanishRule {
  box,        // keep shapes with at most m+1 rows and first part <= n-m
  as_printed  // keep shapes with lambda_1 + m < n and lambda_{m+1} = 0
};

// the shape label when the tableau survives the projection to the Chow ring
// of m-planes in P^n, absent when the class is zero there
std::optional<Partition> phi_mn(const Tableau& t, int m, int n,
                                VanishRule rule = VanishRule::box);

}  // namespace schub
