#pragma once

#include <optional>
#include <vector>

#include "core/numbers.hpp"
#include "core/partition.hpp"

namespace schub {

// Standard Young tableau: entries are exactly 1..degree, strictly increasing
// along rows and down columns.
class Tableau {
 public:
  Tableau() = default;  // the empty tableau
  explicit Tableau(std::vector<std::vector<int>> rows);
  static Tableau single_row(int length);  // 1,2,...,length

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int degree() const { return degree_; }
  Partition shape() const;
  std::vector<int> row(int r) const {
    return r >= 0 && r < static_cast<int>(rows_.size()) ? rows_[r] : std::vector<int>{};
  }
  int row_len(int r) const {
    return r >= 0 && r < static_cast<int>(rows_.size()) ? static_cast<int>(rows_[r].size()) : 0;
  }
  bool is_two_row() const { return rows_.size() <= 2; }
  bool rectangular() const { return is_two_row() && row_len(0) == row_len(1); }
  std::vector<int> second_row() const { return rows_.size() > 1 ? rows_[1] : std::vector<int>{}; }
  // restriction to the entries 1..k (always a tableau)
  Tableau first_entries(int k) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int degree_ = 0;
};

// Canonical order: by degree, then lexicographically on the concatenated
// rows, ties broken toward the wider shape.
struct TableauLess {
  bool operator()(const Tableau& a, const Tableau& b) const;
};

// Finite set of distinct tableaux of a common degree, kept in canonical order.
class TableauSet {
 public:
  TableauSet() = default;
  explicit TableauSet(std::vector<Tableau> members);

  const std::vector<Tableau>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  int degree() const;  // degree of the members; -1 when empty
  bool contains(const Tableau& t) const;

  friend bool operator==(const TableauSet&, const TableauSet&) = default;

 private:
  std::vector<Tableau> members_;
};

// T^{+s}(alpha-s): append entries |T|+1..|T|+s to row two, the rest to row
// one. Absent when the extended shape is not a tableau shape.
std::optional<Tableau> variant_tableau(const Tableau& t, int alpha, int s);

// T*alpha: every extension of T by alpha entries in distinct columns,
// increasing left to right.
TableauSet star_extend(const Tableau& t, int alpha);
TableauSet star_extend(const TableauSet& ts, int alpha);  // disjoint union

// {T^{+s}(tail) : T in ts}; s = tail = 0 gives ts back.
TableauSet variant_set(const TableauSet& ts, int s, int tail);
// union of variant_set(ts, j, alpha - j) for j = 0..s
TableauSet partial_star(const TableauSet& ts, int s, int alpha);

// iterated star product starting from the empty tableau; cap (when given)
// discards tableaux whose first row exceeds cap-1.
TableauSet multi_star(const std::vector<int>& alphas, std::optional<int> cap = std::nullopt);

// all standard tableaux of the given shape, canonical order
std::vector<Tableau> enumerate_standard(const Partition& shape);

// number of standard tableaux of two-row shape lambda in which, for each i,
// the entries s_i+1..s_i+alpha_i sit in distinct columns increasing left to
// right (s_i = alpha_1 + ... + alpha_{i-1})
long long c_count(const Partition& lambda, const std::vector<int>& alphas);

// (2s)!/(s!(s+1)!), the number of standard tableaux of shape (s,s)
Int rect_tableau_count(int s);

}  // namespace schub
