#pragma once

#include <vector>

namespace schub {

// Weakly decreasing positive parts; trailing zeros are dropped on input.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition two_row(int a, int b);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i >= 0 && i < rows() ? parts_[i] : 0; }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  bool is_two_row() const { return rows() <= 2; }
  bool contains(const Partition& mu) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  bool lex_less(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// all partitions of n (any number of rows), deterministic order
std::vector<Partition> partitions_of(int n);
// same but with at most max_rows rows
std::vector<Partition> partitions_of(int n, int max_rows);

}  // namespace schub
