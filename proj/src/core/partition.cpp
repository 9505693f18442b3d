#include "core/partition.hpp"

#include <numeric>

#include "core/errors.hpp"

namespace schub {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw domain_error("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw domain_error("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::two_row(int a, int b) { return Partition(std::vector<int>{a, b}); }

bool Partition::contains(const Partition& mu) const {
  for (int i = 0; i < mu.rows(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

namespace {

void gen_parts(int remaining, int max_part, int rows_left, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Partition> partitions_of(int n, int max_rows) {
  if (n < 0) throw domain_error("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_parts(n, n, max_rows, cur, out);
  return out;
}

}  // namespace schub
