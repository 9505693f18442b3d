#include "core/lr.hpp"

#include <vector>

namespace schub {

namespace {

struct Filler {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> value;  // value[r][c], 0 = unset/inner
  std::vector<int> used;                // copies of each letter placed so far

  // cells in reverse reading order: rows top to bottom, columns right to left
  long long fill(int r, int c) {
    if (r == lambda.rows()) return 1;
    if (c < mu.part(r)) return fill(r + 1, lambda.part(r + 1) - 1);
    long long acc = 0;
    const int right = c + 1 < lambda.part(r) ? value[r][c + 1] : 0;
    const int above = (r > 0 && c >= mu.part(r - 1)) ? value[r - 1][c] : 0;
    for (int v = 1; v <= nu.rows(); ++v) {
      if (used[v] >= nu.part(v - 1)) continue;
      if (v > 1 && used[v] >= used[v - 1]) continue;  // ballot
      if (right != 0 && v > right) continue;          // weakly increasing row
      if (above != 0 && v <= above) continue;         // strictly increasing column
      value[r][c] = v;
      ++used[v];
      acc += fill(r, c - 1);
      --used[v];
      value[r][c] = 0;
    }
    return acc;
  }
};

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  if (!lambda.contains(mu)) return 0;
  if (nu.empty()) return lambda == mu ? 1 : 0;

  Filler f{lambda, mu, nu, {}, {}};
  f.value.assign(lambda.rows(), {});
  for (int r = 0; r < lambda.rows(); ++r) f.value[r].assign(lambda.part(r), 0);
  f.used.assign(nu.rows() + 1, 0);
  return f.fill(0, lambda.part(0) - 1);
}

}  // namespace schub
