#include "core/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/errors.hpp"

namespace schub {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  int total = 0;
  for (const auto& r : rows_) total += static_cast<int>(r.size());
  degree_ = total;

  std::vector<bool> seen(total + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r + 1 < rows_.size() && rows_[r].size() < rows_[r + 1].size())
      throw domain_error("tableau rows must weakly decrease in length");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > total || seen[v]) throw domain_error("tableau entries must be exactly 1..n");
      seen[v] = true;
      if (c + 1 < rows_[r].size() && rows_[r][c] >= rows_[r][c + 1])
        throw domain_error("tableau rows must strictly increase");
      if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r][c] >= rows_[r + 1][c])
        throw domain_error("tableau columns must strictly increase");
    }
  }
}

Tableau Tableau::single_row(int length) {
  if (length < 0) throw domain_error("single_row: negative length");
  if (length == 0) return Tableau();
  std::vector<int> row(length);
  std::iota(row.begin(), row.end(), 1);
  return Tableau({row});
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

Tableau Tableau::first_entries(int k) const {
  std::vector<std::vector<int>> out;
  for (const auto& r : rows_) {
    std::vector<int> row;
    for (int v : r)
      if (v <= k) row.push_back(v);
    out.push_back(row);
  }
  return Tableau(out);
}

bool TableauLess::operator()(const Tableau& a, const Tableau& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  std::vector<int> ca, cb;
  for (const auto& r : a.rows()) ca.insert(ca.end(), r.begin(), r.end());
  for (const auto& r : b.rows()) cb.insert(cb.end(), r.begin(), r.end());
  if (ca != cb) return ca < cb;
  return b.shape().lex_less(a.shape());  // wider shape first
}

TableauSet::TableauSet(std::vector<Tableau> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), TableauLess{});
  for (std::size_t i = 0; i + 1 < members_.size(); ++i) {
    if (members_[i] == members_[i + 1]) throw domain_error("tableau set has duplicates");
    if (members_[i].degree() != members_[i + 1].degree())
      throw domain_error("tableau set mixes degrees");
  }
}

int TableauSet::degree() const { return members_.empty() ? -1 : members_.front().degree(); }

bool TableauSet::contains(const Tableau& t) const {
  return std::binary_search(members_.begin(), members_.end(), t, TableauLess{});
}

std::optional<Tableau> variant_tableau(const Tableau& t, int alpha, int s) {
  if (!t.is_two_row()) throw domain_error("variant: tableau must have at most two rows");
  if (alpha <= 0) throw domain_error("variant: alpha must be positive");
  if (s < 0 || s > alpha) throw domain_error("variant: s out of range");
  const int a = t.row_len(0), b = t.row_len(1), d = t.degree();
  if (b + s > a) return std::nullopt;  // second row would outgrow the first
  std::vector<int> r0 = t.row(0) /*copy*/, r1 = t.second_row();
  for (int e = d + 1; e <= d + s; ++e) r1.push_back(e);
  for (int e = d + s + 1; e <= d + alpha; ++e) r0.push_back(e);
  return Tableau({r0, r1});
}

TableauSet star_extend(const Tableau& t, int alpha) {
  if (alpha <= 0) throw domain_error("star: alpha must be positive");
  std::vector<Tableau> out;
  for (int s = 0; s <= alpha; ++s)
    if (auto v = variant_tableau(t, alpha, s)) out.push_back(*v);
  return TableauSet(std::move(out));
}

TableauSet star_extend(const TableauSet& ts, int alpha) {
  std::vector<Tableau> all;
  std::size_t expected = 0;
  for (const Tableau& t : ts.members()) {
    TableauSet ext = star_extend(t, alpha);
    expected += ext.members().size();
    all.insert(all.end(), ext.members().begin(), ext.members().end());
  }
  TableauSet out{all};  // throws on duplicates
  if (out.members().size() != expected) throw domain_error("star: union not disjoint");
  return out;
}

TableauSet variant_set(const TableauSet& ts, int s, int tail) {
  if (s == 0 && tail == 0) return ts;
  std::vector<Tableau> out;
  for (const Tableau& t : ts.members()) {
    std::optional<Tableau> v;
    if (tail == 0) {
      v = variant_tableau(t, s, s);
    } else {
      v = variant_tableau(t, s + tail, s);
    }
    if (v) out.push_back(*v);
  }
  return TableauSet(std::move(out));
}

TableauSet partial_star(const TableauSet& ts, int s, int alpha) {
  if (s < 0 || s > alpha) throw domain_error("partial_star: s out of range");
  std::vector<Tableau> all;
  for (int j = 0; j <= s; ++j) {
    TableauSet part = variant_set(ts, j, alpha - j);
    all.insert(all.end(), part.members().begin(), part.members().end());
  }
  return TableauSet(std::move(all));
}

TableauSet multi_star(const std::vector<int>& alphas, std::optional<int> cap) {
  if (alphas.empty()) throw domain_error("multi_star: need at least one alpha");
  TableauSet acc{{Tableau()}};
  for (int a : alphas) {
    acc = star_extend(acc, a);
    if (cap) {
      std::vector<Tableau> kept;
      for (const Tableau& t : acc.members())
        if (t.row_len(0) <= *cap - 1) kept.push_back(t);
      acc = TableauSet(std::move(kept));
    }
  }
  return acc;
}

namespace {

void fill_standard(const Partition& shape, std::vector<int>& lens,
                   std::vector<std::vector<int>>& rows, int next, int total,
                   std::vector<Tableau>& out) {
  if (next > total) {
    out.push_back(Tableau(rows));
    return;
  }
  for (int r = 0; r < shape.rows(); ++r) {
    if (lens[r] >= shape.part(r)) continue;
    if (r > 0 && lens[r - 1] <= lens[r]) continue;
    rows[r].push_back(next);
    ++lens[r];
    fill_standard(shape, lens, rows, next + 1, total, out);
    --lens[r];
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard(const Partition& shape) {
  std::vector<Tableau> out;
  std::vector<int> lens(shape.rows(), 0);
  std::vector<std::vector<int>> rows(shape.rows());
  fill_standard(shape, lens, rows, 1, shape.weight(), out);
  std::sort(out.begin(), out.end(), TableauLess{});
  return out;
}

namespace {

// entry e belongs to block i when s_i < e <= s_i + alpha_i
struct BlockInfo {
  std::vector<int> block_of;  // 1-based entries
};

long long count_fillings(const Partition& lambda, const BlockInfo& blocks, int e, int len0,
                         int len1, int prev_col) {
  const int total = lambda.weight();
  if (e > total) return 1;
  long long acc = 0;
  const bool same_block = e > 1 && blocks.block_of[e] == blocks.block_of[e - 1];
  // row 0 placement at column len0
  if (len0 < lambda.part(0)) {
    if (!same_block || len0 > prev_col)
      acc += count_fillings(lambda, blocks, e + 1, len0 + 1, len1, len0);
  }
  // row 1 placement at column len1 (needs an entry above)
  if (len1 < lambda.part(1) && len1 < len0) {
    if (!same_block || len1 > prev_col)
      acc += count_fillings(lambda, blocks, e + 1, len0, len1 + 1, len1);
  }
  return acc;
}

}  // namespace

long long c_count(const Partition& lambda, const std::vector<int>& alphas) {
  if (!lambda.is_two_row()) throw domain_error("c_count: two-row shape required");
  int sum = 0;
  for (int a : alphas) {
    if (a < 0) throw domain_error("c_count: alphas must be nonnegative");
    sum += a;
  }
  if (sum != lambda.weight()) throw domain_error("c_count: |lambda| != sum of alphas");
  if (lambda.weight() == 0) return 1;

  BlockInfo blocks;
  blocks.block_of.assign(lambda.weight() + 1, 0);
  int e = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (int j = 0; j < alphas[i]; ++j) blocks.block_of[e++] = static_cast<int>(i);
  return count_fillings(lambda, blocks, 1, 0, 0, -1);
}

Int rect_tableau_count(int s) {
  if (s < 0) throw domain_error("rect_tableau_count: negative s");
  return factorial(2 * s) / (factorial(s) * factorial(s + 1));
}

}  // namespace schub
