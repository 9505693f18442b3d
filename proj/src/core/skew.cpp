#include "core/skew.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace schub {

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> filling)
    : outer_(std::move(outer)), inner_(std::move(inner)), filling_(std::move(filling)) {
  if (!outer_.contains(inner_)) throw domain_error("skew: inner shape not contained in outer");
  filling_.resize(outer_.rows());
  const int total = cells();
  std::vector<bool> seen(total + 1, false);
  for (int r = 0; r < outer_.rows(); ++r) {
    const int want = outer_.part(r) - inner_.part(r);
    if (static_cast<int>(filling_[r].size()) != want)
      throw domain_error("skew: row length mismatch");
    for (int j = 0; j < want; ++j) {
      int v = filling_[r][j];
      if (v < 1 || v > total || seen[v]) throw domain_error("skew: entries must be exactly 1..n");
      seen[v] = true;
      if (j + 1 < want && filling_[r][j] >= filling_[r][j + 1])
        throw domain_error("skew: rows must strictly increase");
    }
  }
  // column check on absolute columns
  for (int r = 0; r + 1 < outer_.rows(); ++r)
    for (int c = inner_.part(r + 1); c < outer_.part(r + 1); ++c) {
      if (c < inner_.part(r)) continue;  // cell above is an inner cell
      int above = filling_[r][c - inner_.part(r)];
      int below = filling_[r + 1][c - inner_.part(r + 1)];
      if (above >= below) throw domain_error("skew: columns must strictly increase");
    }
}

SkewTableau SkewTableau::from_straight(const Tableau& t) {
  return SkewTableau(t.shape(), Partition(), t.rows());
}

Tableau SkewTableau::as_straight() const {
  if (!straight()) throw domain_error("skew: not of straight shape");
  return Tableau(filling_);
}

Tableau SkewTableau::rectify(CornerRule rule) const {
  return rectify_impl(rule == CornerRule::top ? 0 : 1, nullptr);
}

Tableau SkewTableau::rectify_random(Rng& rng) const { return rectify_impl(2, &rng); }

Tableau SkewTableau::rectify_impl(int rule, Rng* rng) const {
  const int nrows = outer_.rows();
  std::vector<int> in(nrows), out(nrows);
  std::vector<std::vector<int>> grid(nrows);
  for (int r = 0; r < nrows; ++r) {
    in[r] = inner_.part(r);
    out[r] = outer_.part(r);
    grid[r].assign(out[r], 0);
    for (int j = 0; j < out[r] - in[r]; ++j) grid[r][in[r] + j] = filling_[r][j];
  }

  int holes = inner_.weight();
  while (holes > 0) {
    // inner corners of the current inner shape
    std::vector<int> corners;
    for (int r = 0; r < nrows; ++r) {
      if (in[r] == 0) continue;
      if (r + 1 >= nrows || in[r + 1] < in[r]) corners.push_back(r);
    }
    int pick;
    if (rule == 0)
      pick = corners.front();
    else if (rule == 1)
      pick = corners.back();
    else
      pick = corners[rng->below(corners.size())];

    int hr = pick, hc = in[pick] - 1;
    for (;;) {
      const bool has_right = hc + 1 < out[hr];
      const bool has_down = hr + 1 < nrows && hc < out[hr + 1];
      if (!has_right && !has_down) break;
      bool take_right;
      if (!has_down)
        take_right = true;
      else if (!has_right)
        take_right = false;
      else
        take_right = grid[hr][hc + 1] < grid[hr + 1][hc];
      if (take_right) {
        grid[hr][hc] = grid[hr][hc + 1];
        ++hc;
      } else {
        grid[hr][hc] = grid[hr + 1][hc];
        ++hr;
      }
    }
    out[hr] = hc;                // hole exited at an outer corner
    grid[hr].resize(hc);
    --in[pick];
    --holes;
  }

  std::vector<std::vector<int>> rows;
  for (int r = 0; r < nrows; ++r)
    if (!grid[r].empty()) rows.push_back(grid[r]);
  return Tableau(rows);
}

namespace {

void fill_skew(const Partition& outer, const Partition& inner, std::vector<int>& abs_len,
               std::vector<std::vector<int>>& rows, int next, int total,
               std::vector<SkewTableau>& out) {
  if (next > total) {
    out.push_back(SkewTableau(outer, inner, rows));
    return;
  }
  for (int r = 0; r < outer.rows(); ++r) {
    const int c = abs_len[r];
    if (c >= outer.part(r)) continue;
    if (r > 0 && c >= abs_len[r - 1]) continue;  // cell above not filled/inner yet
    rows[r].push_back(next);
    ++abs_len[r];
    fill_skew(outer, inner, abs_len, rows, next + 1, total, out);
    --abs_len[r];
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<SkewTableau> standard_skew_fillings(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) throw domain_error("skew fillings: inner not contained in outer");
  std::vector<SkewTableau> out;
  std::vector<int> abs_len(outer.rows());
  for (int r = 0; r < outer.rows(); ++r) abs_len[r] = inner.part(r);
  std::vector<std::vector<int>> rows(outer.rows());
  fill_skew(outer, inner, abs_len, rows, 1, outer.weight() - inner.weight(), out);
  return out;
}

bool knuth_equivalent(const SkewTableau& u, const Tableau& t) {
  if (u.cells() != t.degree()) throw domain_error("knuth_equivalent: degree mismatch");
  return u.rectify() == t;
}

Tableau union_shift(const Tableau& s, const SkewTableau& u) {
  if (u.inner() != s.shape()) throw domain_error("union_shift: inner shape must equal shape of s");
  const int shift = s.degree();
  std::vector<std::vector<int>> rows;
  const int nrows = std::max(static_cast<int>(s.rows().size()), u.outer().rows());
  for (int r = 0; r < nrows; ++r) {
    std::vector<int> row = s.row(r);
    if (r < static_cast<int>(u.filling().size()))
      for (int v : u.filling()[r]) row.push_back(v + shift);
    rows.push_back(row);
  }
  return Tableau(rows);
}

}  // namespace schub
