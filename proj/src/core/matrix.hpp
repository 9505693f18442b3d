#pragma once

#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace schub {

template <class E>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  E& at(int r, int c) { return a_[static_cast<std::size_t>(r) * c_ + c]; }
  const E& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * c_ + c]; }

  void append_row(const std::vector<E>& row) {
    if (c_ == 0 && r_ == 0) c_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != c_) throw domain_error("matrix: row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++r_;
  }
  std::vector<E> row(int r) const {
    return std::vector<E>(a_.begin() + static_cast<std::size_t>(r) * c_,
                          a_.begin() + static_cast<std::size_t>(r + 1) * c_);
  }
  Mat take_rows(int count) const {
    Mat m(count, c_);
    std::copy(a_.begin(), a_.begin() + static_cast<std::size_t>(count) * c_, m.a_.begin());
    return m;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<E> a_;
};

// Reduced row echelon form in place: unit pivots, zeros above and below.
// Returns the rank; rows beyond it are zero.
template <class Ops>
int rref_in_place(Mat<typename Ops::Elem>& m, const Ops& ops) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!ops.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(rank, c));
    const auto scale = ops.inv(m.at(rank, col));
    for (int c = col; c < m.cols(); ++c) m.at(rank, c) = ops.mul(m.at(rank, c), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || ops.is_zero(m.at(r, col))) continue;
      const auto f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = ops.sub(m.at(r, c), ops.mul(f, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

template <class Ops>
Mat<typename Ops::Elem> rref_trimmed(Mat<typename Ops::Elem> m, const Ops& ops) {
  const int rank = rref_in_place(m, ops);
  return m.take_rows(rank);
}

template <class Ops>
int rank_of(Mat<typename Ops::Elem> m, const Ops& ops) {
  return rref_in_place(m, ops);
}

template <class Ops>
Mat<typename Ops::Elem> stack(const Mat<typename Ops::Elem>& a, const Mat<typename Ops::Elem>& b,
                              const Ops&) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw domain_error("matrix: column mismatch in stack");
  Mat<typename Ops::Elem> m(a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  return m;
}

// right null space, rows form a canonical basis
template <class Ops>
Mat<typename Ops::Elem> kernel_of(Mat<typename Ops::Elem> m, const Ops& ops) {
  const int cols = m.cols();
  const int rank = rref_in_place(m, ops);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0, c = 0; r < rank; ++r) {
    while (c < cols && ops.is_zero(m.at(r, c))) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  Mat<typename Ops::Elem> k(cols - rank, cols);
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < cols; ++c) k.at(r, c) = ops.zero();
  int idx = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k.at(idx, f) = ops.one();
    for (int r = 0; r < rank; ++r) k.at(idx, pivot_col[r]) = ops.neg(m.at(r, f));
    ++idx;
  }
  return rref_trimmed(std::move(k), ops);
}

// intersection of the two row spaces (Zassenhaus), canonical rows
template <class Ops>
Mat<typename Ops::Elem> intersect_rows(const Mat<typename Ops::Elem>& a,
                                       const Mat<typename Ops::Elem>& b, const Ops& ops) {
  const int cols = a.cols() ? a.cols() : b.cols();
  if (a.rows() == 0 || b.rows() == 0) return Mat<typename Ops::Elem>(0, cols);
  if (a.cols() != b.cols()) throw domain_error("matrix: column mismatch in intersection");
  Mat<typename Ops::Elem> big(a.rows() + b.rows(), 2 * cols);
  for (int r = 0; r < big.rows(); ++r)
    for (int c = 0; c < big.cols(); ++c) big.at(r, c) = ops.zero();
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < cols; ++c) big.at(r, c) = big.at(r, c + cols) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < cols; ++c) big.at(a.rows() + r, c) = b.at(r, c);
  const int rank = rref_in_place(big, ops);
  Mat<typename Ops::Elem> out(0, cols);
  for (int r = 0; r < rank; ++r) {
    bool left_zero = true;
    for (int c = 0; c < cols && left_zero; ++c) left_zero = ops.is_zero(big.at(r, c));
    if (!left_zero) continue;
    std::vector<typename Ops::Elem> row(cols);
    for (int c = 0; c < cols; ++c) row[c] = big.at(r, c + cols);
    out.append_row(row);
  }
  return rref_trimmed(std::move(out), ops);
}

}  // namespace schub
