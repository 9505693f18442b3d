#include "core/subspace.hpp"

#include <algorithm>

namespace schub {

namespace {

void check_pair(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient() != b.ambient())
    throw domain_error(std::string(what) + ": ambient dimension mismatch");
  if (a.field() != b.field()) throw domain_error(std::string(what) + ": field mismatch");
}

}  // namespace

Subspace Subspace::from_matrix(int n, const FieldSpec& f, Mat<Rat> rows) {
  if (!f.is_rationals()) throw domain_error("subspace: rational rows need the rational field");
  if (rows.rows() > 0 && rows.cols() != n + 1) throw domain_error("subspace: need n+1 columns");
  Subspace s;
  s.n_ = n;
  s.field_ = f;
  s.m_ = rref_trimmed(std::move(rows), QOps{});
  return s;
}

Subspace Subspace::from_matrix(int n, const FieldSpec& f, Mat<std::int64_t> rows) {
  if (f.is_rationals()) throw domain_error("subspace: residue rows need a prime field");
  if (rows.rows() > 0 && rows.cols() != n + 1) throw domain_error("subspace: need n+1 columns");
  FpOps ops{f.p()};
  for (int r = 0; r < rows.rows(); ++r)
    for (int c = 0; c < rows.cols(); ++c) rows.at(r, c) = ops.canon(rows.at(r, c));
  Subspace s;
  s.n_ = n;
  s.field_ = f;
  s.m_ = rref_trimmed(std::move(rows), ops);
  return s;
}

Subspace Subspace::full(int n, const FieldSpec& f) {
  if (f.is_rationals()) {
    Mat<Rat> m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m.at(i, j) = Rat(i == j ? 1 : 0);
    return from_matrix(n, f, std::move(m));
  }
  Mat<std::int64_t> m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m.at(i, j) = (i == j ? 1 : 0);
  return from_matrix(n, f, std::move(m));
}

Subspace Subspace::empty_space(int n, const FieldSpec& f) {
  if (f.is_rationals()) return from_matrix(n, f, Mat<Rat>(0, n + 1));
  return from_matrix(n, f, Mat<std::int64_t>(0, n + 1));
}

int Subspace::rank() const {
  if (n_ < 0) throw domain_error("subspace: uninitialized");
  return std::visit([](const auto& m) { return m.rows(); }, m_);
}

const Mat<Rat>& Subspace::q_rows() const { return std::get<Mat<Rat>>(m_); }
const Mat<std::int64_t>& Subspace::fp_rows() const { return std::get<Mat<std::int64_t>>(m_); }

Subspace meet(const Subspace& a, const Subspace& b) {
  check_pair(a, b, "meet");
  Subspace s;
  s.n_ = a.n_;
  s.field_ = a.field_;
  if (a.field_.is_rationals())
    s.m_ = intersect_rows(a.q_rows(), b.q_rows(), QOps{});
  else
    s.m_ = intersect_rows(a.fp_rows(), b.fp_rows(), FpOps{a.field_.p()});
  return s;
}

Subspace join(const Subspace& a, const Subspace& b) {
  check_pair(a, b, "join");
  Subspace s;
  s.n_ = a.n_;
  s.field_ = a.field_;
  if (a.field_.is_rationals()) {
    QOps ops;
    s.m_ = rref_trimmed(stack(a.q_rows(), b.q_rows(), ops), ops);
  } else {
    FpOps ops{a.field_.p()};
    s.m_ = rref_trimmed(stack(a.fp_rows(), b.fp_rows(), ops), ops);
  }
  return s;
}

bool contains(const Subspace& outer, const Subspace& inner) {
  check_pair(outer, inner, "contains");
  return join(outer, inner).rank() == outer.rank();
}

bool proper_meet(const Subspace& a, const Subspace& b) {
  check_pair(a, b, "proper_meet");
  const int expected = std::min(a.codim() + b.codim(), a.ambient() + 1);
  return meet(a, b).codim() == expected;
}

Flag::Flag(int n, const FieldSpec& f, std::vector<Subspace> members)
    : n_(n), field_(f), members_(std::move(members)), empty_(Subspace::empty_space(n, f)) {
  if (static_cast<int>(members_.size()) != n + 1) throw domain_error("flag: need F_0..F_n");
  for (int i = 0; i <= n; ++i) {
    if (members_[i].proj_dim() != n - i) throw domain_error("flag: wrong dimension at F_i");
    if (i > 0 && !contains(members_[i - 1], members_[i]))
      throw domain_error("flag: members not nested");
  }
}

const Subspace& Flag::at(int i) const {
  if (i < 0) throw domain_error("flag: negative index");
  if (i > n_) return empty_;
  return members_[i];
}

Flag random_flag(int n, const FieldSpec& f, Rng& rng) {
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    bool ok = false;
    std::vector<Subspace> members;
    if (f.is_rationals()) {
      Mat<Rat> m(n + 1, n + 1);
      for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= n; ++c)
          m.at(r, c) = Rat(rng.int_in(-kRandomEntryBound, kRandomEntryBound));
      if (rank_of(m, QOps{}) == n + 1) {
        ok = true;
        for (int i = 0; i <= n; ++i) {
          Mat<Rat> rows(n + 1 - i, n + 1);
          for (int r = i; r <= n; ++r)
            for (int c = 0; c <= n; ++c) rows.at(r - i, c) = m.at(r, c);
          members.push_back(Subspace::from_matrix(n, f, std::move(rows)));
        }
      }
    } else {
      Mat<std::int64_t> m(n + 1, n + 1);
      for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= n; ++c) m.at(r, c) = static_cast<std::int64_t>(rng.below(f.p()));
      if (rank_of(m, FpOps{f.p()}) == n + 1) {
        ok = true;
        for (int i = 0; i <= n; ++i) {
          Mat<std::int64_t> rows(n + 1 - i, n + 1);
          for (int r = i; r <= n; ++r)
            for (int c = 0; c <= n; ++c) rows.at(r - i, c) = m.at(r, c);
          members.push_back(Subspace::from_matrix(n, f, std::move(rows)));
        }
      }
    }
    if (ok) return Flag(n, f, std::move(members));
  }
  throw domain_error("random_flag: exhausted attempts");
}

Subspace random_subspace(int n, int codim, const FieldSpec& f, Rng& rng) {
  if (codim < 0 || codim > n + 1) throw domain_error("random_subspace: codim out of range");
  const int rows = n + 1 - codim;
  if (rows == 0) return Subspace::empty_space(n, f);
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    if (f.is_rationals()) {
      Mat<Rat> m(rows, n + 1);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= n; ++c)
          m.at(r, c) = Rat(rng.int_in(-kRandomEntryBound, kRandomEntryBound));
      Subspace s = Subspace::from_matrix(n, f, std::move(m));
      if (s.rank() == rows) return s;
    } else {
      Mat<std::int64_t> m(rows, n + 1);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= n; ++c) m.at(r, c) = static_cast<std::int64_t>(rng.below(f.p()));
      Subspace s = Subspace::from_matrix(n, f, std::move(m));
      if (s.rank() == rows) return s;
    }
  }
  throw domain_error("random_subspace: exhausted attempts");
}

namespace {

// hyperplane with the given normal vector
template <class Ops>
Mat<typename Ops::Elem> hyperplane_rows(const std::vector<typename Ops::Elem>& normal,
                                        const Ops& ops) {
  Mat<typename Ops::Elem> w(0, static_cast<int>(normal.size()));
  w.append_row(normal);
  return kernel_of(std::move(w), ops);
}

}  // namespace

std::vector<Subspace> hyperplanes_through(const Subspace& s) {
  if (s.field().is_rationals())
    throw domain_error("hyperplanes_through: needs a prime field");
  const FpOps ops{s.field().p()};
  const int n = s.ambient();
  // normals = nonzero vectors of the kernel of the basis, one per projective class
  const Mat<std::int64_t> k = kernel_of(s.fp_rows(), ops);
  const int d = k.rows();
  std::vector<Subspace> out;
  // canonical projective representatives: first nonzero coefficient is one
  for (int lead = 0; lead < d; ++lead) {
    std::vector<std::int64_t> c(d, 0);
    c[lead] = 1;
    const int free = d - lead - 1;
    std::vector<std::int64_t> digits(free, 0);
    for (;;) {
      for (int i = 0; i < free; ++i) c[lead + 1 + i] = digits[i];
      std::vector<std::int64_t> normal(n + 1, 0);
      for (int i = 0; i < d; ++i)
        if (c[i] != 0)
          for (int j = 0; j <= n; ++j)
            normal[j] = ops.add(normal[j], ops.mul(c[i], k.at(i, j)));
      out.push_back(Subspace::from_matrix(s.ambient(), s.field(),
                                          hyperplane_rows<FpOps>(normal, ops)));
      int pos = free - 1;
      while (pos >= 0 && digits[pos] == ops.p - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
  }
  return out;
}

Subspace random_hyperplane_through(const Subspace& s, Rng& rng) {
  const int n = s.ambient();
  if (!s.field().is_rationals()) {
    std::vector<Subspace> all = hyperplanes_through(s);
    return all[rng.below(all.size())];
  }
  const QOps ops;
  const Mat<Rat> k = kernel_of(s.q_rows(), ops);
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    std::vector<Rat> normal(n + 1, Rat(0));
    bool nonzero = false;
    for (int i = 0; i < k.rows(); ++i) {
      const Rat c = Rat(rng.int_in(-kRandomEntryBound, kRandomEntryBound));
      if (c == 0) continue;
      nonzero = true;
      for (int j = 0; j <= n; ++j) normal[j] += c * k.at(i, j);
    }
    if (!nonzero) continue;  // independent kernel rows, so the combo is nonzero
    return Subspace::from_matrix(n, s.field(), hyperplane_rows<QOps>(normal, ops));
  }
  throw domain_error("random_hyperplane_through: exhausted attempts");
}

}  // namespace schub
