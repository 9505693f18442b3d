#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "core/field.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace schub {

// Linear subspace of k^{n+1} representing a subspace of projective n-space.
// Stored in canonical reduced echelon form, so equal subspaces have equal
// representations. Zero rows = the empty projective subspace. Projective and
// linear codimension coincide under this convention.
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_matrix(int n, const FieldSpec& f, Mat<Rat> rows);
  static Subspace from_matrix(int n, const FieldSpec& f, Mat<std::int64_t> rows);
  static Subspace full(int n, const FieldSpec& f);
  static Subspace empty_space(int n, const FieldSpec& f);

  int ambient() const { return n_; }
  const FieldSpec& field() const { return field_; }
  int rank() const;
  int proj_dim() const { return rank() - 1; }
  int codim() const { return n_ + 1 - rank(); }
  bool is_empty() const { return rank() == 0; }
  bool is_full() const { return rank() == n_ + 1; }
  bool is_hyperplane() const { return codim() == 1; }

  const Mat<Rat>& q_rows() const;
  const Mat<std::int64_t>& fp_rows() const;

  friend Subspace meet(const Subspace& a, const Subspace& b);
  friend Subspace join(const Subspace& a, const Subspace& b);
  friend bool contains(const Subspace& outer, const Subspace& inner);
  // codimensions add, capped at the ambient
  friend bool proper_meet(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace& o) const = default;

 private:
  int n_ = -1;
  FieldSpec field_;
  std::variant<Mat<Rat>, Mat<std::int64_t>> m_;
};

// Complete flag F_n c ... c F_1 c F_0 = P^n with dim F_i = n - i.
class Flag {
 public:
  Flag() = default;
  Flag(int n, const FieldSpec& f, std::vector<Subspace> members);  // F_0..F_n

  int ambient() const { return n_; }
  const FieldSpec& field() const { return field_; }
  // F_i; indices beyond n give the empty subspace
  const Subspace& at(int i) const;

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  int n_ = -1;
  FieldSpec field_;
  std::vector<Subspace> members_;
  Subspace empty_;
};

inline constexpr int kRandomEntryBound = 20;  // integer box for rational sampling
inline constexpr int kMaxRandomAttempts = 1000;

Flag random_flag(int n, const FieldSpec& f, Rng& rng);
Subspace random_subspace(int n, int codim, const FieldSpec& f, Rng& rng);

// all hyperplanes containing s (prime fields only)
std::vector<Subspace> hyperplanes_through(const Subspace& s);
// a random hyperplane containing s; over the rationals rejection-sampled with
// bounded integer entries
Subspace random_hyperplane_through(const Subspace& s, Rng& rng);

}  // namespace schub
