#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "core/arrangement.hpp"
#include "core/lines.hpp"

namespace schub {

struct SetCheckReport {
  bool equal = false;
  long long lhs_size = 0, rhs_size = 0, overlap = 0;
  nlohmann::json detail;
  nlohmann::json to_json() const;
};

// Omega(F,P) meet { lines meeting L } with L = N meet H splits as
// Omega(N meet F, P) union (Omega(F, P meet H) meet { lines meeting N }).
// Hypotheses (checked, domain_error with the failing clause otherwise):
// H a hyperplane containing neither P nor N, F strictly inside P meet H,
// N meets F properly.
SetCheckReport check_split_identity(const Subspace& f_sub, const Subspace& p_sub,
                                    const Subspace& n_sub, const Subspace& h_sub);

// seeded instance generator for the split identity over F_q
struct SplitInstance {
  Subspace f_sub, p_sub, n_sub, h_sub;
};
SplitInstance random_split_instance(int n, std::int64_t q, std::uint64_t seed);

// { lines meeting K } meet { lines inside M } equals Omega(K meet M, M)
SetCheckReport check_restriction_identity(const Subspace& k_sub, const Subspace& m_sub);

// One degeneration step of the star calculus, checked on line sets:
//   Omega(T^{+s}(alpha-s); N) + Omega(T^{+s+1}) meet Omega_N
//     = Omega(T^{+s}) meet Omega_{L0},   L0 = N meet H_{l+s+1}.
// prefix_alphas define the tableau family (empty prefix = the empty tableau);
// N must have codimension alpha-s and meet the flag family at (l, s+1)
// properly. l0_override replaces L0 (negative control).
SetCheckReport check_degeneration_identity(const Arrangement& a,
                                           const std::vector<int>& prefix_alphas, int s, int alpha,
                                           const Subspace& n_sub,
                                           const std::optional<Subspace>& l0_override = std::nullopt);

// seeded N of the right codimension meeting the family properly
Subspace random_degeneration_n(const Arrangement& a, const std::vector<int>& prefix_alphas, int s,
                               int alpha, std::uint64_t seed);

}  // namespace schub
