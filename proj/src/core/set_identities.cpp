#include "core/set_identities.hpp"

#include <set>

#include "core/json_io.hpp"

namespace schub {

namespace {

using LineKey = std::vector<std::int64_t>;

LineKey key_of(const Mat<std::int64_t>& m) {
  LineKey k;
  k.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) k.push_back(m.at(r, c));
  return k;
}

// scan all lines once, sorting them into the sets whose predicate they satisfy
std::vector<std::set<LineKey>> collect_sets(
    int n, std::int64_t q, const std::vector<std::vector<CompiledCondition>>& predicates) {
  std::vector<std::set<LineKey>> out(predicates.size());
  enumerate_lines(n, q, [&](const Mat<std::int64_t>& line) {
    for (std::size_t i = 0; i < predicates.size(); ++i) {
      bool all = true;
      for (const CompiledCondition& c : predicates[i])
        if (!line_matrix_satisfies(line, c, q)) {
          all = false;
          break;
        }
      if (all) out[i].insert(key_of(line));
    }
    return true;
  });
  return out;
}

std::int64_t prime_of(const Subspace& s) {
  if (s.field().is_rationals())
    throw domain_error("set check: exhaustive comparison needs a prime field");
  return s.field().p();
}

std::set<LineKey> set_union(const std::set<LineKey>& a, const std::set<LineKey>& b) {
  std::set<LineKey> u = a;
  u.insert(b.begin(), b.end());
  return u;
}

long long overlap_size(const std::set<LineKey>& a, const std::set<LineKey>& b) {
  long long k = 0;
  for (const auto& x : a) k += b.count(x);
  return k;
}

}  // namespace

nlohmann::json SetCheckReport::to_json() const {
  nlohmann::json out{{"equal", equal},
                     {"lhs_size", lhs_size},
                     {"rhs_size", rhs_size},
                     {"component_overlap", overlap}};
  if (!detail.is_null()) out["detail"] = detail;
  return out;
}

SetCheckReport check_split_identity(const Subspace& f_sub, const Subspace& p_sub,
                                    const Subspace& n_sub, const Subspace& h_sub) {
  const std::int64_t q = prime_of(f_sub);
  const int n = f_sub.ambient();
  if (!h_sub.is_hyperplane()) throw domain_error("split identity: H must be a hyperplane");
  if (contains(h_sub, p_sub)) throw domain_error("split identity: H contains P");
  if (contains(h_sub, n_sub)) throw domain_error("split identity: H contains N");
  const Subspace ph = meet(p_sub, h_sub);
  if (!(contains(ph, f_sub) && !(f_sub == ph)))
    throw domain_error("split identity: F is not strictly contained in P meet H");
  if (!proper_meet(n_sub, f_sub)) throw domain_error("split identity: N does not meet F properly");

  const Subspace l_sub = meet(n_sub, h_sub);
  const Subspace full = Subspace::full(n, f_sub.field());
  const SchubertCondition omega_fp(f_sub, p_sub);
  const SchubertCondition omega_l(l_sub, full);
  const SchubertCondition omega_nf(meet(n_sub, f_sub), p_sub);
  const SchubertCondition omega_fph(f_sub, ph);
  const SchubertCondition omega_n(n_sub, full);

  const auto sets = collect_sets(
      n, q,
      {{compile_condition(omega_fp), compile_condition(omega_l)},
       {compile_condition(omega_nf)},
       {compile_condition(omega_fph), compile_condition(omega_n)}});

  SetCheckReport rep;
  const std::set<LineKey> rhs = set_union(sets[1], sets[2]);
  rep.equal = sets[0] == rhs;
  rep.lhs_size = static_cast<long long>(sets[0].size());
  rep.rhs_size = static_cast<long long>(rhs.size());
  rep.overlap = overlap_size(sets[1], sets[2]);
  return rep;
}

SplitInstance random_split_instance(int n, std::int64_t q, std::uint64_t seed) {
  const FieldSpec f = FieldSpec::prime(q);
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    SplitInstance inst;
    inst.h_sub = random_subspace(n, 1, f, rng);
    inst.p_sub = Subspace::full(n, f);
    inst.n_sub = random_subspace(n, 1, f, rng);
    // F: a random codimension-2 subspace of P meet H = H
    const Subspace ph = meet(inst.p_sub, inst.h_sub);
    Mat<std::int64_t> rows(n - 1, n + 1);
    const FpOps ops{q};
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c <= n; ++c) {
        std::int64_t v = 0;
        for (int i = 0; i < ph.fp_rows().rows(); ++i)
          v = ops.add(v, ops.mul(static_cast<std::int64_t>(rng.below(q)), ph.fp_rows().at(i, c)));
        rows.at(r, c) = v;
      }
    inst.f_sub = Subspace::from_matrix(n, f, std::move(rows));
    if (inst.f_sub.codim() != 2) continue;
    if (contains(inst.h_sub, inst.n_sub)) continue;
    if (!proper_meet(inst.n_sub, inst.f_sub)) continue;
    return inst;
  }
  throw domain_error("random_split_instance: exhausted attempts");
}

SetCheckReport check_restriction_identity(const Subspace& k_sub, const Subspace& m_sub) {
  const std::int64_t q = prime_of(k_sub);
  const int n = k_sub.ambient();
  const Subspace full = Subspace::full(n, k_sub.field());
  const SchubertCondition omega_k(k_sub, full);
  const SchubertCondition inside_m(m_sub, m_sub);       // lines inside M
  const SchubertCondition omega_km(meet(k_sub, m_sub), m_sub);

  const auto sets =
      collect_sets(n, q,
                   {{compile_condition(omega_k), compile_condition(inside_m)},
                    {compile_condition(omega_km)}});

  SetCheckReport rep;
  rep.equal = sets[0] == sets[1];
  rep.lhs_size = static_cast<long long>(sets[0].size());
  rep.rhs_size = static_cast<long long>(sets[1].size());
  rep.detail = nlohmann::json{{"proper_pair", proper_meet(k_sub, m_sub)}};
  return rep;
}

SetCheckReport check_degeneration_identity(const Arrangement& a,
                                           const std::vector<int>& prefix_alphas, int s, int alpha,
                                           const Subspace& n_sub,
                                           const std::optional<Subspace>& l0_override) {
  if (a.field.is_rationals())
    throw domain_error("degeneration check: needs a prime field");
  const std::int64_t q = a.field.p();
  if (s < 0 || s + 1 > alpha) throw domain_error("degeneration check: need 0 <= s < alpha");
  const TableauSet family =
      prefix_alphas.empty() ? TableauSet{{Tableau()}} : multi_star(prefix_alphas);
  int l = 0;
  for (int v : prefix_alphas) l += v;
  if (n_sub.codim() != alpha - s)
    throw domain_error("degeneration check: N must have codimension alpha-s");
  if (!meets_properly(a, n_sub, l, s + 1))
    throw domain_error("degeneration check: N does not meet the flag family properly");

  const Subspace l0 =
      l0_override ? *l0_override : meet(n_sub, a.hyperplane(l + s + 1));
  const Subspace full = Subspace::full(a.n, a.field);
  const SchubertCondition omega_n(n_sub, full);
  const SchubertCondition omega_l0(l0, full);

  // left side, first part: Omega(T'; N) over T' in T^{+s}(alpha-s)
  std::vector<std::vector<CompiledCondition>> predicates;
  const TableauSet star_part = variant_set(family, s, alpha - s);
  for (const Tableau& t : star_part.members())
    predicates.push_back({compile_condition(omega_t_l(a, t, n_sub, l, s + 1, alpha))});
  const std::size_t star_count = predicates.size();

  // left side, second part: Omega(T'') meet Omega_N over T'' in T^{+s+1}
  const TableauSet plus_next = variant_set(family, s + 1, 0);
  for (const Tableau& t : plus_next.members())
    predicates.push_back(
        {compile_condition(omega_of_tableau(a, t)), compile_condition(omega_n)});
  const std::size_t lhs_count = predicates.size();

  // right side: Omega(T') meet Omega_{L0} over T' in T^{+s}
  const TableauSet plus_s = variant_set(family, s, 0);
  for (const Tableau& t : plus_s.members())
    predicates.push_back(
        {compile_condition(omega_of_tableau(a, t)), compile_condition(omega_l0)});

  const auto sets = collect_sets(a.n, q, predicates);
  std::set<LineKey> lhs, rhs;
  for (std::size_t i = 0; i < lhs_count; ++i) lhs.insert(sets[i].begin(), sets[i].end());
  for (std::size_t i = lhs_count; i < sets.size(); ++i) rhs.insert(sets[i].begin(), sets[i].end());

  SetCheckReport rep;
  rep.equal = lhs == rhs;
  rep.lhs_size = static_cast<long long>(lhs.size());
  rep.rhs_size = static_cast<long long>(rhs.size());
  std::set<LineKey> first_part;
  for (std::size_t i = 0; i < star_count; ++i)
    first_part.insert(sets[i].begin(), sets[i].end());
  std::set<LineKey> second_part;
  for (std::size_t i = star_count; i < lhs_count; ++i)
    second_part.insert(sets[i].begin(), sets[i].end());
  rep.overlap = overlap_size(first_part, second_part);
  rep.detail = nlohmann::json{{"family_size", family.size()},
                              {"l", l},
                              {"s", s},
                              {"alpha", alpha},
                              {"lhs_star_part", static_cast<long long>(first_part.size())},
                              {"lhs_meet_part", static_cast<long long>(second_part.size())}};
  return rep;
}

Subspace random_degeneration_n(const Arrangement& a, const std::vector<int>& prefix_alphas, int s,
                               int alpha, std::uint64_t seed) {
  int l = 0;
  for (int v : prefix_alphas) l += v;
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    Subspace n_sub = random_subspace(a.n, alpha - s, a.field, rng);
    if (meets_properly(a, n_sub, l, s + 1)) return n_sub;
  }
  throw domain_error("random_degeneration_n: exhausted attempts");
}

}  // namespace schub
