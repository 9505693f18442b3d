#include "core/arrangement.hpp"

#include <algorithm>
#include <set>

#include "core/json_io.hpp"

namespace schub {

namespace {

int hfl(int x) { return x / 2; }

}  // namespace

SchubertCondition::SchubertCondition(Subspace k, Subspace m) : k_(std::move(k)), m_(std::move(m)) {
  if (k_.ambient() != m_.ambient() || k_.field() != m_.field())
    throw domain_error("schubert condition: mismatched spaces");
  if (!contains(m_, k_)) throw domain_error("schubert condition: K must be contained in M");
}

std::pair<int, int> SchubertCondition::type() const {
  const int beta = m_.codim();
  if (k_ == m_) return {beta, beta};
  return {k_.codim() - 1, beta};
}

bool line_satisfies(const Subspace& line, const SchubertCondition& c) {
  if (line.rank() != 2) throw domain_error("line_satisfies: not a line");
  if (!c.m().is_full() && !contains(c.m(), line)) return false;
  return meet(line, c.k()).rank() >= 1;
}

const Subspace& Arrangement::hyperplane(int p) const {
  auto it = hyperplanes.find(p);
  if (it == hyperplanes.end())
    throw domain_error("arrangement: no hyperplane with index " + std::to_string(p));
  return it->second;
}

Subspace h_of_indices(const Arrangement& a, const std::vector<int>& indices) {
  Subspace acc = Subspace::full(a.n, a.field);
  for (int p : indices) acc = meet(acc, a.hyperplane(p));
  return acc;
}

Subspace h_of_tableau(const Arrangement& a, const Tableau& t) {
  if (!t.is_two_row()) throw domain_error("h_of_tableau: two-row tableau required");
  if (t.degree() > 2 * a.n - 2) throw domain_error("h_of_tableau: degree exceeds 2n-2");
  const std::vector<int> row = t.second_row();
  Subspace h = h_of_indices(a, row);
  if (h.codim() != static_cast<int>(row.size()))
    throw domain_error("h_of_tableau: intersection has deficient codimension");
  return h;
}

SchubertCondition omega_of_tableau(const Arrangement& a, const Tableau& t) {
  const Partition sh = t.shape();
  return SchubertCondition(a.flag_at(sh.part(0) + 1), h_of_tableau(a, t));
}

bool meets_properly(const Arrangement& a, const Subspace& l_sub, int l, int s) {
  if (s < 1) throw domain_error("meets_properly: s must be at least 1");
  if (l < 0 || l + s > 2 * a.n - 2)
    throw domain_error("meets_properly: context exceeds the arrangement");
  const int alpha = l_sub.codim() + s - 1;
  if (alpha < s) return false;

  for (int i = hfl(l + s) + 1; i <= l + 1; ++i)
    if (!proper_meet(l_sub, a.flag_at(i))) return false;
  if (!(meet(l_sub, a.flag_at(l + 1)) == a.flag_at(l + alpha - s + 2))) return false;

  for (const std::vector<int>& row : second_rows_up_to_degree(l, 2 * a.n - 2)) {
    // rows of tableaux of degree exactly l extended by +s-1 and +s
    const int beta = static_cast<int>(row.size());
    const int first_len = l - beta;
    for (int j : {s - 1, s}) {
      if (beta + j > first_len) continue;  // extension not shape-valid
      if (j == 0 && row.empty()) continue;  // H is the whole space
      std::vector<int> idx = row;
      for (int e = l + 1; e <= l + j; ++e) idx.push_back(e);
      if (!proper_meet(l_sub, h_of_indices(a, idx))) return false;
    }
  }
  return true;
}

SchubertCondition omega_t_l(const Arrangement& a, const Tableau& t, const Subspace& l_sub, int l,
                            int s, int alpha) {
  if (!meets_properly(a, l_sub, l, s))
    throw domain_error("omega_t_l: L does not meet the flag family at (l=" + std::to_string(l) +
                       ", s=" + std::to_string(s) + ") properly");
  const int b = t.row_len(0);
  if (b >= l + 1) return SchubertCondition(a.flag_at(b + 1), h_of_tableau(a, t));
  return SchubertCondition(meet(a.flag_at(b - alpha + s), l_sub), h_of_tableau(a, t));
}

std::vector<std::vector<int>> second_rows_up_to_degree(int d, int max_index) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  const int bound = std::min(d, max_index);
  // extend cur = r_1 < ... < r_k (r_j >= 2j) while 2(k+1) <= d
  auto rec = [&](auto&& self, int min_next) -> void {
    const int k = static_cast<int>(cur.size());
    if (2 * (k + 1) > d) return;
    for (int r = std::max(min_next, 2 * (k + 1)); r <= bound; ++r) {
      cur.push_back(r);
      out.push_back(cur);
      self(self, r + 1);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

std::vector<std::vector<int>> odd_step_families(int m) {
  std::set<std::vector<int>> fams;
  // tails a_{j+1} < ... < a_m with a_i >= 2i, a_m <= 2m
  auto tails = [&](auto&& self, int from, int upto, std::vector<int>& cur,
                   std::vector<std::vector<int>>& acc) -> void {
    if (from > upto) {
      acc.push_back(cur);
      return;
    }
    const int lo = std::max(cur.empty() ? 2 : cur.back() + 1, 2 * from);
    for (int v = lo; v <= 2 * m; ++v) {
      cur.push_back(v);
      self(self, from + 1, upto, cur, acc);
      cur.pop_back();
    }
  };
  {
    std::vector<int> cur;
    std::vector<std::vector<int>> acc;
    tails(tails, 1, m, cur, acc);
    for (auto& t : acc) fams.insert(t);
  }
  for (int j = 2; j <= m; ++j) {
    std::vector<int> prefix{3};
    for (int v = 2; v <= 2 * j - 2; v += 2) prefix.push_back(v);
    std::vector<int> cur;
    std::vector<std::vector<int>> acc;
    tails(tails, j + 1, m, cur, acc);
    for (auto& t : acc) {
      std::vector<int> whole = prefix;
      whole.insert(whole.end(), t.begin(), t.end());
      std::sort(whole.begin(), whole.end());
      fams.insert(whole);
    }
  }
  return std::vector<std::vector<int>>(fams.begin(), fams.end());
}

Int arrangement_field_bound(int n) {
  if (n < 3) throw domain_error("arrangement_field_bound: n must be at least 3");
  Int v = factorial(2 * n - 4) / (factorial(n - 2) * factorial(n - 1));
  for (int i = 1; i <= n - 4; ++i) v += factorial(2 * i) / (factorial(i) * factorial(i + 1));
  return v;
}

namespace {

Subspace pick_even_hyperplane(const Flag& flag, int m, const FieldSpec& f, Rng& rng) {
  const Subspace& fm = flag.at(m);
  const Subspace& fm1 = flag.at(m + 1);
  if (!f.is_rationals()) {
    std::vector<Subspace> valid;
    for (const Subspace& h : hyperplanes_through(fm1))
      if (!contains(h, fm)) valid.push_back(h);
    if (valid.empty())
      throw domain_error("build: no hyperplane meets the flag correctly at step " +
                         std::to_string(2 * m));
    return valid[rng.below(valid.size())];
  }
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    Subspace h = random_hyperplane_through(fm1, rng);
    if (!contains(h, fm)) return h;
  }
  throw domain_error("build: exhausted attempts at step " + std::to_string(2 * m));
}

Subspace pick_odd_hyperplane(const Arrangement& a, int m, Rng& rng) {
  const Subspace& fm1 = a.flag.at(m + 1);
  std::vector<Subspace> blocked;
  for (const std::vector<int>& fam : odd_step_families(m)) blocked.push_back(h_of_indices(a, fam));
  auto ok = [&](const Subspace& h) {
    for (const Subspace& ha : blocked)
      if (contains(h, ha)) return false;
    return true;
  };
  if (!a.field.is_rationals()) {
    std::vector<Subspace> valid;
    for (const Subspace& h : hyperplanes_through(fm1))
      if (ok(h)) valid.push_back(h);
    if (valid.empty())
      throw domain_error("build: all candidates blocked at step " + std::to_string(2 * m + 1));
    return valid[rng.below(valid.size())];
  }
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    Subspace h = random_hyperplane_through(fm1, rng);
    if (ok(h)) return h;
  }
  throw domain_error("build: exhausted attempts at step " + std::to_string(2 * m + 1));
}

}  // namespace

Arrangement build_arrangement(int n, const FieldSpec& f, std::uint64_t seed) {
  if (n < 2) throw domain_error("build: n must be at least 2");
  Rng rng(seed);
  Arrangement a;
  a.n = n;
  a.field = f;
  a.flag = random_flag(n, f, rng);
  for (int m = 1; m <= n - 1; ++m) {
    a.hyperplanes.emplace(2 * m, pick_even_hyperplane(a.flag, m, f, rng));
    if (2 * m + 1 <= 2 * n - 2) a.hyperplanes.emplace(2 * m + 1, pick_odd_hyperplane(a, m, rng));
  }
  return a;
}

VerifyReport verify_arrangement(const Arrangement& a) {
  VerifyReport rep;
  const int n = a.n;
  auto push = [&](bool& route, const std::string& name, bool pass, const std::string& witness) {
    rep.items.push_back({name, pass, pass ? "" : witness});
    route = route && pass;
  };
  auto row_name = [](const std::vector<int>& r) {
    std::string s = "{";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "}";
  };

  // H_R cache over all rows usable up to degree 2n-2
  const std::vector<std::vector<int>> all_rows = second_rows_up_to_degree(2 * n - 2, 2 * n - 2);
  std::map<std::vector<int>, Subspace> h_cache;
  for (const auto& r : all_rows) h_cache.emplace(r, h_of_indices(a, r));

  // defining route: conditions (1) and (2) for each index p
  for (int p = 2; p <= 2 * n - 2; ++p) {
    const bool c1 = meet(a.hyperplane(p), a.flag_at(hfl(p))) == a.flag_at(hfl(p) + 1);
    push(rep.defining_pass, "index " + std::to_string(p) + ": section drops the flag one step", c1,
         "H_" + std::to_string(p));

    bool c2 = true;
    std::string witness;
    const std::vector<std::vector<int>> rows = second_rows_up_to_degree(p - 1, 2 * n - 2);
    for (std::size_t i = 0; i < rows.size() && c2; ++i)
      for (std::size_t j = i; j < rows.size() && c2; ++j) {
        const Subspace both = meet(h_cache.at(rows[i]), h_cache.at(rows[j]));
        if (contains(a.hyperplane(p), both) && !(both == a.flag_at(hfl(p) + 1))) {
          c2 = false;
          witness = "S=" + row_name(rows[i]) + " T=" + row_name(rows[j]) +
                    " p=" + std::to_string(p);
        }
      }
    push(rep.defining_pass, "index " + std::to_string(p) + ": pairwise sections stay generic", c2,
         witness);
  }

  // alternate route: the even/odd split conditions
  for (int m = 1; m <= n - 1; ++m) {
    const bool even_ok = meet(a.hyperplane(2 * m), a.flag_at(m)) == a.flag_at(m + 1);
    push(rep.alternate_pass, "step " + std::to_string(m) + ": even hyperplane section", even_ok,
         "H_" + std::to_string(2 * m));
    if (2 * m + 1 > 2 * n - 2) continue;
    const bool through = contains(a.hyperplane(2 * m + 1), a.flag_at(m + 1));
    push(rep.alternate_pass, "step " + std::to_string(m) + ": odd hyperplane through the flag",
         through, "H_" + std::to_string(2 * m + 1));

    bool avoid = true;
    std::string witness;
    std::vector<int> pool;
    for (int i = 2; i <= 2 * m; ++i) pool.push_back(i);
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << pool.size()) && avoid; ++mask) {
      std::vector<int> subset;
      for (std::size_t b = 0; b < pool.size(); ++b)
        if (mask >> b & 1) subset.push_back(pool[b]);
      if (static_cast<int>(subset.size()) > m) continue;
      const Subspace ha = h_of_indices(a, subset);
      if (ha.codim() != static_cast<int>(subset.size())) continue;
      if (contains(a.hyperplane(2 * m + 1), ha)) {
        avoid = false;
        witness = "A=" + row_name(subset) + " inside H_" + std::to_string(2 * m + 1);
      }
    }
    push(rep.alternate_pass, "step " + std::to_string(m) + ": odd hyperplane avoids index sections",
         avoid, witness);
  }

  // consequences: codimension, H_T != F_beta, distinctness
  {
    bool codims = true, not_flag = true, distinct = true;
    std::string w1, w2, w3;
    for (const auto& [row, h] : h_cache) {
      if (h.codim() != static_cast<int>(row.size())) {
        codims = false;
        w1 = row_name(row);
      }
      if (!row.empty() && h == a.flag_at(static_cast<int>(row.size()))) {
        not_flag = false;
        w2 = row_name(row);
      }
    }
    for (auto i = h_cache.begin(); i != h_cache.end() && distinct; ++i)
      for (auto j = std::next(i); j != h_cache.end() && distinct; ++j)
        if (i->second == j->second) {
          distinct = false;
          w3 = row_name(i->first) + " vs " + row_name(j->first);
        }
    push(rep.extras_pass, "index sections have full codimension", codims, w1);
    push(rep.extras_pass, "no index section equals a flag member", not_flag, w2);
    push(rep.extras_pass, "distinct rows give distinct sections", distinct, w3);
  }
  return rep;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json items_j = nlohmann::json::array();
  for (const Item& it : items) {
    nlohmann::json o{{"check", it.name}, {"pass", it.pass}};
    if (!it.witness.empty()) o["witness"] = it.witness;
    items_j.push_back(o);
  }
  return nlohmann::json{{"pass", pass()},
                        {"defining_conditions", defining_pass},
                        {"split_conditions", alternate_pass},
                        {"consequences", extras_pass},
                        {"items", items_j}};
}

nlohmann::json arrangement_json(const Arrangement& a) {
  nlohmann::json hyp = nlohmann::json::object();
  for (const auto& [p, h] : a.hyperplanes) hyp[std::to_string(p)] = subspace_json(h);
  return nlohmann::json{
      {"n", a.n}, {"field", field_json(a.field)}, {"flag", flag_json(a.flag)}, {"hyperplanes", hyp}};
}

Arrangement arrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("field") || !j.contains("flag") ||
      !j.contains("hyperplanes"))
    throw parse_error("arrangement: need n, field, flag, hyperplanes");
  Arrangement a;
  a.n = j.at("n").get<int>();
  if (a.n < 2) throw parse_error("arrangement: n must be at least 2");
  a.field = field_from_json(j.at("field"));
  a.flag = flag_from_json(a.n, a.field, j.at("flag"));
  for (const auto& [key, mat] : j.at("hyperplanes").items()) {
    int p = 0;
    try {
      p = std::stoi(key);
    } catch (const std::exception&) {
      throw parse_error("arrangement: bad hyperplane index '" + key + "'");
    }
    if (p < 2 || p > 2 * a.n - 2) throw parse_error("arrangement: hyperplane index out of range");
    Subspace h = subspace_from_json(a.n, a.field, mat);
    if (!h.is_hyperplane()) throw parse_error("arrangement: H_" + key + " is not a hyperplane");
    a.hyperplanes.emplace(p, h);
  }
  for (int p = 2; p <= 2 * a.n - 2; ++p)
    if (!a.hyperplanes.count(p)) throw parse_error("arrangement: missing hyperplane " + std::to_string(p));
  return a;
}

}  // namespace schub
