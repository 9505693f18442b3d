#include "core/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "core/chow.hpp"
#include "core/instances.hpp"
#include "core/json_io.hpp"
#include "core/lr.hpp"
#include "core/pencil.hpp"
#include "core/set_identities.hpp"
#include "core/tableau_algebra.hpp"

namespace schub {

namespace {

Tableau t(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

std::vector<Tableau> tableaux_up_to_degree(int d) {
  std::vector<Tableau> out{Tableau()};
  for (int k = 1; k <= d; ++k)
    for (const Partition& sh : partitions_of(k))
      for (const Tableau& x : enumerate_standard(sh)) out.push_back(x);
  return out;
}

struct Check {
  bool ok = true;
  std::ostringstream msg;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (msg.tellp() > 0) msg << "; ";
      msg << what;
    }
  }
};

// --- criterion bodies -------------------------------------------------

void star_golden(Check& c) {
  const TableauSet got = star_extend(t({{1, 2, 3}, {4}}), 4);
  const TableauSet want{{t({{1, 2, 3, 5, 6, 7, 8}, {4}}), t({{1, 2, 3, 6, 7, 8}, {4, 5}}),
                         t({{1, 2, 3, 7, 8}, {4, 5, 6}})}};
  c.expect(got == want, "star extension differs from the golden three-term set");
}

void circ_golden(Check& c) {
  const FormalSum got = circ(t({{1, 2, 3}, {4}}), t({{1, 2, 3, 4}}));
  FormalSum want;
  for (const Tableau& x :
       {t({{1, 2, 3, 5, 6, 7, 8}, {4}}), t({{1, 2, 3, 6, 7, 8}, {4, 5}}),
        t({{1, 2, 3, 7, 8}, {4, 5, 6}}), t({{1, 2, 3, 6, 7, 8}, {4}, {5}}),
        t({{1, 2, 3, 7, 8}, {4, 6}, {5}}), t({{1, 2, 3, 8}, {4, 6, 7}, {5}})})
    want.add(x, 1);
  c.expect(got == want, "product differs from the golden six-term sum");
}

void associativity(Check& c) {
  const std::vector<Tableau> small = tableaux_up_to_degree(3);
  for (const Tableau& r : small)
    for (const Tableau& s : small)
      for (const Tableau& u : small) {
        const FormalSum left = circ(FormalSum::of(r), circ(s, u));
        const FormalSum right = circ(circ(r, s), FormalSum::of(u));
        if (!(left == right)) {
          c.expect(false, "associativity fails on a degree<=3 triple");
          return;
        }
      }
  const std::vector<Tableau> pool = tableaux_up_to_degree(5);
  Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Tableau& r = pool[rng.below(pool.size())];
    const Tableau& s = pool[rng.below(pool.size())];
    const Tableau& u = pool[rng.below(pool.size())];
    const FormalSum left = circ(FormalSum::of(r), circ(s, u));
    const FormalSum right = circ(circ(r, s), FormalSum::of(u));
    if (!(left == right)) {
      c.expect(false, "associativity fails on a random degree<=5 triple");
      return;
    }
  }
  // the order of the factors matters: the witness pair
  FormalSum left_wit, right_wit;
  left_wit.add(t({{1, 2, 3}}), 1);
  left_wit.add(t({{1, 3}, {2}}), 1);
  right_wit.add(t({{1, 2, 3}}), 1);
  right_wit.add(t({{1, 2}, {3}}), 1);
  c.expect(circ(t({{1}}), t({{1, 2}})) == left_wit, "non-commutativity witness, left product");
  c.expect(circ(t({{1, 2}}), t({{1}})) == right_wit, "non-commutativity witness, right product");
  c.expect(!(left_wit == right_wit), "witness products unexpectedly equal");
}

void homomorphism(Check& c) {
  for (int total = 0; total <= 8 && c.ok; ++total)
    for (int wm = 0; wm <= total && c.ok; ++wm)
      for (const Partition& mu : partitions_of(wm))
        for (const Partition& nu : partitions_of(total - wm)) {
          const std::vector<Tableau> ss = enumerate_standard(mu);
          const std::vector<Tableau> ts = enumerate_standard(nu);
          std::vector<const Tableau*> sreps{&ss.front(), &ss.back()};
          std::vector<const Tableau*> treps{&ts.front(), &ts.back()};
          for (const Tableau* s : sreps)
            for (const Tableau* u : treps) {
              const FormalSum prod = circ(*s, *u);
              std::map<std::vector<int>, long long> by_shape;
              for (const auto& [term, coeff] : prod.terms())
                by_shape[term.shape().parts()] += coeff;
              for (const Partition& lam : partitions_of(total)) {
                const long long got =
                    by_shape.count(lam.parts()) ? by_shape[lam.parts()] : 0;
                const long long want = lr_coefficient(lam, mu, nu);
                if (got != want) {
                  c.expect(false, "shape-graded coefficient differs from the ballot count");
                  return;
                }
              }
            }
        }
}

void product_vs_pieri(Check& c) {
  for (int n = 2; n <= 6 && c.ok; ++n) {
    std::vector<Partition> box;
    for (const SchubertClass& cls : chow_basis(n)) box.push_back(Partition::two_row(cls.a, cls.b));
    for (std::size_t i = 0; i < box.size() && c.ok; ++i)
      for (std::size_t j = i; j < box.size() && c.ok; ++j) {
        if (!(chow_product({box[i], box[j]}, n) == pieri_product({box[i], box[j]}, n))) {
          c.expect(false, "pair product differs between the two routes (n=" + std::to_string(n) + ")");
          return;
        }
        for (std::size_t k = j; k < box.size(); ++k)
          if (!(chow_product({box[i], box[j], box[k]}, n) ==
                pieri_product({box[i], box[j], box[k]}, n))) {
            c.expect(false,
                     "triple product differs between the two routes (n=" + std::to_string(n) + ")");
            return;
          }
      }
  }
}

void catalan_counts(Check& c) {
  const long long expected[] = {2, 5, 14, 42};
  for (int n = 3; n <= 6; ++n) {
    std::vector<Partition> ones(2 * n - 2, Partition(std::vector<int>{1}));
    const long long got = intersection_number(ones, n);
    c.expect(got == expected[n - 3], "intersection number differs at n=" + std::to_string(n));
    const auto rect = enumerate_standard(Partition::two_row(n - 1, n - 1));
    c.expect(static_cast<long long>(rect.size()) == expected[n - 3],
             "rectangular tableau count differs at n=" + std::to_string(n));
    c.expect(rect_tableau_count(n - 1) == Int(expected[n - 3]),
             "closed-form count differs at n=" + std::to_string(n));
  }
}

void segre_finite(Check& c, int threads) {
  for (const auto& [n, q] : std::vector<std::pair<int, std::int64_t>>{{2, 5}, {3, 7}}) {
    const SegreInstance inst = segre_instance(n, FieldSpec::prime(q));
    const SolutionReport rep = solve_problem(inst.problem, threads);
    c.expect(rep.count == n, "solution count != n for q=" + std::to_string(q));
    c.expect(rep.has_prediction && rep.predicted == n,
             "prediction != n for q=" + std::to_string(q));
    std::set<std::string> got, want;
    for (const Subspace& l : rep.lines) got.insert(subspace_json(l).dump());
    for (const Subspace& l : inst.predicted) want.insert(subspace_json(l).dump());
    c.expect(got == want, "solutions differ from the predicted lines for q=" + std::to_string(q));
  }
}

void segre_rational(Check& c) {
  for (int n : {2, 3}) {
    const SegreInstance inst = segre_instance(n, FieldSpec::rationals());
    for (const Subspace& line : inst.predicted) {
      const auto& m = line.q_rows();
      for (int r = 0; r < m.rows(); ++r)
        for (int col = 0; col < m.cols(); ++col)
          c.expect(boost::multiprecision::denominator(m.at(r, col)) == 1,
                   "predicted line has a non-integer coordinate");
      for (const SchubertCondition& cond : inst.problem.conditions)
        c.expect(line_satisfies(line, cond), "predicted line fails an incidence over Q");
    }
    for (std::size_t i = 0; i < inst.predicted.size(); ++i)
      for (std::size_t j = i + 1; j < inst.predicted.size(); ++j)
        c.expect(!(inst.predicted[i] == inst.predicted[j]), "predicted lines not distinct");
  }
}

void scroll_f5(Check& c) {
  const ScrollInstance inst = scroll_instance(2, FieldSpec::prime(5));
  const ScrollReport rep = scroll_check(inst);
  c.expect(rep.rational_ruling_lines == 6, "expected q+1 = 6 ruling lines");
  c.expect(rep.exactly_roots_meet, "a non-root ruling line meets the plane, or a root misses it");
  c.expect(static_cast<int>(rep.meeting_params.size()) == 2, "expected exactly 2 meeting lines");
  c.expect(rep.pullback_matches, "substituted form differs from the root form");
  bool refused = false;
  try {
    scroll_instance(4, FieldSpec::prime(2));
  } catch (const domain_error&) {
    refused = true;
  }
  c.expect(refused, "constructor accepted q < n-1");
}

void arrangement_f3(Check& c) {
  int good_seed = -1;
  for (int seed = 1; seed <= 100 && good_seed < 0; ++seed) {
    try {
      const Arrangement a = build_arrangement(4, FieldSpec::prime(3), seed);
      const VerifyReport rep = verify_arrangement(a);
      if (rep.pass()) good_seed = seed;
    } catch (const domain_error&) {
      continue;
    }
  }
  c.expect(good_seed >= 1, "no seed <= 100 builds a verified arrangement over F_3");
  if (good_seed >= 1) c.msg << "seed=" << good_seed;
  c.expect(arrangement_field_bound(5) == Int(6), "bound at n=5 is not 6");
  c.expect(arrangement_field_bound(6) == Int(17), "bound at n=6 is not 17");
}

void pencil_all(Check& c) {
  for (std::int64_t q : {5, 7})
    for (int n = 2; n <= 5; ++n) {
      const FieldSpec f = FieldSpec::prime(q);
      Rng rng(100 * n + q);
      const Flag flag = random_flag(n, f, rng);
      Subspace linf = random_subspace(n, 1, f, rng);
      int guard = 0;
      while (contains(linf, flag.at(n)) && guard++ < kMaxRandomAttempts)
        linf = random_subspace(n, 1, f, rng);
      const Pencil pencil(flag, linf);
      const PencilReport rep = pencil_verify(pencil, 0, 0);
      c.expect(rep.pass, "pencil fails at n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
}

void set_lemmas(Check& c) {
  for (int n : {3, 4})
    for (std::uint64_t seed : {1, 2, 3}) {
      const SplitInstance inst = random_split_instance(n, 5, seed);
      const SetCheckReport rep =
          check_split_identity(inst.f_sub, inst.p_sub, inst.n_sub, inst.h_sub);
      c.expect(rep.equal, "split identity fails at n=" + std::to_string(n) + " seed=" +
                              std::to_string(seed));
    }
  {
    // negative control: F equal to P meet H must be rejected before counting
    const SplitInstance inst = random_split_instance(3, 5, 1);
    bool rejected = false;
    try {
      check_split_identity(meet(inst.p_sub, inst.h_sub), inst.p_sub, inst.n_sub, inst.h_sub);
    } catch (const domain_error&) {
      rejected = true;
    }
    c.expect(rejected, "degenerate split instance was not rejected");
  }
  for (int n : {3, 4})
    for (std::uint64_t seed : {1, 2, 3}) {
      const FieldSpec f = FieldSpec::prime(5);
      Rng rng(seed);
      const Subspace k = random_subspace(n, 2, f, rng);
      const Subspace m = random_subspace(n, 1, f, rng);
      const SetCheckReport rep = check_restriction_identity(k, m);
      c.expect(rep.equal, "restriction identity fails at n=" + std::to_string(n) + " seed=" +
                              std::to_string(seed));
    }
  struct DegCase {
    int n;
    std::vector<int> prefix;
    int s, alpha;
  };
  for (const DegCase& dc : {DegCase{3, {1}, 0, 2}, DegCase{4, {1, 1}, 1, 2}, DegCase{4, {2}, 0, 2}})
    for (std::uint64_t seed : {1, 2, 3}) {
      const Arrangement a = build_arrangement(dc.n, FieldSpec::prime(5), seed);
      const Subspace nsub = random_degeneration_n(a, dc.prefix, dc.s, dc.alpha, seed + 10);
      const SetCheckReport rep = check_degeneration_identity(a, dc.prefix, dc.s, dc.alpha, nsub);
      c.expect(rep.equal, "degeneration identity fails at n=" + std::to_string(dc.n) + " seed=" +
                              std::to_string(seed));
    }
  {
    // negative control: a generic hyperplane section of N in place of L0
    const Arrangement a = build_arrangement(3, FieldSpec::prime(5), 1);
    const Subspace nsub = random_degeneration_n(a, {1}, 0, 2, 11);
    Rng rng(99);
    bool detected = false;
    for (int attempt = 0; attempt < 20 && !detected; ++attempt) {
      const Subspace h = random_subspace(3, 1, FieldSpec::prime(5), rng);
      if (h == a.hyperplane(2)) continue;
      const Subspace wrong = meet(nsub, h);
      if (wrong.codim() != nsub.codim() + 1) continue;
      const SetCheckReport rep = check_degeneration_identity(a, {1}, 0, 2, nsub, wrong);
      if (!rep.equal) detected = true;
    }
    c.expect(detected, "wrong-section negative control was not detected");
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int threads) {
  struct Entry {
    int id;
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Entry> entries{
      {1, "star extension golden case", [](Check& c) { star_golden(c); }},
      {2, "tableau product golden case", [](Check& c) { circ_golden(c); }},
      {3, "associativity and the non-commutativity witness",
       [](Check& c) { associativity(c); }},
      {4, "shape-graded products match ballot counts", [](Check& c) { homomorphism(c); }},
      {5, "tableau-count products match iterated Pieri", [](Check& c) { product_vs_pieri(c); }},
      {6, "Catalan intersection numbers", [](Check& c) { catalan_counts(c); }},
      {7, "four-plane instances over F5 and F7",
       [threads](Check& c) { segre_finite(c, threads); }},
      {8, "four-plane instance over Q, integer solutions", [](Check& c) { segre_rational(c); }},
      {9, "scroll instance over F5 and the small-field refusal",
       [](Check& c) { scroll_f5(c); }},
      {10, "arrangement over F3 and the field-size bound", [](Check& c) { arrangement_f3(c); }},
      {11, "hyperplane pencil sections and limits", [](Check& c) { pencil_all(c); }},
      {12, "line-set identities and negative controls", [](Check& c) { set_lemmas(c); }},
  };

  std::vector<CriterionResult> out;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      e.body(c);
      r.pass = c.ok;
      r.detail = c.msg.str();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json acceptance_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    nlohmann::json o{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}};
    if (!r.detail.empty()) o["detail"] = r.detail;
    arr.push_back(o);
  }
  return nlohmann::json{{"pass", all}, {"criteria", arr}};
}

}  // namespace schub
