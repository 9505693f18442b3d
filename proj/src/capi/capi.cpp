#include "schubert.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <set>
#include <string>

#include "core/acceptance.hpp"
#include "core/chow.hpp"
#include "core/instances.hpp"
#include "core/json_io.hpp"
#include "core/lr.hpp"
#include "core/pencil.hpp"
#include "core/set_identities.hpp"
#include "core/tableau_algebra.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
schub_status guarded(Fn&& fn) {
  try {
    fn();
    return SCHUB_OK;
  } catch (const schub::parse_error& e) {
    g_last_error = e.what();
    return SCHUB_ERROR_PARSE;
  } catch (const schub::domain_error& e) {
    g_last_error = e.what();
    return SCHUB_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SCHUB_ERROR_INTERNAL;
  }
}

std::vector<int> int_span(const int* data, int count, const char* what) {
  if (count < 0 || (count > 0 && data == nullptr))
    throw schub::domain_error(std::string(what) + ": bad array argument");
  return std::vector<int>(data, data + count);
}

std::vector<std::pair<schub::Rat, schub::Rat>> points_from_json_text(const char* text) {
  std::vector<std::pair<schub::Rat, schub::Rat>> out;
  if (text == nullptr) return out;
  const schub::Json j = schub::parse_json(text);
  if (!j.is_array()) throw schub::parse_error("points: expected [[a,b],...]");
  for (const schub::Json& p : j) {
    if (!p.is_array() || p.size() != 2) throw schub::parse_error("points: expected pairs");
    auto get = [](const schub::Json& v) {
      if (v.is_string()) return schub::rat_from_string(v.get<std::string>());
      if (v.is_number_integer()) return schub::Rat(v.get<std::int64_t>());
      throw schub::parse_error("points: entries must be integers or strings");
    };
    out.push_back({get(p[0]), get(p[1])});
  }
  return out;
}

std::vector<schub::Partition> classes_from_json_text(const char* text) {
  const schub::Json j = schub::parse_json(text);
  if (!j.is_array()) throw schub::parse_error("classes: expected [[a,b],...]");
  std::vector<schub::Partition> out;
  for (const schub::Json& c : j) out.push_back(schub::partition_from_json(c));
  return out;
}

}  // namespace

extern "C" {

const char* schub_version(void) { return "0.1.0"; }

const char* schub_last_error(void) { return g_last_error.c_str(); }

void schub_string_free(char* s) { std::free(s); }

schub_status schub_tableau_star(const char* tableau_json, int alpha, char** out_json) {
  return guarded([&] {
    const schub::Tableau t = schub::tableau_from_json(schub::parse_json(tableau_json));
    *out_json = dup_string(schub::tableau_set_json(schub::star_extend(t, alpha)).dump());
  });
}

schub_status schub_tableau_multistar(const int* alphas, int count, int cap, char** out_json) {
  return guarded([&] {
    const auto a = int_span(alphas, count, "multistar");
    std::optional<int> capped;
    if (cap > 0) capped = cap;
    *out_json = dup_string(schub::tableau_set_json(schub::multi_star(a, capped)).dump());
  });
}

schub_status schub_tableau_count(const int* lambda, int lambda_len, const int* alphas, int count,
                                 long long* out_value) {
  return guarded([&] {
    const schub::Partition lam(int_span(lambda, lambda_len, "count"));
    *out_value = schub::c_count(lam, int_span(alphas, count, "count"));
  });
}

schub_status schub_plactic_circ(const char* left_json, const char* right_json, char** out_json) {
  return guarded([&] {
    const schub::Tableau s = schub::tableau_from_json(schub::parse_json(left_json));
    const schub::Tableau t = schub::tableau_from_json(schub::parse_json(right_json));
    *out_json = dup_string(schub::formal_sum_json(schub::circ(s, t)).dump());
  });
}

schub_status schub_plactic_rectify(const char* skew_json, char** out_json) {
  return guarded([&] {
    const schub::SkewTableau u = schub::skew_from_json(schub::parse_json(skew_json));
    *out_json = dup_string(schub::tableau_json(u.rectify()).dump());
  });
}

schub_status schub_plactic_lr(const int* lambda, int nl, const int* mu, int nm, const int* nu,
                              int nn, long long* out_value) {
  return guarded([&] {
    *out_value = schub::lr_coefficient(schub::Partition(int_span(lambda, nl, "lr")),
                                       schub::Partition(int_span(mu, nm, "lr")),
                                       schub::Partition(int_span(nu, nn, "lr")));
  });
}

schub_status schub_chow_product(int n, const char* classes_json, char** out_json) {
  return guarded([&] {
    const schub::ChowElement e = schub::chow_product(classes_from_json_text(classes_json), n);
    schub::Json out = schub::Json::object();
    for (const auto& [key, c] : e.terms())
      out["(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] = c;
    *out_json = dup_string(out.dump());
  });
}

schub_status schub_chow_number(int n, const char* classes_json, long long* out_value) {
  return guarded([&] {
    *out_value = schub::intersection_number(classes_from_json_text(classes_json), n);
  });
}

struct schub_arrangement {
  schub::Arrangement a;
};

schub_status schub_arrangement_build(int n, const char* field, uint64_t seed,
                                     schub_arrangement** out) {
  return guarded([&] {
    const schub::FieldSpec f = schub::FieldSpec::from_string(field ? field : "");
    *out = new schub_arrangement{schub::build_arrangement(n, f, seed)};
  });
}

schub_status schub_arrangement_parse(const char* json, schub_arrangement** out) {
  return guarded([&] {
    *out = new schub_arrangement{schub::arrangement_from_json(schub::parse_json(json))};
  });
}

schub_status schub_arrangement_json(const schub_arrangement* a, char** out_json) {
  return guarded([&] {
    if (a == nullptr) throw schub::domain_error("arrangement handle is null");
    *out_json = dup_string(schub::arrangement_json(a->a).dump());
  });
}

schub_status schub_arrangement_verify(const schub_arrangement* a, char** report_json) {
  return guarded([&] {
    if (a == nullptr) throw schub::domain_error("arrangement handle is null");
    *report_json = dup_string(schub::verify_arrangement(a->a).to_json().dump());
  });
}

void schub_arrangement_free(schub_arrangement* a) { delete a; }

schub_status schub_arrangement_bound(int n, char** out_json) {
  return guarded([&] {
    const schub::Int v = schub::arrangement_field_bound(n);
    schub::Json out;
    if (v <= schub::Int(INT64_MAX))
      out = schub::Json{{"value", static_cast<std::int64_t>(v)}};
    else
      out = schub::Json{{"value", v.str()}};
    *out_json = dup_string(out.dump());
  });
}

schub_status schub_pencil_check(int n, const char* field, uint64_t seed, int trials,
                                char** report_json) {
  return guarded([&] {
    const schub::FieldSpec f = schub::FieldSpec::from_string(field ? field : "");
    schub::Rng rng(seed);
    const schub::Flag flag = schub::random_flag(n, f, rng);
    schub::Subspace linf = schub::random_subspace(n, 1, f, rng);
    int guard = 0;
    while (contains(linf, flag.at(n)) && guard++ < schub::kMaxRandomAttempts)
      linf = schub::random_subspace(n, 1, f, rng);
    const schub::Pencil pencil(flag, linf);
    *report_json =
        dup_string(schub::pencil_verify(pencil, trials > 0 ? trials : 50, seed).to_json().dump());
  });
}

schub_status schub_ff_line_count(int n, long long q, char** out_json) {
  return guarded([&] {
    const schub::Int v = schub::count_lines(n, q);
    schub::Json out;
    if (v <= schub::Int(INT64_MAX))
      out = schub::Json{{"value", static_cast<std::int64_t>(v)}};
    else
      out = schub::Json{{"value", v.str()}};
    *out_json = dup_string(out.dump());
  });
}

schub_status schub_ff_solve(const char* problem_json, int threads, char** report_json) {
  return guarded([&] {
    const schub::SchubertProblem p = schub::problem_from_json(schub::parse_json(problem_json));
    *report_json = dup_string(schub::solve_problem(p, threads).to_json().dump());
  });
}

schub_status schub_ff_segre(int n, const char* field, const char* points_json, int brute_force,
                            int threads, char** report_json) {
  return guarded([&] {
    const schub::FieldSpec f = schub::FieldSpec::from_string(field ? field : "");
    const schub::SegreInstance inst = schub::segre_instance(n, f, points_from_json_text(points_json));
    schub::Json out = inst.to_json();
    if (brute_force) {
      const schub::SolutionReport rep = schub::solve_problem(inst.problem, threads);
      out["solve"] = rep.to_json();
      bool matches = rep.count == static_cast<long long>(inst.predicted.size());
      if (matches) {
        std::set<std::string> got, want;
        for (const schub::Subspace& l : rep.lines) got.insert(schub::subspace_json(l).dump());
        for (const schub::Subspace& l : inst.predicted)
          want.insert(schub::subspace_json(l).dump());
        matches = got == want;
      }
      out["solutions_match_predicted"] = matches;
    }
    *report_json = dup_string(out.dump());
  });
}

schub_status schub_ff_scroll(int n, const char* field, const char* roots_json,
                             char** report_json) {
  return guarded([&] {
    const schub::FieldSpec f = schub::FieldSpec::from_string(field ? field : "");
    const schub::ScrollInstance inst = schub::scroll_instance(n, f, points_from_json_text(roots_json));
    *report_json = dup_string(schub::scroll_check(inst).to_json().dump());
  });
}

schub_status schub_ff_check(const char* which, const char* params_json, char** report_json) {
  return guarded([&] {
    const std::string kind = which ? which : "";
    const schub::Json params =
        params_json ? schub::parse_json(params_json) : schub::Json::object();
    const int n = params.value("n", 3);
    const std::int64_t q = params.value("q", 5);
    const std::uint64_t seed = params.value("seed", std::uint64_t{1});
    if (kind == "lemma24") {
      const schub::SplitInstance inst = schub::random_split_instance(n, q, seed);
      *report_json = dup_string(
          schub::check_split_identity(inst.f_sub, inst.p_sub, inst.n_sub, inst.h_sub)
              .to_json()
              .dump());
      return;
    }
    if (kind == "lemma23") {
      const schub::FieldSpec f = schub::FieldSpec::prime(q);
      schub::Rng rng(seed);
      const schub::Subspace k = schub::random_subspace(n, params.value("k_codim", 2), f, rng);
      const schub::Subspace m = schub::random_subspace(n, params.value("m_codim", 1), f, rng);
      *report_json = dup_string(schub::check_restriction_identity(k, m).to_json().dump());
      return;
    }
    if (kind == "lemma52") {
      std::vector<int> prefix;
      if (params.contains("prefix"))
        for (const schub::Json& v : params.at("prefix")) prefix.push_back(v.get<int>());
      const int s = params.value("s", 0);
      const int alpha = params.value("alpha", 2);
      const schub::Arrangement a =
          schub::build_arrangement(n, schub::FieldSpec::prime(q), seed);
      const schub::Subspace nsub =
          schub::random_degeneration_n(a, prefix, s, alpha, seed + 10);
      std::optional<schub::Subspace> wrong;
      if (params.value("negative_control", false)) {
        schub::Rng rng(seed + 99);
        for (int attempt = 0; attempt < 50; ++attempt) {
          int l = 0;
          for (int v : prefix) l += v;
          const schub::Subspace h =
              schub::random_subspace(n, 1, schub::FieldSpec::prime(q), rng);
          if (h == a.hyperplane(l + s + 1)) continue;
          const schub::Subspace cand = meet(nsub, h);
          if (cand.codim() == nsub.codim() + 1) {
            wrong = cand;
            break;
          }
        }
        if (!wrong) throw schub::domain_error("lemma52: could not build the negative control");
      }
      *report_json = dup_string(
          schub::check_degeneration_identity(a, prefix, s, alpha, nsub, wrong).to_json().dump());
      return;
    }
    throw schub::domain_error("unknown check '" + kind + "' (use lemma24, lemma23, lemma52)");
  });
}

schub_status schub_accept(int threads, char** report_json) {
  return guarded([&] {
    *report_json = dup_string(schub::acceptance_json(schub::run_acceptance(threads)).dump());
  });
}

}  // extern "C"
