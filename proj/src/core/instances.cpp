#include "core/instances.hpp"

#include <algorithm>

#include "core/json_io.hpp"

namespace schub {

namespace {

bool same_p1_point(const FieldSpec& f, const std::pair<Rat, Rat>& a,
                   const std::pair<Rat, Rat>& b) {
  const Rat cross = a.first * b.second - a.second * b.first;
  if (f.is_rationals()) return cross == 0;
  return rat_mod_p(cross, f.p()) == 0;
}

void check_point(const FieldSpec& f, const std::pair<Rat, Rat>& p) {
  if (f.is_rationals()) {
    if (p.first == 0 && p.second == 0) throw domain_error("point [0,0] is not in P^1");
    return;
  }
  if (rat_mod_p(p.first, f.p()) == 0 && rat_mod_p(p.second, f.p()) == 0)
    throw domain_error("point [0,0] is not in P^1");
}

// matrix builders over either field
struct RowBuilder {
  int n;
  FieldSpec f;
  Mat<Rat> q;
  Mat<std::int64_t> fp;
  RowBuilder(int n_, const FieldSpec& f_, int rows) : n(n_), f(f_) {
    if (f.is_rationals()) {
      q = Mat<Rat>(rows, n + 1);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= n; ++c) q.at(r, c) = Rat(0);
    } else {
      fp = Mat<std::int64_t>(rows, n + 1);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= n; ++c) fp.at(r, c) = 0;
    }
  }
  void set(int r, int c, const Rat& v) {
    if (f.is_rationals())
      q.at(r, c) = v;
    else
      fp.at(r, c) = rat_mod_p(v, f.p());
  }
  Subspace done() {
    return f.is_rationals() ? Subspace::from_matrix(n, f, std::move(q))
                            : Subspace::from_matrix(n, f, std::move(fp));
  }
};

}  // namespace

std::vector<std::pair<Rat, Rat>> canonical_p1_points(const FieldSpec& f, int count) {
  std::vector<std::pair<Rat, Rat>> out;
  if (count >= 1) out.push_back({Rat(1), Rat(0)});
  for (int t = 0; static_cast<int>(out.size()) < count; ++t) {
    if (!f.is_rationals() && t >= f.p())
      throw domain_error("not enough points on P^1 over this field");
    out.push_back({Rat(t), Rat(1)});
  }
  return out;
}

SegreInstance segre_instance(int n, const FieldSpec& f, std::vector<std::pair<Rat, Rat>> points) {
  if (n < 2) throw domain_error("segre: n must be at least 2");
  if (points.empty()) {
    if (!f.is_rationals() && f.p() + 1 < n)
      throw domain_error("segre: the field has fewer than n points on P^1");
    points = canonical_p1_points(f, n);
  }
  if (static_cast<int>(points.size()) != n) throw domain_error("segre: need exactly n points");
  for (const auto& p : points) check_point(f, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (same_p1_point(f, points[i], points[j]))
        throw domain_error("segre: the points must be pairwise distinct");

  const int amb = 2 * n - 1;  // coordinates x_1..x_2n
  // L1: x_1 = ... = x_n = 0        -> span(e_{n+1}..e_{2n})
  RowBuilder l1(amb, f, n);
  for (int j = 0; j < n; ++j) l1.set(j, n + j, Rat(1));
  // L2: x_{n+1} = ... = x_{2n} = 0 -> span(e_1..e_n)
  RowBuilder l2(amb, f, n);
  for (int j = 0; j < n; ++j) l2.set(j, j, Rat(1));
  // L3: x_j = x_{n+j}              -> span(e_j + e_{n+j})
  RowBuilder l3(amb, f, n);
  for (int j = 0; j < n; ++j) {
    l3.set(j, j, Rat(1));
    l3.set(j, n + j, Rat(1));
  }
  // L4: b_j x_j = a_j x_{n+j}      -> span(a_j e_j + b_j e_{n+j})
  RowBuilder l4(amb, f, n);
  for (int j = 0; j < n; ++j) {
    l4.set(j, j, points[j].first);
    l4.set(j, n + j, points[j].second);
  }

  SegreInstance inst;
  inst.points = std::move(points);
  inst.problem.n = amb;
  inst.problem.field = f;
  const Subspace full = Subspace::full(amb, f);
  std::vector<Subspace> planes{l1.done(), l2.done(), l3.done(), l4.done()};
  for (Subspace& pl : planes) {
    if (pl.proj_dim() != n - 1) throw domain_error("segre: degenerate plane");
    inst.problem.conditions.emplace_back(pl, full);
  }

  for (int j = 0; j < n; ++j) {
    RowBuilder line(amb, f, 2);
    line.set(0, j, Rat(1));
    line.set(1, n + j, Rat(1));
    inst.predicted.push_back(line.done());
  }
  for (const Subspace& line : inst.predicted)
    for (const SchubertCondition& c : inst.problem.conditions)
      if (!line_satisfies(line, c))
        throw domain_error("segre: a predicted line fails a condition");
  return inst;
}

nlohmann::json SegreInstance::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points)
    pts.push_back({rat_to_string(p.first), rat_to_string(p.second)});
  nlohmann::json pred = nlohmann::json::array();
  for (const Subspace& l : predicted) pred.push_back(subspace_json(l));
  return nlohmann::json{
      {"problem", problem_json(problem)}, {"points", pts}, {"predicted_lines", pred}};
}

Subspace scroll_line(int n, const FieldSpec& f, const std::pair<Rat, Rat>& p) {
  check_point(f, p);
  const Rat a = p.first, b = p.second;
  RowBuilder line(n + 1, f, 2);
  line.set(0, 0, a);
  line.set(0, 1, b);
  // the attached point of the ruling: a^{n-1}, a^{n-2} b, ..., b^{n-1}
  for (int i = 0; i < n; ++i) {
    Rat v = 1;
    for (int k = 0; k < n - 1 - i; ++k) v *= a;
    for (int k = 0; k < i; ++k) v *= b;
    line.set(1, 2 + i, v);
  }
  return line.done();
}

ScrollInstance scroll_instance(int n, const FieldSpec& f, std::vector<std::pair<Rat, Rat>> roots) {
  if (n < 2) throw domain_error("scroll: n must be at least 2");
  if (!f.is_rationals() && f.p() + 1 < n)
    throw domain_error("scroll: q < n-1, only q+1 ruling lines are rational");
  if (roots.empty()) roots = canonical_p1_points(f, n);
  if (static_cast<int>(roots.size()) != n) throw domain_error("scroll: need exactly n roots");
  for (const auto& p : roots) check_point(f, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (same_p1_point(f, roots[i], roots[j]))
        throw domain_error("scroll: the roots must be pairwise distinct");

  // F(a,b) = prod_j (b_j a - a_j b), coefficients A_i of b^i a^{n-i}
  std::vector<Rat> coeff{Rat(1)};
  for (const auto& [aj, bj] : roots) {
    std::vector<Rat> next(coeff.size() + 1, Rat(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i] += coeff[i] * bj;       // multiply by b_j * a
      next[i + 1] -= coeff[i] * aj;   // multiply by -a_j * b
    }
    coeff = std::move(next);
  }

  ScrollInstance inst;
  inst.n = n;
  inst.field = f;
  inst.form = coeff;
  inst.roots = std::move(roots);

  const int amb = n + 1;  // coordinates x_1, x_2, y_1..y_n
  RowBuilder ell(amb, f, 2);
  ell.set(0, 0, Rat(1));
  ell.set(1, 1, Rat(1));
  inst.directrix = ell.done();

  // K_{n+1} = kernel of the two linear forms
  if (f.is_rationals()) {
    Mat<Rat> forms(2, amb + 1);
    for (int c = 0; c <= amb; ++c) forms.at(0, c) = forms.at(1, c) = Rat(0);
    forms.at(0, 1) = Rat(1);
    forms.at(0, 2) = Rat(-1);
    forms.at(1, 0) = coeff[0];
    for (int i = 1; i <= n; ++i) forms.at(1, 1 + i) = coeff[i];
    inst.plane = Subspace::from_matrix(amb, f, kernel_of(std::move(forms), QOps{}));
  } else {
    const FpOps ops{f.p()};
    Mat<std::int64_t> forms(2, amb + 1);
    for (int c = 0; c <= amb; ++c) forms.at(0, c) = forms.at(1, c) = 0;
    forms.at(0, 1) = 1;
    forms.at(0, 2) = ops.canon(-1);
    forms.at(1, 0) = rat_mod_p(coeff[0], f.p());
    for (int i = 1; i <= n; ++i) forms.at(1, 1 + i) = rat_mod_p(coeff[i], f.p());
    inst.plane = Subspace::from_matrix(amb, f, kernel_of(std::move(forms), ops));
  }
  if (inst.plane.proj_dim() != n - 1) throw domain_error("scroll: degenerate plane");

  for (const auto& p : inst.roots) inst.predicted.push_back(scroll_line(n, f, p));
  return inst;
}

nlohmann::json ScrollInstance::to_json() const {
  nlohmann::json rts = nlohmann::json::array();
  for (const auto& p : roots) rts.push_back({rat_to_string(p.first), rat_to_string(p.second)});
  nlohmann::json pred = nlohmann::json::array();
  for (const Subspace& l : predicted) pred.push_back(subspace_json(l));
  nlohmann::json fm = nlohmann::json::array();
  for (const Rat& c : form) fm.push_back(rat_to_string(c));
  return nlohmann::json{{"n", n},
                        {"field", field_json(field)},
                        {"directrix", subspace_json(directrix)},
                        {"plane", subspace_json(plane)},
                        {"form_coefficients", fm},
                        {"roots", rts},
                        {"predicted_lines", pred}};
}

ScrollReport scroll_check(const ScrollInstance& inst) {
  ScrollReport rep;
  rep.instance = inst;
  const int n = inst.n;
  const FieldSpec& f = inst.field;

  // pullback of the second linear form along the degree-n parameterization
  // [a,b] -> (a^n, a^{n-1} b, a^{n-1} b, a^{n-2} b^2, ..., b^n): substitute,
  // collect the coefficient of b^i a^{n-i}, compare with the root form, and
  // confirm that form actually vanishes at each root
  {
    // coordinate components as coefficient vectors in (a^n, a^{n-1}b, ..., b^n)
    std::vector<std::vector<Rat>> comp(n + 2, std::vector<Rat>(n + 1, Rat(0)));
    comp[0][0] = Rat(1);                              // x_1 = a^n
    comp[1][1] = Rat(1);                              // x_2 = a^{n-1} b
    for (int i = 1; i <= n; ++i) comp[1 + i][i] = Rat(1);  // y_i = a^{n-i} b^i
    std::vector<Rat> pulled(n + 1, Rat(0));
    for (int k = 0; k <= n; ++k) pulled[k] += inst.form[0] * comp[0][k];
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k <= n; ++k) pulled[k] += inst.form[i] * comp[1 + i][k];
    rep.pullback_matches = true;
    auto is_zero = [&](const Rat& v) {
      return f.is_rationals() ? v == 0 : rat_mod_p(v, f.p()) == 0;
    };
    for (int k = 0; k <= n; ++k)
      if (!is_zero(pulled[k] - inst.form[k])) rep.pullback_matches = false;
    for (const auto& [a, b] : inst.roots) {
      Rat value = 0;
      for (int i = 0; i <= n; ++i) {
        Rat term = inst.form[i];
        for (int k = 0; k < n - i; ++k) term *= a;
        for (int k = 0; k < i; ++k) term *= b;
        value += term;
      }
      if (!is_zero(value)) rep.pullback_matches = false;
    }
  }

  const SchubertCondition cond(inst.plane, Subspace::full(n + 1, f));
  auto is_root = [&](const std::pair<Rat, Rat>& p) {
    for (const auto& r : inst.roots)
      if (same_p1_point(f, p, r)) return true;
    return false;
  };

  std::vector<std::pair<Rat, Rat>> params;
  if (f.is_rationals()) {
    params = canonical_p1_points(f, n + 20);  // roots are the first n by default; include extras
    for (const auto& r : inst.roots)
      if (std::none_of(params.begin(), params.end(),
                       [&](const auto& p) { return same_p1_point(f, p, r); }))
        params.push_back(r);
  } else {
    params = canonical_p1_points(f, static_cast<int>(f.p()) + 1);
  }
  rep.rational_ruling_lines = f.is_rationals() ? -1 : static_cast<long long>(params.size());

  rep.exactly_roots_meet = true;
  for (const auto& p : params) {
    const Subspace line = scroll_line(n, f, p);
    const bool meets = line_satisfies(line, cond);
    if (meets) rep.meeting_params.push_back(p);
    if (meets != is_root(p)) rep.exactly_roots_meet = false;
  }
  return rep;
}

nlohmann::json ScrollReport::to_json() const {
  nlohmann::json meets = nlohmann::json::array();
  for (const auto& p : meeting_params)
    meets.push_back({rat_to_string(p.first), rat_to_string(p.second)});
  return nlohmann::json{{"instance", instance.to_json()},
                        {"pullback_matches", pullback_matches},
                        {"rational_ruling_lines", rational_ruling_lines},
                        {"exactly_roots_meet", exactly_roots_meet},
                        {"meeting_params", meets},
                        {"pass", pullback_matches && exactly_roots_meet}};
}

}  // namespace schub
