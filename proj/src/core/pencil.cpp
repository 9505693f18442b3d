#include "core/pencil.hpp"

#include "core/errors.hpp"
#include "core/json_io.hpp"

namespace schub {

namespace {

// a row of `space` that lies outside `avoid`
template <class Ops>
std::vector<typename Ops::Elem> row_outside(const Mat<typename Ops::Elem>& space,
                                            const Mat<typename Ops::Elem>& avoid, const Ops& ops) {
  const int base = rank_of(avoid, ops);
  for (int r = 0; r < space.rows(); ++r) {
    Mat<typename Ops::Elem> probe = avoid;
    probe.append_row(space.row(r));
    if (rank_of(probe, ops) == base + 1) return space.row(r);
  }
  throw domain_error("pencil: adapted frame row not found");
}

}  // namespace

Pencil::Pencil(Flag flag, Subspace l_inf) : flag_(std::move(flag)), l_inf_(std::move(l_inf)) {
  const int n = flag_.ambient();
  if (l_inf_.ambient() != n || l_inf_.field() != flag_.field())
    throw domain_error("pencil: flag and hyperplane live in different spaces");
  if (!l_inf_.is_hyperplane()) throw domain_error("pencil: L_inf must be a hyperplane");
  if (contains(l_inf_, flag_.at(n)))
    throw domain_error("pencil: L_inf must not contain the flag point F_n");

  // e_n spans F_n; e_i is a row of L_inf meet F_i outside F_{i+1}
  if (field().is_rationals()) {
    frame_q_ = Mat<Rat>(n + 1, n + 1);
    const QOps ops;
    for (int c = 0; c <= n; ++c) frame_q_.at(n, c) = flag_.at(n).q_rows().at(0, c);
    for (int i = n - 1; i >= 0; --i) {
      const auto sec = meet(l_inf_, flag_.at(i));
      const auto row = row_outside(sec.q_rows(), flag_.at(i + 1).q_rows(), ops);
      for (int c = 0; c <= n; ++c) frame_q_.at(i, c) = row[c];
    }
  } else {
    frame_fp_ = Mat<std::int64_t>(n + 1, n + 1);
    const FpOps ops{field().p()};
    for (int c = 0; c <= n; ++c) frame_fp_.at(n, c) = flag_.at(n).fp_rows().at(0, c);
    for (int i = n - 1; i >= 0; --i) {
      const auto sec = meet(l_inf_, flag_.at(i));
      const auto row = row_outside(sec.fp_rows(), flag_.at(i + 1).fp_rows(), ops);
      for (int c = 0; c <= n; ++c) frame_fp_.at(i, c) = row[c];
    }
  }
}

Subspace Pencil::rows_to_subspace(const std::vector<int>& js, const Rat& t, bool with_t) const {
  const int n = ambient();
  if (field().is_rationals()) {
    Mat<Rat> m(static_cast<int>(js.size()), n + 1);
    int r = 0;
    for (int j : js) {
      for (int c = 0; c <= n; ++c) {
        Rat v = frame_q_.at(j + 1, c);
        if (with_t) v += t * frame_q_.at(j, c);
        m.at(r, c) = v;
      }
      ++r;
    }
    return Subspace::from_matrix(n, field(), std::move(m));
  }
  const FpOps ops{field().p()};
  const std::int64_t tv = with_t ? rat_mod_p(t, ops.p) : 0;
  Mat<std::int64_t> m(static_cast<int>(js.size()), n + 1);
  int r = 0;
  for (int j : js) {
    for (int c = 0; c <= n; ++c)
      m.at(r, c) = ops.add(frame_fp_.at(j + 1, c), ops.mul(tv, frame_fp_.at(j, c)));
    ++r;
  }
  return Subspace::from_matrix(n, field(), std::move(m));
}

Subspace Pencil::at(const Rat& t) const {
  std::vector<int> js;
  for (int j = 0; j < ambient(); ++j) js.push_back(j);
  return rows_to_subspace(js, t, true);
}

Subspace Pencil::at_infinity() const {
  const int n = ambient();
  if (field().is_rationals()) {
    Mat<Rat> m(n, n + 1);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c <= n; ++c) m.at(r, c) = frame_q_.at(r, c);
    return Subspace::from_matrix(n, field(), std::move(m));
  }
  Mat<std::int64_t> m(n, n + 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= n; ++c) m.at(r, c) = frame_fp_.at(r, c);
  return Subspace::from_matrix(n, field(), std::move(m));
}

Subspace Pencil::section_span(const Rat& t, int i) const {
  std::vector<int> js;
  for (int j = i; j < ambient(); ++j) js.push_back(j);
  return rows_to_subspace(js, t, true);
}

Subspace Pencil::limit_span(int i) const {
  std::vector<int> js;
  for (int j = i; j < ambient(); ++j) js.push_back(j);
  return rows_to_subspace(js, Rat(0), true);
}

nlohmann::json PencilReport::to_json() const {
  return nlohmann::json{{"precondition_ok", precondition_ok},
                        {"pass", pass},
                        {"parameters_checked", parameters_checked},
                        {"failures", failures}};
}

PencilReport pencil_verify(const Pencil& p, int trials, std::uint64_t seed) {
  PencilReport rep;
  const int n = p.ambient();

  std::vector<Rat> ts;
  if (p.field().is_rationals()) {
    Rng rng(seed);
    while (static_cast<int>(ts.size()) < trials) {
      const Rat t(rng.int_in(-99, 99), rng.int_in(1, 30));
      if (t != 0) ts.push_back(t);
    }
  } else {
    for (std::int64_t v = 1; v < p.field().p(); ++v) ts.push_back(Rat(v));
  }

  for (const Rat& t : ts) {
    const Subspace lt = p.at(t);
    for (int i = 0; i <= n - 1; ++i) {
      const Subspace section = meet(lt, p.flag().at(i));
      if (section.codim() != i + 1)
        rep.failures.push_back("t=" + rat_to_string(t) + " i=" + std::to_string(i) +
                               ": section has wrong codimension");
      else if (!(section == p.section_span(t, i)))
        rep.failures.push_back("t=" + rat_to_string(t) + " i=" + std::to_string(i) +
                               ": section differs from the spanning rows");
    }
    ++rep.parameters_checked;
  }
  for (int i = 0; i <= n - 1; ++i)
    if (!(p.limit_span(i) == p.flag().at(i + 1)))
      rep.failures.push_back("i=" + std::to_string(i) + ": t=0 rows do not span F_{i+1}");
  if (!(p.at_infinity() == p.l_inf()))
    rep.failures.push_back("t=infinity does not return L_inf");

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace schub
