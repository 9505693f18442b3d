#include "core/lines.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "core/chow.hpp"
#include "core/json_io.hpp"

namespace schub {

Int count_lines(int n, std::int64_t q) {
  if (n < 1) throw domain_error("count_lines: n must be at least 1");
  if (!is_prime(q)) throw domain_error("count_lines: q must be prime");
  const Int qq = q;
  auto qpow = [&](int e) {
    Int v = 1;
    for (int i = 0; i < e; ++i) v *= qq;
    return v;
  };
  return (qpow(n + 1) - 1) * (qpow(n) - 1) / ((qq * qq - 1) * (qq - 1));
}

int line_shard_count(int n) { return n * (n + 1) / 2; }

namespace {

std::pair<int, int> shard_pivots(int n, int shard) {
  int idx = 0;
  for (int c1 = 0; c1 <= n; ++c1)
    for (int c2 = c1 + 1; c2 <= n; ++c2)
      if (idx++ == shard) return {c1, c2};
  throw domain_error("line shard out of range");
}

}  // namespace

void enumerate_lines_shard(int n, std::int64_t q, int shard,
                           const std::function<bool(const Mat<std::int64_t>&)>& fn) {
  const auto [c1, c2] = shard_pivots(n, shard);
  // free positions in a fixed order: row 0 between the pivots, row 0 past
  // the second pivot, row 1 past the second pivot
  std::vector<std::pair<int, int>> free_pos;
  for (int c = c1 + 1; c <= n; ++c)
    if (c != c2) free_pos.push_back({0, c});
  for (int c = c2 + 1; c <= n; ++c) free_pos.push_back({1, c});

  Mat<std::int64_t> m(2, n + 1);
  for (int c = 0; c <= n; ++c) m.at(0, c) = m.at(1, c) = 0;
  m.at(0, c1) = 1;
  m.at(1, c2) = 1;

  std::vector<std::int64_t> digits(free_pos.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      m.at(free_pos[i].first, free_pos[i].second) = digits[i];
    if (!fn(m)) return;
    int pos = static_cast<int>(digits.size()) - 1;
    while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
    if (pos < 0) return;
    ++digits[pos];
  }
}

void enumerate_lines(int n, std::int64_t q,
                     const std::function<bool(const Mat<std::int64_t>&)>& fn) {
  if (n < 1) throw domain_error("enumerate_lines: n must be at least 1");
  if (!is_prime(q)) throw domain_error("enumerate_lines: q must be prime");
  for (int shard = 0; shard < line_shard_count(n); ++shard) {
    bool keep = true;
    enumerate_lines_shard(n, q, shard, [&](const Mat<std::int64_t>& m) {
      keep = fn(m);
      return keep;
    });
    if (!keep) return;
  }
}

CompiledCondition compile_condition(const SchubertCondition& c) {
  CompiledCondition out;
  out.k = c.k().fp_rows();
  out.m = c.m().fp_rows();
  out.rank_k = c.k().rank();
  out.rank_m = c.m().rank();
  out.m_full = c.m().is_full();
  return out;
}

namespace {

// rank of a small matrix over F_q, destructive
int fp_rank_inplace(std::vector<std::int64_t>& a, int rows, int cols, std::int64_t q) {
  const FpOps ops{q};
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r * cols + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(a[piv * cols + c], a[rank * cols + c]);
    const std::int64_t s = ops.inv(a[rank * cols + col]);
    for (int c = col; c < cols; ++c) a[rank * cols + c] = a[rank * cols + c] * s % q;
    for (int r = rank + 1; r < rows; ++r) {
      const std::int64_t f = a[r * cols + col];
      if (f == 0) continue;
      for (int c = col; c < cols; ++c)
        a[r * cols + c] = ops.canon(a[r * cols + c] - f * a[rank * cols + c] % q);
    }
    ++rank;
  }
  return rank;
}

void copy_into(std::vector<std::int64_t>& buf, int& rows, int cols,
               const Mat<std::int64_t>& src) {
  for (int r = 0; r < src.rows(); ++r)
    for (int c = 0; c < cols; ++c) buf[(rows + r) * cols + c] = src.at(r, c);
  rows += src.rows();
}

}  // namespace

bool line_matrix_satisfies(const Mat<std::int64_t>& line, const CompiledCondition& c,
                           std::int64_t q) {
  const int cols = line.cols();
  static thread_local std::vector<std::int64_t> buf;
  if (!c.m_full) {
    buf.assign(static_cast<std::size_t>(c.m.rows() + 2) * cols, 0);
    int rows = 0;
    copy_into(buf, rows, cols, c.m);
    copy_into(buf, rows, cols, line);
    if (fp_rank_inplace(buf, rows, cols, q) != c.rank_m) return false;
  }
  buf.assign(static_cast<std::size_t>(c.k.rows() + 2) * cols, 0);
  int rows = 0;
  copy_into(buf, rows, cols, c.k);
  copy_into(buf, rows, cols, line);
  return fp_rank_inplace(buf, rows, cols, q) < c.rank_k + 2;
}

nlohmann::json problem_json(const SchubertProblem& p) {
  nlohmann::json conds = nlohmann::json::array();
  for (const SchubertCondition& c : p.conditions)
    conds.push_back(nlohmann::json{{"K", subspace_json(c.k())}, {"M", subspace_json(c.m())}});
  return nlohmann::json{{"n", p.n}, {"field", field_json(p.field)}, {"conditions", conds}};
}

SchubertProblem problem_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("field") || !j.contains("conditions"))
    throw parse_error("problem: need n, field, conditions");
  SchubertProblem p;
  p.n = j.at("n").get<int>();
  p.field = field_from_json(j.at("field"));
  for (const nlohmann::json& c : j.at("conditions")) {
    Subspace k = subspace_from_json(p.n, p.field, c.at("K"));
    Subspace m = c.contains("M") ? subspace_from_json(p.n, p.field, c.at("M"))
                                 : Subspace::full(p.n, p.field);
    try {
      p.conditions.emplace_back(std::move(k), std::move(m));
    } catch (const domain_error& e) {
      throw parse_error(std::string("problem: ") + e.what());
    }
  }
  return p;
}

nlohmann::json SolutionReport::to_json() const {
  nlohmann::json lines_j = nlohmann::json::array();
  for (const Subspace& l : lines) lines_j.push_back(subspace_json(l));
  nlohmann::json out{{"n", n},
                     {"field", field_json(field)},
                     {"count", count},
                     {"distinct", true},
                     {"lines", lines_j},
                     {"certificates", certificates}};
  if (has_prediction) {
    out["predicted"] = predicted;
    out["consistent"] = consistent;
    if (!consistent) out["note"] = "non-transverse instance";
  } else {
    out["predicted"] = nullptr;
  }
  return out;
}

SolutionReport solve_problem(const SchubertProblem& p, int threads) {
  if (p.field.is_rationals())
    throw domain_error("solve: exhaustive search needs a prime field");
  const std::int64_t q = p.field.p();
  if (count_lines(p.n, q) > kLineScanGuard)
    throw domain_error("solve: line count exceeds the scan guard");
  for (const SchubertCondition& c : p.conditions)
    if (c.k().ambient() != p.n || c.k().field() != p.field)
      throw domain_error("solve: condition in the wrong space");

  std::vector<CompiledCondition> compiled;
  for (const SchubertCondition& c : p.conditions) compiled.push_back(compile_condition(c));

  const int shards = line_shard_count(p.n);
  const int nthreads = std::max(1, std::min(threads, shards));
  std::vector<std::vector<Mat<std::int64_t>>> found(shards);

  auto scan_shard = [&](int shard) {
    enumerate_lines_shard(p.n, q, shard, [&](const Mat<std::int64_t>& line) {
      for (const CompiledCondition& c : compiled)
        if (!line_matrix_satisfies(line, c, q)) return true;
      found[shard].push_back(line);
      return true;
    });
  };
  if (nthreads == 1) {
    for (int s = 0; s < shards; ++s) scan_shard(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (int s = next.fetch_add(1); s < shards; s = next.fetch_add(1)) scan_shard(s);
      });
    for (auto& th : pool) th.join();
  }

  SolutionReport rep;
  rep.n = p.n;
  rep.field = p.field;
  rep.certificates = nlohmann::json::array();
  for (int s = 0; s < shards; ++s)
    for (const Mat<std::int64_t>& m : found[s]) {
      Subspace line = Subspace::from_matrix(p.n, p.field, m);
      // emission-time re-verification through the generic subspace path
      nlohmann::json cert = nlohmann::json::array();
      for (const SchubertCondition& c : p.conditions) {
        if (!line_satisfies(line, c))
          throw domain_error("solve: emitted line fails re-verification");
        const Subspace pt = meet(line, c.k());
        cert.push_back(nlohmann::json{{"meets_K_at", subspace_json(pt)}});
      }
      rep.certificates.push_back(cert);
      rep.lines.push_back(std::move(line));
    }
  rep.count = static_cast<long long>(rep.lines.size());

  // prediction when the codimensions say the problem is zero-dimensional
  int total = 0;
  std::vector<Partition> classes;
  bool typed = true;
  for (const SchubertCondition& c : p.conditions) {
    const auto [alpha, beta] = c.type();
    if (alpha > p.n - 1 || alpha < beta) typed = false;
    if (typed) classes.push_back(Partition::two_row(alpha, beta));
    total += alpha + beta;
  }
  if (typed && total == 2 * p.n - 2) {
    rep.has_prediction = true;
    rep.predicted = intersection_number(classes, p.n);
    rep.consistent = rep.predicted == rep.count;
  }
  return rep;
}

}  // namespace schub
