#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "core/arrangement.hpp"
#include "core/numbers.hpp"
#include "core/subspace.hpp"

namespace schub {

// Lines of P^n(F_q) as canonical 2x(n+1) reduced echelon matrices, streamed
// in a fixed order (pivot pair, then the free entries as a base-q counter).
// fn returns false to stop early.
void enumerate_lines(int n, std::int64_t q,
                     const std::function<bool(const Mat<std::int64_t>&)>& fn);

// (q^{n+1}-1)(q^n-1) / ((q^2-1)(q-1))
Int count_lines(int n, std::int64_t q);

// number of pivot-column pairs; shard index space for the parallel scan
int line_shard_count(int n);
void enumerate_lines_shard(int n, std::int64_t q, int shard,
                           const std::function<bool(const Mat<std::int64_t>&)>& fn);

struct SchubertProblem {
  int n = 0;
  FieldSpec field;
  std::vector<SchubertCondition> conditions;
};

nlohmann::json problem_json(const SchubertProblem& p);
SchubertProblem problem_from_json(const nlohmann::json& j);

struct SolutionReport {
  int n = 0;
  FieldSpec field;
  long long count = 0;
  bool has_prediction = false;
  long long predicted = 0;
  bool consistent = true;  // count == predicted when a prediction exists
  std::vector<Subspace> lines;
  nlohmann::json certificates;  // per line, per condition: the meeting point
  nlohmann::json to_json() const;
};

// exhaustive scan of all lines against all conditions; thread count caps the
// shard parallelism (1 = sequential)
SolutionReport solve_problem(const SchubertProblem& p, int threads);

// rank test for one line matrix against a compiled condition (prime field)
struct CompiledCondition {
  Mat<std::int64_t> k, m;
  bool m_full = false;
  int rank_k = 0, rank_m = 0;
};
CompiledCondition compile_condition(const SchubertCondition& c);
bool line_matrix_satisfies(const Mat<std::int64_t>& line, const CompiledCondition& c,
                           std::int64_t q);

inline constexpr long long kLineScanGuard = 100000000;  // refuse larger scans

}  // namespace schub
