#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "core/numbers.hpp"
#include "core/subspace.hpp"
#include "core/tableau.hpp"

namespace schub {

// Partial flag K c M; a line satisfies it when it lies in M and meets K.
class SchubertCondition {
 public:
  SchubertCondition(Subspace k, Subspace m);
  const Subspace& k() const { return k_; }
  const Subspace& m() const { return m_; }
  // (alpha, beta) with codim K = alpha+1 and codim M = beta; K = M encodes
  // the full Grassmannian of lines in M, type (beta, beta)
  std::pair<int, int> type() const;

  friend bool operator==(const SchubertCondition&, const SchubertCondition&) = default;

 private:
  Subspace k_, m_;
};

bool line_satisfies(const Subspace& line, const SchubertCondition& c);

// Complete flag plus hyperplanes H_2..H_{2n-2} subject to the genericity
// conditions checked by verify_arrangement.
struct Arrangement {
  int n = 0;
  FieldSpec field;
  Flag flag;
  std::map<int, Subspace> hyperplanes;

  const Subspace& hyperplane(int p) const;
  const Subspace& flag_at(int i) const { return flag.at(i); }
};

// intersection of the H_j over a set of indices; empty set gives P^n
Subspace h_of_indices(const Arrangement& a, const std::vector<int>& indices);
// H_T for the second row of a two-row tableau of degree <= 2n-2; the
// codimension must equal the second-row length (checked)
Subspace h_of_tableau(const Arrangement& a, const Tableau& t);

// Omega(T) = Omega(F_{alpha+1}, H_T)
SchubertCondition omega_of_tableau(const Arrangement& a, const Tableau& t);

// "L meets the arrangement family at (l, s) properly": codim L = alpha-s+1
// with alpha read off from L, the flag sections have expected dimension,
// L meet F_{l+1} = F_{l+alpha-s+2}, and for every second row of degree l the
// extended intersections H_{T^{+(s-1)}}, H_{T^{+s}} meet L properly.
bool meets_properly(const Arrangement& a, const Subspace& l_sub, int l, int s);

// Omega(T; L) for T in the partial star family at (l, s, alpha):
// Omega(F_{b+1}, H_T) when the first row length b >= l+1, otherwise
// Omega(F_{b-alpha+s} meet L, H_T)
SchubertCondition omega_t_l(const Arrangement& a, const Tableau& t, const Subspace& l_sub, int l,
                            int s, int alpha);

// greedy seeded construction; over F_p candidate hyperplanes are enumerated
// exhaustively, over Q rejection-sampled with bounded integer entries
Arrangement build_arrangement(int n, const FieldSpec& f, std::uint64_t seed);

struct VerifyReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string witness;
  };
  std::vector<Item> items;
  bool defining_pass = true;   // the two defining conditions, all indices
  bool alternate_pass = true;  // the equivalent even/odd-split conditions
  bool extras_pass = true;     // codimension, distinctness, H_T != F_beta
  bool pass() const { return defining_pass && alternate_pass && extras_pass; }
  nlohmann::json to_json() const;
};

VerifyReport verify_arrangement(const Arrangement& a);

// index families S_m used when picking the odd hyperplanes: subsets
// {3} u {2,4,..,2j-2} u {a_{j+1} < ... < a_m} of {2..2m} with a_i >= 2i,
// plus the j = 0 family of rectangular second rows
std::vector<std::vector<int>> odd_step_families(int m);

// guaranteed-success field size from the closed formula
// (2n-4)!/((n-2)!(n-1)!) + sum_{i=1}^{n-4} (2i)!/(i!(i+1)!)
Int arrangement_field_bound(int n);

// second rows of two-row standard tableaux of degree exactly d (entries
// bounded by max_index); each set R satisfies r_j >= 2j
std::vector<std::vector<int>> second_rows_of_degree(int d, int max_index);
// eligible at any degree <= d
std::vector<std::vector<int>> second_rows_up_to_degree(int d, int max_index);

nlohmann::json arrangement_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j);

}  // namespace schub
