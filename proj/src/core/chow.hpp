#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core/partition.hpp"

namespace schub {

// Basis class sigma_(a,b) of the Chow ring of lines in P^n; valid when
// n-1 >= a >= b >= 0.
struct SchubertClass {
  int a = 0, b = 0, n = 0;
  SchubertClass(int a_, int b_, int n_);
  int codim() const { return a + b; }
};

// Integer combination of basis classes; keys outside the box are zero in the
// ring and are dropped on insertion.
class ChowElement {
 public:
  explicit ChowElement(int n) : n_(n) {}
  int n() const { return n_; }

  void add(int a, int b, long long c);
  long long coefficient(int a, int b) const;
  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  friend bool operator==(const ChowElement&, const ChowElement&) = default;

 private:
  int n_;
  std::map<std::pair<int, int>, long long> terms_;
};

// all basis classes, graded by codimension
std::vector<SchubertClass> chow_basis(int n);

// classical Pieri rule: sigma_(a,b) * sigma_alpha
ChowElement pieri(const SchubertClass& cls, int alpha);

// product of the given classes expanded over the basis via tableau counts
// (c_count with the rectangle shift by sum of second parts)
ChowElement chow_product(const std::vector<Partition>& classes, int n);

// the same product computed by elementary classical identities only:
// sigma_(a,b) = sigma_(b,b) * sigma_(a-b), rectangle shift, then Pieri.
// Independent oracle for chow_product.
ChowElement pieri_product(const std::vector<Partition>& classes, int n);

// coefficient of sigma_(n-1,n-1); requires total codimension 2n-2
long long intersection_number(const std::vector<Partition>& classes, int n);

}  // namespace schub
