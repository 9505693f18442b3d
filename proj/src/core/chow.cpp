#include "core/chow.hpp"

#include "core/errors.hpp"
#include "core/tableau.hpp"

namespace schub {

SchubertClass::SchubertClass(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
  if (n < 2) throw domain_error("schubert class: ambient n must be at least 2");
  if (!(n - 1 >= a && a >= b && b >= 0))
    throw domain_error("schubert class: (a,b) violates the box n-1 >= a >= b >= 0");
}

void ChowElement::add(int a, int b, long long c) {
  if (c == 0) return;
  if (!(n_ - 1 >= a && a >= b && b >= 0)) return;  // zero in the ring
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long ChowElement::coefficient(int a, int b) const {
  auto it = terms_.find(std::make_pair(a, b));
  return it == terms_.end() ? 0 : it->second;
}

std::vector<SchubertClass> chow_basis(int n) {
  if (n < 2) throw domain_error("chow_basis: n must be at least 2");
  std::vector<SchubertClass> out;
  for (int codim = 0; codim <= 2 * (n - 1); ++codim)
    for (int a = std::min(n - 1, codim); 2 * a >= codim; --a) out.emplace_back(a, codim - a, n);
  return out;
}

ChowElement pieri(const SchubertClass& cls, int alpha) {
  if (alpha <= 0) throw domain_error("pieri: alpha must be positive");
  ChowElement out(cls.n);
  const int total = cls.a + cls.b + alpha;
  for (int b2 = cls.b; b2 <= cls.a; ++b2) {
    const int a2 = total - b2;
    if (a2 < cls.a || a2 > cls.n - 1 || a2 < b2) continue;
    out.add(a2, b2, 1);
  }
  return out;
}

namespace {

void check_box(const std::vector<Partition>& classes, int n) {
  for (const Partition& p : classes) {
    if (!p.is_two_row()) throw domain_error("chow: classes must have at most two rows");
    if (p.part(0) > n - 1) throw domain_error("chow: class exceeds the box");
  }
}

}  // namespace

ChowElement chow_product(const std::vector<Partition>& classes, int n) {
  if (n < 2) throw domain_error("chow: n must be at least 2");
  check_box(classes, n);
  int beta = 0;
  std::vector<int> alphas;
  for (const Partition& p : classes) {
    beta += p.part(1);
    if (p.part(0) - p.part(1) > 0) alphas.push_back(p.part(0) - p.part(1));
  }
  int s = 0;
  for (int a : alphas) s += a;

  ChowElement out(n);
  for (int bb = 0; 2 * bb <= s; ++bb) {
    const int aa = s - bb;
    const long long c = c_count(Partition::two_row(aa, bb), alphas);
    if (c != 0) out.add(beta + aa, beta + bb, c);
  }
  return out;
}

ChowElement pieri_product(const std::vector<Partition>& classes, int n) {
  if (n < 2) throw domain_error("chow: n must be at least 2");
  check_box(classes, n);
  ChowElement acc(n);
  acc.add(0, 0, 1);
  for (const Partition& p : classes) {
    const int a = p.part(0), b = p.part(1);
    // rectangle shift: multiply by sigma_(b,b)
    ChowElement shifted(n);
    for (const auto& [key, c] : acc.terms()) shifted.add(key.first + b, key.second + b, c);
    acc = shifted;
    if (a - b > 0) {
      ChowElement next(n);
      for (const auto& [key, c] : acc.terms()) {
        ChowElement row = pieri(SchubertClass(key.first, key.second, n), a - b);
        for (const auto& [k2, c2] : row.terms()) next.add(k2.first, k2.second, c * c2);
      }
      acc = next;
    }
  }
  return acc;
}

long long intersection_number(const std::vector<Partition>& classes, int n) {
  int total = 0;
  for (const Partition& p : classes) total += p.weight();
  if (total != 2 * n - 2)
    throw domain_error("intersection_number: codimensions must sum to 2n-2");
  return chow_product(classes, n).coefficient(n - 1, n - 1);
}

}  // namespace schub
