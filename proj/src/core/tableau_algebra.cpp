#include "core/tableau_algebra.hpp"

#include "core/errors.hpp"

namespace schub {

FormalSum FormalSum::of(const Tableau& t) {
  FormalSum s;
  s.add(t, 1);
  return s;
}

void FormalSum::add(const Tableau& t, long long c) {
  if (c == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalSum::add_new_term(const Tableau& t) {
  auto [it, fresh] = terms_.emplace(t, 1);
  if (!fresh) throw domain_error("formal sum: duplicate term where multiplicity one was expected");
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

long long FormalSum::coefficient(const Tableau& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum circ(const Tableau& s, const Tableau& t) {
  const Partition lam = s.shape();
  FormalSum out;
  if (t.degree() == 0) return FormalSum::of(s);
  for (const Partition& nu : partitions_of(lam.weight() + t.degree())) {
    if (!nu.contains(lam)) continue;
    for (const SkewTableau& u : standard_skew_fillings(nu, lam))
      if (u.rectify() == t) out.add_new_term(union_shift(s, u));
  }
  return out;
}

FormalSum circ(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      FormalSum part = circ(s, t);
      for (const auto& [u, cu] : part.terms()) out.add(u, cs * ct * cu);
    }
  return out;
}

Partition phi_shape(const Tableau& t) { return t.shape(); }

std::optional<Partition> phi_mn(const Tableau& t, int m, int n, VanishRule rule) {
  if (m >= n || m < 0) throw domain_error("phi_mn: need 0 <= m < n");
  const Partition lam = t.shape();
  bool vanish;
  if (rule == VanishRule::box)
    vanish = lam.part(0) > n - m || lam.part(m + 1) != 0;
  else
    vanish = lam.part(0) + m >= n || lam.part(m) != 0;
  if (vanish) return std::nullopt;
  return lam;
}

}  // namespace schub
