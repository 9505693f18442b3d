#include "core/field.hpp"

namespace schub {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw domain_error("field: p must be prime");
  if (p >= (std::int64_t(1) << 31)) throw domain_error("field: p too large");
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::from_string(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stoll(s.substr(3)));
    } catch (const std::invalid_argument&) {
      throw parse_error("field: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
      throw parse_error("field: cannot parse '" + s + "'");
    }
  }
  throw parse_error("field: expected 'Q' or 'Fp:<prime>', got '" + s + "'");
}

FpOps::Elem FpOps::inv(Elem x) const {
  if (x == 0) throw domain_error("division by zero in F_p");
  // extended Euclid
  std::int64_t a = x, b = p, u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  return canon(u);
}

std::int64_t rat_mod_p(const Rat& x, std::int64_t p) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  const Int pp = p;
  std::int64_t n = static_cast<std::int64_t>(num % pp);
  std::int64_t d = static_cast<std::int64_t>(den % pp);
  FpOps ops{p};
  if (ops.canon(d) == 0) throw domain_error("rational has denominator divisible by p");
  return ops.mul(ops.canon(n), ops.inv(ops.canon(d)));
}

}  // namespace schub
