#pragma once

#include <cstdint>
#include <string>

#include "core/errors.hpp"
#include "core/numbers.hpp"

namespace schub {

bool is_prime(std::int64_t p);

// The rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::int64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::int64_t p() const { return p_; }
  std::string to_string() const { return is_rationals() ? "Q" : "Fp:" + std::to_string(p_); }
  static FieldSpec from_string(const std::string& s);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::int64_t p_ = 0;  // 0 encodes the rationals
};

// Arithmetic policies used by the templated matrix routines.
struct QOps {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem inv(const Elem& x) const {
    if (x == 0) throw domain_error("division by zero");
    return Rat(1) / x;
  }
};

struct FpOps {
  std::int64_t p;
  using Elem = std::int64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem canon(std::int64_t v) const {
    v %= p;
    return v < 0 ? v + p : v;
  }
  Elem add(Elem x, Elem y) const { return (x + y) % p; }
  Elem sub(Elem x, Elem y) const { return canon(x - y); }
  Elem mul(Elem x, Elem y) const { return (x * y) % p; }
  Elem neg(Elem x) const { return x == 0 ? 0 : p - x; }
  Elem inv(Elem x) const;
};

// residue of a rational mod p; rejects denominators divisible by p
std::int64_t rat_mod_p(const Rat& x, std::int64_t p);

}  // namespace schub
