#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdgmf/field.hpp"

namespace cdgmf {

// Univariate polynomial over a FieldSpec, coefficients lowest degree first.
// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldSpec f) : field_(f) {}
  Poly(FieldSpec f, std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  static Poly constant(FieldSpec f, long c) { return constant(Scalar(f, c)); }
  static Poly monomial(const Scalar& c, int k);
  static Poly x_pow(FieldSpec f, int k) { return monomial(Scalar::one(f), k); }
  // Coefficients given as small integers, lowest degree first.
  static Poly from_ints(FieldSpec f, const std::vector<long>& coeffs);

  FieldSpec field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_unit() const { return c_.size() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Scalar coeff(int i) const;
  const Scalar& leading() const { return c_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // a = q*b + r with deg r < deg b. Throws DivisionByZero for b == 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  bool divides(const Poly& a) const;
  // Quotient when b divides a exactly; throws otherwise.
  static Poly exact_div(const Poly& a, const Poly& b);
  Poly monic() const;
  Scalar eval(const Scalar& t) const;

  std::string to_string() const;

 private:
  void trim();
  void check_same(const Poly& o) const;
  FieldSpec field_;
  std::vector<Scalar> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct XGcd {
  Poly g, s, t;  // g = s*a + t*b, g monic (or zero)
};
XGcd xgcd(const Poly& a, const Poly& b);

}  // namespace cdgmf
