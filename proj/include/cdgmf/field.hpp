#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace cdgmf {

// Ground field: p == 0 means the rationals, otherwise the prime field F_p.
struct FieldSpec {
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint64_t p);
  bool is_rationals() const { return p == 0; }

  // "Q" or "Fp:<p>".
  std::string to_string() const;
  static FieldSpec parse(std::string_view s);

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.p == b.p; }
  friend bool operator!=(FieldSpec a, FieldSpec b) { return a.p != b.p; }
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}
  Scalar(FieldSpec f, long v);
  static Scalar from_rational(FieldSpec f, const mpq_class& q);
  static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical text: "3/4", "-2", "0" over Q; the residue in [0, p) over F_p.
  std::string to_string() const;
  static Scalar parse(FieldSpec f, std::string_view s);

  // Residue for F_p, only meaningful when field().p != 0.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

 private:
  void check_same(const Scalar& o) const;
  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace cdgmf
