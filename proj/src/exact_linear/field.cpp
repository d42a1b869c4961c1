#include "cdgmf/field.hpp"

#include <charconv>

#include "cdgmf/errors.hpp"

namespace cdgmf {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
    throw ParseError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  return p == 0 ? std::string("Q") : "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(std::string_view s) {
  if (s == "Q") return rationals();
  if (s.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto body = s.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw ParseError("bad field spec: " + std::string(s));
    return prime(p);
  }
  throw ParseError("bad field spec: " + std::string(s));
}

Scalar::Scalar(FieldSpec f, long v) : field_(f) {
  if (f.p == 0) {
    value_ = mpq_class(v);
  } else {
    long r = v % static_cast<long>(f.p);
    if (r < 0) r += f.p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar Scalar::from_rational(FieldSpec f, const mpq_class& q) {
  Scalar s(f, 0);
  if (f.p == 0) {
    mpq_class c = q;
    c.canonicalize();
    s.value_ = c;
    return s;
  }
  std::uint64_t den = reduce_mpz(q.get_den(), f.p);
  if (den == 0) throw DivisionByZero("denominator divisible by the characteristic");
  std::uint64_t num = reduce_mpz(q.get_num(), f.p);
  s.value_ = num * mod_pow(den, f.p - 2, f.p) % f.p;
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw RingMismatch("scalars from " + field_.to_string() + " and " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  if (field_.p == 0) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.p == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.p == 0) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = v == 0 ? 0 : field_.p - v;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (field_.p == 0) {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = mod_pow(v, field_.p - 2, field_.p);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.p == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(o.value_)) % field_.p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.p == 0) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + field_.p - std::get<std::uint64_t>(o.value_)) % field_.p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.p == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(o.value_) % field_.p;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.p == 0) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (field_.p == 0) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar Scalar::parse(FieldSpec f, std::string_view s) {
  std::string str(s);
  if (str.empty()) throw ParseError("empty field element");
  for (std::size_t i = 0; i < str.size(); ++i) {
    char c = str[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || str[i - 1] == '/'));
    if (!ok) throw ParseError("bad field element: " + str);
  }
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw ParseError("bad field element: " + str);
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in " + str);
  q.canonicalize();
  return from_rational(f, q);
}

}  // namespace cdgmf
