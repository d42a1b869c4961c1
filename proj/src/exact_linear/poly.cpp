#include "cdgmf/poly.hpp"

#include "cdgmf/errors.hpp"

namespace cdgmf {

Poly::Poly(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != f) throw RingMismatch("coefficient field differs from polynomial field");
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(c.field()));
  v[static_cast<std::size_t>(k)] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(FieldSpec f, const std::vector<long>& coeffs) {
  std::vector<Scalar> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(f, c);
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

// Zero polynomials are allowed to carry a stale field tag; only nonzero operands must agree.
void Poly::check_same(const Poly& o) const {
  if (!is_zero() && !o.is_zero() && field_ != o.field_)
    throw RingMismatch("polynomials over " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.is_zero()) return Poly(a.field_);
  if (b.is_zero()) return Poly(b.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(r));
}

Poly operator*(const Scalar& s, const Poly& a) {
  if (a.is_zero() || s.is_zero()) return Poly(s.field());
  Poly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.field_ == b.field_ && a.c_ == b.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  a.check_same(b);
  FieldSpec f = b.field_;
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Scalar> r = a.c_;
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Scalar::zero(f));
  Scalar inv = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Scalar coef = top * inv;
    const int shift = k - db;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(shift + j)] -= coef * b.c_[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(shift)] = coef;
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

bool Poly::divides(const Poly& a) const {
  if (is_zero()) return a.is_zero();
  return divmod(a, *this).second.is_zero();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalAssertionFailure("inexact polynomial division");
  return q;
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return leading().inverse() * *this;
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar acc = Scalar::zero(t.field());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string cs = c.to_string();
    if (i == 0) {
      s += cs;
    } else {
      if (!c.is_one()) s += cs + "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = Poly::divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  FieldSpec f = a.is_zero() ? b.field() : a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

}  // namespace cdgmf
