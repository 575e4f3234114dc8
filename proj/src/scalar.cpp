#include <cctype>

#include "homquot/exalg.hpp"

namespace homquot {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw ParseError("field characteristic must be a prime in [2, 2^31): " +
                     std::to_string(p));
  return FieldSpec(FieldKind::Prime, p);
}

std::string FieldSpec::str() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.p());
}

Scalar Scalar::of(const FieldSpec& f, long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, q, 0);
  }
  std::uint32_t p = f.p();
  auto reduce = [p](long v) {
    std::int64_t m = static_cast<std::int64_t>(v) % p;
    if (m < 0) m += p;
    return static_cast<std::uint32_t>(m);
  };
  std::uint32_t n = reduce(num), d = reduce(den);
  if (d == 0) throw ParseError("denominator vanishes mod p");
  return Scalar(f, mpq_class(0), fp_mul(n, fp_inv(d, p), p));
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(q), 0);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar");
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw ParseError("bad scalar: " + text);
  if (i < text.size()) {
    if (f.is_prime_field() || text[i] != '/')
      throw ParseError("bad scalar: " + text);
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size())
      throw ParseError("bad scalar: " + text);
  }
  if (f.is_rational()) {
    mpq_class q(text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return Scalar(f, q, 0);
  }
  mpz_class z(text);
  std::uint32_t r =
      static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), f.p()));
  return Scalar(f, mpq_class(0), r);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p();
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("scalar fields differ: " + field_.str() + " vs " +
                        o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return Scalar(field_, q_ + o.q_, 0);
  return Scalar(field_, mpq_class(0), fp_add(r_, o.r_, field_.p()));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return Scalar(field_, q_ * o.q_, 0);
  return Scalar(field_, mpq_class(0), fp_mul(r_, o.r_, field_.p()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, -q_, 0);
  return Scalar(field_, mpq_class(0), fp_neg(r_, field_.p()));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("division by zero");
  if (field_.is_rational()) return Scalar(field_, 1 / q_, 0);
  return Scalar(field_, mpq_class(0), fp_inv(r_, field_.p()));
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return ::cmp(q_, o.q_);
  return r_ < o.r_ ? -1 : r_ > o.r_ ? 1 : 0;
}

std::string Scalar::str() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Vec vec_zero(const FieldSpec& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(-x);
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(c * x);
  return r;
}

int vec_cmp(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].cmp(b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace homquot
