#include "entwine/field.hpp"

#include <charconv>
#include <cstdint>
#include <limits>

#include "entwine/errors.hpp"

namespace entwine {

namespace {

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // a != 0, p prime < 2^32
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max())
    throw ParseError("characteristic " + std::to_string(p) + " exceeds 2^32");
  if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  f.p_ = p;
  return f;
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("Fp") || digits.starts_with("fp"))
    digits.remove_prefix(2);
  else if (digits.starts_with("F") || digits.starts_with("f"))
    digits.remove_prefix(1);
  else
    throw ParseError("unknown field '" + std::string(text) + "'");
  std::uint64_t p = 0;
  if (!parse_u64(digits, p)) throw ParseError("unknown field '" + std::string(text) + "'");
  return prime(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rationals())
    s.value_ = mpq_class(mpz_class(std::to_string(v)));
  else
    s.value_ = reduce_signed(v, f.characteristic());
  return s;
}

Scalar Scalar::from_fraction(const FieldSpec& f, long long num, long long den) {
  Scalar d = from_int(f, den);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes in " + f.to_string());
  return from_int(f, num) / d;
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rationals()) {
    Scalar s;
    s.field_ = f;
    mpq_class c = q;
    c.canonicalize();
    s.value_ = c;
    return s;
  }
  const std::uint64_t p = f.characteristic();
  mpz_class pz(std::to_string(p));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f.to_string());
  if (num < 0) num += pz;
  Scalar n, d;
  n.field_ = d.field_ = f;
  n.value_ = static_cast<std::uint64_t>(num.get_ui());
  d.value_ = static_cast<std::uint64_t>(den.get_ui());
  return n / d;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  const std::string shown(text);
  if (f.is_prime_field()) {
    std::uint64_t r = 0;
    if (!parse_u64(text, r) || !all_digits(text))
      throw ParseError("'" + shown + "' is not a decimal residue");
    if (r >= f.characteristic())
      throw ParseError("residue " + shown + " out of range for " + f.to_string());
    Scalar s;
    s.field_ = f;
    s.value_ = r;
    return s;
  }
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("'" + shown + "' is not a rational");
  }
  std::string_view mag = num;
  if (mag.starts_with("-")) mag.remove_prefix(1);
  if (!all_digits(mag)) throw ParseError("'" + shown + "' is not a rational");
  mpz_class n(std::string(num), 10);
  mpz_class d(den.empty() ? std::string("1") : std::string(den), 10);
  if (d == 0) throw ParseError("'" + shown + "' has zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  if (q.get_den() != d) throw ParseError("'" + shown + "' is not in lowest terms");
  if (mag.size() > 1 && mag.front() == '0') throw ParseError("'" + shown + "' has leading zeros");
  if (num == "-0") throw ParseError("'" + shown + "' has a negative zero");
  Scalar s;
  s.field_ = f;
  s.value_ = q;
  return s;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue());
  const mpq_class& q = rational();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return residue() == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return residue() == 1;
  return rational() == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch(field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_prime_field()) {
    std::uint64_t r = residue();
    s.value_ = r == 0 ? 0 : field_.characteristic() - r;
  } else {
    s.value_ = mpq_class(-rational());
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar s = *this;
  if (field_.is_prime_field())
    s.value_ = inverse_mod(residue(), field_.characteristic());
  else
    s.value_ = mpq_class(1 / rational());
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field())
    value_ = (residue() + o.residue()) % field_.characteristic();
  else
    std::get<mpq_class>(value_) += o.rational();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    const std::uint64_t p = field_.characteristic();
    value_ = (residue() + p - o.residue()) % p;
  } else {
    std::get<mpq_class>(value_) -= o.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field())
    value_ = (residue() * o.residue()) % field_.characteristic();
  else
    std::get<mpq_class>(value_) *= o.rational();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

}  // namespace entwine
