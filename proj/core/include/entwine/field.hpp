#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace entwine {

// Either the rationals or a prime field F_p. Construct through the factory
// functions; prime() rejects non-prime characteristics.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }
  // 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;  // "Q" or "F<p>"
  // Accepts "Q" or "F<p>" (also "Fp<p>").
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// An exact element of a FieldSpec. Rationals are kept reduced with positive
// denominator and residues in [0, p), so equality is structural.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long long v);
  // Throws DivisionByZero when den is zero, or when den vanishes in F_p.
  static Scalar from_fraction(const FieldSpec& f, long long num, long long den);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);

  // "n", "-n" or "n/d" over Q (reduced, d > 1); a decimal residue in
  // [0, p) over F_p. Throws ParseError otherwise.
  static Scalar parse(const FieldSpec& f, std::string_view text);
  std::string to_string() const;

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Only valid for the matching kind of field.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero on zero
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace entwine
