#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace hbl {

/// The ground field: either the rationals or a prime field GF(p).
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws FieldError unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "gf:<p>".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator (GMP does
/// the canonicalization). Residues live in [0, p). A rational meets a residue
/// by mapping into GF(p), so integer constants such as 0 and 1 work in either
/// field; residues with different moduli never mix.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(long long n) : v_(mpq_class(static_cast<long>(n))) {}  // NOLINT(implicit)
  Scalar(int n) : Scalar(static_cast<long long>(n)) {}          // NOLINT(implicit)
  Scalar(long long num, long long den);
  explicit Scalar(mpq_class q);

  static Scalar residue(long long value, std::uint64_t p);
  /// Parses "p/q", "p", or (with a prime field) a residue written as an integer.
  static Scalar parse(const std::string& text, const Field& field = Field::rationals());

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  Field field() const;
  const mpq_class& rational() const;
  std::uint64_t residue_value() const;

  /// Image of this value in `f`. Rationals map into GF(p) when the denominator is a unit.
  Scalar in(const Field& f) const;

  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  explicit Scalar(Residue r) : v_(r) {}
  static Residue to_residue(const mpq_class& q, std::uint64_t p);
  static std::uint64_t common_modulus(const Scalar& a, const Scalar& b);
  // Value of `s` in GF(p); `p` must already be the modulus of one operand.
  static std::uint64_t residue_in(const Scalar& s, std::uint64_t p);

  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hbl
