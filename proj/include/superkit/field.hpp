#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "superkit/error.hpp"

namespace superkit {

/// Base field of an algebra: the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws BadParams unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  std::uint64_t characteristic() const { return is_rationals() ? 0 : p_; }

  /// True iff 2 is invertible, i.e. 1/2 lies in the base ring.
  bool has_half() const { return is_rationals() || p_ != 2; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept reduced with a positive
/// denominator, residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }
  /// Parses "a", "a/b" (and "-a/b"); over F_p the value is reduced mod p.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rationals only.
  const mpq_class& rational() const { return q_; }
  /// Prime field only.
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  /// this += a * b, without a temporary.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "a" or "a/b" over Q, "k" over F_p.
  std::string to_string() const;

 private:
  void check_same(const Scalar& rhs) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^(a*b) for parities a, b in {0, 1}.
inline int sign_of(int a, int b) { return (a & b) ? -1 : 1; }

}  // namespace superkit
