#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace reisner {

/// Thrown when a randomized search for generic data exhausts its attempt
/// budget (the failure locus is Zariski-closed, so this signals that the
/// coefficient field is too small rather than a bug).
class GenericityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_prime(long long n);

/// Coefficient field: the rationals (characteristic 0) or a prime field
/// F_p with p < 2^31.  Construction validates primality.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(long long p);

  long long characteristic() const { return ch_; }
  bool is_rational() const { return ch_ == 0; }

  bool operator==(const FieldSpec& o) const { return ch_ == o.ch_; }
  bool operator!=(const FieldSpec& o) const { return ch_ != o.ch_; }

  std::string str() const;

private:
  explicit FieldSpec(long long ch) : ch_(ch) {}
  long long ch_;
};

// Modular arithmetic on residues in [0, p).  p < 2^31 keeps products in
// range for 64-bit intermediates.
namespace fp {

inline long long normalize(long long x, long long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

inline long long add(long long a, long long b, long long p) {
  long long s = a + b;
  return s >= p ? s - p : s;
}

inline long long sub(long long a, long long b, long long p) {
  long long s = a - b;
  return s < 0 ? s + p : s;
}

inline long long mul(long long a, long long b, long long p) {
  return (a * b) % p;
}

long long inv(long long a, long long p);

}  // namespace fp

/// One field element.  Residues are reduced to [0, p); rationals are kept
/// in lowest terms with positive denominator (GMP canonical form).
class Scalar {
public:
  Scalar(FieldSpec field, long long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;

  /// Residue in [0, p); only valid over a prime field.
  long long residue() const;
  /// Canonical rational value; only valid over the rationals.
  const mpq_class& rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  long long residue_ = 0;  // used when field_ is F_p
  mpq_class rational_;     // used when field_ is QQ
};

}  // namespace reisner
