#include "reisner/field.hpp"

namespace reisner {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(long long p) {
  if (p < 2 || p >= (1LL << 31) || !is_prime(p)) {
    throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime < 2^31, got " +
                                std::to_string(p));
  }
  return FieldSpec(p);
}

std::string FieldSpec::str() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(ch_) + ")";
}

namespace fp {

long long inv(long long a, long long p) {
  a = normalize(a, p);
  if (a == 0) throw std::domain_error("fp::inv: division by zero");
  // extended Euclid on (a, p)
  long long r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return normalize(s0, p);
}

}  // namespace fp

Scalar::Scalar(FieldSpec field, long long value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = mpq_class(static_cast<long>(value));
  } else {
    residue_ = fp::normalize(value, field_.characteristic());
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
  } else {
    const long long p = field_.characteristic();
    const mpz_class pz = static_cast<long>(p);
    const mpz_class den = value.get_den() % pz;
    const mpz_class num = value.get_num() % pz;
    const long long d = fp::normalize(den.get_si(), p);
    const long long n = fp::normalize(num.get_si(), p);
    if (d == 0) throw std::domain_error("Scalar: denominator vanishes mod p");
    residue_ = fp::mul(n, fp::inv(d, p), p);
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rational_ == 0 : residue_ == 0;
}

long long Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("Scalar::residue over QQ");
  return residue_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("Scalar::rational over F_p");
  return rational_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw std::invalid_argument("Scalar: mixed fields " + field_.str() + " and " + o.field_.str());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rational_ + o.rational_));
  return Scalar(field_, fp::add(residue_, o.residue_, field_.characteristic()));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rational_ - o.rational_));
  return Scalar(field_, fp::sub(residue_, o.residue_, field_.characteristic()));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rational_ * o.rational_));
  return Scalar(field_, fp::mul(residue_, o.residue_, field_.characteristic()));
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational_));
  return Scalar(field_, fp::sub(0, residue_, field_.characteristic()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational_));
  return Scalar(field_, fp::inv(residue_, field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rational_ == o.rational_ : residue_ == o.residue_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

}  // namespace reisner
