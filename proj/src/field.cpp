#include "superkit/field.hpp"

#include <ostream>

namespace superkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::MixedParity: return "MixedParity";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotInDerived: return "NotInDerived";
    case ErrorKind::CenterNotZero: return "CenterNotZero";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotTripleDerivation: return "NotTripleDerivation";
    case ErrorKind::NotTripleHom: return "NotTripleHom";
    case ErrorKind::OddMapUnsupported: return "OddMapUnsupported";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SkewConflict: return "SkewConflict";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorKind::BadParams, "field characteristic " + std::to_string(p) +
                                          " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p_);
}

namespace {

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
  } else {
    long m = value % static_cast<long>(field_.p());
    if (m < 0) m += static_cast<long>(field_.p());
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint64_t den = reduce_mod(value.get_den(), field_.p());
  if (den == 0)
    throw Error(ErrorKind::DivisionByZero,
                "denominator vanishes in " + field_.to_string());
  r_ = reduce_mod(value.get_num(), field_.p()) * pow_mod(den, field_.p() - 2, field_.p()) %
       field_.p();
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "scalar '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error(ErrorKind::FieldMismatch,
                "arithmetic between " + field_.to_string() + " and " + rhs.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_rationals())
    out.q_ = -q_;
  else
    out.r_ = r_ == 0 ? 0 : field_.p() - r_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same(rhs);
  if (field_.is_rationals())
    q_ += rhs.q_;
  else
    r_ = (r_ + rhs.r_) % field_.p();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same(rhs);
  if (field_.is_rationals())
    q_ -= rhs.q_;
  else
    r_ = (r_ + field_.p() - rhs.r_) % field_.p();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same(rhs);
  if (field_.is_rationals())
    q_ *= rhs.q_;
  else
    r_ = r_ * rhs.r_ % field_.p();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out(*this);
  if (field_.is_rationals())
    out.q_ = 1 / q_;
  else
    out.r_ = pow_mod(r_, field_.p() - 2, field_.p());
  return out;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (field_.is_rationals()) {
    if (a.q_ == 0 || b.q_ == 0) return;
    q_ += a.q_ * b.q_;
  } else {
    r_ = (r_ + a.r_ * b.r_) % field_.p();
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rationals()) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace superkit
