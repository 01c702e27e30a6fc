#include "socle/scalar.hpp"

#include "socle/errors.hpp"

namespace socle {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::ring_mismatch: return "ring mismatch";
    case ErrorCode::order_mismatch: return "order mismatch";
    case ErrorCode::zero_polynomial: return "zero polynomial";
    case ErrorCode::non_monomial_input: return "non-monomial input";
    case ErrorCode::division_not_exact: return "division not exact";
    case ErrorCode::non_homogeneous_relation: return "NonHomogeneousRelation";
    case ErrorCode::variable_not_nilpotent: return "VariableNotNilpotent";
    case ErrorCode::base_residue_not_prime_field: return "BaseResidueNotPrimeField";
    case ErrorCode::invalid_presentation: return "invalid presentation";
    case ErrorCode::not_artinian: return "NotArtinian";
    case ErrorCode::regular_sequence_not_found: return "RegularSequenceNotFound";
    case ErrorCode::negative_defect: return "NegativeDefect";
    case ErrorCode::certificate_missing: return "CertificateMissing";
    case ErrorCode::divisibility_violation: return "DivisibilityViolation";
    case ErrorCode::internal_error: return "internal error";
  }
  return "error";
}

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // a, b < 2^31 so the product fits
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) fail(ErrorCode::zero_polynomial, "inverse of zero residue");
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p))
    fail(ErrorCode::invalid_presentation, "field modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p};
}

std::string Field::str() const {
  return is_rationals() ? "Q" : "Fp " + std::to_string(p);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const Field& f) {
  if (f.is_rationals()) return Scalar(f, mpq_class(1), 0);
  return Scalar(f, mpq_class(0), f.p == 1 ? 0 : 1);
}

Scalar Scalar::of_int(const Field& f, long v) { return of_mpz(f, mpz_class(v)); }

Scalar Scalar::of_mpz(const Field& f, const mpz_class& v) {
  if (f.is_rationals()) return Scalar(f, mpq_class(v), 0);
  mpz_class m = v % f.p;
  if (m < 0) m += f.p;
  return Scalar(f, mpq_class(0), m.get_ui());
}

Scalar Scalar::of_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorCode::parse_error, "zero denominator");
  if (f.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q), 0);
  }
  return of_mpz(f, num) / of_mpz(f, den);
}

Scalar Scalar::of_mpq(mpq_class q) {
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q), 0);
}

bool Scalar::is_zero() const {
  return f_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return f_.is_rationals() ? q_ == 1 : r_ == 1;
}

int Scalar::sign() const {
  if (f_.is_rationals()) return sgn(q_);
  return r_ == 0 ? 0 : 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(f_ == o.f_)) fail(ErrorCode::ring_mismatch, "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (f_.is_rationals()) return Scalar(f_, q_ + o.q_, 0);
  return Scalar(f_, mpq_class(0), addmod(r_, o.r_, f_.p));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (f_.is_rationals()) return Scalar(f_, q_ - o.q_, 0);
  return Scalar(f_, mpq_class(0), submod(r_, o.r_, f_.p));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (f_.is_rationals()) return Scalar(f_, q_ * o.q_, 0);
  return Scalar(f_, mpq_class(0), mulmod(r_, o.r_, f_.p));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (f_.is_rationals()) return Scalar(f_, -q_, 0);
  return Scalar(f_, mpq_class(0), r_ == 0 ? 0 : f_.p - r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::zero_polynomial, "inverse of zero scalar");
  if (f_.is_rationals()) return Scalar(f_, 1 / q_, 0);
  return Scalar(f_, mpq_class(0), invmod(r_, f_.p));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  return f_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

}  // namespace socle
