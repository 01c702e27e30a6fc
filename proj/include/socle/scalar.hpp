#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace socle {

/// Coefficient field: the rationals, or a prime field F_p with p < 2^31.
struct Field {
  enum class Kind : std::uint8_t { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return kind == Kind::rationals; }
  bool is_prime() const { return kind == Kind::prime; }
  bool operator==(const Field&) const = default;
  std::string str() const;
};

/// An element of a coefficient field. Rationals are kept reduced with a
/// positive denominator (mpq canonical form); prime-field residues lie in
/// [0, p). Arithmetic between scalars of different fields is an error.
class Scalar {
public:
  Scalar() : f_(Field::rationals()), q_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long v);
  static Scalar of_mpz(const Field& f, const mpz_class& v);
  static Scalar of_fraction(const Field& f, const mpz_class& num, const mpz_class& den);
  static Scalar of_mpq(mpq_class q);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Rational value; valid only over the rationals.
  const mpq_class& rat() const { return q_; }
  /// Residue value in [0, p); valid only over a prime field.
  std::uint64_t res() const { return r_; }

  std::string str() const;

private:
  Scalar(const Field& f, mpq_class q, std::uint64_t r) : f_(f), q_(std::move(q)), r_(r) {}
  void check_same_field(const Scalar& o) const;

  Field f_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace socle
