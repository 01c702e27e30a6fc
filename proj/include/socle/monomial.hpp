#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace socle {

/// A power product, stored as an exponent vector with a cached total degree.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1);

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Componentwise difference; requires this->divides(o) == false is an error
  /// the other way round: computes o / this.
  Monomial quotient_of(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& vars) const;

private:
  std::vector<std::uint32_t> e_;
  std::uint32_t deg_ = 0;
};

/// Term order on monomials of a fixed ring. Graded reverse lexicographic is
/// the default everywhere; lex and a block elimination order are available for
/// the operations that need them. An elimination order sorts first by the
/// eliminated block (grevlex within it), then by the kept block, so a leading
/// term free of eliminated variables certifies the whole polynomial is.
class MonomialOrder {
public:
  enum class Kind : std::uint8_t { grevlex, lex, elim };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  static MonomialOrder elim(std::vector<std::uint8_t> eliminated);

  Kind kind() const { return kind_; }
  const std::vector<std::uint8_t>& eliminated() const { return elim_; }

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && elim_ == o.elim_;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  std::string str() const;

private:
  MonomialOrder(Kind k, std::vector<std::uint8_t> e) : kind_(k), elim_(std::move(e)) {}

  Kind kind_;
  std::vector<std::uint8_t> elim_;
};

}  // namespace socle
