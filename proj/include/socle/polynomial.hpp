#pragma once

#include <utility>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

struct Term {
  Scalar c;
  Monomial m;
};

/// Sparse multivariate polynomial. Terms are kept strictly descending under
/// the order tag carried by the polynomial (the ring default unless resorted),
/// with no zero coefficients and no duplicate monomials. Binary operations
/// require both operands to share ring and order.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, Scalar c, Monomial m);
  /// Sorts, merges duplicate monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> ts, MonomialOrder ord);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Leading data under the stored order; error on the zero polynomial.
  const Scalar& lead_coeff() const;
  const Monomial& lead_monomial() const;

  long long degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  /// Divides every term by c*m; error unless each term is divisible.
  Polynomial exact_div_term(const Scalar& c, const Monomial& m) const;
  Polynomial monic() const;

  /// Same polynomial with terms re-sorted under another order.
  Polynomial resorted(const MonomialOrder& ord) const;

  /// Image under a variable-index map into another ring over the same field;
  /// map[i] gives the target index of variable i.
  Polynomial mapped(const RingPtr& target, const std::vector<std::size_t>& map) const;

  /// Substitute polynomial `value` for variable i.
  Polynomial substituted(std::size_t i, const Polynomial& value) const;

  /// Truncate away all terms of total degree >= bound.
  Polynomial truncated_below_degree(std::uint32_t bound) const;

  /// Semantic equality (independent of the order tags).
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;

private:
  void normalize();

  RingPtr ring_;
  MonomialOrder ord_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;
};

/// Leading term of f under an arbitrary order, without resorting.
std::pair<Scalar, Monomial> leading_term(const Polynomial& f, const MonomialOrder& ord);

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace socle
