#pragma once

#include <vector>

#include "socle/freemodule.hpp"
#include "socle/polynomial.hpp"

namespace socle {

/// An ideal of a polynomial ring, given by a finite generating set.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  std::string str() const;
};

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by the lead of another, sorted ascending by lead monomial. Unique for a
/// given ideal and order, so two ideals are equal iff their bases match.
class GroebnerBasis {
public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Polynomial> elems)
      : ring_(std::move(ring)), ord_(std::move(ord)), elems_(std::move(elems)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Polynomial>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  /// Remainder of f on full division by the basis. Zero iff f lies in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// Whether the ideal is the whole ring.
  bool is_trivial() const;
  std::vector<Monomial> lead_monomials() const;

private:
  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<Polynomial> elems_;
};

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord);
GroebnerBasis buchberger(const Ideal& I);

/// f = sum quotients[i] * divisors[i] + remainder, no remainder term
/// divisible by any divisor lead.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                const MonomialOrder& ord);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
Ideal ideal_colon(const Ideal& a, const Ideal& b);
/// Generators of a ∩ k[kept variables], expressed in the same ring.
/// keep[i] != 0 retains variable i; keep must have one entry per variable.
Ideal ideal_eliminate(const Ideal& a, const std::vector<std::uint8_t>& keep);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_member(const Polynomial& f, const Ideal& I);

bool poly_uses_var(const Polynomial& f, std::size_t i);

}  // namespace socle
