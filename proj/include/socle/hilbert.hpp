#pragma once

#include <gmpxx.h>

#include <vector>

#include "socle/groebner.hpp"

namespace socle {

/// Hilbert series of a graded quotient R/I, stored as an integer numerator
/// over (1 - T)^nvars. The zero ring (trivial ideal) has numerator 0; all
/// accessors treat it as the zero series.
class HilbertSeries {
public:
  HilbertSeries(std::vector<mpz_class> numerator, std::size_t nvars);

  const std::vector<mpz_class>& numerator() const { return num_; }
  std::size_t nvars() const { return nvars_; }

  /// Order of the pole at T = 1; equals the Krull dimension of the quotient.
  std::size_t pole_order() const;
  /// Numerator after cancelling every common factor of (1 - T); the series
  /// is reduced_numerator / (1 - T)^pole_order.
  std::vector<mpz_class> reduced_numerator() const;
  /// Coefficient of T^d in the power series expansion, i.e. the vector space
  /// dimension of the degree d piece.
  mpz_class coefficient(std::uint32_t d) const;
  bool is_polynomial() const { return pole_order() == 0; }
  /// Sum of all coefficients; error unless the series is a polynomial.
  mpz_class total_dimension() const;

  std::string str() const;

private:
  std::vector<mpz_class> num_;
  std::size_t nvars_;
};

/// Series of R/I read off the lead terms of a Groebner basis of I.
HilbertSeries hilbert_series(const GroebnerBasis& gb);
HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> lead, std::size_t nvars);

/// Krull dimension of R/I from the lead terms of a Groebner basis: nvars
/// minus a minimum variable cover of the lead supports. Error on the whole
/// ring (some lead is 1).
std::size_t krull_dim_monomial(const std::vector<Monomial>& lead, std::size_t nvars);

/// Drop every monomial divisible by another in the list (and duplicates).
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms);

}  // namespace socle
