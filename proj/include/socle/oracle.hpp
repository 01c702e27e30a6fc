#pragma once

#include <vector>

#include "socle/invariants.hpp"
#include "socle/linalg.hpp"
#include "socle/presentation.hpp"

namespace socle {

/// Finite dimensional model of an Artinian quotient: the standard monomial
/// basis of the reduced GB together with the matrices of multiplication by
/// each variable. Everything downstream is plain exact linear algebra, fully
/// independent of the resolution and series machinery.
struct ArtinianModel {
  RingPtr ring;
  std::vector<Monomial> basis;  // ascending in the ring order; basis[0] = 1
  std::size_t dimension = 0;
  std::vector<Matrix> mult;  // one multiplication map per variable
  /// Column bases of m ⊇ m² ⊇ …, ending with the first zero power.
  std::vector<Matrix> powers;

  std::size_t power_dim(std::size_t k) const {  // dim m^k, any k >= 1
    return k - 1 < powers.size() ? powers[k - 1].cols : 0;
  }
};

/// Model of a validated zero dimensional algebra.
ArtinianModel build_model(const LocalAlgebra& a);

/// dim of the annihilator of m: the common null space of the variable maps.
std::size_t socle_dim(const ArtinianModel& m);

/// dim H₁ of the Koszul complex on a minimal generating set of m, selected
/// from the variables by rank against m².
std::size_t koszul_h1_dim(const ArtinianModel& m);

/// The whole invariant vector by matrix ranks alone. flat_certificate is left
/// empty; certificates are not the oracle's business.
InvariantReport oracle_report(const ArtinianModel& m);

/// Freeness count over an Artinian base: dim A = dim(A/m_R A) · dim R.
bool oracle_flatness(const AlgebraPresentation& a);

}  // namespace socle
