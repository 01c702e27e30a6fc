#pragma once

#include <cstdint>
#include <string>

#include "socle/presentation.hpp"

namespace socle {

/// Natural number extended by +infinity. Addition saturates; comparison is
/// exact. Used for injective dimension, which is infinite off the Gorenstein
/// locus.
struct ExtendedNat {
  bool finite = true;
  std::uint64_t value = 0;

  static ExtendedNat inf() { return {false, 0}; }
  static ExtendedNat of(std::uint64_t v) { return {true, v}; }

  ExtendedNat operator+(const ExtendedNat& o) const {
    if (!finite || !o.finite) return inf();
    return of(value + o.value);
  }
  bool operator==(const ExtendedNat&) const = default;
  std::string str() const { return finite ? std::to_string(value) : "inf"; }
};

/// The full invariant vector of one local algebra. Every identity below is
/// asserted before a report is returned:
///   codepth = dim - depth >= 0
///   codim   = embdim - dim >= 0
///   epsilon2 = cid + codim = mu
///   cm <=> codepth = 0; gorenstein <=> cm and type = 1; ci <=> cid = 0;
///   regular <=> codim = 0; aci <=> cid = 1
///   regular => ci => gorenstein => cm
///   idd = depth if gorenstein, infinity otherwise
struct InvariantReport {
  std::size_t dim = 0;
  std::size_t depth = 0;
  std::size_t codepth = 0;
  std::size_t embdim = 0;
  std::size_t codim = 0;
  std::size_t mu = 0;
  std::size_t epsilon2 = 0;
  std::size_t cid = 0;
  std::size_t type = 1;
  ExtendedNat idd;
  bool cm = false;
  bool gorenstein = false;
  bool ci = false;
  bool regular = false;
  bool aci = false;
  std::string flat_certificate;  // certificate kind over the base, or "none"

  std::string json() const;
  std::string str() const;
};

/// Compute every invariant of a validated algebra. Deterministic given the
/// seed, which only feeds the random linear forms used to cut regular
/// sequences for the type computation.
InvariantReport report(const LocalAlgebra& a, std::uint64_t seed = 0);

/// Dimension of the annihilator of the maximal ideal in ring/J, as a vector
/// space over the field. J need not be zero dimensional; the socle of a
/// Noetherian quotient is finite dimensional regardless.
std::size_t socle_dimension(const Ideal& J);

}  // namespace socle
