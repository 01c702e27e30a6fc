#pragma once

#include <memory>
#include <string>
#include <vector>

#include "socle/groebner.hpp"

namespace socle {

struct AlgebraPresentation;

enum class Mode : std::uint8_t { graded, local, affine };

const char* mode_name(Mode m);

/// What an algebra sits over: a prime field, or a fixed quotient algebra
/// presented over a prime field (nesting stops there).
struct BaseDescriptor {
  Field field;
  std::shared_ptr<const AlgebraPresentation> algebra;  // null = field base

  static BaseDescriptor prime_field(Field f);
  static BaseDescriptor over(AlgebraPresentation base);

  bool is_field() const { return algebra == nullptr; }
  std::size_t nvars() const;
  const std::vector<std::string>& vars() const;
  std::string str() const;
};

bool same_base(const BaseDescriptor& a, const BaseDescriptor& b);

/// A finitely presented algebra over a base: the quotient of
/// field[base vars..., own vars...] by a relation ideal containing the base's
/// relations. The relation list always starts with the base relations, so the
/// base embeds by variable inclusion.
struct AlgebraPresentation {
  std::string name;
  BaseDescriptor base;
  std::vector<std::string> own_vars;
  RingPtr ring;
  std::vector<Polynomial> relations;
  std::size_t base_relation_count = 0;
  Mode mode = Mode::graded;

  /// Front door: relation texts are parsed in the assembled ambient ring, so
  /// they may use base variables freely. Zero relations are dropped.
  static AlgebraPresentation make(std::string name, BaseDescriptor base,
                                  std::vector<std::string> own_vars,
                                  const std::vector<std::string>& relation_texts,
                                  Mode mode);

  std::size_t nbase_vars() const { return base.nvars(); }
  Ideal relation_ideal() const { return Ideal{ring, relations}; }
  std::vector<Polynomial> own_relations() const;
  std::string str() const;
};

/// A presentation viewed at its irrelevant maximal ideal (all variables),
/// carrying the reduced Groebner basis of the relation ideal.
struct LocalAlgebra {
  AlgebraPresentation pres;
  GroebnerBasis gb;
};

/// Check the mode invariant and localize. Graded mode demands homogeneous
/// relations; local mode demands every variable nilpotent modulo the
/// relations, certified by a power membership at exponent one past the
/// vector-space dimension of the quotient.
LocalAlgebra validate(const AlgebraPresentation& p);

/// Eliminate variables along relations with a nonzero linear part, leaving
/// every relation inside the square of the maximal ideal. The result presents
/// an isomorphic local ring; the surviving variable count is the embedding
/// dimension. When nothing can be eliminated the input comes back untouched;
/// otherwise the result sits over the prime field, since a change of
/// coordinates does not respect the base structure.
AlgebraPresentation minimalize(const AlgebraPresentation& p);

/// A (x) B over the common base: variables are base vars + a's + b's (b's
/// renamed with _2, _3, ... on collision), relations are the union with the
/// base relations identified. Graded if both factors are graded, local if
/// both are local, affine otherwise.
AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Whether the presented ring is zero, i.e. 1 lies in the relation ideal.
bool tensor_is_trivial(const AlgebraPresentation& p);

/// Contraction (q + relations) intersected with the base polynomial ring,
/// returned as an ideal over a fresh ring on the base variables alone.
Ideal contract_to_base(const AlgebraPresentation& p, const std::vector<Polynomial>& q);

struct Tor1Result {
  bool zero = true;
  std::string witness;  // printable representative of a nonzero class
};

/// Tor_1 over the base with values in the residue field of the base, from
/// the start of the free resolution of that residue field: the kernel of
/// multiplication by the base variables on A, compared against the image of
/// the base's own syzygies. Zero iff A is flat over the base (local
/// criterion; valid in graded and local modes). Field bases are flat
/// outright.
Tor1Result tor1_over_base(const AlgebraPresentation& a);

/// min(dim(A/p), dim(B/q)) for user-asserted primes p, q given by generators
/// in the ambient rings; matches the transcendence-degree formula for the
/// residue fields when p and q are prime.
std::size_t fiber_dim(const AlgebraPresentation& a, const std::vector<Polynomial>& p,
                      const AlgebraPresentation& b, const std::vector<Polynomial>& q);

/// The closed fiber A/(base variables)A, presented over the prime field on
/// a's own variables. Mode is preserved.
AlgebraPresentation quotient_mod_base(const AlgebraPresentation& a);

enum class FlatKind : std::uint8_t {
  field_base,
  polynomial_extension,
  tor1_vanishes,
  user_asserted,
};

const char* flat_kind_name(FlatKind k);

struct FlatnessCertificate {
  FlatKind kind;
  std::string note;
};

/// Certify that a is flat over its base. Tries the structural criteria first:
/// field base, then polynomial extension (every relation already lies in the
/// extended base ideal). Falls back to the Tor_1 computation, unless
/// assert_flat is set, in which case an unchecked user assertion is recorded
/// instead. Throws CertificateMissing when nothing applies or Tor_1 refutes
/// flatness.
FlatnessCertificate certify_flatness(const AlgebraPresentation& a, bool assert_flat = false);

}  // namespace socle
