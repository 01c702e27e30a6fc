#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socle/invariants.hpp"

namespace socle {

/// One side of a checked identity: a (possibly infinite) natural number or a
/// boolean, never mixed within a single check.
struct CheckValue {
  enum class Kind : std::uint8_t { number, boolean };
  Kind kind = Kind::number;
  ExtendedNat num;
  bool flag = false;

  static CheckValue of(std::size_t n) { return {Kind::number, ExtendedNat::of(n), false}; }
  static CheckValue of(ExtendedNat n) { return {Kind::number, n, false}; }
  static CheckValue of_bool(bool b) { return {Kind::boolean, {}, b}; }

  bool operator==(const CheckValue&) const = default;
  std::string str() const;
};

/// Outcome of instantiating one identity on concrete data: both sides
/// evaluated independently, pass iff they agree exactly. The operand snapshot
/// (names plus reports) travels with the result; a failing check additionally
/// carries a reproduction bundle with the presentations and the seed.
struct TheoremCheckResult {
  std::string theorem;
  CheckValue lhs;
  CheckValue rhs;
  bool pass = false;
  std::string operands;  // JSON object {"R":..., "A":..., "B":...}
  std::string bundle;    // empty unless the check failed

  std::string str() const;   // "cid: lhs 2 rhs 2 PASS"
  std::string json() const;  // {theorem, lhs, rhs, pass, operands}
};

enum class FlatSide : std::uint8_t { a, b, both };

const char* flat_side_name(FlatSide s);

/// A tensor product A (x)_R B together with everything the identity checks
/// consume: validated factors, the validated product, flatness certificates
/// for whichever factors admit one, and invariant reports for all four rings
/// (the base report is the zero report of the prime field when R is a field).
/// Closed-fiber reports A/nA resp. B/nB are kept for the certified sides.
struct TensorSetup {
  LocalAlgebra a;
  LocalAlgebra b;
  LocalAlgebra product;
  FlatSide flat_side = FlatSide::a;
  std::optional<FlatnessCertificate> cert_a;
  std::optional<FlatnessCertificate> cert_b;
  InvariantReport report_r;
  InvariantReport report_a;
  InvariantReport report_b;
  InvariantReport report_product;
  std::optional<InvariantReport> fiber_a;  // report of A/nA when a is certified
  std::optional<InvariantReport> fiber_b;
  std::uint64_t seed = 0;
  std::string operands;  // shared snapshot JSON

  bool base_is_field() const { return a.pres.base.is_field(); }
  /// Formal smoothness over the base, through the two accepted certificates:
  /// a polynomial extension on a certified side, or a perfect prime field
  /// base. Anything else is out of reach here.
  bool smooth_certified() const;
};

/// Validate both factors over their common base, build and validate the
/// product, certify flatness (at least one factor must certify, else
/// CertificateMissing), and compute all reports. The seed feeds only the
/// random regular-sequence cuts inside the type computations.
TensorSetup make_setup(const AlgebraPresentation& a, const AlgebraPresentation& b,
                       std::uint64_t seed = 0);

// Tensor identities: lhs is the invariant of the product, rhs the stated
// combination of factor and base invariants. The fiber term of the dimension
// and depth formulas is identically zero here because every residue field is
// the prime field itself.
TheoremCheckResult check_dim(const TensorSetup& s);      // dim A + dim B - dim R
TheoremCheckResult check_depth(const TensorSetup& s);    // depth A + depth B - depth R
TheoremCheckResult check_codepth(const TensorSetup& s);  // codepth A + codepth B - codepth R
TheoremCheckResult check_cid(const TensorSetup& s);      // cid A + cid B - cid R

/// idd(A (x) B) against idd of the closed fiber of the certified side plus
/// idd of the other factor, in saturating infinity arithmetic.
TheoremCheckResult check_idd(const TensorSetup& s);

/// type(A (x) B) against type(A) * type(B) / type(R). The division must be
/// exact; a remainder is a genuine refutation and throws
/// DivisibilityViolation rather than reporting a failed comparison.
TheoremCheckResult check_type(const TensorSetup& s);

/// codim(A (x) B) = codim A + codim B - codim R, and the companion
/// embdim identity. Both demand the smooth certificate; CertificateMissing
/// otherwise.
TheoremCheckResult check_codim(const TensorSetup& s);
TheoremCheckResult check_embdim(const TensorSetup& s);

/// Every property biconditional, each as a boolean pair: the predicate on the
/// product against the stated combination on the factors (closed fiber on the
/// certified side where the statement uses it). Entries: cm, cm_codepth,
/// gorenstein, type_one, ci, ci_cid, aci, and (when smooth certified)
/// regular.
std::vector<TheoremCheckResult> check_equivalences(const TensorSetup& s);

// Flat-homomorphism checks on a single algebra over its base R:
// lambda(A) = lambda(R) + lambda(A/nA) for each additive invariant, and
// type(A) = type(R) * type(A/nA) with the type-one biconditional folded in.
enum class LambdaKind : std::uint8_t { dim, depth, codepth, cid, idd };

const char* lambda_kind_name(LambdaKind k);

TheoremCheckResult check_flat_lambda(LambdaKind kind, const LocalAlgebra& a,
                                     std::uint64_t seed = 0);
TheoremCheckResult check_flat_type(const LocalAlgebra& a, std::uint64_t seed = 0);

/// Nontriviality of A (x)_R B against contraction equality of a user-supplied
/// pair of candidate primes (generators listed in the ambient rings; empty
/// lists mean the zero ideal, so the contraction is of the defining ideal
/// itself). Over a field base the tensor product of nonzero algebras is never
/// zero and the contraction side is true by convention. Affine presentations
/// are welcome here.
TheoremCheckResult check_nontrivial(const AlgebraPresentation& a, const AlgebraPresentation& b,
                                    const std::vector<Polynomial>& prime_a = {},
                                    const std::vector<Polynomial>& prime_b = {});

/// Run the whole battery on a setup, in a fixed deterministic order. Filter
/// selects one family: all | dim | depth | codepth | idd | type | cid |
/// codim | equiv. The codim pair joins "all" only when the setup carries a
/// smooth certificate; asking for "codim" explicitly without one throws.
std::vector<TheoremCheckResult> run_checks(const TensorSetup& s, const std::string& filter = "all");

}  // namespace socle
