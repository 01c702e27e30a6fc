#pragma once

#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// Element of a free module R^rank, stored densely by component.
struct PolyVec {
  std::vector<Polynomial> c;

  std::size_t rank() const { return c.size(); }
  bool is_zero() const;
  bool operator==(const PolyVec& o) const { return c == o.c; }
  std::string str() const;
};

PolyVec zero_vec(const RingPtr& ring, std::size_t rank);
PolyVec unit_vec(const RingPtr& ring, std::size_t rank, std::size_t comp);

/// Order on module terms (monomial, component). Components carry a block id
/// (lower block beats higher block outright) and a shift monomial; within a
/// block, terms compare by the base order applied to monomial*shift, ties
/// broken by lower component. Position-over-term puts every component in its
/// own block; a Schreyer order puts all components in one block shifted by
/// the lead monomials of the generators being resolved.
class ModuleOrder {
public:
  static ModuleOrder pot(MonomialOrder base, std::size_t rank);
  static ModuleOrder schreyer(MonomialOrder base, std::vector<Monomial> shifts);
  /// First `front` components form leading POT blocks, the remaining
  /// components one trailing block with the given shifts. Used to read
  /// syzygies off a kernel computation.
  static ModuleOrder graph(MonomialOrder base, std::size_t front, std::vector<Monomial> shifts);

  std::size_t rank() const { return block_.size(); }
  const MonomialOrder& base() const { return base_; }

  int compare(const Monomial& ma, std::size_t ca, const Monomial& mb, std::size_t cb) const;

private:
  ModuleOrder(MonomialOrder base, std::vector<int> block, std::vector<Monomial> shift)
      : base_(std::move(base)), block_(std::move(block)), shift_(std::move(shift)) {}

  MonomialOrder base_;
  std::vector<int> block_;
  std::vector<Monomial> shift_;
};

/// A finitely generated submodule of R^rank.
struct FreeSubmodule {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<PolyVec> gens;
};

/// Reduced module Groebner basis of the submodule under the given order.
std::vector<PolyVec> module_groebner(const FreeSubmodule& m, const ModuleOrder& ord);

/// Normal form against a module Groebner basis computed under ord.
PolyVec module_normal_form(const PolyVec& v, const std::vector<PolyVec>& gb,
                           const ModuleOrder& ord);

bool module_member(const PolyVec& v, const std::vector<PolyVec>& gb, const ModuleOrder& ord);

/// Generators of the kernel of R^s -> R^rank, e_i -> gens[i]. Computed from a
/// module Groebner basis of the graph submodule under an order that places
/// target components over coefficient components; coefficient components use
/// Schreyer shifts by the generators' lead monomials.
FreeSubmodule syzygies(const FreeSubmodule& m);

}  // namespace socle
