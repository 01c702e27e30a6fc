#pragma once

#include <vector>

#include "socle/freemodule.hpp"

namespace socle {

/// Column major polynomial matrix, viewed as a map R^cols -> R^rows taking
/// basis vector j to column j.
struct PolyMatrix {
  RingPtr ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<PolyVec> col;

  static PolyMatrix zero(const RingPtr& ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(const RingPtr& ring, std::size_t rows,
                                 std::vector<PolyVec> columns);

  const Polynomial& at(std::size_t r, std::size_t c) const { return col[c].c[r]; }
  Polynomial& at(std::size_t r, std::size_t c) { return col[c].c[r]; }
  bool is_zero() const;
  /// Matrix of the composite this ∘ o (o's columns pushed through this).
  PolyMatrix times(const PolyMatrix& o) const;
  std::string str() const;
};

/// Minimal free resolution 0 -> F_p -> ... -> F_1 -> F_0 of the cokernel of
/// a matrix. maps[k] is the differential F_{k+1} -> F_k; betti[k] the rank of
/// F_k; betti never ends in a zero except for the zero module itself.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::size_t> betti;
  std::vector<PolyMatrix> maps;

  std::size_t pd() const { return betti.size() - 1; }
};

/// Minimal free resolution of coker(first). Input columns need not be
/// minimal generators: a redundant generator shows up as a unit entry in the
/// next syzygy matrix and is trimmed away. For the trimmed resolution to be
/// minimal the input must be graded (all entries homogeneous); otherwise the
/// result is still a resolution but minimality is not guaranteed.
FreeResolution minimal_resolution(PolyMatrix first);

/// Resolution of R/(gens) as a cyclic module.
FreeResolution cyclic_resolution(const RingPtr& ring, const std::vector<Polynomial>& gens);

}  // namespace socle
