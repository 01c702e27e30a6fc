#include "socle/resolution.hpp"

#include "socle/errors.hpp"

namespace socle {

PolyMatrix PolyMatrix::zero(const RingPtr& ring, std::size_t rows, std::size_t cols) {
  PolyMatrix m;
  m.ring = ring;
  m.rows = rows;
  m.cols = cols;
  m.col.assign(cols, zero_vec(ring, rows));
  return m;
}

PolyMatrix PolyMatrix::from_columns(const RingPtr& ring, std::size_t rows,
                                    std::vector<PolyVec> columns) {
  PolyMatrix m;
  m.ring = ring;
  m.rows = rows;
  m.cols = columns.size();
  for (const auto& c : columns)
    if (c.rank() != rows)
      fail(ErrorCode::internal_error, "matrix column has the wrong length");
  m.col = std::move(columns);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& c : col)
    if (!c.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::times(const PolyMatrix& o) const {
  if (o.rows != cols) fail(ErrorCode::internal_error, "matrix shapes do not compose");
  PolyMatrix out = zero(ring, rows, o.cols);
  for (std::size_t j = 0; j < o.cols; ++j)
    for (std::size_t r = 0; r < rows; ++r) {
      Polynomial s = Polynomial::zero(ring);
      for (std::size_t k = 0; k < cols; ++k) s = s + at(r, k) * o.at(k, j);
      out.at(r, j) = std::move(s);
    }
  return out;
}

std::string PolyMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows; ++r) {
    s += "[ ";
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) s += ", ";
      s += at(r, c).str();
    }
    s += " ]\n";
  }
  return s;
}

namespace {

void erase_row(PolyMatrix& m, std::size_t r) {
  for (auto& c : m.col) c.c.erase(c.c.begin() + static_cast<std::ptrdiff_t>(r));
  --m.rows;
}

void erase_col(PolyMatrix& m, std::size_t c) {
  m.col.erase(m.col.begin() + static_cast<std::ptrdiff_t>(c));
  --m.cols;
}

/// Split off trivial summands: a unit entry at (r, c) makes basis element r
/// of the target redundant. Apply the complementary update to the other
/// entries, drop row r and column c, and (when given) drop column r of the
/// previous differential, whose image loses nothing.
void trim_units(PolyMatrix& d, PolyMatrix* prev) {
  for (;;) {
    std::size_t pr = d.rows, pc = d.cols;
    for (std::size_t r = 0; r < d.rows && pr == d.rows; ++r)
      for (std::size_t c = 0; c < d.cols; ++c)
        if (d.at(r, c).is_constant() && !d.at(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == d.rows) return;

    Scalar u_inv = d.at(pr, pc).lead_coeff().inverse();
    for (std::size_t b = 0; b < d.cols; ++b) {
      if (b == pc) continue;
      Polynomial factor = d.at(pr, b).scaled(u_inv);
      if (factor.is_zero()) continue;
      for (std::size_t a = 0; a < d.rows; ++a) {
        if (a == pr) continue;
        d.at(a, b) = d.at(a, b) - d.at(a, pc) * factor;
      }
    }
    erase_row(d, pr);
    erase_col(d, pc);
    if (prev) erase_col(*prev, pr);
  }
}

}  // namespace

FreeResolution minimal_resolution(PolyMatrix first) {
  const RingPtr ring = first.ring;
  if (!ring) fail(ErrorCode::internal_error, "resolution of a matrix without a ring");

  trim_units(first, nullptr);

  FreeResolution res;
  res.ring = ring;
  res.maps.push_back(std::move(first));

  for (;;) {
    PolyMatrix& cur = res.maps.back();
    if (cur.cols == 0) break;
    FreeSubmodule img{ring, cur.rows, cur.col};
    FreeSubmodule syz = syzygies(img);
    PolyMatrix d = PolyMatrix::from_columns(ring, cur.cols, std::move(syz.gens));
    trim_units(d, &cur);
    if (d.cols == 0) break;
    if (res.maps.size() > ring->nvars())
      fail(ErrorCode::internal_error, "resolution exceeds the global bound");
    res.maps.push_back(std::move(d));
  }

  res.betti.push_back(res.maps[0].rows);
  for (const auto& m : res.maps)
    if (m.cols > 0) res.betti.push_back(m.cols);
  return res;
}

FreeResolution cyclic_resolution(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<PolyVec> cols;
  for (const auto& g : gens)
    if (!g.is_zero()) cols.push_back(PolyVec{{g}});
  return minimal_resolution(PolyMatrix::from_columns(ring, 1, std::move(cols)));
}

}  // namespace socle
