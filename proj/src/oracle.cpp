#include "socle/oracle.hpp"

#include <algorithm>

#include "socle/errors.hpp"
#include "socle/groebner.hpp"
#include "socle/hilbert.hpp"

namespace socle {

namespace {

Matrix element_column(const ArtinianModel& m, const Polynomial& nf) {
  Matrix col = Matrix::zero(m.ring->field, m.dimension, 1);
  for (const Term& t : nf.terms()) {
    auto it = std::find(m.basis.begin(), m.basis.end(), t.m);
    if (it == m.basis.end())
      fail(ErrorCode::internal_error, "normal form leaves the standard basis");
    col.at(static_cast<std::size_t>(it - m.basis.begin()), 0) = t.c;
  }
  return col;
}

}  // namespace

ArtinianModel build_model(const LocalAlgebra& a) {
  ArtinianModel m;
  m.ring = a.pres.ring;
  std::size_t n = m.ring->nvars();
  const GroebnerBasis& gb = a.gb;
  std::vector<Monomial> lead = gb.lead_monomials();
  if (n > 0 && (lead.empty() || krull_dim_monomial(lead, n) != 0))
    fail(ErrorCode::not_artinian, a.pres.name + " has positive Krull dimension");

  // walk the standard monomials: closed downward, so children of members
  // cover everything
  std::vector<Monomial> queue{Monomial::one(n)};
  std::vector<Monomial> seen;
  while (!queue.empty()) {
    Monomial cur = queue.back();
    queue.pop_back();
    if (std::find(seen.begin(), seen.end(), cur) != seen.end()) continue;
    bool standard = true;
    for (const Monomial& l : lead)
      if (l.divides(cur)) {
        standard = false;
        break;
      }
    if (!standard) continue;
    seen.push_back(cur);
    for (std::size_t i = 0; i < n; ++i)
      queue.push_back(cur.times(Monomial::var(n, i)));
  }
  std::sort(seen.begin(), seen.end(), [&](const Monomial& x, const Monomial& y) {
    return m.ring->order.less(x, y);
  });
  m.basis = std::move(seen);
  m.dimension = m.basis.size();
  if (m.dimension == 0 || !m.basis[0].is_one())
    fail(ErrorCode::internal_error, "standard basis lost the identity");
  mpz_class total = hilbert_series_of_monomials(lead, n).total_dimension();
  if (total != static_cast<long>(m.dimension))
    fail(ErrorCode::internal_error, "basis count disagrees with series total");

  for (std::size_t i = 0; i < n; ++i) {
    Matrix M = Matrix::zero(m.ring->field, m.dimension, m.dimension);
    for (std::size_t j = 0; j < m.dimension; ++j) {
      Polynomial prod = Polynomial::term(m.ring, Scalar::one(m.ring->field),
                                         m.basis[j].times(Monomial::var(n, i)));
      Matrix col = element_column(m, gb.normal_form(prod));
      for (std::size_t r = 0; r < m.dimension; ++r) M.at(r, j) = col.at(r, 0);
    }
    m.mult.push_back(std::move(M));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m.mult[i].times(m.mult[j]) == m.mult[j].times(m.mult[i])))
        fail(ErrorCode::internal_error, "multiplication maps fail to commute");

  // m itself is the span of the non identity basis monomials; push forward
  // by the variable maps for each deeper power
  Matrix cur = Matrix::zero(m.ring->field, m.dimension, m.dimension - 1);
  for (std::size_t j = 1; j < m.dimension; ++j)
    cur.at(j, j - 1) = Scalar::one(m.ring->field);
  for (;;) {
    m.powers.push_back(cur);
    if (cur.cols == 0) break;
    Matrix span = Matrix::zero(m.ring->field, m.dimension, 0);
    for (std::size_t i = 0; i < n; ++i) span = hstack(span, m.mult[i].times(cur));
    Matrix next = column_basis(span);
    if (next.cols >= cur.cols)
      fail(ErrorCode::internal_error, "radical filtration fails to shrink");
    cur = std::move(next);
  }
  return m;
}

std::size_t socle_dim(const ArtinianModel& m) {
  Matrix stack = Matrix::zero(m.ring->field, 0, m.dimension);
  for (const Matrix& M : m.mult) stack = vstack(stack, M);
  return m.dimension - rank(stack);
}

std::size_t koszul_h1_dim(const ArtinianModel& m) {
  std::size_t n = m.mult.size();
  std::size_t D = m.dimension;
  const Field& f = m.ring->field;

  // pick variables whose images form a basis of m/m²
  Matrix sel_cols = m.power_dim(2) > 0 ? m.powers[1] : Matrix::zero(f, D, 0);
  std::size_t r0 = rank(sel_cols);
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix one = Matrix::zero(f, D, 1);
    one.at(0, 0) = Scalar::one(f);
    Matrix img = m.mult[i].times(one);
    Matrix ext = hstack(sel_cols, img);
    if (rank(ext) > r0) {
      sel_cols = std::move(ext);
      ++r0;
      gens.push_back(i);
    }
  }
  std::size_t e = gens.size();
  if (e == 0) return 0;

  Matrix d1 = Matrix::zero(f, D, e * D);
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) d1.at(i, k * D + j) = m.mult[gens[k]].at(i, j);

  std::size_t pairs = e * (e - 1) / 2;
  Matrix d2 = Matrix::zero(f, e * D, pairs * D);
  std::size_t pc = 0;
  for (std::size_t p = 0; p < e; ++p)
    for (std::size_t q = p + 1; q < e; ++q) {
      // e_p ∧ e_q goes to v_p e_q − v_q e_p
      for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
          d2.at(q * D + i, pc * D + j) = m.mult[gens[p]].at(i, j);
          d2.at(p * D + i, pc * D + j) = -m.mult[gens[q]].at(i, j);
        }
      ++pc;
    }
  std::size_t nullity = e * D - rank(d1);
  return nullity - rank(d2);
}

InvariantReport oracle_report(const ArtinianModel& m) {
  InvariantReport r;
  r.dim = 0;
  r.depth = 0;
  r.codepth = 0;
  r.embdim = m.power_dim(1) - m.power_dim(2);
  r.codim = r.embdim;
  r.mu = koszul_h1_dim(m);
  r.epsilon2 = r.mu;
  if (r.mu < r.embdim)
    fail(ErrorCode::negative_defect, "Koszul count below embedding dimension");
  r.cid = r.mu - r.embdim;
  r.type = socle_dim(m);
  r.cm = true;
  r.gorenstein = r.type == 1;
  r.ci = r.cid == 0;
  r.regular = r.codim == 0;
  r.aci = r.cid == 1;
  r.idd = r.gorenstein ? ExtendedNat::of(0) : ExtendedNat::inf();
  r.flat_certificate = "";
  return r;
}

bool oracle_flatness(const AlgebraPresentation& a) {
  std::size_t dimA = build_model(validate(a)).dimension;
  if (a.base.is_field()) return true;
  std::size_t dimR = build_model(validate(*a.base.algebra)).dimension;
  std::size_t dimF = build_model(validate(quotient_mod_base(a))).dimension;
  return dimA == dimF * dimR;
}

}  // namespace socle
