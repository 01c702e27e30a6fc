#include "socle/groebner.hpp"

#include <numeric>

#include "socle/errors.hpp"

namespace socle {

namespace {

void check_rings(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring))
    fail(ErrorCode::ring_mismatch, "ideal operation across different rings");
}

bool any_nonzero(const Ideal& I) {
  for (const auto& g : I.gens)
    if (!g.is_zero()) return true;
  return false;
}

Ideal whole_ring(const RingPtr& ring) {
  return Ideal{ring, {Polynomial::constant(ring, Scalar::one(ring->field))}};
}

}  // namespace

std::string Ideal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str();
  }
  return s + ")";
}

bool poly_uses_var(const Polynomial& f, std::size_t i) {
  for (const auto& t : f.terms())
    if (t.m[i] != 0) return true;
  return false;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!ring_ || !f.ring() || !same_ring(ring_, f.ring()))
    fail(ErrorCode::ring_mismatch, "normal form against a basis over a different ring");
  return divide(f, elems_, ord_).remainder;
}

bool GroebnerBasis::is_trivial() const {
  return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(e.lead_monomial());
  return out;
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord) {
  FreeSubmodule m{I.ring, 1, {}};
  for (const auto& f : I.gens) m.gens.push_back(PolyVec{{f}});
  auto gb = module_groebner(m, ModuleOrder::pot(ord, 1));
  std::vector<Polynomial> elems;
  elems.reserve(gb.size());
  for (const auto& v : gb) elems.push_back(v.c[0].resorted(ord));
  return GroebnerBasis(I.ring, ord, std::move(elems));
}

GroebnerBasis buchberger(const Ideal& I) { return buchberger(I, I.ring->order); }

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                const MonomialOrder& ord) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> divs;
  divs.reserve(divisors.size());
  for (const auto& d : divisors) {
    check_same_ring(f, d);
    divs.push_back(d.is_zero() ? d : d.resorted(ord));
  }

  Polynomial p = f.resorted(ord);
  std::vector<std::vector<Term>> qt(divs.size());
  std::vector<Term> rem;
  while (!p.is_zero()) {
    Term ld{p.lead_coeff(), p.lead_monomial()};
    bool hit = false;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      if (divs[i].is_zero()) continue;
      const Monomial& dm = divs[i].lead_monomial();
      if (!dm.divides(ld.m)) continue;
      Scalar qc = ld.c / divs[i].lead_coeff();
      Monomial qm = dm.quotient_of(ld.m);
      p = p - divs[i].times_term(qc, qm);
      qt[i].push_back(Term{std::move(qc), std::move(qm)});
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(ld);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_terms(ring, std::move(rest), ord);
    }
  }

  Division out;
  out.quotients.reserve(divs.size());
  for (auto& q : qt) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q), ord));
  out.remainder = Polynomial::from_terms(ring, std::move(rem), ord);
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_rings(a, b);
  Ideal out{a.ring, a.gens};
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_rings(a, b);
  Ideal out{a.ring, {}};
  for (const auto& f : a.gens)
    for (const auto& g : b.gens) {
      Polynomial p = f * g;
      if (!p.is_zero()) out.gens.push_back(std::move(p));
    }
  return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_rings(a, b);
  const RingPtr& ring = a.ring;
  std::size_t n = ring->nvars();
  if (n == 0) {
    if (any_nonzero(a) && any_nonzero(b)) return whole_ring(ring);
    return Ideal{ring, {}};
  }

  // classic trick: eliminate a fresh scaling variable from t*a + (1-t)*b.
  // '@' cannot occur in a parsed identifier, so the name is collision free.
  std::vector<std::string> vars = ring->vars;
  vars.push_back("@t");
  RingPtr ext = make_ring(ring->field, vars, ring->order);
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);

  Polynomial t = Polynomial::variable(ext, n);
  Polynomial omt = Polynomial::constant(ext, Scalar::one(ring->field)) - t;
  Ideal J{ext, {}};
  for (const auto& f : a.gens)
    if (!f.is_zero()) J.gens.push_back(t * f.mapped(ext, up));
  for (const auto& g : b.gens)
    if (!g.is_zero()) J.gens.push_back(omt * g.mapped(ext, up));

  std::vector<std::uint8_t> mask(n, 0);
  mask.push_back(1);
  auto gb = buchberger(J, MonomialOrder::elim(mask));

  std::vector<std::size_t> down(n + 1, 0);
  std::iota(down.begin(), down.begin() + static_cast<std::ptrdiff_t>(n), 0);
  Ideal out{ring, {}};
  for (const auto& e : gb.elems())
    if (!poly_uses_var(e, n)) out.gens.push_back(e.mapped(ring, down).resorted(ring->order));
  return out;
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  if (!same_ring(a.ring, f.ring()))
    fail(ErrorCode::ring_mismatch, "colon by a polynomial over a different ring");
  if (f.is_zero()) return whole_ring(a.ring);
  Ideal inter = ideal_intersect(a, Ideal{a.ring, {f}});
  Ideal out{a.ring, {}};
  for (const auto& g : inter.gens) {
    Division d = divide(g, {f}, a.ring->order);
    if (!d.remainder.is_zero())
      fail(ErrorCode::division_not_exact, "colon witness not divisible by the denominator");
    out.gens.push_back(d.quotients[0]);
  }
  return out;
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  check_rings(a, b);
  bool seen = false;
  Ideal out{a.ring, {}};
  for (const auto& g : b.gens) {
    if (g.is_zero()) continue;
    Ideal part = ideal_colon(a, g);
    out = seen ? ideal_intersect(out, part) : std::move(part);
    seen = true;
  }
  if (!seen) return whole_ring(a.ring);
  return out;
}

Ideal ideal_eliminate(const Ideal& a, const std::vector<std::uint8_t>& keep) {
  std::size_t n = a.ring->nvars();
  if (keep.size() != n)
    fail(ErrorCode::internal_error, "elimination mask has wrong length");
  std::vector<std::uint8_t> gone(n);
  for (std::size_t i = 0; i < n; ++i) gone[i] = keep[i] ? 0 : 1;
  auto gb = buchberger(a, MonomialOrder::elim(gone));
  Ideal out{a.ring, {}};
  for (const auto& e : gb.elems()) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (gone[i] && poly_uses_var(e, i)) ok = false;
    if (ok) out.gens.push_back(e.resorted(a.ring->order));
  }
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_rings(a, b);
  auto ga = buchberger(a, a.ring->order);
  auto gb = buchberger(b, a.ring->order);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga.elems()[i] != gb.elems()[i]) return false;
  return true;
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
  return buchberger(I).contains(f);
}

}  // namespace socle
