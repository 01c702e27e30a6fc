#include "socle/invariants.hpp"

#include <random>

#include "json.hpp"
#include "socle/errors.hpp"
#include "socle/groebner.hpp"
#include "socle/hilbert.hpp"
#include "socle/resolution.hpp"

namespace socle {

namespace {

/// Rank of the k-span of a list of polynomials: straight row reduction with
/// monomials as columns, keeping a basis of reduced representatives.
std::size_t span_rank(std::vector<Polynomial> ps) {
  std::vector<Polynomial> basis;
  for (Polynomial& f : ps) {
    for (;;) {
      if (f.is_zero()) break;
      const Polynomial* hit = nullptr;
      for (const Polynomial& b : basis)
        if (b.lead_monomial() == f.lead_monomial()) {
          hit = &b;
          break;
        }
      if (!hit) break;
      f = f - hit->scaled(f.lead_coeff());
    }
    if (!f.is_zero()) basis.push_back(f.scaled(f.lead_coeff().inverse()));
  }
  return basis.size();
}

Ideal variable_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial::variable(ring, i));
  return Ideal{ring, std::move(gens)};
}

Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng) {
  std::vector<Term> ts;
  std::size_t n = ring->nvars();
  if (ring->field.is_rationals()) {
    std::uniform_int_distribution<int> d(-5, 5);
    for (std::size_t i = 0; i < n; ++i) {
      int c = d(rng);
      if (c != 0)
        ts.push_back({Scalar::of_int(ring->field, c), Monomial::var(n, i)});
    }
  } else {
    std::uniform_int_distribution<std::uint64_t> d(0, ring->field.p - 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t c = d(rng);
      if (c != 0)
        ts.push_back({Scalar::of_int(ring->field, static_cast<long>(c)), Monomial::var(n, i)});
    }
  }
  return Polynomial::from_terms(ring, std::move(ts), ring->order);
}

std::size_t to_size(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p())
    fail(ErrorCode::internal_error, "dimension count out of range");
  return static_cast<std::size_t>(z.get_ui());
}

/// dim_k I/mI: minimal generator count of I, by the exact sequence
/// 0 -> I/mI -> S/mI -> S/I -> 0 and a Hilbert series subtraction.
std::size_t minimal_generator_count(const Ideal& I, const GroebnerBasis& gI) {
  if (I.gens.empty()) return 0;
  std::size_t n = I.ring->nvars();
  std::vector<Polynomial> prod;
  for (std::size_t i = 0; i < n; ++i)
    for (const Polynomial& g : I.gens)
      prod.push_back(Polynomial::variable(I.ring, i) * g);
  GroebnerBasis gmI = buchberger(Ideal{I.ring, std::move(prod)});
  std::vector<mpz_class> num = hilbert_series(gmI).numerator();
  std::vector<mpz_class> sub = hilbert_series(gI).numerator();
  if (num.size() < sub.size()) num.resize(sub.size(), 0);
  for (std::size_t i = 0; i < sub.size(); ++i) num[i] -= sub[i];
  HilbertSeries diff(std::move(num), n);
  if (!diff.is_polynomial())
    fail(ErrorCode::internal_error, "relation module has infinite generator count");
  return to_size(diff.total_dimension());
}

}  // namespace

std::size_t socle_dimension(const Ideal& J) {
  if (J.ring->nvars() == 0) return 1;  // the field itself: Hom(k, k)
  GroebnerBasis gb = buchberger(J);
  if (gb.is_trivial()) return 0;
  Ideal soc = ideal_colon(J, variable_ideal(J.ring));
  std::vector<Polynomial> nf;
  for (const Polynomial& g : soc.gens) nf.push_back(gb.normal_form(g));
  // m kills soc/J, so the ideal generators already k-span the quotient
  return span_rank(std::move(nf));
}

namespace {

std::size_t type_by_socle(const Ideal& J, std::size_t depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Ideal cur = J;
  for (std::size_t s = 0; s < depth; ++s) {
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      Polynomial theta = random_linear_form(J.ring, rng);
      if (theta.is_zero()) continue;
      if (ideal_equal(ideal_colon(cur, theta), cur)) {
        cur.gens.push_back(theta);
        found = true;
      }
    }
    if (!found)
      fail(ErrorCode::regular_sequence_not_found,
           "no regular linear form after 64 draws; use a larger coefficient field");
  }
  std::size_t t = socle_dimension(cur);
  if (t == 0)
    fail(ErrorCode::internal_error,
         "cutting a maximal regular sequence left a ring of positive depth");
  return t;
}

}  // namespace

InvariantReport report(const LocalAlgebra& a, std::uint64_t seed) {
  AlgebraPresentation p = minimalize(a.pres);
  InvariantReport r;
  r.embdim = p.ring->nvars();

  Ideal J = p.relation_ideal();
  GroebnerBasis gb = buchberger(J);
  if (gb.is_trivial())
    fail(ErrorCode::internal_error, "minimalized relations generate the unit ideal");

  std::vector<Monomial> lead = gb.lead_monomials();
  r.dim = lead.empty() ? r.embdim : krull_dim_monomial(lead, r.embdim);
  if (hilbert_series(gb).pole_order() != r.dim)
    fail(ErrorCode::internal_error, "dimension disagrees with series pole order");
  if (p.mode == Mode::local && r.dim != 0)
    fail(ErrorCode::internal_error, "nilpotent presentation with positive dimension");

  FreeResolution res;
  bool have_res = false;
  if (p.mode == Mode::graded) {
    res = cyclic_resolution(p.ring, p.relations);
    have_res = true;
    if (res.pd() > r.embdim)
      fail(ErrorCode::internal_error, "projective dimension exceeds variable count");
    r.depth = r.embdim - res.pd();
  } else {
    r.depth = 0;  // Artinian
  }
  if (r.depth > r.dim)
    fail(ErrorCode::internal_error, "depth exceeds dimension");
  r.codepth = r.dim - r.depth;
  r.codim = r.embdim - r.dim;

  r.mu = minimal_generator_count(J, gb);
  if (have_res) {
    std::size_t b1 = res.betti.size() > 1 ? res.betti[1] : 0;
    if (b1 != r.mu)
      fail(ErrorCode::internal_error, "generator count disagrees with first Betti number");
  }
  r.epsilon2 = r.mu;
  if (r.mu + r.dim < r.embdim)
    fail(ErrorCode::negative_defect, "mu + dim < embdim in " + p.name);
  r.cid = r.mu + r.dim - r.embdim;

  r.type = type_by_socle(J, r.depth, seed);

  r.cm = r.codepth == 0;
  r.gorenstein = r.cm && r.type == 1;
  r.ci = r.cid == 0;
  r.regular = r.codim == 0;
  r.aci = r.cid == 1;
  if (have_res && r.cm && res.betti.back() != r.type)
    fail(ErrorCode::internal_error, "type disagrees with the last Betti number");
  if ((r.regular && !r.ci) || (r.ci && !r.gorenstein) || (r.gorenstein && !r.cm))
    fail(ErrorCode::internal_error, "regularity implication chain violated");
  r.idd = r.gorenstein ? ExtendedNat::of(r.depth) : ExtendedNat::inf();

  try {
    r.flat_certificate = flat_kind_name(certify_flatness(a.pres).kind);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::certificate_missing) throw;
    r.flat_certificate = "none";
  }
  return r;
}

std::string InvariantReport::json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim;
  j["depth"] = depth;
  j["codepth"] = codepth;
  j["embdim"] = embdim;
  j["codim"] = codim;
  j["mu"] = mu;
  j["epsilon2"] = epsilon2;
  j["cid"] = cid;
  j["type"] = type;
  if (idd.finite)
    j["idd"] = idd.value;
  else
    j["idd"] = "inf";
  j["cm"] = cm;
  j["gorenstein"] = gorenstein;
  j["ci"] = ci;
  j["regular"] = regular;
  j["aci"] = aci;
  j["flat_certificate"] = flat_certificate;
  return j.dump();
}

std::string InvariantReport::str() const {
  std::string s;
  s += "dim " + std::to_string(dim);
  s += ", depth " + std::to_string(depth);
  s += ", codepth " + std::to_string(codepth);
  s += ", embdim " + std::to_string(embdim);
  s += ", codim " + std::to_string(codim);
  s += ", mu " + std::to_string(mu);
  s += ", e2 " + std::to_string(epsilon2);
  s += ", cid " + std::to_string(cid);
  s += ", type " + std::to_string(type);
  s += ", idd " + idd.str();
  std::string f;
  if (cm) f += " cm";
  if (gorenstein) f += " gor";
  if (ci) f += " ci";
  if (regular) f += " reg";
  if (aci) f += " aci";
  if (!f.empty()) s += "," + f;
  return s;
}

}  // namespace socle
