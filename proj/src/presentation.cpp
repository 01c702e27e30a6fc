#include "socle/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "socle/errors.hpp"
#include "socle/hilbert.hpp"
#include "socle/parse.hpp"

namespace socle {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::graded: return "graded";
    case Mode::local: return "local";
    case Mode::affine: return "affine";
  }
  return "?";
}

BaseDescriptor BaseDescriptor::prime_field(Field f) { return BaseDescriptor{f, nullptr}; }

BaseDescriptor BaseDescriptor::over(AlgebraPresentation base) {
  if (!base.base.is_field())
    fail(ErrorCode::invalid_presentation,
         "base algebra '" + base.name + "' must itself sit over a prime field");
  Field f = base.base.field;
  return BaseDescriptor{f, std::make_shared<const AlgebraPresentation>(std::move(base))};
}

std::size_t BaseDescriptor::nvars() const { return algebra ? algebra->own_vars.size() : 0; }

const std::vector<std::string>& BaseDescriptor::vars() const {
  static const std::vector<std::string> none;
  return algebra ? algebra->own_vars : none;
}

std::string BaseDescriptor::str() const { return algebra ? algebra->name : field.str(); }

bool same_base(const BaseDescriptor& a, const BaseDescriptor& b) {
  if (!(a.field == b.field)) return false;
  if (a.is_field() || b.is_field()) return a.is_field() == b.is_field();
  if (a.algebra == b.algebra) return true;
  if (a.algebra->own_vars != b.algebra->own_vars) return false;
  return ideal_equal(a.algebra->relation_ideal(), b.algebra->relation_ideal());
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

}  // namespace

AlgebraPresentation AlgebraPresentation::make(std::string name, BaseDescriptor base,
                                              std::vector<std::string> own_vars,
                                              const std::vector<std::string>& relation_texts,
                                              Mode mode) {
  std::vector<std::string> all = base.vars();
  for (const auto& v : own_vars) {
    if (!valid_identifier(v))
      fail(ErrorCode::invalid_presentation, "bad variable name '" + v + "'");
    if (std::find(all.begin(), all.end(), v) != all.end())
      fail(ErrorCode::invalid_presentation, "duplicate variable name '" + v + "'");
    all.push_back(v);
  }
  AlgebraPresentation p;
  p.name = std::move(name);
  p.base = std::move(base);
  p.own_vars = std::move(own_vars);
  p.ring = make_ring(p.base.field, all);
  if (p.base.algebra) {
    std::vector<std::size_t> up = identity_map(p.base.algebra->ring->nvars());
    for (const auto& r : p.base.algebra->relations) p.relations.push_back(r.mapped(p.ring, up));
  }
  p.base_relation_count = p.relations.size();
  for (const auto& t : relation_texts) {
    Polynomial f = parse_polynomial(p.ring, t);
    if (!f.is_zero()) p.relations.push_back(f);
  }
  p.mode = mode;
  return p;
}

std::vector<Polynomial> AlgebraPresentation::own_relations() const {
  return std::vector<Polynomial>(relations.begin() + base_relation_count, relations.end());
}

std::string AlgebraPresentation::str() const {
  std::string s = name + ": " + ring->str() + "/(";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (i) s += ", ";
    s += relations[i].str();
  }
  s += "), " + std::string(mode_name(mode));
  if (!base.is_field()) s += " over " + base.str();
  return s;
}

LocalAlgebra validate(const AlgebraPresentation& p) {
  if (p.mode == Mode::affine)
    fail(ErrorCode::invalid_presentation,
         "affine presentations have no designated maximal ideal");
  if (p.base.algebra) {
    if (p.base.algebra->mode == Mode::affine)
      fail(ErrorCode::base_residue_not_prime_field,
           "base '" + p.base.algebra->name + "' is affine; its residue field need not be the prime field");
    for (const auto& r : p.base.algebra->relations)
      for (const auto& t : r.terms())
        if (t.m.is_one())
          fail(ErrorCode::base_residue_not_prime_field,
               "base relation " + r.str() + " has a constant term");
  }
  if (p.mode == Mode::graded) {
    for (const auto& r : p.relations)
      if (!r.is_homogeneous()) fail(ErrorCode::non_homogeneous_relation, r.str());
  }
  GroebnerBasis gb = buchberger(p.relation_ideal());
  if (gb.is_trivial())
    fail(ErrorCode::invalid_presentation, "relations generate the unit ideal");
  if (p.mode == Mode::local) {
    std::vector<Monomial> lead = gb.lead_monomials();
    std::size_t n = p.ring->nvars();
    for (std::size_t i = 0; i < n; ++i) {
      bool pure = false;
      for (const auto& m : lead)
        if (m[i] > 0 && m[i] == m.degree()) {
          pure = true;
          break;
        }
      if (!pure)
        fail(ErrorCode::variable_not_nilpotent,
             "variable " + p.ring->vars[i] + " has infinite order modulo the relations");
    }
    mpz_class dim = hilbert_series_of_monomials(lead, n).total_dimension();
    std::uint32_t bound = static_cast<std::uint32_t>(dim.get_ui()) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial pw =
          Polynomial::term(p.ring, Scalar::one(p.ring->field), Monomial::var(n, i, bound));
      if (!gb.contains(pw))
        fail(ErrorCode::variable_not_nilpotent,
             "variable " + p.ring->vars[i] + " is not nilpotent modulo the relations");
    }
  }
  return LocalAlgebra{p, gb};
}

namespace {

void monomials_of_degree(std::size_t n, std::uint32_t d, std::size_t i,
                         std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
  if (i + 1 >= n) {
    if (n > 0) cur[n - 1] = d;
    if (n > 0 || d == 0) out.push_back(Monomial(cur));
    if (n > 0) cur[n - 1] = 0;
    return;
  }
  for (std::uint32_t k = 0; k <= d; ++k) {
    cur[i] = k;
    monomials_of_degree(n, d - k, i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<Monomial> all_monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(n, 0);
  monomials_of_degree(n, d, 0, cur, out);
  return out;
}

std::size_t linear_var_index(const Monomial& m) {
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] > 0) return i;
  fail(ErrorCode::internal_error, "constant monomial has no variable");
}

bool base_is_artinian(const BaseDescriptor& bd) {
  if (bd.is_field()) return true;
  GroebnerBasis gb = buchberger(bd.algebra->relation_ideal());
  if (gb.is_trivial()) return true;
  return krull_dim_monomial(gb.lead_monomials(), bd.algebra->ring->nvars()) == 0;
}

}  // namespace

AlgebraPresentation minimalize(const AlgebraPresentation& p) {
  if (p.mode == Mode::affine)
    fail(ErrorCode::invalid_presentation, "cannot minimalize an affine presentation");
  if (p.mode == Mode::graded) {
    for (const auto& r : p.relations)
      if (!r.is_homogeneous()) fail(ErrorCode::non_homogeneous_relation, r.str());
  }
  bool any_linear = false;
  for (const auto& r : p.relations) {
    for (const auto& t : r.terms())
      if (t.m.degree() == 1) {
        any_linear = true;
        break;
      }
    if (any_linear) break;
  }
  if (!any_linear || p.ring->nvars() == 0) return p;

  RingPtr ring = p.ring;
  std::vector<Polynomial> rels = p.relations;
  std::uint32_t trunc = 0;

  if (p.mode == Mode::local) {
    // Working modulo m^s changes nothing once m^s lies in the ideal; find the
    // least such s, truncate every generator there, and add the degree-s
    // monomials as explicit generators so the truncation is an equality of
    // ideals, not an approximation.
    GroebnerBasis gb = buchberger(p.relation_ideal());
    if (gb.is_trivial())
      fail(ErrorCode::invalid_presentation, "relations generate the unit ideal");
    std::size_t n = ring->nvars();
    mpz_class dim_bound(1);
    {
      std::vector<Monomial> lead = gb.lead_monomials();
      bool finite = true;
      for (std::size_t i = 0; i < n && finite; ++i) {
        bool pure = false;
        for (const auto& m : lead)
          if (m[i] > 0 && m[i] == m.degree()) pure = true;
        finite = pure;
      }
      if (!finite)
        fail(ErrorCode::variable_not_nilpotent,
             "a variable has infinite order modulo the relations");
      dim_bound = hilbert_series_of_monomials(lead, n).total_dimension();
    }
    std::uint32_t cap = static_cast<std::uint32_t>(dim_bound.get_ui()) + 1;
    std::uint32_t nil_sum = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t e = 1;
      for (; e <= cap; ++e) {
        Polynomial pw = Polynomial::term(ring, Scalar::one(ring->field), Monomial::var(n, i, e));
        if (gb.contains(pw)) break;
      }
      if (e > cap)
        fail(ErrorCode::variable_not_nilpotent,
             "variable " + ring->vars[i] + " is not nilpotent modulo the relations");
      nil_sum += e - 1;
    }
    trunc = nil_sum;
    for (std::uint32_t s = 1; s < nil_sum; ++s) {
      bool all_in = true;
      for (const auto& m : all_monomials_of_degree(n, s)) {
        Polynomial pw = Polynomial::term(ring, Scalar::one(ring->field), m);
        if (!gb.contains(pw)) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        trunc = s;
        break;
      }
    }
    if (trunc == 1) {
      // The relations contain every variable: the algebra is the field.
      AlgebraPresentation q;
      q.name = p.name;
      q.base = BaseDescriptor::prime_field(p.base.field);
      q.ring = make_ring(p.ring->field, {});
      q.base_relation_count = 0;
      q.mode = p.mode;
      return q;
    }
    std::vector<Polynomial> cut;
    for (const auto& r : rels) {
      Polynomial t = r.truncated_below_degree(trunc);
      if (!t.is_zero()) cut.push_back(t);
    }
    rels = std::move(cut);
  }

  bool changed = false;
  for (;;) {
    std::size_t n = ring->nvars();
    bool found = false;
    std::size_t best_rel = 0, best_var = 0, best_count = 0;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      for (const auto& t : rels[r].terms()) {
        if (t.m.degree() != 1) continue;
        std::size_t v = linear_var_index(t.m);
        std::size_t cnt = 0;
        for (std::size_t o = 0; o < rels.size(); ++o)
          if (o != r && poly_uses_var(rels[o], v)) ++cnt;
        if (!found || cnt < best_count || (cnt == best_count && v < best_var)) {
          found = true;
          best_rel = r;
          best_var = v;
          best_count = cnt;
        }
      }
    }
    if (!found) break;
    changed = true;

    const Polynomial& f = rels[best_rel];
    Monomial vm = Monomial::var(n, best_var);
    Scalar c = Scalar::zero(ring->field);
    for (const auto& t : f.terms())
      if (t.m == vm) c = t.c;
    Polynomial h = f - Polynomial::term(ring, c, vm);
    Scalar scale = -(c.inverse());
    // Solve f = 0 for the chosen variable: iterate v <- -(f - c v)/c with v
    // substituted by the previous approximation. Each pass pushes the
    // remaining v-dependence one degree deeper, so under truncation (local
    // mode) this reaches a fixed point; in graded mode f is linear and the
    // first pass already lands there.
    Polynomial G = Polynomial::zero(ring);
    for (std::uint32_t guard = 0;; ++guard) {
      Polynomial next = h.substituted(best_var, G).scaled(scale);
      if (trunc) next = next.truncated_below_degree(trunc);
      if (next == G) break;
      G = next;
      if (guard > 2 * trunc + 8)
        fail(ErrorCode::internal_error, "variable elimination failed to stabilize");
    }

    std::vector<std::string> keep_vars;
    for (std::size_t i = 0; i < n; ++i)
      if (i != best_var) keep_vars.push_back(ring->vars[i]);
    RingPtr down = make_ring(ring->field, keep_vars);
    std::vector<std::size_t> dmap(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (i != best_var) dmap[i] = i < best_var ? i : i - 1;
    std::vector<Polynomial> out;
    for (const auto& r : rels) {
      Polynomial g = r.substituted(best_var, G);
      if (trunc) g = g.truncated_below_degree(trunc);
      if (!g.is_zero()) out.push_back(g.mapped(down, dmap));
    }
    ring = down;
    rels = std::move(out);
  }

  if (!changed) return p;

  if (p.mode == Mode::local) {
    // Reinstate the tail: generators were handled modulo m^trunc throughout,
    // and substitution keeps m^trunc inside the image ideal, so adding the
    // degree-trunc monomials of the surviving variables restores equality.
    for (const auto& m : all_monomials_of_degree(ring->nvars(), trunc))
      rels.push_back(Polynomial::term(ring, Scalar::one(ring->field), m));
    rels = buchberger(Ideal{ring, rels}).elems();
  }

  AlgebraPresentation q;
  q.name = p.name;
  q.base = BaseDescriptor::prime_field(p.base.field);
  q.own_vars = ring->vars;
  q.ring = ring;
  q.relations = std::move(rels);
  q.base_relation_count = 0;
  q.mode = p.mode;
  return q;
}

AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!same_base(a.base, b.base))
    fail(ErrorCode::ring_mismatch, "tensor factors sit over different bases");
  std::size_t nb = a.nbase_vars();
  std::size_t na = a.own_vars.size();

  std::vector<std::string> vars = a.ring->vars;
  std::vector<std::string> bvars;
  for (std::size_t i = 0; i < b.own_vars.size(); ++i) {
    const std::string& v = b.own_vars[i];
    auto taken = [&](const std::string& cand) {
      if (std::find(vars.begin(), vars.end(), cand) != vars.end()) return true;
      if (std::find(bvars.begin(), bvars.end(), cand) != bvars.end()) return true;
      for (std::size_t j = i + 1; j < b.own_vars.size(); ++j)
        if (cand != v && cand == b.own_vars[j]) return true;
      return false;
    };
    std::string cand = v;
    for (int k = 2; taken(cand); ++k) cand = v + "_" + std::to_string(k);
    bvars.push_back(cand);
  }

  std::vector<std::string> all = vars;
  all.insert(all.end(), bvars.begin(), bvars.end());

  AlgebraPresentation t;
  t.name = a.name + "(x)" + b.name;
  t.base = a.base;
  t.own_vars.assign(all.begin() + nb, all.end());
  t.ring = make_ring(a.base.field, all);

  std::vector<std::size_t> amap = identity_map(a.ring->nvars());
  for (const auto& r : a.relations) t.relations.push_back(r.mapped(t.ring, amap));
  std::vector<std::size_t> bmap(b.ring->nvars(), 0);
  for (std::size_t i = 0; i < nb; ++i) bmap[i] = i;
  for (std::size_t i = nb; i < b.ring->nvars(); ++i) bmap[i] = na + i;
  for (const auto& r : b.own_relations()) t.relations.push_back(r.mapped(t.ring, bmap));

  t.base_relation_count = a.base_relation_count;
  if (a.mode == Mode::graded && b.mode == Mode::graded)
    t.mode = Mode::graded;
  else if (a.mode == Mode::local && b.mode == Mode::local && base_is_artinian(a.base))
    t.mode = Mode::local;
  else
    t.mode = Mode::affine;
  return t;
}

bool tensor_is_trivial(const AlgebraPresentation& p) {
  return buchberger(p.relation_ideal()).is_trivial();
}

Ideal contract_to_base(const AlgebraPresentation& p, const std::vector<Polynomial>& q) {
  std::size_t nb = p.nbase_vars();
  std::size_t n = p.ring->nvars();
  Ideal J{p.ring, p.relations};
  for (const auto& f : q) {
    if (!same_ring(f.ring(), p.ring))
      fail(ErrorCode::ring_mismatch, "contraction ideal lives in a different ring");
    J.gens.push_back(f);
  }
  std::vector<std::uint8_t> keep(n, 0);
  for (std::size_t i = 0; i < nb; ++i) keep[i] = 1;
  Ideal elim = ideal_eliminate(J, keep);
  RingPtr down = make_ring(p.base.field,
                           std::vector<std::string>(p.ring->vars.begin(), p.ring->vars.begin() + nb));
  std::vector<std::size_t> dmap(n, 0);
  std::iota(dmap.begin(), dmap.begin() + nb, 0);
  Ideal out{down, {}};
  for (const auto& f : elim.gens) out.gens.push_back(f.mapped(down, dmap));
  return out;
}

Tor1Result tor1_over_base(const AlgebraPresentation& a) {
  if (a.base.is_field()) return Tor1Result{true, ""};
  if (a.mode == Mode::affine)
    fail(ErrorCode::invalid_presentation, "flatness test needs a graded or local presentation");
  const AlgebraPresentation& R = *a.base.algebra;
  if (R.mode == Mode::affine)
    fail(ErrorCode::base_residue_not_prime_field,
         "base '" + R.name + "' is affine; its residue field need not be the prime field");
  std::size_t nb = a.nbase_vars();
  const RingPtr& P = a.ring;
  if (nb == 0) return Tor1Result{true, ""};

  // Kernel of (base variables) : A^nb -> A, from ambient syzygies of the
  // variables joined with the relations.
  FreeSubmodule cols{P, 1, {}};
  for (std::size_t i = 0; i < nb; ++i)
    cols.gens.push_back(PolyVec{{Polynomial::variable(P, i)}});
  for (const auto& g : a.relations) cols.gens.push_back(PolyVec{{g}});
  FreeSubmodule sz = syzygies(cols);
  std::vector<PolyVec> ker;
  for (const auto& v : sz.gens) {
    PolyVec w{std::vector<Polynomial>(v.c.begin(), v.c.begin() + nb)};
    if (!w.is_zero()) ker.push_back(w);
  }

  // The image to quotient by: the base's own syzygies of its variables,
  // pushed up, together with relation multiples of the unit vectors.
  const RingPtr& PR = R.ring;
  FreeSubmodule bcols{PR, 1, {}};
  for (std::size_t i = 0; i < nb; ++i)
    bcols.gens.push_back(PolyVec{{Polynomial::variable(PR, i)}});
  for (const auto& g : R.relations) bcols.gens.push_back(PolyVec{{g}});
  FreeSubmodule bsz = syzygies(bcols);
  std::vector<std::size_t> up = identity_map(PR->nvars());

  FreeSubmodule image{P, nb, {}};
  for (const auto& v : bsz.gens) {
    PolyVec w;
    for (std::size_t i = 0; i < nb; ++i) w.c.push_back(v.c[i].mapped(P, up));
    if (!w.is_zero()) image.gens.push_back(w);
  }
  for (const auto& g : a.relations)
    for (std::size_t j = 0; j < nb; ++j) {
      PolyVec w = zero_vec(P, nb);
      w.c[j] = g;
      image.gens.push_back(w);
    }

  ModuleOrder ord = ModuleOrder::pot(P->order, nb);
  std::vector<PolyVec> gb = module_groebner(image, ord);
  for (const auto& v : ker) {
    PolyVec nf = module_normal_form(v, gb, ord);
    if (!nf.is_zero()) return Tor1Result{false, nf.str()};
  }
  return Tor1Result{true, ""};
}

std::size_t fiber_dim(const AlgebraPresentation& a, const std::vector<Polynomial>& p,
                      const AlgebraPresentation& b, const std::vector<Polynomial>& q) {
  auto half = [](const AlgebraPresentation& x, const std::vector<Polynomial>& pr) {
    Ideal J{x.ring, x.relations};
    for (const auto& f : pr) {
      if (!same_ring(f.ring(), x.ring))
        fail(ErrorCode::ring_mismatch, "asserted prime lives in a different ring");
      J.gens.push_back(f);
    }
    GroebnerBasis gb = buchberger(J);
    if (gb.is_trivial())
      fail(ErrorCode::invalid_presentation, "asserted prime contains 1");
    return krull_dim_monomial(gb.lead_monomials(), x.ring->nvars());
  };
  return std::min(half(a, p), half(b, q));
}

AlgebraPresentation quotient_mod_base(const AlgebraPresentation& a) {
  std::size_t nb = a.nbase_vars();
  std::size_t n = a.ring->nvars();
  AlgebraPresentation q;
  q.name = a.name + "/m";
  q.base = BaseDescriptor::prime_field(a.base.field);
  q.own_vars = a.own_vars;
  q.ring = make_ring(a.base.field, a.own_vars);
  std::vector<std::size_t> dmap(n, 0);
  for (std::size_t i = nb; i < n; ++i) dmap[i] = i - nb;
  for (const auto& g : a.relations) {
    Polynomial h = g;
    for (std::size_t i = 0; i < nb; ++i) h = h.substituted(i, Polynomial::zero(a.ring));
    if (!h.is_zero()) q.relations.push_back(h.mapped(q.ring, dmap));
  }
  q.base_relation_count = 0;
  q.mode = a.mode;
  return q;
}

const char* flat_kind_name(FlatKind k) {
  switch (k) {
    case FlatKind::field_base: return "FieldBase";
    case FlatKind::polynomial_extension: return "PolynomialExtension";
    case FlatKind::tor1_vanishes: return "Tor1Vanishes";
    case FlatKind::user_asserted: return "UserAsserted";
  }
  return "?";
}

FlatnessCertificate certify_flatness(const AlgebraPresentation& a, bool assert_flat) {
  if (a.base.is_field())
    return FlatnessCertificate{FlatKind::field_base, "base is the field " + a.base.field.str()};
  // Polynomial extension: every relation already lies in the ideal extended
  // from the base, so A = R[own vars] and flatness is free.
  {
    std::vector<Polynomial> lifted;
    std::vector<std::size_t> up = identity_map(a.base.algebra->ring->nvars());
    for (const auto& r : a.base.algebra->relations) lifted.push_back(r.mapped(a.ring, up));
    GroebnerBasis gbB = buchberger(Ideal{a.ring, lifted});
    bool extension = true;
    for (const auto& g : a.own_relations())
      if (!gbB.contains(g)) {
        extension = false;
        break;
      }
    if (extension)
      return FlatnessCertificate{FlatKind::polynomial_extension,
                                 "relations come from the base ideal"};
  }
  if (assert_flat)
    return FlatnessCertificate{FlatKind::user_asserted, "flatness asserted, not verified"};
  Tor1Result t = tor1_over_base(a);
  if (t.zero)
    return FlatnessCertificate{FlatKind::tor1_vanishes, "Tor_1 over the base vanishes"};
  fail(ErrorCode::certificate_missing,
       "Tor_1 over the base is nonzero, witness " + t.witness);
}

}  // namespace socle
