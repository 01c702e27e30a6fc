#include "socle/freemodule.hpp"

#include <algorithm>

#include "socle/errors.hpp"

namespace socle {

bool PolyVec::is_zero() const {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

std::string PolyVec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].str();
  }
  return s + ")";
}

PolyVec zero_vec(const RingPtr& ring, std::size_t rank) {
  PolyVec v;
  v.c.assign(rank, Polynomial::zero(ring));
  return v;
}

PolyVec unit_vec(const RingPtr& ring, std::size_t rank, std::size_t comp) {
  PolyVec v = zero_vec(ring, rank);
  v.c[comp] = Polynomial::constant(ring, Scalar::one(ring->field));
  return v;
}

ModuleOrder ModuleOrder::pot(MonomialOrder base, std::size_t rank) {
  std::vector<int> block(rank);
  for (std::size_t i = 0; i < rank; ++i) block[i] = static_cast<int>(i);
  return ModuleOrder(std::move(base), std::move(block), {});
}

ModuleOrder ModuleOrder::schreyer(MonomialOrder base, std::vector<Monomial> shifts) {
  std::vector<int> block(shifts.size(), 0);
  return ModuleOrder(std::move(base), std::move(block), std::move(shifts));
}

ModuleOrder ModuleOrder::graph(MonomialOrder base, std::size_t front,
                               std::vector<Monomial> shifts) {
  std::size_t rank = front + shifts.size();
  std::vector<int> block(rank);
  std::vector<Monomial> shift;
  shift.reserve(rank);
  std::size_t nv = shifts.empty() ? 0 : shifts[0].nvars();
  for (std::size_t i = 0; i < front; ++i) {
    block[i] = static_cast<int>(i);
    shift.push_back(Monomial::one(nv));
  }
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    block[front + i] = static_cast<int>(front);
    shift.push_back(shifts[i]);
  }
  return ModuleOrder(std::move(base), std::move(block), std::move(shift));
}

int ModuleOrder::compare(const Monomial& ma, std::size_t ca, const Monomial& mb,
                         std::size_t cb) const {
  if (block_[ca] != block_[cb]) return block_[ca] < block_[cb] ? 1 : -1;
  int c;
  if (shift_.empty()) {
    c = base_.compare(ma, mb);
  } else {
    c = base_.compare(ma.times(shift_[ca]), mb.times(shift_[cb]));
  }
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

namespace {

struct MT {
  Scalar c;
  Monomial m;
  std::uint32_t comp;
};

struct VP {
  std::vector<MT> t;  // strictly descending under the working module order

  bool empty() const { return t.empty(); }
  const MT& lead() const { return t.front(); }
};

VP flatten(const PolyVec& v, const ModuleOrder& ord) {
  VP out;
  for (std::size_t k = 0; k < v.c.size(); ++k)
    for (const auto& tm : v.c[k].terms())
      out.t.push_back(MT{tm.c, tm.m, static_cast<std::uint32_t>(k)});
  std::stable_sort(out.t.begin(), out.t.end(), [&](const MT& a, const MT& b) {
    return ord.compare(a.m, a.comp, b.m, b.comp) > 0;
  });
  return out;
}

PolyVec unflatten(const VP& v, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> by_comp(rank);
  for (const auto& tm : v.t) by_comp[tm.comp].push_back(Term{tm.c, tm.m});
  PolyVec out;
  out.c.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k)
    out.c.push_back(Polynomial::from_terms(ring, std::move(by_comp[k]), ring->order));
  return out;
}

// a + g * (c, m), both sorted; result sorted.
VP axpy(const VP& a, const VP& g, const Scalar& c, const Monomial& m, const ModuleOrder& ord) {
  VP out;
  out.t.reserve(a.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < g.t.size()) {
    Monomial gm = g.t[j].m.times(m);
    int cmp = ord.compare(a.t[i].m, a.t[i].comp, gm, g.t[j].comp);
    if (cmp > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      Scalar s = g.t[j].c * c;
      if (!s.is_zero()) out.t.push_back(MT{std::move(s), std::move(gm), g.t[j].comp});
      ++j;
    } else {
      Scalar s = a.t[i].c + g.t[j].c * c;
      if (!s.is_zero()) out.t.push_back(MT{std::move(s), a.t[i].m, a.t[i].comp});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < g.t.size(); ++j) {
    Scalar s = g.t[j].c * c;
    if (!s.is_zero()) out.t.push_back(MT{std::move(s), g.t[j].m.times(m), g.t[j].comp});
  }
  return out;
}

// Scale to a canonical representative: monic over a prime field; over Q an
// integer vector with content 1 and positive lead. Keeps coefficient growth
// in check during the main loop.
void normalize_elem(VP& v, const Field& f) {
  if (v.t.empty()) return;
  if (f.is_prime()) {
    Scalar inv = v.t.front().c.inverse();
    for (auto& tm : v.t) tm.c = tm.c * inv;
    return;
  }
  mpz_class den(1);
  for (const auto& tm : v.t) den = lcm(den, tm.c.rat().get_den());
  mpz_class num(0);
  for (const auto& tm : v.t) {
    mpz_class val = tm.c.rat().get_num() * (den / tm.c.rat().get_den());
    num = gcd(num, val);
  }
  if (num == 0) num = 1;
  mpq_class scale(den, num);
  scale.canonicalize();
  if (sgn(v.t.front().c.rat()) < 0) scale = -scale;
  for (auto& tm : v.t) tm.c = Scalar::of_mpq(tm.c.rat() * scale);
}

void make_monic(VP& v) {
  if (v.t.empty()) return;
  Scalar inv = v.t.front().c.inverse();
  for (auto& tm : v.t) tm.c = tm.c * inv;
}

VP reduce_full(VP v, const std::vector<VP>& basis, const std::vector<char>& use,
               const ModuleOrder& ord) {
  std::vector<MT> done;
  while (!v.t.empty()) {
    const MT& ld = v.t.front();
    const VP* red = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!use[i]) continue;
      const MT& gl = basis[i].lead();
      if (gl.comp == ld.comp && gl.m.divides(ld.m)) {
        red = &basis[i];
        break;
      }
    }
    if (red) {
      const MT& gl = red->lead();
      v = axpy(v, *red, -(ld.c / gl.c), gl.m.quotient_of(ld.m), ord);
    } else {
      done.push_back(v.t.front());
      v.t.erase(v.t.begin());
    }
  }
  return VP{std::move(done)};
}

VP spair(const VP& f, const VP& g, const ModuleOrder& ord) {
  const MT& lf = f.lead();
  const MT& lg = g.lead();
  Monomial L = Monomial::lcm(lf.m, lg.m);
  VP a;
  a.t.reserve(f.t.size());
  Monomial qf = lf.m.quotient_of(L);
  Scalar cf = lf.c.inverse();
  for (const auto& tm : f.t) a.t.push_back(MT{tm.c * cf, tm.m.times(qf), tm.comp});
  return axpy(a, g, -(lg.c.inverse()), lg.m.quotient_of(L), ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
};

// Pair update with the standard chain, duplicate-lcm and product criteria.
// The product criterion is sound only in rank one.
void gm_update(std::vector<Pair>& pairs, const std::vector<VP>& basis, std::size_t t,
               bool rank_one) {
  const MT& lt = basis[t].lead();
  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool drop = false;
  };
  std::vector<Cand> cand;
  for (std::size_t i = 0; i < t; ++i) {
    const MT& li = basis[i].lead();
    if (li.comp != lt.comp) continue;
    cand.push_back(Cand{i, Monomial::lcm(li.m, lt.m), li.m.coprime(lt.m)});
  }
  for (auto& a : cand)
    for (const auto& b : cand) {
      if (a.i == b.i || a.drop) continue;
      if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) a.drop = true;
    }
  for (std::size_t x = 0; x < cand.size(); ++x) {
    if (cand[x].drop) continue;
    bool class_coprime = cand[x].coprime;
    for (std::size_t y = x + 1; y < cand.size(); ++y) {
      if (cand[y].drop || cand[y].lcm != cand[x].lcm) continue;
      class_coprime = class_coprime || cand[y].coprime;
      cand[y].drop = true;
    }
    if (rank_one && class_coprime) cand[x].drop = true;
  }
  std::erase_if(pairs, [&](const Pair& p) {
    if (basis[p.i].lead().comp != lt.comp) return false;
    if (!lt.m.divides(p.lcm)) return false;
    if (Monomial::lcm(basis[p.i].lead().m, lt.m) == p.lcm) return false;
    if (Monomial::lcm(basis[p.j].lead().m, lt.m) == p.lcm) return false;
    return true;
  });
  for (const auto& a : cand)
    if (!a.drop) pairs.push_back(Pair{a.i, t, a.lcm, lt.comp});
}

std::vector<VP> engine_groebner(std::vector<VP> inputs, const ModuleOrder& ord,
                                const Field& field, bool rank_one) {
  std::stable_sort(inputs.begin(), inputs.end(), [&](const VP& a, const VP& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    return ord.compare(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) < 0;
  });

  std::vector<VP> basis;
  std::vector<char> all;
  std::vector<Pair> pairs;
  auto insert = [&](VP v) {
    normalize_elem(v, field);
    basis.push_back(std::move(v));
    all.push_back(1);
    gm_update(pairs, basis, basis.size() - 1, rank_one);
  };

  for (auto& in : inputs) {
    if (in.empty()) continue;
    VP r = reduce_full(std::move(in), basis, all, ord);
    if (!r.empty()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = ord.compare(pairs[k].lcm, pairs[k].comp, pairs[best].lcm, pairs[best].comp);
      if (c < 0 || (c == 0 && std::pair(pairs[k].i, pairs[k].j) <
                                  std::pair(pairs[best].i, pairs[best].j)))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    VP s = spair(basis[p.i], basis[p.j], ord);
    VP r = reduce_full(std::move(s), basis, all, ord);
    if (!r.empty()) insert(std::move(r));
  }

  // minimal lead set, then tail reduction to the unique reduced basis
  std::vector<char> alive(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const MT& li = basis[i].lead();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !alive[j]) continue;
      const MT& lj = basis[j].lead();
      if (lj.comp != li.comp || !lj.m.divides(li.m)) continue;
      if (lj.m == li.m && j > i) continue;
      alive[i] = 0;
      break;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!alive[i]) continue;
      std::vector<char> others = alive;
      others[i] = 0;
      VP r = reduce_full(basis[i], basis, others, ord);
      normalize_elem(r, field);
      if (r.t.size() != basis[i].t.size()) {
        basis[i] = std::move(r);
        changed = true;
        continue;
      }
      for (std::size_t k = 0; k < r.t.size(); ++k) {
        if (!(r.t[k].c == basis[i].t[k].c) || r.t[k].m != basis[i].t[k].m ||
            r.t[k].comp != basis[i].t[k].comp) {
          basis[i] = std::move(r);
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<VP> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) {
      make_monic(basis[i]);
      out.push_back(std::move(basis[i]));
    }
  std::stable_sort(out.begin(), out.end(), [&](const VP& a, const VP& b) {
    return ord.compare(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) < 0;
  });
  return out;
}

std::vector<VP> flatten_all(const std::vector<PolyVec>& gens, const ModuleOrder& ord) {
  std::vector<VP> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(flatten(g, ord));
  return out;
}

}  // namespace

std::vector<PolyVec> module_groebner(const FreeSubmodule& m, const ModuleOrder& ord) {
  if (ord.rank() != m.rank)
    fail(ErrorCode::order_mismatch, "module order rank does not match submodule rank");
  auto gb = engine_groebner(flatten_all(m.gens, ord), ord, m.ring->field, m.rank == 1);
  std::vector<PolyVec> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(unflatten(v, m.ring, m.rank));
  return out;
}

PolyVec module_normal_form(const PolyVec& v, const std::vector<PolyVec>& gb,
                           const ModuleOrder& ord) {
  if (v.c.empty()) return v;
  const RingPtr& ring = v.c[0].ring();
  std::vector<VP> basis = flatten_all(gb, ord);
  std::vector<char> use(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].empty()) use[i] = 0;
  VP r = reduce_full(flatten(v, ord), basis, use, ord);
  return unflatten(r, ring, v.rank());
}

bool module_member(const PolyVec& v, const std::vector<PolyVec>& gb, const ModuleOrder& ord) {
  return module_normal_form(v, gb, ord).is_zero();
}

FreeSubmodule syzygies(const FreeSubmodule& m) {
  const std::size_t r = m.rank;
  const std::size_t s = m.gens.size();
  const RingPtr& ring = m.ring;
  const MonomialOrder base = ring->order;
  if (s == 0) return FreeSubmodule{ring, 0, {}};

  std::vector<Monomial> shifts;
  shifts.reserve(s);
  for (const auto& g : m.gens) {
    if (g.is_zero()) {
      shifts.push_back(Monomial::one(ring->nvars()));
      continue;
    }
    // lead over all components under position-over-term with the base order
    ModuleOrder probe = ModuleOrder::pot(base, r);
    Monomial best;
    bool have = false;
    std::size_t bestc = 0;
    for (std::size_t k = 0; k < r; ++k) {
      if (g.c[k].is_zero()) continue;
      auto [c, mm] = leading_term(g.c[k], base);
      (void)c;
      if (!have || probe.compare(mm, k, best, bestc) > 0) {
        best = mm;
        bestc = k;
        have = true;
      }
    }
    shifts.push_back(best);
  }

  ModuleOrder gord = ModuleOrder::graph(base, r, shifts);
  FreeSubmodule graph;
  graph.ring = ring;
  graph.rank = r + s;
  for (std::size_t i = 0; i < s; ++i) {
    PolyVec g = zero_vec(ring, r + s);
    for (std::size_t k = 0; k < r; ++k) g.c[k] = m.gens[i].c[k];
    g.c[r + i] = Polynomial::constant(ring, Scalar::one(ring->field));
    graph.gens.push_back(std::move(g));
  }

  auto gb = module_groebner(graph, gord);

  FreeSubmodule out;
  out.ring = ring;
  out.rank = s;
  for (const auto& v : gb) {
    bool front_zero = true;
    for (std::size_t k = 0; k < r && front_zero; ++k)
      if (!v.c[k].is_zero()) front_zero = false;
    if (!front_zero) continue;
    PolyVec w;
    w.c.assign(v.c.begin() + static_cast<std::ptrdiff_t>(r), v.c.end());
    out.gens.push_back(std::move(w));
  }
  return out;
}

}  // namespace socle
