#include "socle/hilbert.hpp"

#include <algorithm>

#include "socle/errors.hpp"

namespace socle {

namespace {

using ZPoly = std::vector<mpz_class>;

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_add_shifted(const ZPoly& a, const ZPoly& b, std::size_t k) {
  ZPoly out = a;
  if (out.size() < b.size() + k) out.resize(b.size() + k, 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
  zp_trim(out);
  return out;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  zp_trim(out);
  return out;
}

mpz_class zp_at_one(const ZPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a) s += c;
  return s;
}

// exact division by (1 - T); caller checks zp_at_one == 0
ZPoly zp_div_one_minus_t(const ZPoly& a) {
  if (a.empty()) return {};
  ZPoly out(a.size() - 1, 0);
  mpz_class run = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    run += a[i];
    out[i] = run;
  }
  zp_trim(out);
  return out;
}

// numerator of the series of R/(ms) over (1 - T)^nvars, for a minimal
// monomial generating set. Splits on a pivot variable via the exact sequence
// relating I, I + (v) and I : v; the total degree of the generating set
// drops on both branches, which bounds the recursion.
ZPoly numerator_rec(std::vector<Monomial> ms, std::size_t nvars) {
  if (ms.empty()) return {1};
  for (const auto& m : ms)
    if (m.degree() == 0) return {};

  bool pure = true;
  for (const auto& m : ms) {
    std::size_t supp = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++supp;
    if (supp > 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    // distinct variables after minimalization: product of (1 - T^deg)
    ZPoly out{1};
    for (const auto& m : ms) {
      ZPoly f(static_cast<std::size_t>(m.degree()) + 1, 0);
      f[0] = 1;
      f[static_cast<std::size_t>(m.degree())] = -1;
      out = zp_mul(out, f);
    }
    return out;
  }

  // pivot: the most frequent variable among those occurring in a mixed
  // generator (a pure-power generator must never be chosen, or the sum
  // branch would not shrink)
  std::vector<std::size_t> count(nvars, 0);
  std::vector<char> mixed(nvars, 0);
  for (const auto& m : ms) {
    std::size_t supp = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++supp;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) {
        ++count[i];
        if (supp > 1) mixed[i] = 1;
      }
  }
  std::size_t v = nvars;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!mixed[i]) continue;
    if (v == nvars || count[i] > count[v]) v = i;
  }

  std::vector<Monomial> sum;
  sum.push_back(Monomial::var(nvars, v));
  std::vector<Monomial> quo;
  for (const auto& m : ms) {
    if (m[v] == 0) {
      sum.push_back(m);
      quo.push_back(m);
    } else {
      quo.push_back(Monomial::var(nvars, v).quotient_of(m));
    }
  }
  quo = minimalize_monomials(std::move(quo));

  ZPoly a = numerator_rec(std::move(sum), nvars);
  ZPoly b = numerator_rec(std::move(quo), nvars);
  return zp_add_shifted(a, b, 1);
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
  std::stable_sort(ms.begin(), ms.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool dominated = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

HilbertSeries::HilbertSeries(std::vector<mpz_class> numerator, std::size_t nvars)
    : num_(std::move(numerator)), nvars_(nvars) {
  zp_trim(num_);
}

std::size_t HilbertSeries::pole_order() const {
  if (num_.empty()) return 0;
  ZPoly n = num_;
  std::size_t s = 0;
  while (!n.empty() && s < nvars_ && zp_at_one(n) == 0) {
    n = zp_div_one_minus_t(n);
    ++s;
  }
  return nvars_ - s;
}

std::vector<mpz_class> HilbertSeries::reduced_numerator() const {
  ZPoly n = num_;
  std::size_t s = 0;
  while (!n.empty() && s < nvars_ && zp_at_one(n) == 0) {
    n = zp_div_one_minus_t(n);
    ++s;
  }
  return n;
}

mpz_class HilbertSeries::coefficient(std::uint32_t d) const {
  mpz_class out = 0;
  if (nvars_ == 0) {
    if (d < num_.size()) out = num_[d];
    return out;
  }
  for (std::size_t j = 0; j < num_.size() && j <= d; ++j) {
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), d - j + nvars_ - 1, nvars_ - 1);
    out += num_[j] * bin;
  }
  return out;
}

mpz_class HilbertSeries::total_dimension() const {
  ZPoly n = num_;
  std::size_t s = 0;
  while (!n.empty() && s < nvars_ && zp_at_one(n) == 0) {
    n = zp_div_one_minus_t(n);
    ++s;
  }
  if (s != nvars_ && !n.empty())
    fail(ErrorCode::not_artinian, "series has a pole at T = 1, total dimension is infinite");
  return zp_at_one(n);
}

std::string HilbertSeries::str() const {
  auto poly_str = [](const ZPoly& p) {
    if (p.empty()) return std::string("0");
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      mpz_class a = p[i];
      if (first) {
        if (a < 0) s += "-", a = -a;
      } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      bool show_coeff = a != 1 || i == 0;
      if (show_coeff) s += a.get_str();
      if (i > 0) {
        if (show_coeff) s += "*";
        s += "T";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    if (first) return std::string("0");
    return s;
  };
  std::string s = "(" + poly_str(num_) + ")";
  if (nvars_ > 0) s += " / (1 - T)^" + std::to_string(nvars_);
  return s;
}

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> lead, std::size_t nvars) {
  return HilbertSeries(numerator_rec(minimalize_monomials(std::move(lead)), nvars), nvars);
}

HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  return hilbert_series_of_monomials(gb.lead_monomials(), gb.ring()->nvars());
}

namespace {

std::size_t min_cover(std::vector<std::vector<std::size_t>> supports, std::size_t best_known) {
  if (supports.empty()) return 0;
  if (best_known == 0) return best_known + 1;  // cannot beat, prune
  std::size_t pick = 0;
  for (std::size_t i = 1; i < supports.size(); ++i)
    if (supports[i].size() < supports[pick].size()) pick = i;
  std::size_t best = best_known;
  for (std::size_t v : supports[pick]) {
    std::vector<std::vector<std::size_t>> rest;
    for (const auto& s : supports)
      if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(s);
    std::size_t sub = 1 + min_cover(std::move(rest), best - 1);
    if (sub < best) best = sub;
  }
  return best;
}

}  // namespace

std::size_t krull_dim_monomial(const std::vector<Monomial>& lead, std::size_t nvars) {
  auto ms = minimalize_monomials(lead);
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : ms) {
    if (m.degree() == 0)
      fail(ErrorCode::internal_error, "dimension requested for the zero ring");
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) s.push_back(i);
    supports.push_back(std::move(s));
  }
  return nvars - min_cover(std::move(supports), nvars);
}

}  // namespace socle
