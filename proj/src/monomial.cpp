#include "socle/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "socle/errors.hpp"

namespace socle {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
  deg_ = std::accumulate(e_.begin(), e_.end(), std::uint32_t{0});
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t k) {
  Monomial m(nvars);
  m.e_[i] = k;
  m.deg_ = k;
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  if (!divides(o)) fail(ErrorCode::division_not_exact, "monomial does not divide");
  Monomial r(o);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
  r.deg_ = o.deg_ - deg_;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s;
}

MonomialOrder MonomialOrder::elim(std::vector<std::uint8_t> eliminated) {
  return MonomialOrder(Kind::elim, std::move(eliminated));
}

namespace {

// grevlex restricted to the positions where mask matches `want`; a null mask
// selects every position.
int grevlex_cmp(const Monomial& a, const Monomial& b,
                const std::vector<std::uint8_t>* mask, std::uint8_t want) {
  std::int64_t da = 0, db = 0;
  std::size_t n = a.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (mask && (*mask)[i] != want) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars())
    fail(ErrorCode::ring_mismatch, "monomials with different variable counts");
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_cmp(a, b, nullptr, 0);
    case Kind::lex: {
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    case Kind::elim: {
      if (elim_.size() != a.nvars())
        fail(ErrorCode::order_mismatch, "elimination mask size mismatch");
      if (int c = grevlex_cmp(a, b, &elim_, 1)) return c;
      return grevlex_cmp(a, b, &elim_, 0);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::elim: {
      std::string s = "elim[";
      for (auto b : elim_) s += b ? '1' : '0';
      return s + "]";
    }
  }
  return "";
}

}  // namespace socle
