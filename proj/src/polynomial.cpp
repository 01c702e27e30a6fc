#include "socle/polynomial.hpp"

#include <algorithm>

#include "socle/errors.hpp"

namespace socle {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    fail(ErrorCode::ring_mismatch, "polynomials from different rings");
  if (a.order() != b.order())
    fail(ErrorCode::order_mismatch, "polynomials sorted under different orders");
}

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ord_ = ring->order;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  std::size_t n = ring->nvars();
  return term(std::move(ring), std::move(c), Monomial::one(n));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Field f = ring->field;
  std::size_t n = ring->nvars();
  return term(std::move(ring), Scalar::one(f), Monomial::var(n, i));
}

Polynomial Polynomial::term(RingPtr ring, Scalar c, Monomial m) {
  Polynomial p = zero(std::move(ring));
  if (m.nvars() != p.ring_->nvars())
    fail(ErrorCode::ring_mismatch, "monomial size does not match ring");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> ts, MonomialOrder ord) {
  Polynomial p;
  p.ring_ = std::move(ring);
  p.ord_ = std::move(ord);
  p.terms_ = std::move(ts);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord_.greater(a.m, b.m);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = out.back().c + t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

const Scalar& Polynomial::lead_coeff() const {
  if (is_zero()) fail(ErrorCode::zero_polynomial, "leading coefficient of zero");
  return terms_.front().c;
}

const Monomial& Polynomial::lead_monomial() const {
  if (is_zero()) fail(ErrorCode::zero_polynomial, "leading monomial of zero");
  return terms_.front().m;
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long long>(t.m.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.degree() != terms_[0].m.degree()) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord_.compare(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) out.push_back(Term{std::move(s), terms_[i].m});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r;
  r.ring_ = ring_;
  r.ord_ = ord_;
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back(Term{a.c * b.c, a.m.times(b.m)});
  return from_terms(ring_, std::move(prod), ord_);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.c = t.c * c;
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.c = t.c * c;
    t.m = t.m.times(m);
  }
  return r;  // multiplicative orders preserve sortedness
}

Polynomial Polynomial::exact_div_term(const Scalar& c, const Monomial& m) const {
  Polynomial r(*this);
  Scalar inv = c.inverse();
  for (auto& t : r.terms_) {
    if (!m.divides(t.m))
      fail(ErrorCode::division_not_exact, "term division leaves remainder");
    t.c = t.c * inv;
    t.m = m.quotient_of(t.m);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(lead_coeff().inverse());
}

Polynomial Polynomial::resorted(const MonomialOrder& ord) const {
  if (ord == ord_) return *this;
  Polynomial r(*this);
  r.ord_ = ord;
  std::stable_sort(r.terms_.begin(), r.terms_.end(),
                   [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  return r;
}

Polynomial Polynomial::mapped(const RingPtr& target, const std::vector<std::size_t>& map) const {
  if (!(ring_->field == target->field))
    fail(ErrorCode::ring_mismatch, "variable map across different fields");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.m[i] == 0) continue;
      e[map[i]] += t.m[i];
    }
    ts.push_back(Term{t.c, Monomial(std::move(e))});
  }
  return from_terms(target, std::move(ts), target->order);
}

Polynomial Polynomial::substituted(std::size_t i, const Polynomial& value) const {
  std::uint32_t maxe = 0;
  for (const auto& t : terms_) maxe = std::max(maxe, t.m[i]);
  Polynomial v = value.resorted(ord_);
  std::vector<Polynomial> powers;
  powers.push_back(constant(ring_, Scalar::one(ring_->field)).resorted(ord_));
  for (std::uint32_t k = 1; k <= maxe; ++k) powers.push_back(powers.back() * v);
  Polynomial acc = zero(ring_).resorted(ord_);
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e = t.m.exponents();
    std::uint32_t k = e[i];
    e[i] = 0;
    acc = acc + powers[k].times_term(t.c, Monomial(std::move(e)));
  }
  return acc;
}

Polynomial Polynomial::truncated_below_degree(std::uint32_t bound) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.m.degree() < bound) ts.push_back(t);
  return from_terms(ring_, std::move(ts), ord_);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (ord_ == o.ord_) {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].c == o.terms_[i].c) || terms_[i].m != o.terms_[i].m) return false;
    return true;
  }
  return *this == o.resorted(ord_);
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool rational = ring_->field.is_rationals();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Scalar c = t.c;
    if (i == 0) {
      if (rational && c.sign() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      if (rational && c.sign() < 0) {
        s += " - ";
        c = -c;
      } else {
        s += " + ";
      }
    }
    if (t.m.is_one()) {
      s += c.str();
    } else if (c.is_one()) {
      s += t.m.str(ring_->vars);
    } else {
      s += c.str() + "*" + t.m.str(ring_->vars);
    }
  }
  return s;
}

std::pair<Scalar, Monomial> leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) fail(ErrorCode::zero_polynomial, "leading term of zero");
  std::size_t best = 0;
  const auto& ts = f.terms();
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ord.greater(ts[i].m, ts[best].m)) best = i;
  return {ts[best].c, ts[best].m};
}

}  // namespace socle
