#include "socle/parse.hpp"

#include <cctype>

#include "socle/errors.hpp"

namespace socle {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void err(const std::string& what) {
    fail(ErrorCode::parse_error, what + " at position " + std::to_string(i) +
                                     " in \"" + std::string(s) + "\"");
  }
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_ident(Cursor& cur) {
  cur.skip_ws();
  std::size_t b = cur.i;
  while (cur.i < cur.s.size() && ident_char(cur.s[cur.i])) ++cur.i;
  return std::string(cur.s.substr(b, cur.i - b));
}

mpz_class read_integer(Cursor& cur) {
  cur.skip_ws();
  std::size_t b = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i == b) cur.err("expected integer");
  return mpz_class(std::string(cur.s.substr(b, cur.i - b)), 10);
}

std::uint32_t read_exponent(Cursor& cur) {
  mpz_class e = read_integer(cur);
  if (e < 0 || e > 100000) cur.err("exponent out of range");
  return static_cast<std::uint32_t>(e.get_ui());
}

// One term: factors joined by '*'. Numeric factors multiply into the
// coefficient, variable factors into the monomial.
Term read_term(Cursor& cur, const RingPtr& ring) {
  Scalar coeff = Scalar::one(ring->field);
  Monomial mono = Monomial::one(ring->nvars());
  bool first = true;
  for (;;) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = read_integer(cur);
      if (cur.eat('/')) {
        mpz_class den = read_integer(cur);
        if (den == 0) cur.err("zero denominator");
        coeff = coeff * Scalar::of_fraction(ring->field, num, den);
      } else {
        coeff = coeff * Scalar::of_mpz(ring->field, num);
      }
    } else if (ident_start(c)) {
      std::string name = read_ident(cur);
      auto idx = ring->var_index(name);
      if (!idx) cur.err("unknown variable \"" + name + "\"");
      std::uint32_t e = 1;
      if (cur.eat('^')) e = read_exponent(cur);
      mono = mono.times(Monomial::var(ring->nvars(), *idx, e));
    } else if (first) {
      cur.err("expected term");
    } else {
      cur.err("expected factor");
    }
    first = false;
    if (!cur.eat('*')) break;
  }
  return Term{std::move(coeff), std::move(mono)};
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Cursor cur{text};
  std::vector<Term> terms;
  bool neg = false;
  if (cur.eat('-'))
    neg = true;
  else
    cur.eat('+');
  for (;;) {
    Term t = read_term(cur, ring);
    if (neg) t.c = -t.c;
    terms.push_back(std::move(t));
    if (cur.done()) break;
    if (cur.eat('+')) {
      neg = false;
    } else if (cur.eat('-')) {
      neg = true;
    } else {
      cur.err("expected + or -");
    }
  }
  return Polynomial::from_terms(ring, std::move(terms), ring->order);
}

}  // namespace socle
