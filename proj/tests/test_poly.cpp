#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "socle/errors.hpp"
#include "testkit.hpp"

using namespace socle;
using namespace socle::testkit;

TEST_CASE("rational scalars are exact and reduced") {
  Field q = Field::rationals();
  Scalar a = Scalar::of_fraction(q, 2, 4);
  CHECK(a.str() == "1/2");
  Scalar b = Scalar::of_fraction(q, 1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a - a).is_zero());
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(a.inverse().str() == "2");
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
}

TEST_CASE("prime field residues stay in range") {
  Field f = Field::prime(32003);
  Scalar a = Scalar::of_int(f, -1);
  CHECK(a.res() == 32002);
  Scalar b = Scalar::of_int(f, 32003);
  CHECK(b.is_zero());
  Scalar c = Scalar::of_int(f, 12345);
  CHECK((c * c.inverse()).is_one());
  CHECK((a + Scalar::one(f)).is_zero());
  Scalar big = Scalar::of_mpz(f, mpz_class("123456789012345678901234567890"));
  CHECK(big.res() < 32003);
  CHECK_THROWS_AS(Field::prime(32004), Error);
}

TEST_CASE("mixing fields is rejected") {
  Scalar a = Scalar::of_int(Field::rationals(), 1);
  Scalar b = Scalar::of_int(Field::prime(7), 1);
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("monomial arithmetic") {
  Monomial x2y = Monomial({2, 1, 0});
  Monomial yz = Monomial({0, 1, 1});
  CHECK(x2y.degree() == 3);
  CHECK(x2y.times(yz) == Monomial({2, 2, 1}));
  CHECK(Monomial::lcm(x2y, yz) == Monomial({2, 1, 1}));
  CHECK(Monomial::gcd(x2y, yz) == Monomial({0, 1, 0}));
  CHECK(yz.divides(x2y.times(yz)));
  CHECK(!yz.divides(x2y));
  CHECK(yz.quotient_of(x2y.times(yz)) == x2y);
  CHECK(!x2y.coprime(yz));
  CHECK(Monomial({1, 0, 0}).coprime(Monomial({0, 0, 2})));
}

TEST_CASE("grevlex order") {
  auto ord = MonomialOrder::grevlex();
  // degree first
  CHECK(ord.greater(Monomial({2, 0}), Monomial({1, 0})));
  // x^2 > x*y > y^2, and x > y
  CHECK(ord.greater(Monomial({2, 0}), Monomial({1, 1})));
  CHECK(ord.greater(Monomial({1, 1}), Monomial({0, 2})));
  CHECK(ord.greater(Monomial({1, 0}), Monomial({0, 1})));
  // classic grevlex vs lex separation: x*z^2 vs y^3 under x>y>z
  CHECK(ord.greater(Monomial({0, 3, 0}), Monomial({1, 0, 2})));
}

TEST_CASE("lex order") {
  auto ord = MonomialOrder::lex();
  CHECK(ord.greater(Monomial({1, 0, 2}), Monomial({0, 3, 0})));
  CHECK(ord.greater(Monomial({1, 1}), Monomial({1, 0})));
}

TEST_CASE("elimination order pushes eliminated variables forward") {
  // eliminate the first variable of three
  auto ord = MonomialOrder::elim({1, 0, 0});
  CHECK(ord.greater(Monomial({1, 0, 0}), Monomial({0, 5, 5})));
  CHECK(ord.greater(Monomial({0, 2, 0}), Monomial({0, 1, 1})) ==
        MonomialOrder::grevlex().greater(Monomial({2, 0}), Monomial({1, 1})));
}

TEST_CASE("order properties hold on random monomials") {
  Rng rng(7);
  std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                                       MonomialOrder::elim({1, 1, 0, 0})};
  for (const auto& ord : orders) {
    for (int it = 0; it < 400; ++it) {
      Monomial a = random_monomial(rng, 4, 6);
      Monomial b = random_monomial(rng, 4, 6);
      Monomial c = random_monomial(rng, 4, 6);
      int ab = ord.compare(a, b);
      CHECK(ord.compare(b, a) == -ab);
      CHECK((ab == 0) == (a == b));
      // multiplicative
      CHECK(ord.compare(a.times(c), b.times(c)) == ab);
      // 1 is minimal
      if (!a.is_one()) CHECK(ord.greater(a, Monomial::one(4)));
    }
  }
}

TEST_CASE("polynomial arithmetic basics") {
  auto r = QQ({"x", "y"});
  auto f = P(r, "x^2 + 2*x*y - 3");
  auto g = P(r, "x^2 - 1");
  CHECK((f - f).is_zero());
  CHECK((f + g).str() == "2*x^2 + 2*x*y - 4");
  CHECK((f * g).str() == "x^4 + 2*x^3*y - 4*x^2 - 2*x*y + 3");
  CHECK(f.degree() == 2);
  CHECK(!f.is_homogeneous());
  CHECK(P(r, "x^2 + x*y").is_homogeneous());
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "x - x").is_zero());
  CHECK(f.lead_monomial() == Monomial({2, 0}));
  CHECK(f.lead_coeff().is_one());
}

TEST_CASE("terms are strictly descending without zeros") {
  auto r = QQ({"x", "y"});
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    auto f = random_polynomial(rng, r, 5, 8);
    auto g = random_polynomial(rng, r, 5, 8);
    auto h = f * g + f - g;
    const auto& ts = h.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(!ts[i].c.is_zero());
      if (i + 1 < ts.size()) CHECK(h.order().greater(ts[i].m, ts[i + 1].m));
    }
    // ring laws
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("scaling and exact term division") {
  auto r = QQ({"x", "y"});
  auto f = P(r, "2*x^2*y + 4*x*y^2");
  auto half = Scalar::of_fraction(r->field, 1, 2);
  CHECK(f.scaled(half).str() == "x^2*y + 2*x*y^2");
  auto q = f.exact_div_term(Scalar::of_int(r->field, 2), Monomial({1, 1}));
  CHECK(q.str() == "x + 2*y");
  CHECK_THROWS_AS(f.exact_div_term(Scalar::one(r->field), Monomial({2, 0})), Error);
  CHECK(P(r, "3*x^2 - 6").monic().str() == "x^2 - 2");
}

TEST_CASE("resorting between orders preserves the polynomial") {
  auto r = QQ({"x", "y", "z"});
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    auto f = random_polynomial(rng, r, 6, 10);
    auto g = f.resorted(MonomialOrder::lex());
    CHECK(f == g);
    CHECK(g.resorted(MonomialOrder::grevlex()) == f);
  }
}

TEST_CASE("leading term under a foreign order without resorting") {
  auto r = QQ({"x", "y", "z"});
  auto f = P(r, "x*z^2 + y^3");
  CHECK(f.lead_monomial() == Monomial({0, 3, 0}));
  auto [c, m] = leading_term(f, MonomialOrder::lex());
  CHECK(m == Monomial({1, 0, 2}));
  CHECK(c.is_one());
}

TEST_CASE("variable maps between rings") {
  auto small = QQ({"x", "y"});
  auto big = QQ({"t", "x", "y"});
  auto f = P(small, "x^2 - y");
  auto g = f.mapped(big, {1, 2});
  CHECK(g == P(big, "x^2 - y"));
}

TEST_CASE("substitution") {
  auto r = QQ({"x", "y"});
  auto f = P(r, "x^2 + x*y + y^2");
  CHECK(f.substituted(0, P(r, "y")) == P(r, "3*y^2"));
  CHECK(f.substituted(0, P(r, "0")) == P(r, "y^2"));
  auto g = P(r, "x^3 - y");
  CHECK(g.substituted(0, P(r, "y^2")) == P(r, "y^6 - y"));
}

TEST_CASE("parser grammar") {
  auto r = QQ({"x", "y"});
  CHECK(P(r, "  x ^ 2 * y - 1/2 ") == P(r, "x^2*y - 1/2"));
  CHECK(P(r, "-x + 1") == P(r, "1 - x"));
  CHECK(P(r, "+x - 1") == P(r, "x - 1"));
  CHECK(P(r, "3/6*x") == P(r, "1/2*x"));
  CHECK(P(r, "2*3*x*x") == P(r, "6*x^2"));
  CHECK_THROWS_AS(P(r, "z + 1"), Error);
  CHECK_THROWS_AS(P(r, "x +"), Error);
  CHECK_THROWS_AS(P(r, "1/0"), Error);
  CHECK_THROWS_AS(P(r, "x y"), Error);
  CHECK_THROWS_AS(P(r, ""), Error);
}

TEST_CASE("parser round trips printing") {
  auto r = QQ({"x", "y", "z"});
  Rng rng(23);
  for (int it = 0; it < 150; ++it) {
    auto f = random_polynomial(rng, r, 5, 7);
    CHECK(P(r, f.str()) == f);
  }
  auto rp = FP({"x", "y"});
  for (int it = 0; it < 50; ++it) {
    auto f = random_polynomial(rng, rp, 5, 7);
    CHECK(parse_polynomial(rp, f.str()) == f);
  }
}

TEST_CASE("prime field polynomials") {
  auto r = FP({"x", "y"}, 7);
  auto f = P(r, "3*x + 4*x");
  CHECK(f.is_zero());
  CHECK(P(r, "1/2*x") == P(r, "4*x"));
  CHECK(P(r, "-x") == P(r, "6*x"));
}
