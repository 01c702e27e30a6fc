#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>

#include "corpus.hpp"
#include "socle/errors.hpp"
#include "socle/theorems.hpp"
#include "testkit.hpp"

using namespace socle;
using namespace socle::testkit;

namespace {

template <class F>
std::optional<ErrorCode> thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

BaseDescriptor QB() { return BaseDescriptor::prime_field(Field::rationals()); }

AlgebraPresentation alg(const std::string& name, std::vector<std::string> vars,
                        std::vector<std::string> rels, Mode mode = Mode::graded) {
  return AlgebraPresentation::make(name, QB(), std::move(vars), rels, mode);
}

AlgebraPresentation balg(const std::string& name, const BaseDescriptor& base,
                         std::vector<std::string> vars, std::vector<std::string> rels,
                         Mode mode = Mode::graded) {
  return AlgebraPresentation::make(name, base, std::move(vars), rels, mode);
}

BaseDescriptor dual_numbers() {
  return BaseDescriptor::over(AlgebraPresentation::make("R", QB(), {"t"}, {"t^2"}, Mode::graded));
}

// dim 1, depth 0: the cheapest base with a nonzero codepth term
BaseDescriptor seminormal_base() {
  return BaseDescriptor::over(
      AlgebraPresentation::make("R", QB(), {"s", "t"}, {"s^2", "s*t"}, Mode::graded));
}

// Artinian of type 2: exercises the division in the type formula
BaseDescriptor square_base() {
  return BaseDescriptor::over(
      AlgebraPresentation::make("R", QB(), {"s", "t"}, {"s^2", "s*t", "t^2"}, Mode::graded));
}

BaseDescriptor poly_base() {
  return BaseDescriptor::over(AlgebraPresentation::make("Rt", QB(), {"t"}, {}, Mode::graded));
}

const TheoremCheckResult& find(const std::vector<TheoremCheckResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.theorem == id) return r;
  FAIL("missing check result " << id);
  static TheoremCheckResult dummy;
  return dummy;
}

void check_num(const TheoremCheckResult& r, std::size_t lhs, std::size_t rhs) {
  CHECK(r.lhs == CheckValue::of(lhs));
  CHECK(r.rhs == CheckValue::of(rhs));
  CHECK(r.pass == (lhs == rhs));
}

}  // namespace

TEST_CASE("dimension sum over field and ring bases") {
  auto s1 = make_setup(alg("A", {"x"}, {}), alg("B", {"y"}, {}));
  check_num(check_dim(s1), 2, 2);

  auto s2 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {"u"}, {"u^2"}));
  check_num(check_dim(s2), 1, 1);

  auto s3 = make_setup(balg("A", dual_numbers(), {"x"}, {}), balg("B", dual_numbers(), {}, {}));
  check_num(check_dim(s3), 1, 1);
  CHECK(s3.flat_side == FlatSide::both);
  CHECK(s3.cert_a->kind == FlatKind::polynomial_extension);
}

TEST_CASE("depth sum over field and ring bases") {
  auto s1 = make_setup(alg("A", {"x"}, {"x^2"}), alg("B", {"y"}, {"y^2"}));
  check_num(check_depth(s1), 0, 0);

  auto s2 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {"u"}, {}));
  check_num(check_depth(s2), 1, 1);

  auto s3 = make_setup(balg("A", seminormal_base(), {"x"}, {}), balg("B", seminormal_base(), {}, {}));
  check_num(check_depth(s3), 1, 1);  // depth R = 0, so the -depth R term is silent here
}

TEST_CASE("codepth sum sees the base correction") {
  auto s1 = make_setup(alg("A", {"x"}, {}), alg("B", {"y"}, {}));
  check_num(check_codepth(s1), 0, 0);

  auto s2 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {"u"}, {"u^2"}));
  check_num(check_codepth(s2), 1, 1);

  // codepth A = codepth R = 1 and codepth B = 1: the sum only balances
  // because the base term is subtracted
  auto s3 = make_setup(balg("A", seminormal_base(), {"x"}, {}), balg("B", seminormal_base(), {}, {}));
  check_num(check_codepth(s3), 1, 1);
  CHECK(s3.report_r.codepth == 1);
}

TEST_CASE("injective dimension with saturating infinity") {
  auto s1 = make_setup(alg("A", {"x"}, {"x^2"}), alg("B", {"y"}, {"y^3"}));
  check_num(check_idd(s1), 0, 0);

  auto s2 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {}, {}));
  auto r2 = check_idd(s2);
  CHECK(r2.lhs == CheckValue::of(ExtendedNat::inf()));
  CHECK(r2.rhs == CheckValue::of(ExtendedNat::inf()));
  CHECK(r2.pass);

  auto s3 = make_setup(alg("A", {"x"}, {}), alg("B", {"y"}, {}));
  check_num(check_idd(s3), 2, 2);
}

TEST_CASE("type is multiplicative with exact division by the base type") {
  auto s1 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"}),
                       alg("B", {"x", "y"}, {"x^2", "x*y", "y^2"}));
  check_num(check_type(s1), 4, 4);
  CHECK(s1.report_a.type == 2);

  auto s2 = make_setup(balg("A", square_base(), {"x"}, {"x^2"}), balg("B", square_base(), {}, {}));
  check_num(check_type(s2), 2, 2);
  CHECK(s2.report_r.type == 2);
  CHECK(s2.report_a.type == 2);
  CHECK(s2.report_b.type == 2);

  auto s3 = make_setup(alg("A", {"x"}, {}), alg("B", {"y"}, {}));
  check_num(check_type(s3), 1, 1);
}

TEST_CASE("cid sum over field and ring bases") {
  auto s1 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"}),
                       alg("B", {"u", "v"}, {"u^2", "u*v", "v^2"}));
  check_num(check_cid(s1), 2, 2);
  CHECK(s1.report_product.mu == 6);

  auto s2 = make_setup(alg("A", {"x"}, {"x^2"}), alg("B", {"y"}, {"y^3"}));
  check_num(check_cid(s2), 0, 0);

  auto s3 = make_setup(balg("A", square_base(), {"x"}, {}), balg("B", square_base(), {}, {}));
  check_num(check_cid(s3), 1, 1);
  CHECK(s3.report_r.cid == 1);
}

TEST_CASE("codim and embdim demand a smoothness certificate") {
  auto s1 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {"u"}, {"u^3"}));
  check_num(check_codim(s1), 2, 2);
  check_num(check_embdim(s1), 3, 3);

  auto s2 = make_setup(balg("A", seminormal_base(), {"x"}, {}), balg("B", seminormal_base(), {}, {}));
  check_num(check_codim(s2), 1, 1);
  check_num(check_embdim(s2), 3, 3);

  auto s3 = make_setup(alg("A", {"x"}, {}), alg("B", {"y"}, {}));
  check_num(check_codim(s3), 0, 0);

  // flat via Tor vanishing only: no smoothness certificate, so the codim pair
  // is refused directly and skipped by the "all" battery
  auto s4 = make_setup(balg("A", dual_numbers(), {"x"}, {"x^2 - t"}, Mode::local),
                       balg("B", dual_numbers(), {"y"}, {"y^2 - t"}, Mode::local));
  CHECK(s4.cert_a->kind == FlatKind::tor1_vanishes);
  CHECK_FALSE(s4.smooth_certified());
  CHECK(thrown([&] { check_codim(s4); }) == ErrorCode::certificate_missing);
  CHECK(thrown([&] { run_checks(s4, "codim"); }) == ErrorCode::certificate_missing);
  for (const auto& r : run_checks(s4, "all")) {
    CHECK(r.theorem != "codim");
    CHECK(r.theorem != "embdim");
    CHECK(r.pass);
  }
}

TEST_CASE("flat homomorphism checks on a single algebra") {
  auto a1 = validate(balg("A", dual_numbers(), {"x"}, {}));
  check_num(check_flat_lambda(LambdaKind::dim, a1), 1, 1);

  auto a2 = validate(balg("A", square_base(), {"x"}, {}));
  check_num(check_flat_lambda(LambdaKind::cid, a2), 1, 1);
  check_num(check_flat_type(a2), 2, 2);

  auto a3 = validate(balg("A", dual_numbers(), {"x"}, {"x^2"}));
  check_num(check_flat_type(a3), 1, 1);

  auto a4 = validate(alg("A", {"x", "y"}, {"x^2", "x*y"}));
  check_num(check_flat_lambda(LambdaKind::depth, a4), 0, 0);
  check_num(check_flat_type(a4), 1, 1);
  auto ridd = check_flat_lambda(LambdaKind::idd, a4);
  CHECK(ridd.lhs == CheckValue::of(ExtendedNat::inf()));
  CHECK(ridd.pass);

  // no flatness, no check
  auto a5 = validate(balg("A", dual_numbers(), {}, {"t"}, Mode::local));
  CHECK(thrown([&] { check_flat_lambda(LambdaKind::dim, a5); }) == ErrorCode::certificate_missing);
}

TEST_CASE("property biconditionals") {
  auto s1 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {"u"}, {}));
  auto rs1 = check_equivalences(s1);
  const auto& cm = find(rs1, "equiv_cm");
  CHECK(cm.lhs == CheckValue::of_bool(false));
  CHECK(cm.rhs == CheckValue::of_bool(false));
  for (const auto& r : rs1) CHECK(r.pass);

  auto s2 = make_setup(alg("A", {"x"}, {"x^2"}), alg("B", {"y"}, {"y^2"}));
  auto rs2 = check_equivalences(s2);
  CHECK(find(rs2, "equiv_gorenstein").lhs == CheckValue::of_bool(true));
  for (const auto& r : rs2) CHECK(r.pass);

  auto s3 = make_setup(alg("A", {"x"}, {}), alg("B", {"y"}, {}));
  CHECK(find(check_equivalences(s3), "equiv_regular").lhs == CheckValue::of_bool(true));

  // almost complete intersection times complete intersection
  auto s4 = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"}), alg("B", {"y"}, {"y^2"}));
  auto rs4 = check_equivalences(s4);
  CHECK(find(rs4, "equiv_aci").lhs == CheckValue::of_bool(true));
  for (const auto& r : rs4) CHECK(r.pass);

  // non-CM base: the codepth-equality variant carries the content
  auto s5 = make_setup(balg("A", seminormal_base(), {"x"}, {}), balg("B", seminormal_base(), {}, {}));
  auto rs5 = check_equivalences(s5);
  CHECK(find(rs5, "equiv_cm_codepth").lhs == CheckValue::of_bool(false));
  for (const auto& r : rs5) CHECK(r.pass);
  // tor-certified setups have no regular entry
  auto s6 = make_setup(balg("A", dual_numbers(), {"x"}, {"x^2 - t"}, Mode::local),
                       balg("B", dual_numbers(), {"y"}, {"y^2 - t"}, Mode::local));
  for (const auto& r : check_equivalences(s6)) CHECK(r.theorem != "equiv_regular");
}

TEST_CASE("nontriviality against contraction of candidate primes") {
  auto a = balg("A", poly_base(), {}, {"t"}, Mode::affine);
  auto b = balg("B", poly_base(), {}, {"t - 1"}, Mode::affine);
  auto r1 = check_nontrivial(a, b);
  CHECK(r1.lhs == CheckValue::of_bool(false));  // tensor is the zero ring
  CHECK(r1.rhs == CheckValue::of_bool(false));  // (t) and (t - 1) contract apart
  CHECK(r1.pass);

  auto b2 = balg("B", poly_base(), {}, {"t"}, Mode::affine);
  auto r2 = check_nontrivial(a, b2);
  CHECK(r2.lhs == CheckValue::of_bool(true));
  CHECK(r2.rhs == CheckValue::of_bool(true));
  CHECK(r2.pass);

  // field base: nonzero algebras always survive tensoring
  auto r3 = check_nontrivial(alg("A", {"x"}, {"x^2"}), alg("B", {"y"}, {"y^3"}));
  CHECK(r3.lhs == CheckValue::of_bool(true));
  CHECK(r3.pass);

  // coprime irreducibles kill each other, a repeated one does not
  auto f = balg("A", poly_base(), {}, {"t^2 + 1"}, Mode::affine);
  auto g = balg("B", poly_base(), {}, {"t^2 + t + 1"}, Mode::affine);
  CHECK(check_nontrivial(f, g).pass);
  CHECK(check_nontrivial(f, f).pass);
  CHECK(check_nontrivial(f, f).lhs == CheckValue::of_bool(true));
}

TEST_CASE("battery order, filters, and determinism") {
  auto a = alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"});
  auto b = alg("B", {"u"}, {"u^3"});
  auto s = make_setup(a, b);
  auto all = run_checks(s, "all");
  CHECK(all.size() >= 10);
  for (const auto& r : all) CHECK(r.pass);
  CHECK(all[0].theorem == "dim");
  CHECK(find(all, "flat_dim(A)").pass);
  CHECK(find(all, "flat_type(B)").pass);

  auto only_cid = run_checks(s, "cid");
  CHECK(only_cid.size() == 3);  // tensor identity plus one flat check per factor
  CHECK(only_cid[0].theorem == "cid");
  CHECK(thrown([&] { run_checks(s, "bogus"); }) == ErrorCode::parse_error);

  // the seed feeds only internal regular-sequence draws; results are stable
  auto s2 = make_setup(a, b, 12345);
  auto all2 = run_checks(s2, "all");
  REQUIRE(all.size() == all2.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].theorem == all2[i].theorem);
    CHECK(all[i].lhs == all2[i].lhs);
    CHECK(all[i].rhs == all2[i].rhs);
  }
}

TEST_CASE("metamorphic: rename, permute, redundant generator, swap") {
  auto base_results = run_checks(
      make_setup(alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"}), alg("B", {"u"}, {"u^3"})), "all");

  auto renamed = run_checks(
      make_setup(alg("A", {"p", "q"}, {"p^2", "p*q", "q^2"}), alg("B", {"w"}, {"w^3"})), "all");
  auto permuted = run_checks(
      make_setup(alg("A", {"x", "y"}, {"y^2", "x*y", "x^2"}), alg("B", {"u"}, {"u^3"})), "all");
  auto redundant = run_checks(
      make_setup(alg("A", {"x", "y"}, {"x^2", "x*y", "y^2", "x^3 + y^3"}), alg("B", {"u"}, {"u^3"})),
      "all");
  for (const auto* other : {&renamed, &permuted, &redundant}) {
    REQUIRE(other->size() == base_results.size());
    for (std::size_t i = 0; i < base_results.size(); ++i) {
      CHECK(base_results[i].theorem == (*other)[i].theorem);
      CHECK(base_results[i].lhs == (*other)[i].lhs);
      CHECK(base_results[i].rhs == (*other)[i].rhs);
      CHECK(base_results[i].pass);
      CHECK((*other)[i].pass);
    }
  }

  auto swapped = run_checks(
      make_setup(alg("B", {"u"}, {"u^3"}), alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"})), "all");
  for (const char* id : {"dim", "depth", "codepth", "idd", "type", "cid", "codim", "embdim",
                         "equiv_cm", "equiv_gorenstein", "equiv_type_one", "equiv_ci", "equiv_aci",
                         "equiv_regular"}) {
    const auto& lr = find(base_results, id);
    const auto& rr = find(swapped, id);
    CHECK(lr.lhs == rr.lhs);
    CHECK(lr.rhs == rr.rhs);
    CHECK(lr.pass == rr.pass);
  }
}

TEST_CASE("curated corpus passes the whole battery") {
  auto corpus = theorem_corpus();
  CHECK(corpus.size() >= 30);
  for (const auto& e : corpus) {
    CAPTURE(e.label);
    auto s = make_setup(e.a, e.b);
    for (const auto& r : run_checks(s, "all")) {
      CAPTURE(r.theorem);
      CHECK_MESSAGE(r.pass, e.label << " / " << r.str());
    }
  }
}

TEST_CASE("result rendering") {
  auto s = make_setup(alg("A", {"x", "y"}, {"x^2", "x*y", "y^2"}),
                      alg("B", {"u", "v"}, {"u^2", "u*v", "v^2"}));
  auto r = check_cid(s);
  CHECK(r.str() == "cid: lhs 2 rhs 2 PASS");
  auto j = r.json();
  CHECK(j.find("\"theorem\":\"cid\"") != std::string::npos);
  CHECK(j.find("\"pass\":true") != std::string::npos);
  CHECK(j.find("\"operands\"") != std::string::npos);
  CHECK(j.find("\"R\"") != std::string::npos);
  CHECK(r.bundle.empty());

  auto rt = check_type(s);
  CHECK(rt.str() == "type: lhs 4 rhs 4 PASS");

  auto inf_case = check_idd(make_setup(alg("A", {"x", "y"}, {"x^2", "x*y"}), alg("B", {}, {})));
  CHECK(inf_case.json().find("\"lhs\":\"inf\"") != std::string::npos);
}
