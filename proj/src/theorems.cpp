#include "socle/theorems.hpp"

#include <utility>

#include "json.hpp"
#include "socle/errors.hpp"

namespace socle {

std::string CheckValue::str() const {
  if (kind == Kind::boolean) return flag ? "true" : "false";
  return num.str();
}

std::string TheoremCheckResult::str() const {
  return theorem + ": lhs " + lhs.str() + " rhs " + rhs.str() + (pass ? " PASS" : " FAIL");
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json value_json(const CheckValue& v) {
  if (v.kind == CheckValue::Kind::boolean) return v.flag;
  if (!v.num.finite) return "inf";
  return v.num.value;
}

ordered_json operand_entry(const std::string& name, const InvariantReport* r) {
  ordered_json j;
  j["name"] = name;
  j["report"] = r ? ordered_json::parse(r->json()) : ordered_json(nullptr);
  return j;
}

std::string snapshot(const std::string& rname, const InvariantReport* rr, const std::string& aname,
                     const InvariantReport* ra, const std::string& bname, const InvariantReport* rb) {
  ordered_json j;
  j["R"] = operand_entry(rname, rr);
  j["A"] = operand_entry(aname, ra);
  j["B"] = operand_entry(bname, rb);
  return j.dump();
}

std::string repro_bundle(const TensorSetup& s) {
  std::string b = "seed " + std::to_string(s.seed) + "\n";
  if (!s.base_is_field()) b += "R: " + s.a.pres.base.algebra->str() + "\n";
  b += "A: " + s.a.pres.str() + "\n";
  b += "B: " + s.b.pres.str() + "\n";
  b += "product: " + s.product.pres.str() + "\n";
  return b;
}

TheoremCheckResult result_of(std::string id, CheckValue lhs, CheckValue rhs, std::string operands,
                             const std::string& bundle_src) {
  TheoremCheckResult r;
  r.theorem = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs == rhs;
  r.operands = std::move(operands);
  if (!r.pass) r.bundle = bundle_src;
  return r;
}

TheoremCheckResult result_of(const TensorSetup& s, std::string id, CheckValue lhs, CheckValue rhs) {
  return result_of(std::move(id), lhs, rhs, s.operands, repro_bundle(s));
}

/// a + b - r in naturals. The combination cannot go negative when the operand
/// reports are internally consistent; a dip below zero means the engine
/// contradicted itself, not that a theorem failed.
CheckValue sum_minus(std::size_t a, std::size_t b, std::size_t r) {
  if (a + b < r) fail(ErrorCode::internal_error, "invariant combination went negative");
  return CheckValue::of(a + b - r);
}

/// Invariant report of the base: the zero report of the prime field, or the
/// full report of the base algebra viewed over its own prime field.
InvariantReport base_report(const BaseDescriptor& base, std::uint64_t seed) {
  if (!base.is_field()) return report(validate(*base.algebra), seed);
  auto field_pres = AlgebraPresentation::make("k", base, {}, {}, Mode::graded);
  return report(validate(field_pres), seed);
}

InvariantReport closed_fiber_report(const AlgebraPresentation& p, std::uint64_t seed) {
  return report(validate(quotient_mod_base(p)), seed);
}

std::optional<FlatnessCertificate> try_certify(const AlgebraPresentation& p) {
  try {
    return certify_flatness(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::certificate_missing) throw;
    return std::nullopt;
  }
}

/// The certified factor's report, the other factor's report, and the closed
/// fiber of the certified factor, oriented so every fiber-using identity can
/// read them without caring which side carries the certificate.
struct Oriented {
  const InvariantReport* flat;
  const InvariantReport* other;
  const InvariantReport* fiber;
};

Oriented orient(const TensorSetup& s) {
  if (s.flat_side == FlatSide::b) return {&s.report_b, &s.report_a, &*s.fiber_b};
  return {&s.report_a, &s.report_b, &*s.fiber_a};
}

CheckValue lambda_value(LambdaKind k, const InvariantReport& r) {
  switch (k) {
    case LambdaKind::dim: return CheckValue::of(r.dim);
    case LambdaKind::depth: return CheckValue::of(r.depth);
    case LambdaKind::codepth: return CheckValue::of(r.codepth);
    case LambdaKind::cid: return CheckValue::of(r.cid);
    case LambdaKind::idd: return CheckValue::of(r.idd);
  }
  fail(ErrorCode::internal_error, "unhandled lambda kind");
}

TheoremCheckResult flat_lambda_result(LambdaKind kind, const InvariantReport& rr,
                                      const InvariantReport& ra, const InvariantReport& fib,
                                      std::string id, std::string operands, std::string bundle_src) {
  CheckValue lhs = lambda_value(kind, ra);
  CheckValue base = lambda_value(kind, rr);
  CheckValue fibv = lambda_value(kind, fib);
  CheckValue rhs = CheckValue::of(base.num + fibv.num);
  return result_of(std::move(id), lhs, rhs, std::move(operands), bundle_src);
}

TheoremCheckResult flat_type_result(const InvariantReport& rr, const InvariantReport& ra,
                                    const InvariantReport& fib, std::string id,
                                    std::string operands, const std::string& bundle_src) {
  // Over positive integers the product form subsumes the type-one
  // biconditional: 1 = r * f forces r = f = 1.
  CheckValue lhs = CheckValue::of(ra.type);
  CheckValue rhs = CheckValue::of(rr.type * fib.type);
  return result_of(std::move(id), lhs, rhs, std::move(operands), bundle_src);
}

std::string single_bundle(const AlgebraPresentation& p, std::uint64_t seed) {
  std::string b = "seed " + std::to_string(seed) + "\n";
  if (!p.base.is_field()) b += "R: " + p.base.algebra->str() + "\n";
  b += "A: " + p.str() + "\n";
  return b;
}

void require_smooth(const TensorSetup& s) {
  if (!s.smooth_certified())
    fail(ErrorCode::certificate_missing,
         "no formal smoothness certificate: need a polynomial extension factor or a prime field base");
}

}  // namespace

std::string TheoremCheckResult::json() const {
  ordered_json j;
  j["theorem"] = theorem;
  j["lhs"] = value_json(lhs);
  j["rhs"] = value_json(rhs);
  j["pass"] = pass;
  j["operands"] = operands.empty() ? ordered_json(nullptr) : ordered_json::parse(operands);
  return j.dump();
}

const char* flat_side_name(FlatSide s) {
  switch (s) {
    case FlatSide::a: return "A";
    case FlatSide::b: return "B";
    case FlatSide::both: return "both";
  }
  return "?";
}

const char* lambda_kind_name(LambdaKind k) {
  switch (k) {
    case LambdaKind::dim: return "dim";
    case LambdaKind::depth: return "depth";
    case LambdaKind::codepth: return "codepth";
    case LambdaKind::cid: return "cid";
    case LambdaKind::idd: return "idd";
  }
  return "?";
}

bool TensorSetup::smooth_certified() const {
  if (base_is_field()) return true;
  if (cert_a && cert_a->kind == FlatKind::polynomial_extension) return true;
  if (cert_b && cert_b->kind == FlatKind::polynomial_extension) return true;
  return false;
}

TensorSetup make_setup(const AlgebraPresentation& a, const AlgebraPresentation& b,
                       std::uint64_t seed) {
  std::optional<FlatnessCertificate> ca = try_certify(a);
  std::optional<FlatnessCertificate> cb = try_certify(b);
  if (!ca && !cb)
    fail(ErrorCode::certificate_missing,
         "neither factor certifies as flat over " + a.base.str());
  TensorSetup s{validate(a), validate(b), validate(tensor_product(a, b))};
  s.seed = seed;
  s.cert_a = std::move(ca);
  s.cert_b = std::move(cb);
  s.flat_side = s.cert_a && s.cert_b ? FlatSide::both : (s.cert_a ? FlatSide::a : FlatSide::b);
  s.report_r = base_report(a.base, seed);
  s.report_a = report(s.a, seed);
  s.report_b = report(s.b, seed);
  s.report_product = report(s.product, seed);
  if (s.cert_a) s.fiber_a = closed_fiber_report(a, seed);
  if (s.cert_b) s.fiber_b = closed_fiber_report(b, seed);
  s.operands = snapshot(a.base.str(), &s.report_r, a.name, &s.report_a, b.name, &s.report_b);
  return s;
}

TheoremCheckResult check_dim(const TensorSetup& s) {
  return result_of(s, "dim", CheckValue::of(s.report_product.dim),
                   sum_minus(s.report_a.dim, s.report_b.dim, s.report_r.dim));
}

TheoremCheckResult check_depth(const TensorSetup& s) {
  return result_of(s, "depth", CheckValue::of(s.report_product.depth),
                   sum_minus(s.report_a.depth, s.report_b.depth, s.report_r.depth));
}

TheoremCheckResult check_codepth(const TensorSetup& s) {
  return result_of(s, "codepth", CheckValue::of(s.report_product.codepth),
                   sum_minus(s.report_a.codepth, s.report_b.codepth, s.report_r.codepth));
}

TheoremCheckResult check_cid(const TensorSetup& s) {
  return result_of(s, "cid", CheckValue::of(s.report_product.cid),
                   sum_minus(s.report_a.cid, s.report_b.cid, s.report_r.cid));
}

TheoremCheckResult check_idd(const TensorSetup& s) {
  Oriented o = orient(s);
  return result_of(s, "idd", CheckValue::of(s.report_product.idd),
                   CheckValue::of(o.fiber->idd + o.other->idd));
}

TheoremCheckResult check_type(const TensorSetup& s) {
  std::size_t ta = s.report_a.type, tb = s.report_b.type, tr = s.report_r.type;
  if ((ta * tb) % tr != 0)
    fail(ErrorCode::divisibility_violation,
         "type(A)*type(B) = " + std::to_string(ta * tb) + " is not divisible by type(R) = " +
             std::to_string(tr));
  return result_of(s, "type", CheckValue::of(s.report_product.type),
                   CheckValue::of(ta * tb / tr));
}

TheoremCheckResult check_codim(const TensorSetup& s) {
  require_smooth(s);
  return result_of(s, "codim", CheckValue::of(s.report_product.codim),
                   sum_minus(s.report_a.codim, s.report_b.codim, s.report_r.codim));
}

TheoremCheckResult check_embdim(const TensorSetup& s) {
  require_smooth(s);
  return result_of(s, "embdim", CheckValue::of(s.report_product.embdim),
                   sum_minus(s.report_a.embdim, s.report_b.embdim, s.report_r.embdim));
}

std::vector<TheoremCheckResult> check_equivalences(const TensorSetup& s) {
  Oriented o = orient(s);
  const InvariantReport& rr = s.report_r;
  const InvariantReport& rp = s.report_product;
  const InvariantReport& fl = *o.flat;
  const InvariantReport& ot = *o.other;
  const InvariantReport& fib = *o.fiber;
  std::vector<TheoremCheckResult> out;
  auto both = [&](const char* id, bool lhs, bool rhs) {
    out.push_back(result_of(s, id, CheckValue::of_bool(lhs), CheckValue::of_bool(rhs)));
  };
  both("equiv_cm", rp.cm, fib.cm && ot.cm);
  both("equiv_cm_codepth", rp.cm, ot.cm && fl.codepth == rr.codepth);
  both("equiv_gorenstein", rp.gorenstein, fib.gorenstein && ot.gorenstein);
  both("equiv_type_one", rp.type == 1, fib.type == 1 && ot.type == 1);
  both("equiv_ci", rp.ci, fib.ci && ot.ci);
  both("equiv_ci_cid", rp.ci, ot.ci && fl.cid == rr.cid);
  both("equiv_aci", rp.aci, (fib.ci && ot.aci) || (fib.aci && ot.ci));
  if (s.smooth_certified()) both("equiv_regular", rp.regular, fib.regular && ot.regular);
  return out;
}

TheoremCheckResult check_flat_lambda(LambdaKind kind, const LocalAlgebra& a, std::uint64_t seed) {
  certify_flatness(a.pres);
  InvariantReport rr = base_report(a.pres.base, seed);
  InvariantReport ra = report(a, seed);
  InvariantReport fib = closed_fiber_report(a.pres, seed);
  std::string ops = snapshot(a.pres.base.str(), &rr, a.pres.name, &ra, "", nullptr);
  return flat_lambda_result(kind, rr, ra, fib, std::string("flat_") + lambda_kind_name(kind),
                            std::move(ops), single_bundle(a.pres, seed));
}

TheoremCheckResult check_flat_type(const LocalAlgebra& a, std::uint64_t seed) {
  certify_flatness(a.pres);
  InvariantReport rr = base_report(a.pres.base, seed);
  InvariantReport ra = report(a, seed);
  InvariantReport fib = closed_fiber_report(a.pres, seed);
  std::string ops = snapshot(a.pres.base.str(), &rr, a.pres.name, &ra, "", nullptr);
  return flat_type_result(rr, ra, fib, "flat_type", std::move(ops), single_bundle(a.pres, seed));
}

TheoremCheckResult check_nontrivial(const AlgebraPresentation& a, const AlgebraPresentation& b,
                                    const std::vector<Polynomial>& prime_a,
                                    const std::vector<Polynomial>& prime_b) {
  bool nontrivial = !tensor_is_trivial(tensor_product(a, b));
  bool contractions_equal = true;
  if (!a.base.is_field()) {
    Ideal ca = contract_to_base(a, prime_a);
    Ideal cb = contract_to_base(b, prime_b);
    contractions_equal = ideal_equal(ca, cb);
  }
  std::string ops = snapshot(a.base.str(), nullptr, a.name, nullptr, b.name, nullptr);
  std::string bundle = "A: " + a.str() + "\nB: " + b.str() + "\n";
  return result_of("nontrivial", CheckValue::of_bool(nontrivial),
                   CheckValue::of_bool(contractions_equal), std::move(ops), bundle);
}

std::vector<TheoremCheckResult> run_checks(const TensorSetup& s, const std::string& filter) {
  static const char* known[] = {"all", "dim", "depth", "codepth", "idd", "type", "cid", "codim",
                                "equiv"};
  bool ok = false;
  for (const char* k : known) ok = ok || filter == k;
  if (!ok) fail(ErrorCode::parse_error, "unknown theorem filter '" + filter + "'");

  auto want = [&](const char* f) { return filter == "all" || filter == f; };
  std::vector<TheoremCheckResult> out;
  if (want("dim")) out.push_back(check_dim(s));
  if (want("depth")) out.push_back(check_depth(s));
  if (want("codepth")) out.push_back(check_codepth(s));
  if (want("idd")) out.push_back(check_idd(s));
  if (want("type")) out.push_back(check_type(s));
  if (want("cid")) out.push_back(check_cid(s));
  if (filter == "codim" || (filter == "all" && s.smooth_certified())) {
    out.push_back(check_codim(s));
    out.push_back(check_embdim(s));
  }
  if (want("equiv"))
    for (auto& r : check_equivalences(s)) out.push_back(std::move(r));

  // The flat-homomorphism layer, once per certified factor, filed under the
  // filter of the matching invariant.
  auto flat_layer = [&](const LocalAlgebra& alg, const InvariantReport& ra,
                        const InvariantReport& fib, const char* tag) {
    InvariantReport rr = s.report_r;
    std::string ops = snapshot(alg.pres.base.str(), &rr, alg.pres.name, &ra, "", nullptr);
    std::string bundle = single_bundle(alg.pres, s.seed);
    for (LambdaKind k : {LambdaKind::dim, LambdaKind::depth, LambdaKind::codepth, LambdaKind::cid,
                         LambdaKind::idd}) {
      if (!want(lambda_kind_name(k))) continue;
      std::string id = std::string("flat_") + lambda_kind_name(k) + "(" + tag + ")";
      out.push_back(flat_lambda_result(k, rr, ra, fib, std::move(id), ops, bundle));
    }
    if (want("type"))
      out.push_back(flat_type_result(rr, ra, fib, std::string("flat_type(") + tag + ")", ops,
                                     bundle));
  };
  if (s.cert_a) flat_layer(s.a, s.report_a, *s.fiber_a, "A");
  if (s.cert_b) flat_layer(s.b, s.report_b, *s.fiber_b, "B");
  return out;
}

}  // namespace socle
