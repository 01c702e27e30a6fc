// Acceptance suite. Prints one PASS/FAIL line per criterion; the exit status
// is the number of failed criteria. The criteria:
//   1  curated battery: every applicable check exact on every corpus pair
//   2  named instances match the golden file, oracle cross-checked
//   3  pipeline vs oracle agreement, randomized and on the corpus
//   4  report identities on every report seen, plus random graded instances
//   5  metamorphic invariance of every check result
//   6  flatness certificates earned, Tor criterion vs dimension counting
//   7  contraction predicts triviality of affine fiber products

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "socle/errors.hpp"
#include "socle/invariants.hpp"
#include "socle/oracle.hpp"
#include "socle/presentation.hpp"
#include "socle/theorems.hpp"
#include "testkit.hpp"

using namespace socle;
using namespace socle::testkit;

namespace {

struct Ctx {
  std::vector<CorpusEntry> corpus;
  std::vector<TensorSetup> setups;
};

bool reports_equal(const InvariantReport& x, const InvariantReport& y) {
  return x.dim == y.dim && x.depth == y.depth && x.codepth == y.codepth &&
         x.embdim == y.embdim && x.codim == y.codim && x.mu == y.mu &&
         x.epsilon2 == y.epsilon2 && x.cid == y.cid && x.type == y.type && x.idd == y.idd &&
         x.cm == y.cm && x.gorenstein == y.gorenstein && x.ci == y.ci &&
         x.regular == y.regular && x.aci == y.aci;
}

// the six identities every report promises
bool identities_hold(const InvariantReport& r) {
  if (r.dim < r.depth || r.codepth != r.dim - r.depth) return false;
  if (r.embdim < r.dim || r.codim != r.embdim - r.dim) return false;
  if (r.epsilon2 != r.mu || r.epsilon2 != r.cid + r.codim) return false;
  if (r.cm != (r.codepth == 0) || r.gorenstein != (r.cm && r.type == 1) ||
      r.ci != (r.cid == 0) || r.regular != (r.codim == 0) || r.aci != (r.cid == 1))
    return false;
  if ((r.regular && !r.ci) || (r.ci && !r.gorenstein) || (r.gorenstein && !r.cm)) return false;
  return r.idd == (r.gorenstein ? ExtendedNat::of(r.depth) : ExtendedNat::inf());
}

// check results keyed by theorem id; a swapped run exchanges the (A)/(B) tags
std::map<std::string, std::string> keyed(const std::vector<TheoremCheckResult>& rs,
                                         bool swap_sides) {
  std::map<std::string, std::string> m;
  for (const auto& r : rs) {
    std::string id = r.theorem;
    if (swap_sides) {
      auto pos = id.find("(A)");
      if (pos != std::string::npos) {
        id.replace(pos, 3, "(B)");
      } else if ((pos = id.find("(B)")) != std::string::npos) {
        id.replace(pos, 3, "(A)");
      }
    }
    m[id] = r.lhs.str() + "|" + r.rhs.str() + (r.pass ? "|P" : "|F");
  }
  return m;
}

std::map<std::string, long> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path);
  std::map<std::string, long> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string key;
    long value = 0;
    if (ss >> key >> value) out[key] = value;
  }
  return out;
}

bool battery(Ctx& ctx, std::string& line) {
  auto t0 = std::chrono::steady_clock::now();
  ctx.corpus = theorem_corpus();
  std::size_t nchecks = 0;
  std::string broken;
  for (const auto& e : ctx.corpus) {
    ctx.setups.push_back(make_setup(e.a, e.b));
    for (const auto& r : run_checks(ctx.setups.back())) {
      ++nchecks;
      if (!r.pass && broken.empty()) broken = e.label + " / " + r.theorem;
    }
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[200];
  std::snprintf(buf, sizeof buf, "theorem battery: %zu pairs, %zu checks exact in %.1fs",
                ctx.corpus.size(), nchecks, dt);
  line = buf;
  if (!broken.empty()) line += " [first failure: " + broken + "]";
  return broken.empty() && ctx.corpus.size() >= 30 && dt < 60.0;
}

bool named_instances(const Ctx& ctx, std::string& line) {
  line = "named instances: golden values recovered and oracle confirmed";
  auto golden = read_golden(std::string(SOCLE_TEST_DATA_DIR) + "/named.golden");
  auto q = BaseDescriptor::prime_field(Field::rationals());

  auto fat = make_setup(
      AlgebraPresentation::make("A", q, {"x", "y"}, {"x^2", "x*y", "y^2"}, Mode::graded),
      AlgebraPresentation::make("B", q, {"u", "v"}, {"u^2", "u*v", "v^2"}, Mode::graded));
  if (fat.report_product.type != static_cast<std::size_t>(golden.at("fat_square_type")))
    return false;
  if (fat.report_product.cid != static_cast<std::size_t>(golden.at("fat_square_cid")))
    return false;
  if (!check_type(fat).pass || !check_cid(fat).pass) return false;
  auto fat_oracle = oracle_report(build_model(fat.product));
  if (fat_oracle.type != fat.report_product.type || fat_oracle.cid != fat.report_product.cid)
    return false;
  if (fat_oracle.idd != ExtendedNat::inf()) return false;  // non-Gorenstein factor forces it

  auto R = BaseDescriptor::over(
      AlgebraPresentation::make("R", q, {"s", "t"}, {"s^2", "s*t"}, Mode::graded));
  auto corr = make_setup(AlgebraPresentation::make("A", R, {"x"}, {}, Mode::graded),
                         AlgebraPresentation::make("B", R, {}, {}, Mode::graded));
  if (corr.report_product.codepth != static_cast<std::size_t>(golden.at("corrected_codepth")))
    return false;
  if (!check_codepth(corr).pass) return false;

  auto ci = make_setup(
      AlgebraPresentation::make("A", q, {"x", "y"}, {"x^2", "y^2"}, Mode::graded),
      AlgebraPresentation::make("B", q, {"u", "v"}, {"u^2", "v^2"}, Mode::graded));
  auto want = ExtendedNat::of(static_cast<std::uint64_t>(golden.at("ci_pair_idd")));
  if (ci.report_product.idd != want) return false;
  if (ci.report_product.idd != ExtendedNat::of(ci.report_product.depth)) return false;
  if (oracle_report(build_model(ci.product)).idd != want) return false;

  // the two injective-dimension rules across the whole corpus: infinite as
  // soon as the certified fiber or the other factor fails Gorenstein, equal
  // to the product depth when both have it
  if (ctx.setups.empty()) return false;
  for (const auto& s : ctx.setups) {
    const InvariantReport& fib = s.flat_side == FlatSide::b ? *s.fiber_b : *s.fiber_a;
    const InvariantReport& oth = s.flat_side == FlatSide::b ? s.report_a : s.report_b;
    ExtendedNat expect = fib.gorenstein && oth.gorenstein
                             ? ExtendedNat::of(s.report_product.depth)
                             : ExtendedNat::inf();
    if (s.report_product.idd != expect) return false;
  }
  return true;
}

bool oracle_equivalence(const Ctx& ctx, std::string& line) {
  Rng rng(20260822);
  std::size_t randomized = 0, corpus_models = 0, mismatches = 0;
  for (int inst = 0; inst < 100; ++inst) {
    std::size_t nv = 1 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back(std::string(1, char('a' + i)));
    auto ring = make_ring(Field::rationals(), names);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < nv; ++i) {
      std::uint32_t d = 2 + rng() % 3;
      gens.push_back(Polynomial::term(ring, Scalar::one(ring->field), Monomial::var(nv, i, d)));
    }
    std::size_t extra = rng() % 3;
    for (std::size_t i = 0; i < extra; ++i) {
      Polynomial f = random_homogeneous(rng, ring, 2 + rng() % 2, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    AlgebraPresentation p;
    p.name = "rnd";
    p.base = BaseDescriptor::prime_field(Field::rationals());
    p.own_vars = names;
    p.ring = ring;
    p.relations = gens;
    p.base_relation_count = 0;
    p.mode = Mode::graded;
    auto v = validate(p);
    auto model = build_model(v);
    auto rep = report(v, rng());
    if (!reports_equal(oracle_report(model), rep) || koszul_h1_dim(model) != rep.mu)
      ++mismatches;
    ++randomized;
  }
  // every Artinian ring the corpus setups carry goes through the oracle too
  for (const auto& s : ctx.setups) {
    const LocalAlgebra* rings[] = {&s.product, &s.a, &s.b};
    const InvariantReport* reps[] = {&s.report_product, &s.report_a, &s.report_b};
    for (int i = 0; i < 3; ++i) {
      try {
        auto model = build_model(*rings[i]);
        if (!reports_equal(oracle_report(model), *reps[i]) ||
            koszul_h1_dim(model) != reps[i]->mu)
          ++mismatches;
        ++corpus_models;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::not_artinian) throw;
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "oracle equivalence: %zu randomized + %zu corpus rings, %zu mismatches",
                randomized, corpus_models, mismatches);
  line = buf;
  return randomized == 100 && corpus_models >= 10 && mismatches == 0;
}

bool internal_consistency(const Ctx& ctx, std::string& line) {
  std::size_t checked = 0;
  auto look = [&checked](const InvariantReport& r) {
    ++checked;
    return identities_hold(r);
  };
  for (const auto& s : ctx.setups) {
    if (!look(s.report_r) || !look(s.report_a) || !look(s.report_b) ||
        !look(s.report_product))
      return false;
    if (s.fiber_a && !look(*s.fiber_a)) return false;
    if (s.fiber_b && !look(*s.fiber_b)) return false;
  }
  Rng rng(777001);
  for (int inst = 0; inst < 50; ++inst) {
    std::size_t nv = 2 + rng() % 2;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back(std::string(1, char('a' + i)));
    auto ring = make_ring(Field::rationals(), names);
    std::vector<Polynomial> gens;
    std::size_t ngen = 1 + rng() % 3;
    for (std::size_t i = 0; i < ngen; ++i) {
      Polynomial f = random_homogeneous(rng, ring, 1 + rng() % 3, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    AlgebraPresentation p;
    p.name = "rnd";
    p.base = BaseDescriptor::prime_field(Field::rationals());
    p.own_vars = names;
    p.ring = ring;
    p.relations = gens;
    p.base_relation_count = 0;
    p.mode = Mode::graded;
    if (!look(report(validate(p), rng()))) return false;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "internal consistency: six identities on %zu reports", checked);
  line = buf;
  return checked >= 150;
}

bool metamorphic(const Ctx& ctx, std::string& line) {
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ctx.corpus.size(); ++i) {
    const auto& e = ctx.corpus[i];
    auto base_run = keyed(run_checks(ctx.setups[i]), false);
    struct Variant {
      const char* tag;
      AlgebraPresentation a, b;
      bool swapped;
    };
    const Variant variants[] = {
        {"rename", rename_own_vars(e.a, "q"), rename_own_vars(e.b, "q"), false},
        {"permute", permute_relations(e.a), permute_relations(e.b), false},
        {"redundant", add_redundant_relation(e.a), add_redundant_relation(e.b), false},
        {"swap", e.b, e.a, true},
        {"rename permute", rename_own_vars(permute_relations(e.a), "w"),
         rename_own_vars(permute_relations(e.b), "w"), false},
        {"permute redundant", permute_relations(add_redundant_relation(e.a)),
         permute_relations(add_redundant_relation(e.b)), false},
    };
    for (const auto& v : variants) {
      auto other = keyed(run_checks(make_setup(v.a, v.b)), v.swapped);
      if (other != base_run) {
        line = std::string("metamorphic: ") + v.tag + " changed a result on " + e.label;
        return false;
      }
      ++pairs;
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "metamorphic: %zu transformed pairs, every result unchanged",
                pairs);
  line = buf;
  return pairs >= 200;
}

bool flatness_gate(const Ctx& ctx, std::string& line) {
  std::size_t ring_bases = 0;
  for (const auto& s : ctx.setups) {
    if (s.base_is_field()) continue;
    ++ring_bases;
    if (!s.cert_a && !s.cert_b) return false;
    if (s.cert_a && s.cert_a->kind == FlatKind::user_asserted) return false;
    if (s.cert_b && s.cert_b->kind == FlatKind::user_asserted) return false;
  }
  // Tor criterion against dimension counting on Artinian extensions, flat and
  // not, over both Artinian bases
  auto q = BaseDescriptor::prime_field(Field::rationals());
  auto r1 = BaseDescriptor::over(
      AlgebraPresentation::make("R", q, {"t"}, {"t^2"}, Mode::graded));
  auto r3 = BaseDescriptor::over(
      AlgebraPresentation::make("R", q, {"s", "t"}, {"s^2", "s*t", "t^2"}, Mode::graded));
  struct Pair {
    BaseDescriptor base;
    std::vector<std::string> vars, rels;
  };
  const Pair probes[] = {
      {r1, {"x"}, {"x^2"}},
      {r1, {"x"}, {"x^2 - t*x"}},
      {r1, {"x"}, {"t*x", "x^2"}},
      {r1, {}, {"t"}},
      {r1, {"x", "y"}, {"x^2", "x*y", "y^2"}},
      {r1, {"x"}, {"x^3", "t*x^2"}},
      {r3, {"x"}, {"x^2"}},
      {r3, {}, {"s"}},
      {r3, {"x"}, {"x^2 - s*x"}},
      {r3, {"x"}, {"s*x", "x^2"}},
  };
  std::size_t agreed = 0;
  for (const auto& pr : probes) {
    auto p = AlgebraPresentation::make("P", pr.base, pr.vars, pr.rels, Mode::graded);
    if (tor1_over_base(p).zero != oracle_flatness(p)) return false;
    ++agreed;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "flatness gate: %zu ring-base setups certified, Tor vs counting on %zu probes",
                ring_bases, agreed);
  line = buf;
  return ring_bases >= 10 && agreed == 10;
}

bool contraction_suite(std::string& line) {
  auto q = BaseDescriptor::prime_field(Field::rationals());
  auto T = BaseDescriptor::over(AlgebraPresentation::make("T", q, {"t"}, {}, Mode::graded));
  auto fiber = [&](const std::string& rel) {
    return AlgebraPresentation::make("F", T, {}, {rel}, Mode::affine);
  };

  // disjoint points, the same point, and comaximal irreducibles
  auto r1 = check_nontrivial(fiber("t"), fiber("t - 1"));
  if (!r1.pass || r1.lhs != CheckValue::of_bool(false)) return false;
  auto r2 = check_nontrivial(fiber("t"), fiber("t"));
  if (!r2.pass || r2.lhs != CheckValue::of_bool(true)) return false;
  auto r3 = check_nontrivial(fiber("t^2 + 1"), fiber("t^2 + t + 1"));
  if (!r3.pass || r3.lhs != CheckValue::of_bool(false)) return false;

  Rng rng(5150);
  std::size_t done = 0;
  bool seen_trivial = false, seen_nontrivial = false;
  for (int i = 0; i < 10; ++i) {
    long a = 1 + static_cast<long>(rng() % 40);
    long b = i % 3 == 0 ? a : 1 + static_cast<long>(rng() % 40);
    auto f = fiber("t^2 + " + std::to_string(a));
    auto g = fiber("t^2 + " + std::to_string(b));
    auto r = check_nontrivial(f, g);
    if (!r.pass) return false;
    (r.lhs.flag ? seen_nontrivial : seen_trivial) = true;
    ++done;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "contraction suite: 3 fixed + %zu randomized principal pairs consistent", done);
  line = buf;
  return done == 10 && seen_trivial && seen_nontrivial;
}

int failures = 0;

template <typename Fn>
void criterion(int n, const char* fallback, Fn&& fn) {
  std::string line = fallback;
  bool ok = false;
  try {
    ok = fn(line);
  } catch (const std::exception& e) {
    line = std::string(fallback) + " threw: " + e.what();
  }
  std::printf("%s %d  %s\n", ok ? "PASS" : "FAIL", n, line.c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  Ctx ctx;
  criterion(1, "theorem battery", [&](std::string& l) { return battery(ctx, l); });
  criterion(2, "named instances", [&](std::string& l) { return named_instances(ctx, l); });
  criterion(3, "oracle equivalence", [&](std::string& l) { return oracle_equivalence(ctx, l); });
  criterion(4, "internal consistency",
            [&](std::string& l) { return internal_consistency(ctx, l); });
  criterion(5, "metamorphic suite", [&](std::string& l) { return metamorphic(ctx, l); });
  criterion(6, "flatness gate", [&](std::string& l) { return flatness_gate(ctx, l); });
  criterion(7, "contraction suite", [&](std::string& l) { return contraction_suite(l); });
  if (failures == 0) std::printf("acceptance: all 7 criteria hold\n");
  return failures;
}
