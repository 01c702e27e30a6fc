#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socle/errors.hpp"
#include "socle/invariants.hpp"
#include "socle/oracle.hpp"
#include "socle/presentation_io.hpp"
#include "socle/theorems.hpp"

using namespace socle;

namespace {

// 0 ok, 2 parse, 3 validation, 4 certificate, 5 regime; 1 for refuted checks
// and engine faults
int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error:
      return 2;
    case ErrorCode::certificate_missing:
      return 4;
    case ErrorCode::not_artinian:
    case ErrorCode::regular_sequence_not_found:
      return 5;
    case ErrorCode::divisibility_violation:
    case ErrorCode::internal_error:
      return 1;
    default:
      return 3;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Field> parse_field_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "Q") return Field::rationals();
  if (s.rfind("Fp:", 0) == 0) {
    try {
      unsigned long p = std::stoul(s.substr(3));
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::exception&) {
      fail(ErrorCode::parse_error, "bad prime in field override '" + s + "'");
    }
  }
  fail(ErrorCode::parse_error, "field override must be Q or Fp:<p>, got '" + s + "'");
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void print_report_table(std::string& out, const AlgebraPresentation& p, const InvariantReport& r) {
  out += p.str() + "\n";
  char line[64];
  auto row = [&](const char* k, const std::string& v) {
    std::snprintf(line, sizeof line, "%-10s %s\n", k, v.c_str());
    out += line;
  };
  row("dim", std::to_string(r.dim));
  row("depth", std::to_string(r.depth));
  row("codepth", std::to_string(r.codepth));
  row("embdim", std::to_string(r.embdim));
  row("codim", std::to_string(r.codim));
  row("mu", std::to_string(r.mu));
  row("epsilon2", std::to_string(r.epsilon2));
  row("cid", std::to_string(r.cid));
  row("type", std::to_string(r.type));
  row("idd", r.idd.str());
  row("cm", yn(r.cm));
  row("gorenstein", yn(r.gorenstein));
  row("ci", yn(r.ci));
  row("regular", yn(r.regular));
  row("aci", yn(r.aci));
  row("flat", r.flat_certificate);
}

struct Options {
  std::string file;
  std::string name_a;
  std::string name_b;
  std::string theorem = "all";
  std::string field_flag;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_invariants(const Options& o) {
  auto f = parse_presentation_file(read_file(o.file), parse_field_flag(o.field_flag));
  const AlgebraPresentation& p = require_algebra(f, o.name_a);
  InvariantReport r = report(validate(p), o.seed);
  std::string out;
  if (o.json) {
    out = r.json() + "\n";
  } else {
    print_report_table(out, p, r);
  }
  std::fputs(out.c_str(), stdout);
  return 0;
}

int run_check(const Options& o) {
  auto f = parse_presentation_file(read_file(o.file), parse_field_flag(o.field_flag));
  const AlgebraPresentation& a = require_algebra(f, o.name_a);
  const AlgebraPresentation& b = require_algebra(f, o.name_b);
  std::vector<TheoremCheckResult> results;
  if (o.theorem == "nontrivial") {
    results.push_back(check_nontrivial(a, b));
  } else {
    results = run_checks(make_setup(a, b, o.seed), o.theorem);
  }
  bool all_pass = true;
  std::string out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    all_pass = all_pass && results[i].pass;
    if (o.json) {
      out += (i ? ",\n" : "[\n") + results[i].json();
    } else {
      out += results[i].str() + "\n";
    }
  }
  if (o.json) out += results.empty() ? "[]\n" : "\n]\n";
  std::fputs(out.c_str(), stdout);
  for (const auto& r : results)
    if (!r.pass) std::fputs(r.bundle.c_str(), stderr);
  return all_pass ? 0 : 1;
}

int run_oracle(const Options& o) {
  auto f = parse_presentation_file(read_file(o.file), parse_field_flag(o.field_flag));
  const AlgebraPresentation& p = require_algebra(f, o.name_a);
  LocalAlgebra a = validate(p);
  InvariantReport pipe = report(a, o.seed);
  InvariantReport orc = oracle_report(build_model(a));
  bool equal = pipe.dim == orc.dim && pipe.depth == orc.depth && pipe.codepth == orc.codepth &&
               pipe.embdim == orc.embdim && pipe.codim == orc.codim && pipe.mu == orc.mu &&
               pipe.epsilon2 == orc.epsilon2 && pipe.cid == orc.cid && pipe.type == orc.type &&
               pipe.idd == orc.idd && pipe.cm == orc.cm && pipe.gorenstein == orc.gorenstein &&
               pipe.ci == orc.ci && pipe.regular == orc.regular && pipe.aci == orc.aci;
  std::string out;
  if (o.json) {
    out = "{\"pipeline\":" + pipe.json() + ",\"oracle\":" + orc.json() +
          ",\"equal\":" + (equal ? "true" : "false") + "}\n";
  } else {
    out = p.str() + "\n";
    char line[96];
    auto row = [&](const char* k, const std::string& l, const std::string& r) {
      std::snprintf(line, sizeof line, "%-10s %-12s %s\n", k, l.c_str(), r.c_str());
      out += line;
    };
    row("invariant", "pipeline", "oracle");
    row("dim", std::to_string(pipe.dim), std::to_string(orc.dim));
    row("depth", std::to_string(pipe.depth), std::to_string(orc.depth));
    row("codepth", std::to_string(pipe.codepth), std::to_string(orc.codepth));
    row("embdim", std::to_string(pipe.embdim), std::to_string(orc.embdim));
    row("codim", std::to_string(pipe.codim), std::to_string(orc.codim));
    row("mu", std::to_string(pipe.mu), std::to_string(orc.mu));
    row("epsilon2", std::to_string(pipe.epsilon2), std::to_string(orc.epsilon2));
    row("cid", std::to_string(pipe.cid), std::to_string(orc.cid));
    row("type", std::to_string(pipe.type), std::to_string(orc.type));
    row("idd", pipe.idd.str(), orc.idd.str());
    row("cm", yn(pipe.cm), yn(orc.cm));
    row("gorenstein", yn(pipe.gorenstein), yn(orc.gorenstein));
    row("ci", yn(pipe.ci), yn(orc.ci));
    row("regular", yn(pipe.regular), yn(orc.regular));
    row("aci", yn(pipe.aci), yn(orc.aci));
    out += equal ? "agreement: exact\n" : "agreement: MISMATCH\n";
  }
  std::fputs(out.c_str(), stdout);
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local invariants of finitely presented algebras, tensor products, and identity checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "emit JSON instead of text");
    cmd->add_option("--seed", o.seed, "seed for the random regular-sequence draws");
    cmd->add_option("--field", o.field_flag, "override the coefficient field: Q or Fp:<p>");
  };

  CLI::App* inv = app.add_subcommand("invariants", "full invariant report of one algebra");
  inv->add_option("file", o.file, "presentation file")->required();
  inv->add_option("name", o.name_a, "algebra name")->required();
  add_common(inv);

  CLI::App* chk = app.add_subcommand("check", "identity checks on a tensor pair");
  chk->add_option("file", o.file, "presentation file")->required();
  chk->add_option("A", o.name_a, "first factor")->required();
  chk->add_option("B", o.name_b, "second factor")->required();
  chk->add_option("--theorem", o.theorem,
                  "all|dim|depth|codepth|idd|type|cid|codim|equiv|nontrivial");
  add_common(chk);

  CLI::App* orc = app.add_subcommand("oracle", "pipeline vs linear-algebra oracle on an Artinian algebra");
  orc->add_option("file", o.file, "presentation file")->required();
  orc->add_option("name", o.name_a, "algebra name")->required();
  add_common(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return run_invariants(o);
    if (chk->parsed()) return run_check(o);
    return run_oracle(o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 1;
  }
}
