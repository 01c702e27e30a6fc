#include "socle/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "socle/errors.hpp"

namespace socle {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    for (;;) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      break;
    }
  }

  bool eof() {
    skip();
    return i >= s.size();
  }

  std::size_t line() const { return 1 + std::count(s.begin(), s.begin() + i, '\n'); }

  [[noreturn]] void die(const std::string& msg) {
    fail(ErrorCode::parse_error, "line " + std::to_string(line()) + ": " + msg);
  }

  bool at(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }

  bool try_punct(char c) {
    if (at(c)) {
      ++i;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_punct(c)) die(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip();
    std::size_t b = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (b == i) die("expected a word");
    return std::string(s.substr(b, i - b));
  }

  /// Raw text up to ';' (consumed) or '}' (left in place), comments stripped.
  std::string raw_list() {
    std::string out;
    for (;;) {
      if (i >= s.size()) die("unterminated block");
      char c = s[i];
      if (c == ';') {
        ++i;
        break;
      }
      if (c == '}') break;
      if (c == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      out += c;
      ++i;
    }
    return out;
  }
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  std::vector<std::string> res;
  for (auto& t : out) {
    std::size_t a = t.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    std::size_t b = t.find_last_not_of(" \t\r\n");
    res.push_back(t.substr(a, b - a + 1));
  }
  return res;
}

bool identifier_like(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

struct BlockData {
  Mode mode = Mode::graded;
  std::vector<std::string> vars;
  std::vector<std::string> rels;
};

BlockData parse_block(Cursor& c) {
  BlockData b;
  c.expect('{');
  for (;;) {
    if (c.try_punct('}')) break;
    if (c.try_punct(';')) continue;
    if (c.eof()) c.die("unterminated block");
    std::string key = c.word();
    if (key == "mode") {
      std::string m = c.word();
      if (m == "graded")
        b.mode = Mode::graded;
      else if (m == "local")
        b.mode = Mode::local;
      else if (m == "affine")
        b.mode = Mode::affine;
      else
        c.die("unknown mode '" + m + "'");
    } else if (key == "vars") {
      for (const auto& v : split_commas(c.raw_list())) {
        if (!identifier_like(v)) c.die("bad variable name '" + v + "'");
        b.vars.push_back(v);
      }
    } else if (key == "relations") {
      b.rels = split_commas(c.raw_list());
    } else {
      c.die("unknown entry '" + key + "' (expected mode, vars, or relations)");
    }
  }
  return b;
}

}  // namespace

PresentationFile parse_presentation_file(std::string_view text,
                                         std::optional<Field> field_override) {
  Cursor c{text, 0};
  PresentationFile out;
  Field fld = field_override ? *field_override : Field::rationals();
  bool field_seen = false;
  bool any_block = false;
  std::optional<BaseDescriptor> base_bd;

  while (!c.eof()) {
    std::string kw = c.word();
    if (kw == "field") {
      if (any_block) c.die("the field line must precede base and algebra blocks");
      if (field_seen) c.die("duplicate field line");
      field_seen = true;
      std::string f = c.word();
      Field declared = Field::rationals();
      if (f == "Q") {
        declared = Field::rationals();
      } else if (f == "Fp") {
        std::string ps = c.word();
        unsigned long v = 0;
        try {
          std::size_t used = 0;
          v = std::stoul(ps, &used);
          if (used != ps.size()) throw std::invalid_argument(ps);
        } catch (const std::exception&) {
          c.die("bad prime '" + ps + "'");
        }
        if (v == 0 || v > 0x7fffffffUL) c.die("prime " + ps + " out of range");
        try {
          declared = Field::prime(static_cast<std::uint32_t>(v));
        } catch (const Error& e) {
          c.die(e.what());
        }
      } else {
        c.die("unknown field '" + f + "' (expected Q or Fp <prime>)");
      }
      if (!field_override) fld = declared;
    } else if (kw == "base") {
      any_block = true;
      if (base_bd) c.die("duplicate base block");
      if (!out.algebras.empty()) c.die("the base block must precede algebra blocks");
      std::string name = c.word();
      std::size_t at = c.i;
      BlockData b = parse_block(c);
      if (b.mode == Mode::affine) {
        c.i = at;
        c.die("a base cannot be affine");
      }
      try {
        base_bd = BaseDescriptor::over(
            AlgebraPresentation::make(name, BaseDescriptor::prime_field(fld), b.vars, b.rels, b.mode));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::parse_error) throw;
        c.i = at;
        c.die(e.what());
      }
      out.base_name = name;
    } else if (kw == "algebra") {
      any_block = true;
      std::string name = c.word();
      for (const auto& a : out.algebras)
        if (a.name == name) c.die("duplicate algebra name '" + name + "'");
      BaseDescriptor bd = BaseDescriptor::prime_field(fld);
      if (!c.at('{')) {
        std::string over = c.word();
        if (over != "over") c.die("expected 'over' or '{' after the algebra name");
        std::string bname = c.word();
        if (!base_bd || bname != out.base_name) c.die("unknown base '" + bname + "'");
        bd = *base_bd;
      }
      std::size_t at = c.i;
      BlockData b = parse_block(c);
      try {
        out.algebras.push_back(AlgebraPresentation::make(name, bd, b.vars, b.rels, b.mode));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::parse_error) throw;
        c.i = at;
        c.die(e.what());
      }
    } else {
      c.die("unknown directive '" + kw + "' (expected field, base, or algebra)");
    }
  }

  out.field = fld;
  if (base_bd) out.base = *base_bd;
  else out.base = BaseDescriptor::prime_field(fld);
  return out;
}

const AlgebraPresentation* find_algebra(const PresentationFile& f, const std::string& name) {
  for (const auto& a : f.algebras)
    if (a.name == name) return &a;
  return nullptr;
}

const AlgebraPresentation& require_algebra(const PresentationFile& f, const std::string& name) {
  const AlgebraPresentation* a = find_algebra(f, name);
  if (!a) fail(ErrorCode::invalid_presentation, "no algebra named '" + name + "' in the input");
  return *a;
}

}  // namespace socle
