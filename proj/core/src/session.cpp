#include "hsamuel/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hsamuel {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  /// Position of the next token.
  SourcePos pos() {
    skip();
    return {line_, col_};
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SessionError(line_, col_, msg); }
  [[noreturn]] void fail(SourcePos p, const std::string& msg) const { throw SessionError(p.line, p.column, msg); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  std::string identifier() {
    skip();
    if (i_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      fail("expected a name" + found());
    }
    std::string out;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      out += s_[i_];
      advance();
    }
    return out;
  }
  std::int64_t integer() {
    skip();
    SourcePos p = pos();
    std::string digits;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      digits += s_[i_];
      advance();
    }
    if (digits.empty()) fail("expected an integer" + found());
    if (digits.size() > 12) fail(p, "integer out of range");
    return std::stoll(digits);
  }
  /// A bare token such as q or fp:32003.
  std::string word() {
    skip();
    std::string out;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == ':' || s_[i_] == '_')) {
      out += s_[i_];
      advance();
    }
    if (out.empty()) fail("expected a value" + found());
    return out;
  }
  /// Raw polynomial text up to a top-level ',' or ']'.
  SessionText element() {
    skip();
    SessionText t{"", pos()};
    int depth = 0;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#' || c == '\n') break;
      if (depth == 0 && (c == ',' || c == ']')) break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      t.text += c;
      advance();
    }
    while (!t.text.empty() && std::isspace(static_cast<unsigned char>(t.text.back()))) t.text.pop_back();
    if (t.text.empty()) fail(t.pos, "empty list element");
    return t;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else {
        break;
      }
    }
  }
  std::string found() const {
    if (i_ >= s_.size()) return ", found end of input";
    return std::string(", found '") + s_[i_] + "'";
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::vector<SessionText> element_list(Reader& r) {
  std::vector<SessionText> out;
  r.expect('[');
  if (r.accept(']')) return out;
  do {
    out.push_back(r.element());
  } while (r.accept(','));
  r.expect(']');
  return out;
}

void parse_ring(Reader& r, Session& s) {
  r.expect('{');
  bool have_vars = false;
  while (!r.accept('}')) {
    SourcePos kp = r.pos();
    std::string key = r.identifier();
    r.expect('=');
    if (key == "vars") {
      r.expect('[');
      std::set<std::string> seen;
      if (!r.accept(']')) {
        do {
          SourcePos vp = r.pos();
          std::string v = r.identifier();
          if (!seen.insert(v).second) r.fail(vp, "variable '" + v + "' declared twice");
          s.vars.push_back(v);
        } while (r.accept(','));
        r.expect(']');
      }
      if (s.vars.empty()) r.fail(kp, "a ring needs at least one variable");
      have_vars = true;
    } else if (key == "dim") {
      s.dim = static_cast<int>(r.integer());
    } else if (key == "quotient") {
      s.quotient = element_list(r);
    } else if (key == "field") {
      SourcePos vp = r.pos();
      std::string w = r.word();
      try {
        s.field = parse_field_choice(w);
      } catch (const InputError& e) {
        r.fail(vp, e.what());
      }
    } else if (key == "avoid_characteristic") {
      r.expect('[');
      if (!r.accept(']')) {
        do {
          s.avoid_characteristic.push_back(static_cast<std::uint32_t>(r.integer()));
        } while (r.accept(','));
        r.expect(']');
      }
    } else {
      r.fail(kp, "unknown ring key '" + key + "'");
    }
    if (!r.accept(',') && r.peek() != '}') {
      // keys may also be separated by newlines only
      if (!std::isalpha(static_cast<unsigned char>(r.peek()))) r.fail("expected ',' or '}'");
    }
  }
  if (!have_vars) r.fail("ring block has no vars");
  if (s.dim < 1) r.fail("ring block needs dim >= 1");
}

}  // namespace

FieldChoice parse_field_choice(std::string_view text) {
  FieldChoice f;
  if (text == "q" || text == "Q") {
    f.rational = true;
    return f;
  }
  if (text.substr(0, 3) != "fp:" || text.size() == 3 || text.size() > 13) {
    throw InputError("field must be q or fp:<prime>, got '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  for (char c : text.substr(3)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("field must be q or fp:<prime>, got '" + std::string(text) + "'");
    }
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  f.prime = static_cast<std::uint32_t>(p);
  return f;
}

const SessionIdeal& Session::ideal(const std::string& name) const {
  for (const auto& i : ideals) {
    if (i.name == name) return i;
  }
  throw InputError("no ideal named '" + name + "' in the session");
}

bool Session::assumes(const std::string& name, const std::string& property) const {
  auto it = assumptions.find(name);
  return it != assumptions.end() && it->second.count(property) > 0;
}

Session parse_session(std::string_view text) {
  Reader r(text);
  Session s;
  bool have_ring = false;
  while (!r.done()) {
    SourcePos p = r.pos();
    std::string kw = r.identifier();
    if (kw == "ring") {
      if (have_ring) r.fail(p, "a session declares exactly one ring");
      parse_ring(r, s);
      have_ring = true;
    } else if (kw == "ideal") {
      if (!have_ring) r.fail(p, "ideal declared before the ring");
      SessionIdeal si;
      si.pos = r.pos();
      si.name = r.identifier();
      for (const auto& other : s.ideals) {
        if (other.name == si.name) r.fail(si.pos, "ideal '" + si.name + "' declared twice");
      }
      r.expect('=');
      SourcePos lp = r.pos();
      si.gens = element_list(r);
      if (si.gens.empty()) r.fail(lp, "ideal '" + si.name + "' has an empty generator list");
      s.ideals.push_back(std::move(si));
    } else if (kw == "assume") {
      SourcePos np = r.pos();
      std::string name = r.identifier();
      bool known = false;
      for (const auto& i : s.ideals) known = known || i.name == name;
      if (!known) r.fail(np, "assumption about undeclared ideal '" + name + "'");
      SourcePos pp = r.pos();
      std::string prop = r.identifier();
      if (prop != "integrally_closed" && prop != "normal") {
        r.fail(pp, "unknown property '" + prop + "' (integrally_closed or normal)");
      }
      s.assumptions[name].insert(prop);
    } else {
      r.fail(p, "expected 'ring', 'ideal' or 'assume', found '" + kw + "'");
    }
  }
  if (!have_ring) throw SessionError(1, 1, "session declares no ring");
  if (s.ideals.empty()) throw SessionError(1, 1, "session declares no ideal");
  return s;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open session file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  try {
    Session s = parse_session(os.str());
    s.source = path;
    return s;
  } catch (const SessionError& e) {
    throw SessionError(e.line(), e.column(), e.message(), path);
  }
}

}  // namespace hsamuel
