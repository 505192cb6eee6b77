#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsamuel/ideal.hpp"

namespace hsamuel {

/// Input error located at a 1-based line and column of a session file.
class SessionError : public InputError {
 public:
  SessionError(int line, int column, const std::string& msg, const std::string& path = "")
      : InputError((path.empty() ? "" : path + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Coefficient field selector: q, or fp:<prime>.
struct FieldChoice {
  bool rational = false;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  std::string name() const { return rational ? "q" : "fp:" + std::to_string(prime); }
};

FieldChoice parse_field_choice(std::string_view text);

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct SessionText {
  std::string text;
  SourcePos pos;
};

struct SessionIdeal {
  std::string name;
  SourcePos pos;
  std::vector<SessionText> gens;
};

/// A parsed session file, before the coefficient field is fixed:
///
///   ring { vars = [X, Y, Z], dim = 3, quotient = [...], field = fp:32003,
///          avoid_characteristic = [3] }
///   ideal I = [X^2 - Y^2, X*Y]
///   assume I integrally_closed
struct Session {
  /// File the session was loaded from, empty for in-memory text.
  std::string source;
  std::vector<std::string> vars;
  int dim = -1;
  std::vector<SessionText> quotient;
  std::optional<FieldChoice> field;
  std::vector<std::uint32_t> avoid_characteristic;
  std::vector<SessionIdeal> ideals;
  /// ideal name -> asserted properties (integrally_closed, normal)
  std::map<std::string, std::set<std::string>> assumptions;

  const SessionIdeal& ideal(const std::string& name) const;
  bool assumes(const std::string& name, const std::string& property) const;
};

Session parse_session(std::string_view text);
Session load_session(const std::string& path);

template <class K>
struct TypedSession {
  RingSpecPtr<K> ring;
  std::vector<std::pair<std::string, Ideal<K>>> ideals;

  const Ideal<K>& ideal(const std::string& name) const {
    for (const auto& [n, I] : ideals) {
      if (n == name) return I;
    }
    throw InputError("no ideal named '" + name + "' in the session");
  }
};

namespace detail {

template <class K>
Poly<K> parse_located(const RingPtr<K>& ring, const SessionText& t, const std::string& source) {
  try {
    return parse_poly(ring, t.text);
  } catch (const ParseError& e) {
    throw SessionError(t.pos.line, t.pos.column + e.column() - 1, e.message(), source);
  }
}

}  // namespace detail

/// Fixes the field, checks characteristic restrictions and parses every
/// polynomial, reporting errors at their position in the file.
template <class K>
TypedSession<K> build_session(const Session& s, K field, Limits limits = {}) {
  for (auto c : s.avoid_characteristic) {
    if (field.characteristic() == c) {
      throw InputError("this session requires a field of characteristic other than " + std::to_string(c) +
                       "; choose another --field");
    }
  }
  RingPtr<K> pr = make_ring(std::move(field), s.vars);
  std::vector<Poly<K>> defining;
  for (const auto& t : s.quotient) defining.push_back(detail::parse_located(pr, t, s.source));
  TypedSession<K> out;
  out.ring = std::make_shared<const RingSpec<K>>(pr, std::move(defining), s.dim, limits);
  for (const auto& si : s.ideals) {
    std::vector<Poly<K>> gens;
    for (const auto& t : si.gens) gens.push_back(detail::parse_located(pr, t, s.source));
    out.ideals.emplace_back(si.name, Ideal<K>(out.ring, std::move(gens)));
  }
  return out;
}

}  // namespace hsamuel
