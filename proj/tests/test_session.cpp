#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hsamuel/reference.hpp"

using namespace hsamuel;

namespace {

SessionError parse_error(const std::string& text) {
  try {
    parse_session(text);
  } catch (const SessionError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return SessionError(0, 0, "");
}

}  // namespace

TEST(Session, ParsesRingIdealsAndAssumptions) {
  auto s = parse_session(
      "# comment\n"
      "ring { vars = [X, Y, Z], dim = 2, quotient = [X*Y - Z^2], field = q }\n"
      "ideal I = [X, Y, Z]   # trailing comment\n"
      "ideal J = [X^2, (Y + Z)^2]\n"
      "assume J normal\n");
  EXPECT_EQ(s.vars, (std::vector<std::string>{"X", "Y", "Z"}));
  EXPECT_EQ(s.dim, 2);
  ASSERT_EQ(s.quotient.size(), 1u);
  EXPECT_EQ(s.quotient[0].text, "X*Y - Z^2");
  ASSERT_TRUE(s.field.has_value());
  EXPECT_TRUE(s.field->rational);
  ASSERT_EQ(s.ideals.size(), 2u);
  EXPECT_EQ(s.ideal("J").gens[1].text, "(Y + Z)^2");
  EXPECT_EQ(s.ideal("J").gens[1].pos.line, 4);
  EXPECT_EQ(s.ideal("J").gens[1].pos.column, 17);
  EXPECT_TRUE(s.assumes("J", "normal"));
  EXPECT_FALSE(s.assumes("I", "normal"));
  EXPECT_THROW(s.ideal("K"), InputError);
}

TEST(Session, NewlineSeparatedRingKeys) {
  auto s = parse_session("ring {\n  vars = [A]\n  dim = 1\n}\nideal I = [A^2]\n");
  EXPECT_EQ(s.vars, std::vector<std::string>{"A"});
  EXPECT_EQ(s.dim, 1);
}

TEST(SessionErrors, ReportLineAndColumn) {
  struct Case {
    std::string text;
    int line;
    int column;
    std::string fragment;
  };
  const std::vector<Case> cases{
      {"ring { vars = [X], dim = 1 }\nideal I = []\n", 2, 11, "empty generator list"},
      {"ring { vars = [X, X], dim = 1 }\n", 1, 19, "declared twice"},
      {"ring { vars = [X], dims = 1 }\n", 1, 20, "unknown ring key"},
      {"ring { vars = [X], dim = 1 }\nideal I = [X]\nideal I = [X^2]\n", 3, 7, "declared twice"},
      {"ring { vars = [X], dim = 1 }\nideal I = [X]\nassume I regular\n", 3, 10, "unknown property"},
      {"ring { vars = [X], dim = 1 }\nideal I = [X]\nassume J normal\n", 3, 8, "undeclared ideal"},
      {"ideal I = [X]\n", 1, 1, "before the ring"},
      {"ring { vars = [X], dim = 1, field = fp:100 }\nideal I = [X]\n", 1, 37, "not a prime"},
      {"ring { vars = [X], dim = 1 }\n", 1, 1, "no ideal"},
      {"ring { vars = [X] }\nideal I = [X]\n", 1, 20, "dim"},
  };
  for (const auto& c : cases) {
    auto e = parse_error(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.column(), c.column) << c.text;
    EXPECT_NE(e.message().find(c.fragment), std::string::npos) << e.what();
  }
}

TEST(SessionErrors, PolynomialErrorsPointIntoTheFile) {
  auto s = parse_session("ring { vars = [X, Y], dim = 2 }\nideal I = [X^2, X*Q]\n");
  try {
    build_session(s, PrimeField());
    FAIL() << "undeclared variable accepted";
  } catch (const SessionError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 19);
  }
}

TEST(SessionFields, ParseFieldChoice) {
  EXPECT_TRUE(parse_field_choice("q").rational);
  EXPECT_TRUE(parse_field_choice("Q").rational);
  EXPECT_EQ(parse_field_choice("fp:2").prime, 2u);
  EXPECT_EQ(parse_field_choice("fp:2147483647").prime, 2147483647u);
  EXPECT_EQ(parse_field_choice("fp:32003").name(), "fp:32003");
  for (const char* bad : {"fp:", "fp:1", "fp:100", "fp:2147483659", "gf:7", "fp:7x", "r"}) {
    EXPECT_THROW(parse_field_choice(bad), InputError) << bad;
  }
}

TEST(SessionFields, AvoidedCharacteristicIsRejected) {
  auto s = parse_session("ring { vars = [X], dim = 1, avoid_characteristic = [3] }\nideal I = [X]\n");
  EXPECT_THROW(build_session(s, PrimeField(3)), InputError);
  EXPECT_NO_THROW(build_session(s, PrimeField(5)));
  EXPECT_NO_THROW(build_session(s, RationalField()));
}

TEST(SessionFiles, EmbeddedTextsMatchShippedFiles) {
  ASSERT_FALSE(reference_sessions().empty());
  for (const auto& rs : reference_sessions()) {
    std::ifstream in(std::string(HSAMUEL_SESSIONS_DIR) + "/" + rs.name + ".session");
    ASSERT_TRUE(in) << rs.name;
    std::ostringstream os;
    os << in.rdbuf();
    EXPECT_EQ(os.str(), rs.text) << rs.name;
  }
  EXPECT_THROW(reference_session("missing"), InputError);
}

TEST(SessionFiles, EveryShippedSessionBuilds) {
  for (const auto& rs : reference_sessions()) {
    auto s = load_session(std::string(HSAMUEL_SESSIONS_DIR) + "/" + rs.name + ".session");
    EXPECT_FALSE(s.source.empty());
    FieldChoice f = s.field.value_or(FieldChoice{});
    auto ts = build_session(s, PrimeField(f.prime));
    EXPECT_EQ(ts.ideals.size(), s.ideals.size()) << rs.name;
    for (const auto& [name, I] : ts.ideals) EXPECT_FALSE(I.gens().empty()) << rs.name << " " << name;
  }
}

TEST(SessionFiles, LoadErrorNamesThePath) {
  EXPECT_THROW(load_session("/nonexistent/x.session"), InputError);
}

TEST(SessionFiles, ReferenceGroupRecordsItsField) {
  auto g = reference_equality_case(RationalField());
  EXPECT_EQ(g.field, "q");
  EXPECT_TRUE(g.ok()) << g.error;
}
