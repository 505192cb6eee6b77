#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hsamuel/reference.hpp"

namespace {

using hsamuel::FieldChoice;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

struct Config {
  std::string command;
  std::string session_path;
  std::string ideal;
  std::string field;
  std::uint64_t seed = 1;
  int nmax = 40;
  int rmax = 10;
  int window = 3;
  int table = 0;
  int n = 3;
  int power_bound = 3;
  bool json = false;
  bool assume_ic = false;
  bool assume_normal = false;
  std::string suite;
  std::string theorem;
};

struct Report {
  Json body;
  int status = kOk;
};

Json verdict_json(const hsamuel::Verdict& v) {
  Json q = Json::object();
  for (const auto& [name, value] : v.quantities) {
    std::visit([&, n = name](const auto& x) { q[n] = x; }, value);
  }
  Json j;
  j["id"] = v.id;
  j["hypothesis"] = to_string(v.hypothesis);
  j["conclusion"] = to_string(v.conclusion);
  j["bounded"] = v.bounded;
  j["violation"] = v.violation();
  j["quantities"] = q;
  j["notes"] = v.notes;
  return j;
}

Json group_json(const hsamuel::ReferenceGroup& g) {
  Json j;
  j["group"] = g.name;
  j["session"] = g.session;
  j["field"] = g.field;
  j["ok"] = g.ok();
  if (!g.error.empty()) j["error"] = g.error;
  Json checks = Json::array();
  for (const auto& c : g.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  j["checks"] = checks;
  Json verdicts = Json::array();
  for (const auto& v : g.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;
  return j;
}

template <class K>
std::vector<std::string> poly_strings(const std::vector<hsamuel::Poly<K>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(hsamuel::to_string(p));
  return out;
}

template <class K>
Report run_reference(const Config& cfg, const K& field) {
  if (cfg.suite != "paper") throw hsamuel::InputError("unknown suite '" + cfg.suite + "' (available: paper)");
  hsamuel::ReferenceOptions opt;
  opt.check.reduction.seed = cfg.seed;
  opt.check.reduction.r_max = cfg.rmax;
  opt.check.hilbert.window = cfg.window;
  opt.limits.truncation_max = cfg.nmax;
  Report rep;
  Json groups = Json::array();
  for (const auto& g : hsamuel::run_reference_suite(field, opt)) {
    if (!g.ok()) rep.status = kMismatch;
    groups.push_back(group_json(g));
  }
  rep.body["command"] = "verify";
  rep.body["suite"] = cfg.suite;
  rep.body["field"] = field.name();
  rep.body["seed"] = cfg.seed;
  rep.body["ok"] = rep.status == kOk;
  rep.body["groups"] = groups;
  return rep;
}

template <class K>
Report run_session(const Config& cfg, const hsamuel::Session& s, const K& field) {
  using namespace hsamuel;
  Limits limits;
  limits.truncation_max = cfg.nmax;
  auto ts = build_session(s, field, limits);
  const std::string name = cfg.ideal.empty() ? ts.ideals.front().first : cfg.ideal;
  const Ideal<K>& I = ts.ideal(name);

  CheckOptions co;
  co.reduction.seed = cfg.seed;
  co.reduction.r_max = cfg.rmax;
  co.hilbert.window = cfg.window;
  co.hilbert.table_length = cfg.table;
  co.power_bound = cfg.power_bound;
  co.assume_ic = cfg.assume_ic || s.assumes(name, "integrally_closed") || s.assumes(name, "normal");
  co.assume_normal = cfg.assume_normal || s.assumes(name, "normal");
  Analysis<K> a(I, co);

  Report rep;
  Json& j = rep.body;
  j["command"] = cfg.command;
  j["ideal"] = name;
  j["field"] = field.name();
  j["d"] = I.ring()->dim();
  const std::string& c = cfg.command;
  if (c == "hilbert") {
    const auto& hd = a.hilbert();
    j["table"] = hd.table;
    j["certified_up_to"] = hd.certified_up_to;
  } else if (c == "coeffs") {
    const auto& hd = a.hilbert();
    j["e"] = hd.e;
    j["postulation"] = hd.postulation;
    j["colength"] = a.colength();
  } else if (c == "series") {
    const auto& hd = a.hilbert();
    j["numerator"] = series_to_string(hd.h);
    j["h"] = hd.h;
  } else if (c == "reduce") {
    const auto& red = a.reduction();
    j["generators"] = poly_strings(red.x);
    j["reduction_number"] = red.r;
    j["lambda_table"] = red.lambda_table;
    j["colength_of_J"] = red.J.length().value;
    j["seed"] = red.seed;
    j["attempts"] = red.attempts;
  } else if (c == "superficial") {
    auto sup = superficial_element(I, cfg.seed, std::max(cfg.n, 2));
    j["element"] = to_string(sup.x);
    j["c"] = sup.c;
    j["checked_up_to"] = sup.n_max;
    j["seed"] = sup.seed;
  } else if (c == "rr") {
    Json rows = Json::array();
    for (int n = 1; n <= cfg.n; ++n) {
      auto rr = ratliff_rush(I, n);
      rows.push_back({{"n", n},
                      {"equals_power", rr.equals_power},
                      {"stable_k", rr.stable_k},
                      {"colength", rr.ideal.length().value},
                      {"colength_of_power", I.power(n).length().value}});
    }
    j["closures"] = rows;
    auto pos = rr_depth_positive(I, cfg.n);
    j["depth_positive"] = pos.positive;
    j["checked_up_to"] = pos.checked;
    j["first_failure"] = pos.first_failure;
  } else if (c == "closure") {
    auto m = monomial_form(I);
    if (!m) throw Unsupported("integral closure is computed for monomial ideals of a polynomial ring only");
    Ideal<K> cl = monomial_closure(*m);
    j["closure"] = poly_strings(cl.gens());
    j["colength"] = cl.length().value;
    j["integrally_closed"] = ideal_equal_local(cl, *m);
    auto an = is_asymptotically_normal_monomial(*m, cfg.power_bound);
    j["powers_closed_from"] = an.first_index;
    j["powers_checked_up_to"] = an.bound;
    j["ebar"] = hilbert_data(Filtration<K>::closure(*m), co.hilbert).e;
  } else if (c == "depth") {
    const auto& dc = a.depth();
    j["lower"] = dc.lower;
    j["lower_method"] = to_string(dc.lower_method);
    j["lower_exact"] = dc.lower_exact;
    j["upper"] = dc.upper;
    j["upper_method"] = to_string(dc.upper_method);
    j["determined"] = dc.determined();
    j["vv_checked_up_to"] = dc.certified_up_to;
    j["vv_levels"] = dc.levels;
  } else if (c == "verify") {
    std::vector<Verdict> vs;
    if (cfg.theorem.empty()) {
      vs = check_all(a);
    } else {
      vs.push_back(check_theorem(a, cfg.theorem));
    }
    Json arr = Json::array();
    for (const auto& v : vs) {
      if (v.violation()) rep.status = kMismatch;
      arr.push_back(verdict_json(v));
    }
    j["verdicts"] = arr;
  }
  return rep;
}

template <class K>
Report dispatch(const Config& cfg, const std::optional<hsamuel::Session>& s, const K& field) {
  if (cfg.command == "verify" && !cfg.suite.empty()) return run_reference(cfg, field);
  return run_session(cfg, *s, field);
}

void print_text(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    bool nested = v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured());
    if (!nested) {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (v.is_object()) {
      os << pad << it.key() << ":\n";
      print_text(v, indent + 2, os);
    } else {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) {
        os << pad << "  -\n";
        print_text(e, indent + 4, os);
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Hilbert-Samuel functions, Hilbert coefficients, reductions and depth of gr"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"hilbert", "lambda(R/I^n) table"},
      {"coeffs", "Hilbert coefficients e_0..e_d and the postulation number"},
      {"series", "numerator of the Hilbert series"},
      {"reduce", "certified minimal reduction and lambda(I^(n+1)/JI^n)"},
      {"superficial", "superficial element with its certificate"},
      {"rr", "Ratliff-Rush closures of the powers"},
      {"closure", "integral closure of a monomial ideal"},
      {"depth", "bounds on depth gr_I(R) with their certificates"},
      {"verify", "check the theorems on a session, or recompute the reference suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("session", cfg.session_path, "session file")->check(CLI::ExistingFile);
    sub->add_option("--ideal", cfg.ideal, "ideal name (default: the first declared)");
    sub->add_option("--field", cfg.field, "q or fp:<prime> (default: session field, else fp:32003)");
    sub->add_option("--seed", cfg.seed, "seed for random reductions and superficial elements");
    sub->add_option("--nmax", cfg.nmax, "truncation degree ceiling for local lengths")->check(CLI::Range(2, 400));
    sub->add_option("--rmax", cfg.rmax, "largest reduction number searched")->check(CLI::Range(0, 100));
    sub->add_option("--window", cfg.window, "stable terms required to fit the Hilbert polynomial")
        ->check(CLI::Range(1, 50));
    sub->add_option("--table", cfg.table, "fixed length of the lambda(R/I^n) table (0: adaptive)")
        ->check(CLI::Range(0, 400));
    sub->add_option("--n", cfg.n, "largest power for rr and superficial")->check(CLI::Range(1, 50));
    sub->add_option("--power-bound", cfg.power_bound, "powers searched for closedness and witnesses")
        ->check(CLI::Range(1, 20));
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_flag("--assume-ic", cfg.assume_ic, "assert that the ideal is integrally closed");
    sub->add_flag("--assume-normal", cfg.assume_normal, "assert that the ideal is normal");
    if (name == "verify") {
      sub->add_option("--suite", cfg.suite, "reference suite (paper)");
      sub->add_option("--theorem", cfg.theorem, "single theorem id");
    }
    sub->callback([&cfg, n = name]() { cfg.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    std::optional<hsamuel::Session> session;
    if (cfg.command == "verify" && !cfg.suite.empty()) {
      if (!cfg.session_path.empty()) throw hsamuel::InputError("--suite takes no session file");
    } else {
      if (cfg.session_path.empty()) throw hsamuel::InputError("a session file is required");
      session = hsamuel::load_session(cfg.session_path);
    }
    FieldChoice fc;
    if (!cfg.field.empty()) {
      fc = hsamuel::parse_field_choice(cfg.field);
    } else if (session && session->field) {
      fc = *session->field;
    }
    if (!cfg.theorem.empty()) {
      const auto& ids = hsamuel::theorem_ids();
      if (std::find(ids.begin(), ids.end(), cfg.theorem) == ids.end()) {
        throw hsamuel::InputError("unknown theorem id '" + cfg.theorem + "'");
      }
    }
    Report rep = fc.rational ? dispatch(cfg, session, hsamuel::RationalField())
                             : dispatch(cfg, session, hsamuel::PrimeField(fc.prime));
    if (cfg.json) {
      std::cout << rep.body.dump(2) << "\n";
    } else {
      print_text(rep.body, 0, std::cout);
    }
    return rep.status;
  } catch (const hsamuel::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const hsamuel::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const hsamuel::NotContained& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const hsamuel::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const hsamuel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
