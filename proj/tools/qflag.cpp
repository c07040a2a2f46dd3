#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "qflag/bundles.hpp"
#include "qflag/expr.hpp"
#include "qflag/verify.hpp"

using namespace qflag;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  bool json = false;
  bool letters = false;
  std::uint64_t seed = 0;
  std::string budget;
  int bound = -1;
  std::string algebra = "m";
  std::string map = "alpha";
  bool list = false;
  std::vector<std::string> args;
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error("usage", w) {}
};

int default_n() {
  const char* env = std::getenv("QFLAG_DEFAULT_N");
  if (!env || !*env) return 2;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 2 || v > 16) throw UsageError(std::string("QFLAG_DEFAULT_N must be an integer >= 2, got '") + env + "'");
  return static_cast<int>(v);
}

class Runner {
 public:
  Runner(const Options& o, const Session& s) : o_(o), s_(s), pr_{o.letters && s.n() == 2} {}

  int dispatch(const std::string& cmd) {
    if (cmd == "nf") return nf();
    if (cmd == "d") return form([&] { return s_.calculus().ext_d(poly(arg(0))); });
    if (cmd == "del") return form([&] { return bundles().dolbeault(poly(arg(0)), DolbeaultPart::Hol); });
    if (cmd == "delbar") return form([&] { return bundles().dolbeault(poly(arg(0)), DolbeaultPart::AntiHol); });
    if (cmd == "theta") return form([&] { return bundles().theta(poly(arg(0))); });
    if (cmd == "nabla") return form([&] { return bundles().covariant_derivative(poly(arg(0))); });
    if (cmd == "act") return form([&] { return s_.calculus().right_act(one_form(arg(0)), poly(arg(1))); });
    if (cmd == "coset") return coset();
    if (cmd == "pair") return pair();
    if (cmd == "killing") return killing();
    if (cmd == "coact") return coact();
    if (cmd == "degree") return degree();
    throw UsageError("unknown command '" + cmd + "'");
  }

 private:
  const std::string& arg(std::size_t k) const {
    if (k >= o_.args.size()) throw UsageError("missing expression argument " + std::to_string(k + 1));
    return o_.args[k];
  }

  const Bundles& bundles() {
    if (!b_) b_.emplace(s_);
    return *b_;
  }

  NCPoly poly(const std::string& text, const Algebra* ctx = nullptr) const {
    const Algebra& a = ctx ? *ctx : s_.su();
    return evaluate_poly(parse_expr(text, a.spec()), s_, a);
  }

  Omega1 one_form(const std::string& text) const { return evaluate_form(parse_expr(text, s_.su().spec()), s_); }

  json header(const std::string& cmd, const std::string& schema) const {
    return {{"schema", schema}, {"command", cmd}, {"n", s_.n()}};
  }

  json poly_terms(const NCPoly& f) const {
    json t = json::array();
    for (const auto& [w, c] : f.terms()) t.push_back({{"word", format_word(w, f.spec(), pr_)}, {"coefficient", format_scalar(c)}});
    return t;
  }

  template <class F>
  int form(F&& make) {
    Omega1 w = make();
    if (!o_.json) {
      std::cout << format_form(w, pr_) << "\n";
      return 0;
    }
    FormIndex ix = s_.calculus().index();
    json j = header(command_, "qflag.form.v1");
    j["result"] = format_form(w, pr_);
    j["basis"] = json::array();
    j["coefficients"] = json::array();
    for (int k = 0; k < w.dim(); ++k) {
      j["basis"].push_back(ix.label(k));
      j["coefficients"].push_back(format_poly(w.coeff(k), pr_));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  int nf() {
    const Algebra* a = nullptr;
    if (o_.algebra == "m") a = &s_.mat();
    else if (o_.algebra == "u") {
      if (!u_) u_ = std::make_unique<Algebra>(AlgebraSpec{AlgebraKind::UnitaryGroup, s_.n(), s_.n()});
      a = u_.get();
    }
    else if (o_.algebra == "su") a = &s_.su();
    else throw UsageError("--algebra must be m, u or su");
    NCPoly f = poly(arg(0), a);
    std::optional<bool> zero;
    if (o_.bound >= 0) {
      if (a->kind() != AlgebraKind::SpecialUnitaryGroup) throw UsageError("--bound applies to --algebra su");
      const NCPoly lifted = evaluate_poly(parse_expr(arg(0), s_.mat().spec()), s_, s_.mat());
      zero = oracle_ideal_membership(s_.mat(), lifted, o_.bound);
    }
    if (!o_.json) {
      std::cout << format_poly(f, pr_) << "\n";
      if (zero) std::cout << "oracle (degree <= " << o_.bound << "): " << (*zero ? "zero" : "nonzero") << "\n";
      return 0;
    }
    json j = header("nf", "qflag.poly.v1");
    j["algebra"] = a->spec().name();
    j["result"] = format_poly(f, pr_);
    j["terms"] = poly_terms(f);
    if (zero) j["oracle"] = {{"bound", o_.bound}, {"zero", *zero}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  int coset() {
    OneFormCoords c = s_.calculus().coset(poly(arg(0)));
    FormIndex ix = s_.calculus().index();
    Omega1 w = s_.calculus().from_coords(s_.su().one(), c);
    if (!o_.json) {
      std::cout << format_form(w, pr_) << "\n";
      return 0;
    }
    json j = header("coset", "qflag.form.v1");
    j["result"] = format_form(w, pr_);
    j["basis"] = json::array();
    j["coefficients"] = json::array();
    for (int k = 0; k < ix.dim(); ++k) {
      j["basis"].push_back(ix.label(k));
      j["coefficients"].push_back(format_scalar(c[static_cast<std::size_t>(k)]));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  int scalar(const std::string& cmd, const QScalar& x) const {
    if (!o_.json) {
      std::cout << format_scalar(x) << "\n";
      return 0;
    }
    json j = header(cmd, "qflag.scalar.v1");
    j["result"] = format_scalar(x);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  int pair() { return scalar("pair", s_.killing().r(poly(arg(0)), poly(arg(1)))); }

  int killing() {
    QMatrix m = s_.killing().Q(poly(arg(0)));
    if (!o_.json) {
      for (const auto& row : m) {
        for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "  " : "") << format_scalar(row[k]);
        std::cout << "\n";
      }
      return 0;
    }
    json j = header("killing", "qflag.matrix.v1");
    j["result"] = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& x : row) r.push_back(format_scalar(x));
      j["result"].push_back(std::move(r));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  int coact() {
    HopfTag tag = parse_hopf_tag(o_.map);
    TensorPoly t = bundles().coaction(tag, poly(arg(0)));
    if (!o_.json) {
      std::cout << format_tensor(t, pr_) << "\n";
      return 0;
    }
    json j = header("coact", "qflag.tensor.v1");
    j["map"] = bundles().map_id(tag).name();
    j["result"] = format_tensor(t, pr_);
    j["terms"] = json::array();
    for (const auto& [lr, c] : t.terms())
      j["terms"].push_back({{"left", format_word(lr.first, t.left_spec(), pr_)},
                            {"right", format_word(lr.second, t.right_spec(), pr_)},
                            {"coefficient", format_scalar(c)}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  int degree() {
    int d = bundles().line_bundle_degree(poly(arg(0)));
    if (!o_.json) {
      std::cout << d << "\n";
      return 0;
    }
    json j = header("degree", "qflag.degree.v1");
    j["result"] = d;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

 public:
  std::string command_;

 private:
  const Options& o_;
  const Session& s_;
  PrintOptions pr_;
  std::optional<Bundles> b_;
  std::unique_ptr<Algebra> u_;
};

int verify(const Options& o, int n) {
  if (o.list || o.args.empty()) {
    for (const auto& s : suites()) {
      if (o.json) continue;
      std::cout << s.name << "  (N " << s.min_n << ".." << s.max_n << ")  " << s.summary << "\n";
    }
    if (o.json) {
      json j = json::array();
      for (const auto& s : suites()) j.push_back({{"name", s.name}, {"summary", s.summary}, {"min_n", s.min_n}, {"max_n", s.max_n}});
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }
  Budget budget = o.budget.empty() ? Budget::default_for(n) : Budget::parse(o.budget);
  SuiteReport rep = run_suite(o.args[0], n, o.seed, budget);
  if (o.json) {
    json j = rep.to_json();
    j["schema"] = "qflag.report.v1";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.suite << " N=" << rep.n << " seed=" << rep.seed << " budget=" << rep.budget.to_string() << "\n"
              << "note: " << rep.note << "\n";
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.description << "\n";
      if (c.witness) std::cout << "        witness: " << *c.witness << "\n";
    }
    std::cout << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " passed in " << rep.elapsed_seconds
              << " s\n";
  }
  return rep.failures() == 0 ? 0 : 1;
}

int report_error(const Error& e, bool as_json) {
  if (as_json) {
    json j{{"schema", "qflag.error.v1"}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    if (auto* p = dynamic_cast<const ParseError*>(&e)) {
      j["error"]["line"] = p->line;
      j["error"]["column"] = p->col;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error " << e.kind() << ": " << e.what() << "\n";
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the quantum flag calculus of C_q[SU_N]"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--n", o.n, "matrix size N (default: QFLAG_DEFAULT_N or 2)")->check(CLI::Range(2, 16));
  app.add_flag("--json", o.json, "print JSON");
  app.add_flag("--letters", o.letters, "print a, b, c, d for the generators when N = 2");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--budget", o.budget, "exhaustive or sample:K");
  app.add_option("--bound", o.bound, "degree bound for the ideal-membership oracle (nf --algebra su)");

  struct Cmd {
    const char* name;
    const char* help;
    int args;
  };
  const Cmd cmds[] = {
      {"nf", "normal form of an expression", 1},
      {"d", "exterior derivative in Ω¹_q(SU_N)", 1},
      {"del", "holomorphic part ∂ on C_q[CP^{N-1}]", 1},
      {"delbar", "anti-holomorphic part ∂̄ on C_q[CP^{N-1}]", 1},
      {"theta", "soldering form of a β-coinvariant element of ker ε", 1},
      {"nabla", "covariant derivative of a homogeneous sphere element", 1},
      {"coset", "class of an element of ker ε in the e-basis", 1},
      {"pair", "coquasi-triangular pairing r(F ⊗ G)", 2},
      {"killing", "matrix Q of the quantum Killing form", 1},
      {"act", "right action FORM · EXPR", 2},
      {"coact", "right coaction along a Hopf map", 1},
      {"degree", "line bundle degree of a homogeneous element", 1},
  };
  std::string chosen;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    auto* opt = sub->add_option("expr", o.args, c.args == 1 ? "expression" : "two expressions")->required();
    opt->expected(c.args);
    if (std::string(c.name) == "nf") sub->add_option("--algebra", o.algebra, "m, u or su")->check(CLI::IsMember({"m", "u", "su"}));
    if (std::string(c.name) == "coact") sub->add_option("--map", o.map, "alpha, beta or gamma")->check(CLI::IsMember({"alpha", "beta", "gamma"}));
    sub->callback([&chosen, name = std::string(c.name)] { chosen = name; });
  }
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->fallthrough();
  ver->add_option("suite", o.args, "suite name")->expected(0, 1);
  ver->add_flag("--list", o.list, "list suites");
  ver->callback([&chosen] { chosen = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    int n = o.n ? o.n : default_n();
    if (chosen == "verify") return verify(o, n);
    Session s(n);
    Runner r(o, s);
    r.command_ = chosen;
    return r.dispatch(chosen);
  } catch (const Error& e) {
    return report_error(e, o.json);
  }
}
