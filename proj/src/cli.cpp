#include "lieconserve/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieconserve/adjointness.hpp"
#include "lieconserve/characteristics.hpp"
#include "lieconserve/conservation.hpp"
#include "lieconserve/errors.hpp"
#include "lieconserve/parser.hpp"
#include "lieconserve/symmetry.hpp"

namespace lieconserve::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string alpha;
  std::string beta;
  std::string f;
  std::string builtin;
  std::string a;
  std::string generator;
  std::string tau;
  std::string xi;
  std::string eta;
  std::string lambda;
  std::string phi;
  std::string catalog;
  std::string numeric;
  std::vector<double> domain;
  std::string boundary;
  int nodes = 2048;
  std::vector<double> times;
  double tol = 1e-6;
  std::optional<int> samples;
  std::vector<std::string> inst;
  std::optional<double> zero_tol;
  std::string out;
  std::string config;
  std::vector<std::string> declare;
};

/// Bad flags, unparsable expressions, inconsistent scenario settings.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

json jnum(double value) {
  if (!std::isfinite(value)) return num(value);
  return std::stod(num(value));
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, separator)) {
    part = trim(part);
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  int classify();
  int verify();
  int claw();

  json& report() { return report_; }

 private:
  void setup();
  EvolutionSpec build_spec();
  Generator build_generator();
  Expr expr(const std::string& text, const char* flag) const;
  Expr instantiate_a(const Expr& e) const;
  void print_witness(const std::optional<Witness>& witness);
  int numeric(const ConservedVector& cv);

  const RunConfig& config_;
  std::ostream& out_;
  FunctionTable table_ = FunctionTable::standard();
  ZeroTestConfig zero_ = ZeroTestConfig::defaults();
  std::optional<EvolutionSpec> spec_;
  json report_ = {{"verdict", nullptr}, {"phi", nullptr}, {"residuals", json::array()},
                  {"claw", nullptr},    {"numeric", nullptr}};
};

Expr Session::expr(const std::string& text, const char* flag) const {
  try {
    return parse(text, table_);
  } catch (const ParseError& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  } catch (const UnknownSymbolError& e) {
    throw ConfigError(std::string(flag) + ": " + e.what() + " (declare it with --declare)");
  }
}

Expr Session::instantiate_a(const Expr& e) const {
  if (config_.a.empty()) return e;
  return instantiate_function(e, "a", expr(config_.a, "--a"), table_);
}

void Session::setup() {
  for (const auto& decl : config_.declare) {
    const auto open = decl.find('(');
    if (open == std::string::npos || decl.back() != ')') {
      throw ConfigError("--declare expects name(params), got '" + decl + "'");
    }
    try {
      table_.declare(trim(decl.substr(0, open)),
                     split(decl.substr(open + 1, decl.size() - open - 2), ','));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("--declare: ") + e.what());
    }
  }
  if (const char* seed = std::getenv("LIECONSERVE_SEED")) {
    try {
      std::size_t used = 0;
      zero_.seed = std::stoull(seed, &used);
      if (used != std::string_view(seed).size()) throw std::invalid_argument(seed);
    } catch (const std::exception&) {
      throw ConfigError(std::string("LIECONSERVE_SEED is not an unsigned integer: ") + seed);
    }
  }
  if (config_.samples) {
    if (*config_.samples <= 0) throw ConfigError("--samples must be positive");
    zero_.samples = *config_.samples;
  }
  if (config_.zero_tol) {
    if (!(*config_.zero_tol > 0)) throw ConfigError("--zero-tol must be positive");
    zero_.tolerance = *config_.zero_tol;
  }
  if (!config_.inst.empty()) {
    zero_.instantiations.clear();
    for (const auto& set : config_.inst) {
      Instantiation functions;
      for (const auto& binding : split(set, ';')) {
        try {
          functions.insert(parse_instantiation(binding, table_));
        } catch (const std::exception& e) {
          throw ConfigError(std::string("--inst: ") + e.what());
        }
      }
      zero_.instantiations.push_back(std::move(functions));
    }
  }
  spec_ = build_spec();
  out_ << "equation: " << spec_->to_string() << '\n';
  report_["equation"] = spec_->to_string();
}

EvolutionSpec Session::build_spec() {
  const int given = !config_.alpha.empty() + !config_.f.empty() + !config_.builtin.empty();
  if (given != 1) throw ConfigError("give exactly one of --alpha, --f, --builtin");
  if (!config_.beta.empty() && config_.alpha.empty()) {
    throw ConfigError("--beta needs --alpha");
  }
  try {
    if (!config_.builtin.empty()) {
      if (config_.builtin != "burgers") {
        throw ConfigError("unknown builtin '" + config_.builtin + "' (known: burgers)");
      }
      return EvolutionSpec::alpha_beta(parse("a(u)", table_), constant(0));
    }
    if (!config_.f.empty()) return EvolutionSpec::generic(expr(config_.f, "--f"));
    return EvolutionSpec::alpha_beta(expr(config_.alpha, "--alpha"),
                                     expr(config_.beta.empty() ? "0" : config_.beta, "--beta"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Generator Session::build_generator() {
  const bool components = !config_.tau.empty() || !config_.xi.empty() || !config_.eta.empty();
  if (components == !config_.generator.empty()) {
    throw ConfigError("give either --generator or some of --tau, --xi, --eta");
  }
  Generator g;
  try {
    if (components) {
      auto part = [&](const std::string& text, const char* flag) {
        return text.empty() ? constant(0) : expr(text, flag);
      };
      g = Generator::make(part(config_.tau, "--tau"), part(config_.xi, "--xi"),
                          part(config_.eta, "--eta"));
    } else {
      g = burgers_generator(config_.generator, table_);
      if (config_.builtin.empty() && !config_.a.empty()) {
        g = Generator::make(instantiate_a(g.tau), instantiate_a(g.xi), instantiate_a(g.eta),
                            g.name);
      }
    }
    if (!config_.lambda.empty()) g = scale_generator(expr(config_.lambda, "--lambda"), g);
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  out_ << "generator: " << g.to_string() << '\n';
  report_["generator"] = g.to_string();
  return g;
}

void Session::print_witness(const std::optional<Witness>& witness) {
  if (!witness) return;
  std::string functions;
  for (const auto& [name, poly] : witness->functions) {
    const auto fn = table_.resolve(name);
    if (!functions.empty()) functions += ", ";
    functions += name + " := " + to_string(poly.to_expr(fn ? fn->decl->params
                                                           : std::vector<std::string>{"u"}));
  }
  out_ << "witness: " << witness->point.to_string();
  if (!functions.empty()) out_ << " with " << functions;
  out_ << ", value " << num(witness->value) << '\n';
  report_["witness"] = {{"point", witness->point.to_string()},
                        {"functions", functions},
                        {"value", jnum(witness->value)}};
}

int Session::classify() {
  setup();
  const auto verdict = lieconserve::classify(*spec_, table_, zero_);
  std::string line(to_string(verdict.kind));
  if (verdict.lambda && verdict.r) line += " (lambda = " + to_string(*verdict.lambda) + ")";
  if (verdict.phi) line += ", phi(u) = " + to_string(*verdict.phi);
  out_ << line << '\n';
  report_["verdict"] = std::string(to_string(verdict.kind));
  if (verdict.phi) report_["phi"] = to_string(*verdict.phi);
  if (verdict.lambda) report_["lambda"] = to_string(*verdict.lambda);
  if (verdict.r) {
    out_ << "r(u) = phi'/phi = " << to_string(*verdict.r) << '\n';
    report_["r"] = to_string(*verdict.r);
  }
  if (verdict.phi && verdict.kind == AdjointKind::quasi_self_adjoint) {
    const std::string printed = to_string(*verdict.phi);
    if (const auto fn = verdict.table.resolve(printed.substr(0, printed.find('(')));
        fn && fn->decl->rewrite) {
      out_ << "phi is defined by phi'(u) = " << to_string(fn->decl->rewrite->derivative) << '\n';
    }
  }
  if (verdict.unintegrated) {
    out_ << "could not integrate: " << to_string(*verdict.unintegrated) << '\n';
  }
  for (const auto& note : verdict.diagnostics) out_ << "note: " << note << '\n';
  report_["diagnostics"] = verdict.diagnostics;
  if (!config_.phi.empty()) {
    const auto check = verify_substitution(*spec_, expr(config_.phi, "--phi"), table_, zero_);
    out_ << "substitution v = " << config_.phi << ": residual " << to_string(check.residual)
         << (check.pass() ? " vanishes" : " does not vanish") << '\n';
    report_["residuals"].push_back(to_string(check.residual));
    report_["substitution"] = check.pass();
    print_witness(check.verdict.witness);
  }
  switch (verdict.kind) {
    case AdjointKind::self_adjoint:
    case AdjointKind::quasi_self_adjoint: return kPass;
    case AdjointKind::not_quasi_self_adjoint: return kFail;
    case AdjointKind::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int Session::verify() {
  setup();
  const Generator g = build_generator();
  bool pass = true;
  auto show = [&](const char* name, const Expr& residual, const ZeroVerdict& verdict) {
    out_ << name << " = " << to_string(residual) << ": "
         << (verdict.zero ? "vanishes" : "does not vanish") << '\n';
    report_["residuals"].push_back(to_string(residual));
    if (!verdict.zero) print_witness(verdict.witness);
    pass = pass && verdict.zero;
  };
  if (spec_->as_alpha_beta(table_)) {
    const auto check = check_symmetry(*spec_, g, table_, zero_);
    show("R1", check.residuals.r1, check.first);
    show("R2", check.residuals.r2, check.second);
  } else {
    const Expr residual = determining_residual_generic(*spec_, g, table_);
    show("R", residual, is_zero(residual, table_, zero_));
  }
  out_ << "verdict: " << (pass ? "pass" : "fail") << '\n';
  report_["verdict"] = pass ? "pass" : "fail";
  return pass ? kPass : kFail;
}

int Session::claw() {
  setup();
  ConservedVector cv;
  std::optional<Expr> phi;
  if (!config_.phi.empty()) phi = expr(config_.phi, "--phi");
  if (!config_.catalog.empty()) {
    if (config_.builtin != "burgers") throw ConfigError("--catalog needs --builtin burgers");
    if (!config_.generator.empty() || !config_.tau.empty() || !config_.xi.empty() ||
        !config_.eta.empty()) {
      throw ConfigError("give either --catalog or a generator");
    }
    try {
      cv = burgers_claw(config_.catalog, table_);
    } catch (const std::out_of_range& e) {
      throw ConfigError(e.what());
    }
    out_ << "catalog: " << cv.label << " (from " << cv.generator << ")\n";
  } else {
    const Generator g = build_generator();
    try {
      if (spec_->as_alpha_beta(table_)) {
        cv = build_vector_self(*spec_, g, table_, phi, zero_);
      } else {
        cv = build_vector_general(*spec_, g, table_);
      }
    } catch (const RefusalError& e) {
      out_ << "refused: " << e.what() << '\n';
      report_["verdict"] = "refused";
      report_["diagnostics"] = {e.what()};
      return kFail;
    }
  }
  if (phi) report_["phi"] = to_string(*phi);
  else if (cv.multiplier) report_["phi"] = to_string(*cv.multiplier);
  out_ << "formula: " << to_string(cv.formula) << '\n';
  out_ << "C0 = " << to_string(cv.c0) << '\n';
  out_ << "C1 = " << to_string(cv.c1) << '\n';
  const std::optional<Expr> substitute = cv.has_v() ? phi : std::nullopt;
  const auto check = check_divergence(cv, *spec_, table_, substitute, zero_);
  const std::string divergence = to_string(check.residual);
  out_ << "divergence: " << divergence
       << (check.pass() ? (check.residual.is_zero_literal() ? "" : " (vanishes on solutions)")
                        : " (does not vanish)")
       << '\n';
  print_witness(check.verdict.witness);
  json claw = {{"C0", to_string(cv.c0)},
               {"C1", to_string(cv.c1)},
               {"divergence", divergence},
               {"conserved", check.pass()},
               {"formula", std::string(to_string(cv.formula))}};
  if (!cv.label.empty()) claw["label"] = cv.label;
  if (!cv.generator.empty()) claw["generator"] = cv.generator;
  if (!config_.a.empty() && config_.builtin == "burgers") {
    const auto concrete = instantiate(cv, "a", expr(config_.a, "--a"), table_);
    out_ << "with a(u) = " << config_.a << ": C0 = " << to_string(concrete.c0)
         << ", C1 = " << to_string(concrete.c1) << '\n';
    claw["instantiated"] = {{"a", config_.a},
                            {"C0", to_string(concrete.c0)},
                            {"C1", to_string(concrete.c1)}};
  }
  report_["residuals"].push_back(divergence);
  report_["claw"] = claw;
  int status = check.pass() ? kPass : kFail;
  if (!config_.numeric.empty()) {
    const int numeric_status = numeric(cv);
    if (status == kPass) status = numeric_status;
  }
  report_["verdict"] = status == kPass ? "pass" : "fail";
  out_ << "verdict: " << (status == kPass ? "pass" : "fail") << '\n';
  return status;
}

int Session::numeric(const ConservedVector& cv) {
  if (config_.domain.size() != 2) throw ConfigError("--numeric needs --domain LO HI");
  if (config_.times.empty()) throw ConfigError("--numeric needs --times");
  for (std::size_t i = 0; i < config_.times.size(); ++i) {
    if (!(config_.times[i] > 0) || (i > 0 && !(config_.times[i] > config_.times[i - 1]))) {
      throw ConfigError("--times must be positive and ascending");
    }
  }
  Expr speed_expr;
  if (config_.builtin == "burgers") {
    speed_expr = expr(config_.a.empty() ? "u" : config_.a, "--a");
  } else if (spec_->is_alpha_beta() && spec_->beta().is_zero_literal()) {
    speed_expr = spec_->alpha();
  } else {
    throw ConfigError("--numeric needs u_t + a(u)*u_x = 0");
  }
  std::optional<WaveSpeed> speed;
  try {
    speed.emplace(Polynomial::from_expr(speed_expr, {"u"}));
  } catch (const std::invalid_argument&) {
    throw ConfigError("--numeric needs a polynomial wave speed, got " + to_string(speed_expr));
  }
  Domain domain{config_.domain[0], config_.domain[1], Boundary::compact_support};
  const double centre = 0.5 * (domain.lo + domain.hi);
  const double width = domain.hi - domain.lo;
  Profile profile;
  if (config_.numeric == "sin") {
    profile = Profile::sine();
    domain.boundary = Boundary::periodic;
  } else if (config_.numeric == "gauss") {
    profile = Profile::gaussian(centre, width / 8);
  } else if (config_.numeric == "bump") {
    profile = Profile::bump(centre, width / 4);
  } else {
    try {
      profile = Profile::polynomial(Polynomial::from_expr(expr(config_.numeric, "--numeric"), {"x"}),
                                    config_.numeric);
    } catch (const std::invalid_argument&) {
      throw ConfigError("--numeric expects sin, gauss, bump or a polynomial in x");
    }
  }
  if (config_.boundary == "periodic") {
    domain.boundary = Boundary::periodic;
  } else if (config_.boundary == "compact" || config_.boundary == "compact-support") {
    domain.boundary = Boundary::compact_support;
  } else if (!config_.boundary.empty()) {
    throw ConfigError("--boundary expects periodic or compact");
  }
  try {
    const CharacteristicSolution sol(*speed, profile, domain);
    const auto r = verify_law(sol, cv, config_.times, config_.nodes, config_.tol, table_);
    out_ << "numeric: u0 = " << profile.name << " on [" << num(domain.lo) << ", "
         << num(domain.hi) << "] " << to_string(domain.boundary)
         << ", a(u) = " << to_string(speed->to_expr()) << ", shock time "
         << num(sol.shock_time()) << ", nodes " << config_.nodes << '\n';
    out_ << "density: " << to_string(r.density) << '\n';
    out_ << "flux: " << to_string(r.flux) << '\n';
    out_ << "mode: " << to_string(r.mode) << '\n';
    out_ << "t Q(t) residual\n";
    out_ << "0 " << num(r.q0) << " 0\n";
    for (std::size_t i = 0; i < r.times.size(); ++i) {
      out_ << num(r.times[i]) << ' ' << num(r.q[i]) << ' ' << num(r.residuals[i]) << '\n';
    }
    out_ << "drift " << num(r.drift) << " threshold " << num(r.threshold) << ' '
         << (r.pass ? "pass" : "fail") << '\n';
    json times = json::array();
    json q = json::array();
    json residuals = json::array();
    for (std::size_t i = 0; i < r.times.size(); ++i) {
      times.push_back(jnum(r.times[i]));
      q.push_back(jnum(r.q[i]));
      residuals.push_back(jnum(r.residuals[i]));
    }
    report_["numeric"] = {{"profile", profile.name},
                          {"domain", {jnum(domain.lo), jnum(domain.hi)}},
                          {"boundary", std::string(to_string(domain.boundary))},
                          {"shock_time", jnum(sol.shock_time())},
                          {"mode", std::string(to_string(r.mode))},
                          {"times", times},
                          {"Q0", jnum(r.q0)},
                          {"Q", q},
                          {"residuals", residuals},
                          {"drift", jnum(r.drift)},
                          {"threshold", jnum(r.threshold)},
                          {"pass", r.pass}};
    return r.pass ? kPass : kFail;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

void add_equation_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--alpha", c.alpha, "alpha(t, x, u) in u_t + alpha*u_x + beta = 0");
  sub->add_option("--beta", c.beta, "beta(t, x, u), default 0");
  sub->add_option("--f", c.f, "flux f(t, x, u, u_x) in u_t + f = 0");
  sub->add_option("--builtin", c.builtin, "named equation: burgers (u_t + a(u)*u_x = 0)");
  sub->add_option("--a", c.a, "polynomial in u replacing a(u)");
  sub->add_option("--declare", c.declare, "extra opaque function, e.g. g(u) or h(t, x)");
  sub->add_option("--samples", c.samples, "zero-test sample points per instantiation");
  sub->add_option("--inst", c.inst, "zero-test instantiation set, e.g. 'a := 1 + u^2; q := x'");
  sub->add_option("--zero-tol", c.zero_tol, "zero-test relative tolerance");
  sub->add_option("--out", c.out, "write the JSON report here");
  sub->add_option("--config", c.config, "key = value file with the same keys as the flags");
}

void add_generator_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--generator", c.generator, "catalog generator X1..X8 or Xtx");
  sub->add_option("--tau", c.tau, "coefficient of d/dt");
  sub->add_option("--xi", c.xi, "coefficient of d/dx");
  sub->add_option("--eta", c.eta, "coefficient of d/du");
  sub->add_option("--lambda", c.lambda, "scale the generator by lambda(u)");
}

const std::vector<std::string> kMultiValued = {"times", "domain"};

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + " has no '='");
    }
    std::string value = trim(text.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    entries.emplace_back(trim(text.substr(0, eq)), value);
  }
  return entries;
}

std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::vector<std::string> merged = args;
  for (const auto& [key, value] : read_config(in)) {
    if (key == "config") throw std::invalid_argument("config files cannot nest");
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    merged.push_back(flag);
    if (std::find(kMultiValued.begin(), kMultiValued.end(), key) != kMultiValued.end()) {
      for (auto& token : split(value, ' ')) merged.push_back(token);
    } else {
      merged.push_back(value);
    }
  }
  return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Self-adjointness, symmetries and conservation laws of u_t + f(t, x, u, u_x) = 0"};
  app.name("lieconserve");
  app.require_subcommand(1);
  auto* classify = app.add_subcommand("classify", "decide (quasi-)self-adjointness");
  add_equation_options(classify, c);
  classify->add_option("--phi", c.phi, "probe v = phi(u) in the adjoint");
  auto* verify = app.add_subcommand("verify", "check a generator against the determining equations");
  add_equation_options(verify, c);
  add_generator_options(verify, c);
  auto* claw = app.add_subcommand("claw", "build and certify a conservation law");
  add_equation_options(claw, c);
  add_generator_options(claw, c);
  claw->add_option("--phi", c.phi, "multiplier v = phi(u)");
  claw->add_option("--catalog", c.catalog, "catalog law l1, l2, l3, l4, l5a, l5b");
  claw->add_option("--numeric", c.numeric, "initial profile: sin, gauss, bump or polynomial in x");
  claw->add_option("--domain", c.domain, "LO HI")->expected(2);
  claw->add_option("--boundary", c.boundary, "periodic or compact");
  claw->add_option("--nodes", c.nodes, "Simpson subintervals (even, >= 64)");
  claw->add_option("--times", c.times, "time samples");
  claw->add_option("--tol", c.tol, "numeric tolerance");

  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Session session(c, out);
  int status = kUsage;
  try {
    if (classify->parsed()) status = session.classify();
    if (verify->parsed()) status = session.verify();
    if (claw->parsed()) status = session.claw();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    session.report()["error"] = e.what();
    status = kUsage;
  } catch (const InconclusiveError& e) {
    out << "inconclusive: " << e.what() << '\n';
    session.report()["verdict"] = "inconclusive";
    session.report()["diagnostics"] = {e.what()};
    status = kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    session.report()["error"] = e.what();
    status = kUsage;
  }
  session.report()["exit_code"] = status;
  if (!c.out.empty()) {
    std::ofstream file(c.out);
    if (!file) {
      err << "error: cannot write '" << c.out << "'\n";
      return kUsage;
    }
    file << session.report().dump(2) << '\n';
  }
  return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace lieconserve::cli
