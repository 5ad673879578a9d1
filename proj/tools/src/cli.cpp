#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"
#include "wwgm/correspondence.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/expr.hpp"
#include "wwgm/fock_oracle.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/star_moyal.hpp"
#include "wwgm/verify.hpp"
#include "wwgm/w_infinity.hpp"

namespace wwgm::cli {

namespace {

constexpr const char* kSymbolic = "symbolic";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  Json json;
  std::string text;
  int code = kExitOk;
};

struct Globals {
  std::string s = kSymbolic;
  std::string r = "0";
  std::string s_prime = kSymbolic;
  std::string hbar = kSymbolic;
  std::string algebra = "qp";
  std::string convention = "paper";
  std::string format = "text";
  std::string out;
  int max_degree = kMaxDegree;
  int fock_n = 64;
  int proj_rank = -1;
  double tol = 1e-10;
};

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}

  Scalar param(const std::string& value, Unit unit, const char* flag) const {
    if (value == kSymbolic) return Scalar::unit(unit);
    Scalar v = parse_scalar(value);
    if (!v.is_constant()) throw UsageError(std::string(flag) + " takes a number or \"symbolic\", got " + value);
    return v;
  }
  Scalar s() const { return param(g_.s, Unit::s, "--s"); }
  Scalar r() const { return param(g_.r, Unit::r, "--r"); }
  // A symbolic target ordering is the independent formal unit r.
  Scalar s_prime() const { return param(g_.s_prime, Unit::r, "--s-prime"); }

  std::complex<double> number(const std::string& value, const char* flag) const {
    if (value == kSymbolic) throw UsageError(std::string(flag) + " needs a numeric value here");
    const Scalar v = parse_scalar(value);
    if (!v.is_constant()) throw UsageError(std::string(flag) + " takes a number, got " + value);
    return v.constant_value().to_complex();
  }

  Algebra algebra() const {
    if (g_.algebra == "qp") return Algebra::qp();
    if (g_.algebra == "aadag") return Algebra::aadag();
    throw UsageError("--algebra must be qp or aadag");
  }

  PoissonConvention convention() const {
    if (g_.convention == "paper") return PoissonConvention::paper;
    if (g_.convention == "standard") return PoissonConvention::standard;
    throw UsageError("--convention must be paper or standard");
  }

  void index(long v, const char* what) const {
    if (v < 0) throw DomainError(std::string(what) + " must be nonnegative");
    if (v > g_.max_degree) {
      throw DegreeOverflow(std::string(what) + " = " + std::to_string(v) + " exceeds --max-degree " +
                           std::to_string(g_.max_degree));
    }
  }

  // Applies a numeric --hbar and the output degree cap.
  template <typename T>
  T finish(const T& value) const {
    T out = value;
    if (g_.hbar != kSymbolic) out = out.substitute(Unit::hbar, param(g_.hbar, Unit::hbar, "--hbar"));
    if constexpr (requires { out.total_degree(); }) {
      if (out.total_degree() > g_.max_degree) {
        throw DegreeOverflow("result degree " + std::to_string(out.total_degree()) + " exceeds --max-degree " +
                             std::to_string(g_.max_degree));
      }
    }
    return out;
  }

  fock::Config fock_config() const {
    fock::Config cfg;
    cfg.n = g_.fock_n;
    cfg.proj_rank = g_.proj_rank;
    cfg.tol = g_.tol;
    if (g_.hbar != kSymbolic) {
      const auto h = number(g_.hbar, "--hbar");
      if (h.imag() != 0.0) throw UsageError("--hbar must be real");
      cfg.hbar = h.real();
    }
    cfg.validate();
    return cfg;
  }

 private:
  const Globals& g_;
};

Result value(const OpPoly& a) { return {to_json(a), a.to_string()}; }
Result value(const PhasePoly& f) { return {to_json(f), f.to_string()}; }
Result value(const DiffOp& d) { return {to_json(d), d.to_string()}; }

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string pair_label(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

// ---- commands -------------------------------------------------------------

Result cmd_convert(const Session& ss, int n, int m) {
  const Algebra alg = ss.algebra();
  const OrderExpansion e = convert_order(n, m, ss.s(), ss.s_prime(), alg);
  std::string text;
  for (const auto& [k, c] : e.terms) {
    text += "k=" + std::to_string(k) + "  t" + pair_label(n - k, m - k) + "  coeff " + ss.finish(c).to_string() + "\n";
  }
  OrderExpansion shown = e;
  for (auto& [k, c] : shown.terms) c = ss.finish(c);
  return {to_json(shown), text.empty() ? "0" : text.substr(0, text.size() - 1)};
}

Result cmd_structure(const Session& ss, int n, int m, int k, int l) {
  const StructureExpansion e = structure_expand(n, m, k, l, ss.r(), ss.algebra());
  Json terms = Json::array();
  std::string text;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    const Scalar c = ss.finish(it->second);
    terms.push_back(Json{{"n", it->first.first}, {"m", it->first.second}, {"coeff", to_json(c)}});
    text += "t" + pair_label(it->first.first, it->first.second) + "  " + c.to_string() + "\n";
  }
  text += "central charge " + ss.finish(e.central()).to_string();
  return {Json{{"terms", terms}, {"central_charge", to_json(ss.finish(e.central()))}}, text};
}

Result cmd_table(const Session& ss, GeneratorBasis basis, int max_n, int max_m, int max_total) {
  const auto rows = generator_table(ss.r(), ss.s(), max_n, max_m, max_total, basis);
  const char* gen_name = basis == GeneratorBasis::wigner ? "Gamma" : "T";
  Json arr = Json::array();
  std::string text;
  for (const GeneratorRow& row : rows) {
    const OpPoly t = ss.finish(row.ordered);
    const DiffOp g = ss.finish(row.generator);
    arr.push_back(Json{{"n", row.n}, {"m", row.m}, {"ordered", to_json(t)}, {"generator", to_json(g)}});
    text += "t" + pair_label(row.n, row.m) + " = " + t.to_string() + "    " + gen_name + pair_label(row.n, row.m) +
            " = " + g.to_string() + "\n";
  }
  if (!text.empty()) text.pop_back();
  return {Json{{"rows", arr}}, text};
}

Result cmd_wcheck(const Session& ss, int n, int m, int k, int l) {
  const IsomorphismReport iso = isomorphism_check(n, m, k, l, ss.s());
  const CentralExtensionReport ce = central_extension_report(n, m, k, l, ss.r(), ss.s());
  Json j{{"isomorphism", {{"passed", iso.passed},
                          {"generator_side", to_json(iso.generator_side)},
                          {"bracket_side", to_json(iso.bracket_side)}}},
         {"central_extension", {{"passed", ce.passed},
                                {"classical_commutator", to_json(ce.classical_commutator)},
                                {"expected", to_json(ce.expected)},
                                {"central_charge", to_json(ce.central_charge)}}}};
  std::string text = pass_word(iso.passed) + " isomorphism: Gamma" + pair_label(n, m) + " q^" + std::to_string(k) +
                     " p^" + std::to_string(l) + " = " + iso.generator_side.to_string() + "\n" +
                     pass_word(ce.passed) + " central extension: [Gamma" + pair_label(n, m) + ", Gamma" +
                     pair_label(k, l) + "] = " + ce.classical_commutator.to_string() +
                     ", central charge " + ce.central_charge.to_string();
  return {j, text, iso.passed && ce.passed ? kExitOk : kExitCheckFailed};
}

Result cmd_evolve(const Session& ss, const std::string& h, const std::string& f, int order) {
  const auto coeffs = evolve(parse_phase(h), parse_phase(f), ss.s(), order);
  Json arr = Json::array();
  std::string text;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const PhasePoly c = ss.finish(coeffs[k]);
    arr.push_back(to_json(c));
    text += "t^" + std::to_string(k) + ": " + c.to_string() + "\n";
  }
  if (!text.empty()) text.pop_back();
  return {Json{{"coefficients", arr}}, text};
}

Result cmd_fock_commutator(const Session& ss) {
  const fock::Config cfg = ss.fock_config();
  const fock::Generators g = fock::build_generators(cfg);
  const fock::Matrix lhs = g.q * g.p - g.p * g.q;
  const fock::Matrix rhs = fock::cplx(0.0, cfg.hbar) * fock::Matrix::Identity(cfg.n, cfg.n);
  const double dev = fock::projected_max_abs(lhs - rhs, cfg.rank());
  const bool ok = dev < cfg.tol;
  return {Json{{"n", cfg.n}, {"rank", cfg.rank()}, {"deviation", dev}, {"tol", cfg.tol}, {"passed", ok}},
          pass_word(ok) + " [q,p] - i hbar I: projected max deviation " + fmt(dev), ok ? kExitOk : kExitCheckFailed};
}

Result cmd_fock_displacement(const Session& ss, const std::string& f, double xi, double eta) {
  fock::Config cfg = ss.fock_config();
  const fock::DisplacementReport r = fock::displacement_check(xi, eta, parse_operator(f), cfg);
  return {Json{{"xi", xi}, {"eta", eta}, {"deviation", r.deviation}, {"tol", r.tol}, {"passed", r.passed}},
          pass_word(r.passed) + " displacement: relative deviation " + fmt(r.deviation),
          r.passed ? kExitOk : kExitCheckFailed};
}

Result cmd_fock_derivative(const Session& ss, const Globals& g, int n, int m, double xi, double eta, double h) {
  fock::Config cfg = ss.fock_config();
  const auto s = ss.number(g.s == kSymbolic ? "0" : g.s, "--s");
  const auto r = ss.number(g.r, "--r");
  const fock::DerivativeReport rep = fock::derivative_check(s, xi, eta, h, n, m, r, cfg);
  Json j{{"n", n}, {"m", m}, {"h", h},
         {"first_order_error", rep.first_order_error}, {"first_order_error_half", rep.first_order_error_half},
         {"generator_error", rep.generator_error}, {"generator_error_half", rep.generator_error_half},
         {"generator_derivative_order", rep.generator_derivative_order}, {"tol", rep.tol}, {"passed", rep.passed}};
  std::string text = pass_word(rep.passed) + " derivative identities at h=" + fmt(h) + ": first-order error " +
                     fmt(rep.first_order_error) + " (h/2: " + fmt(rep.first_order_error_half) +
                     "), generator error " + fmt(rep.generator_error) + " (h/2: " + fmt(rep.generator_error_half) + ")";
  return {j, text, rep.passed ? kExitOk : kExitCheckFailed};
}

Result cmd_fock_routes(const Session& ss, const Globals& g, int n, int m) {
  fock::Config cfg = ss.fock_config();
  const auto s = ss.number(g.s == kSymbolic ? "0" : g.s, "--s");
  const fock::Matrix x = fock::ordered_word_matrix(n, m, s, OrderingRoute::split_x, cfg);
  const fock::Matrix y = fock::ordered_word_matrix(n, m, s, OrderingRoute::split_y, cfg);
  const fock::Matrix sym = fock::matrix_of(s_ordered(n, m, Scalar::s()), cfg, {s, std::nullopt});
  const double routes = fock::projected_deviation(x, y, cfg.rank());
  const double symbolic = fock::projected_deviation(sym, x, cfg.rank());
  const bool ok = routes < cfg.tol && symbolic < cfg.tol;
  return {Json{{"route_deviation", routes}, {"symbolic_deviation", symbolic}, {"tol", cfg.tol}, {"passed", ok}},
          pass_word(ok) + " ordered words " + pair_label(n, m) + ": routes " + fmt(routes) + ", symbolic " + fmt(symbolic),
          ok ? kExitOk : kExitCheckFailed};
}

Result cmd_verify(const Globals& g, bool no_fock, bool serial, unsigned seed) {
  VerifyOptions opts;
  opts.include_fock = !no_fock;
  opts.fock_n = g.fock_n;
  opts.parallel = !serial;
  opts.seed = seed;
  const auto results = run_verify(opts);
  Json arr = Json::array();
  std::string text;
  bool all = true;
  for (const CheckResult& c : results) {
    all = all && c.passed;
    arr.push_back(Json{{"module", c.module}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                       {"detail", c.detail}});
    text += pass_word(c.passed) + "  " + c.module + ": " + c.name + " [" + std::to_string(c.cases) + " cases]";
    if (!c.detail.empty()) text += (c.passed ? "  " : "  counterexample: ") + c.detail;
    text += "\n";
  }
  text += all ? "all checks passed" : "some checks FAILED";
  return {Json{{"passed", all}, {"checks", arr}}, text, all ? kExitOk : kExitCheckFailed};
}

template <typename T>
std::optional<T> pick(const std::string& v, std::initializer_list<std::pair<const char*, T>> choices, const char* flag) {
  for (const auto& [name, val] : choices) {
    if (v == name) return val;
  }
  throw UsageError(std::string("invalid value for ") + flag + ": " + v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact s-ordered quantization toolkit: orderings, star products, Bopp operators, W-infinity generators",
               "wwgm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--s", g.s, "ordering parameter s (number or \"symbolic\")")->capture_default_str();
  app.add_option("--r", g.r, "second ordering parameter r (number or \"symbolic\")")->capture_default_str();
  app.add_option("--s-prime", g.s_prime, "target ordering for convert; \"symbolic\" uses the formal unit r")
      ->capture_default_str();
  app.add_option("--hbar", g.hbar, "value substituted for hbar (number or \"symbolic\")")->capture_default_str();
  app.add_option("--algebra", g.algebra, "operator algebra: qp or aadag")->capture_default_str();
  app.add_option("--convention", g.convention, "Poisson bracket sign: paper or standard")->capture_default_str();
  app.add_option("--max-degree", g.max_degree, "largest accepted exponent")
      ->check(CLI::Range(0, kMaxDegree))
      ->capture_default_str();
  app.add_option("--fock-n", g.fock_n, "Fock space truncation")->capture_default_str();
  app.add_option("--proj-rank", g.proj_rank, "comparison rank (-1: truncation - 8)")->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance for algebraic Fock checks")->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", g.out, "write the result to FILE");

  std::function<Result()> action;
  Session ss(g);
  int n = 0, m = 0, k = 0, l = 0;
  std::string f, h;
  auto indices = [&](CLI::App* sub, int count) {
    int* slots[] = {&n, &m, &k, &l};
    const char* names[] = {"n", "m", "k", "l"};
    for (int j = 0; j < count; ++j) sub->add_option(names[j], *slots[j])->required();
  };
  auto check_indices = [&](int count) {
    const int vals[] = {n, m, k, l};
    const char* names[] = {"n", "m", "k", "l"};
    for (int j = 0; j < count; ++j) ss.index(vals[j], names[j]);
  };

  std::string route = "x";
  auto* order = app.add_subcommand("order", "s-ordered product t_nm in standard order");
  indices(order, 2);
  order->add_option("--route", route, "x: split the first generator, y: split the second")
      ->check(CLI::IsMember({"x", "y"}))
      ->capture_default_str();
  order->callback([&] {
    action = [&] {
      check_indices(2);
      const auto rt = route == "x" ? OrderingRoute::split_x : OrderingRoute::split_y;
      return value(ss.finish(s_ordered(n, m, ss.s(), ss.algebra(), rt)));
    };
  });

  auto* convert = app.add_subcommand("convert", "expand t_nm^(s) in s'-ordered products");
  indices(convert, 2);
  convert->callback([&] { action = [&] { check_indices(2); return cmd_convert(ss, n, m); }; });

  std::string g_expr;
  auto binary = [&](const char* name, const char* help, std::function<PhasePoly(const PhasePoly&, const PhasePoly&)> op) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("f", f, "phase-space polynomial in q, p")->required();
    sub->add_option("g", g_expr, "phase-space polynomial in q, p")->required();
    sub->callback([&, op] { action = [&, op] { return value(ss.finish(op(parse_phase(f), parse_phase(g_expr)))); }; });
    return sub;
  };
  binary("star", "star product f * g", [&](const PhasePoly& a, const PhasePoly& b) { return star(a, b, ss.s()); });
  binary("moyal", "Moyal bracket f * g - g * f", [&](const PhasePoly& a, const PhasePoly& b) { return moyal(a, b, ss.s()); });
  binary("poisson", "Poisson bracket", [&](const PhasePoly& a, const PhasePoly& b) { return poisson(a, b, ss.convention()); });
  int series_order = kMaxSeriesOrder;
  auto* series = binary("series", "Moyal bracket from its hbar expansion",
                        [&](const PhasePoly& a, const PhasePoly& b) { return moyal_series(a, b, ss.s(), series_order); });
  series->add_option("--order", series_order, "highest order kept")->capture_default_str();

  auto* quantize_cmd = app.add_subcommand("quantize", "operator assigned to a phase-space polynomial");
  quantize_cmd->add_option("f", f, "polynomial in q, p (or Zb, Z for --algebra aadag)")->required();
  quantize_cmd->callback([&] {
    action = [&] {
      const Algebra alg = ss.algebra();
      return value(ss.finish(quantize(parse_phase(f, alg.phase_pair()), ss.s(), alg)));
    };
  });

  auto* symbol_cmd = app.add_subcommand("symbol", "phase-space symbol of an operator");
  symbol_cmd->add_option("A", f, "operator polynomial in Q, P (or Ad, A)")->required();
  symbol_cmd->callback([&] { action = [&] { return value(ss.finish(symbol(parse_operator(f, ss.algebra()), ss.s()))); }; });

  bool real_params = false;
  auto* adjoint_cmd = app.add_subcommand("adjoint", "Hermitian adjoint of an operator");
  adjoint_cmd->add_option("A", f, "operator polynomial")->required();
  adjoint_cmd->add_flag("--real-params", real_params, "treat symbolic s and r as real");
  adjoint_cmd->callback([&] { action = [&] { return value(ss.finish(parse_operator(f, ss.algebra()).adjoint(real_params))); }; });

  auto* sym_cmd = app.add_subcommand("symmetrize", "average over all words with n first and m second generators");
  indices(sym_cmd, 2);
  sym_cmd->callback([&] { action = [&] { check_indices(2); return value(ss.finish(symmetrize_oracle(n, m, ss.algebra()))); }; });

  std::string alpha = "1";
  auto* herm = app.add_subcommand("hermitian", "Hermitian combination of t_nm^(s) and its adjoint");
  indices(herm, 2);
  herm->add_option("--alpha", alpha, "mixing coefficient")->capture_default_str();
  herm->callback([&] {
    action = [&] {
      check_indices(2);
      const Scalar s = ss.s();
      const Scalar a = parse_scalar(alpha);
      if (!s.is_constant() || !a.is_constant()) throw UsageError("hermitian needs numeric --s and --alpha");
      return value(ss.finish(hermitian_combo(n, m, s.constant_value(), a.constant_value(), ss.algebra())));
    };
  });

  std::string basis = "Delta", side = "L", which = "Q", vars;
  auto* bopp_cmd = app.add_subcommand("bopp", "one Bopp differential operator");
  bopp_cmd->add_option("--basis", basis, "D or Delta")->check(CLI::IsMember({"D", "Delta"}))->capture_default_str();
  bopp_cmd->add_option("--side", side, "L or R")->check(CLI::IsMember({"L", "R"}))->capture_default_str();
  bopp_cmd->add_option("--which", which, "Q or P")->check(CLI::IsMember({"Q", "P"}))->capture_default_str();
  bopp_cmd->add_option("--vars", vars, "qp, xi_eta, z_zbar or Z_Zbar (default by basis)");
  bopp_cmd->callback([&] {
    action = [&] {
      BoppSpec spec;
      spec.basis = basis == "D" ? BoppBasis::D : BoppBasis::Delta;
      spec.side = side == "L" ? BoppSide::L : BoppSide::R;
      spec.which = which == "Q" ? BoppWhich::Q : BoppWhich::P;
      spec.s = ss.s();
      if (vars.empty()) {
        spec.var_pair = spec.basis == BoppBasis::D ? VarPair::xi_eta : VarPair::qp;
      } else {
        auto vp = parse_var_pair(vars);
        if (!vp) throw UsageError("unknown --vars " + vars);
        spec.var_pair = *vp;
      }
      return value(ss.finish(bopp(spec)));
    };
  });

  std::string bopp_route = "L";
  auto* bsym = app.add_subcommand("bopp-symbol", "ordered Bopp product applied to 1");
  indices(bsym, 2);
  bsym->add_option("--route", bopp_route, "L or R")->check(CLI::IsMember({"L", "R"}))->capture_default_str();
  bsym->callback([&] {
    action = [&] {
      check_indices(2);
      return value(ss.finish(bopp_symbol(n, m, ss.r(), ss.s(), bopp_route == "L" ? BoppSide::L : BoppSide::R)));
    };
  });

  std::string gen_vars;
  auto* gamma_cmd = app.add_subcommand("gamma", "Wigner-basis generator Gamma_nm^(r)(s)");
  indices(gamma_cmd, 2);
  gamma_cmd->add_option("--vars", gen_vars, "qp or Z_Zbar");
  gamma_cmd->callback([&] {
    action = [&] {
      check_indices(2);
      VarPair vp = VarPair::qp;
      if (!gen_vars.empty()) vp = *pick<VarPair>(gen_vars, {{"qp", VarPair::qp}, {"Z_Zbar", VarPair::Z_Zbar}}, "--vars");
      return value(ss.finish(gamma_generator(n, m, ss.r(), ss.s(), vp)));
    };
  });
  auto* tgen_cmd = app.add_subcommand("tgen", "Weyl-basis generator T_nm^(r)(s)");
  indices(tgen_cmd, 2);
  tgen_cmd->add_option("--vars", gen_vars, "xi_eta or z_zbar");
  tgen_cmd->callback([&] {
    action = [&] {
      check_indices(2);
      VarPair vp = VarPair::xi_eta;
      if (!gen_vars.empty()) vp = *pick<VarPair>(gen_vars, {{"xi_eta", VarPair::xi_eta}, {"z_zbar", VarPair::z_zbar}}, "--vars");
      return value(ss.finish(t_generator(n, m, ss.r(), ss.s(), vp)));
    };
  });

  auto* structure = app.add_subcommand("structure", "expand [t_nm, t_kl] in r-ordered products");
  indices(structure, 4);
  structure->callback([&] { action = [&] { check_indices(4); return cmd_structure(ss, n, m, k, l); }; });

  int max_total = 2, max_n = -1, max_m = -1;
  auto table = [&](const char* name, const char* help, GeneratorBasis gb) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--max", max_total, "largest total degree n + m")->capture_default_str();
    sub->add_option("--max-n", max_n, "largest n (default --max)");
    sub->add_option("--max-m", max_m, "largest m (default --max)");
    sub->callback([&, gb] {
      action = [&, gb] {
        ss.index(max_total, "--max");
        const int mn = max_n < 0 ? max_total : max_n;
        const int mm = max_m < 0 ? max_total : max_m;
        return cmd_table(ss, gb, mn, mm, max_total);
      };
    });
  };
  table("ttable", "t_nm with their Weyl-basis generators", GeneratorBasis::weyl);
  table("wtable", "t_nm with their Wigner-basis generators", GeneratorBasis::wigner);

  auto* wcheck = app.add_subcommand("wcheck", "Gamma action against the bracket, and the central extension");
  indices(wcheck, 4);
  wcheck->callback([&] { action = [&] { check_indices(4); return cmd_wcheck(ss, n, m, k, l); }; });

  int evolve_order = 3;
  auto* evolve_cmd = app.add_subcommand("evolve", "Taylor coefficients of the bracket flow of f under H");
  evolve_cmd->add_option("H", h, "Hamiltonian")->required();
  evolve_cmd->add_option("f", f, "observable")->required();
  evolve_cmd->add_option("K", evolve_order, "number of time derivatives")->required();
  evolve_cmd->callback([&] { action = [&] { ss.index(evolve_order, "K"); return cmd_evolve(ss, h, f, evolve_order); }; });

  auto* fock_cmd = app.add_subcommand("fock", "truncated Fock space cross-checks");
  fock_cmd->require_subcommand(1);
  fock_cmd->fallthrough();
  auto* fcomm = fock_cmd->add_subcommand("commutator", "projected [q,p] - i hbar I");
  fcomm->callback([&] { action = [&] { return cmd_fock_commutator(ss); }; });
  double xi = 0.3, eta = 0.2, step = 1e-4;
  auto* fdisp = fock_cmd->add_subcommand("displacement", "D f D^-1 against the shifted polynomial");
  fdisp->add_option("f", f, "operator polynomial in Q, P")->required();
  fdisp->add_option("--xi", xi)->capture_default_str();
  fdisp->add_option("--eta", eta)->capture_default_str();
  fdisp->callback([&] { action = [&] { return cmd_fock_displacement(ss, f, xi, eta); }; });
  auto* fder = fock_cmd->add_subcommand("derivative", "finite-difference checks of the derivative identities");
  indices(fder, 2);
  fder->add_option("--xi", xi)->capture_default_str();
  fder->add_option("--eta", eta)->capture_default_str();
  fder->add_option("--step", step, "finite-difference step h")->capture_default_str();
  fder->callback([&] { action = [&] { check_indices(2); return cmd_fock_derivative(ss, g, n, m, xi, eta, step); }; });
  auto* froutes = fock_cmd->add_subcommand("routes", "ordered words as matrices against the symbolic product");
  indices(froutes, 2);
  froutes->callback([&] { action = [&] { check_indices(2); return cmd_fock_routes(ss, g, n, m); }; });

  bool no_fock = false, serial = false;
  unsigned seed = VerifyOptions{}.seed;
  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->add_flag("--no-fock", no_fock, "skip the Fock space checks");
  verify->add_flag("--serial", serial, "run checks one after another");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(g, no_fock, serial, seed); }; });

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!action) throw UsageError("no command given");
    const Result r = action();
    const std::string body = g.format == "json" ? r.json.dump() : r.text;
    if (g.out.empty()) {
      out << body << "\n";
    } else {
      std::ofstream file(g.out);
      if (!file) throw UsageError("cannot open " + g.out);
      file << body << "\n";
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace wwgm::cli
