// cdalg: command-line front end for Cayley-Dickson arithmetic, one-sided
// polynomials, left eigenvalues and the worked-example replay.

#include "cdalg/eigen_lmr.hpp"
#include "cdalg/identities.hpp"
#include "cdalg/io.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/poly.hpp"
#include "cdalg/repro.hpp"
#include "cdalg/roots.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace cdalg;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string gammas = "-1,-1,-1";
  std::string scalar = "rational";
  std::string algebra_file;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int trials = 500;
  bool json_output = false;

  std::vector<std::string> operands;
  std::string poly;
  std::string at;
  std::string t_param;
  std::string n_param;
  std::string matrix_file;
  std::string t_element;
  std::string lambda;
  int samples = 256;

  bool repro_all = false;
  std::string repro_case;
  std::string repro_json;
};

AlgebraSpec algebra_spec(const Options& opt, std::optional<std::string> force_scalar = {}) {
  AlgebraSpec spec;
  if (!opt.algebra_file.empty()) {
    std::ifstream in(opt.algebra_file);
    if (!in) throw std::invalid_argument("cannot open " + opt.algebra_file);
    spec = algebra_spec_from_json(json::parse(in));
  } else {
    spec.gammas = split_list(opt.gammas);
    spec.scalar = opt.scalar;
    spec.tol = opt.tol;
  }
  if (force_scalar) spec.scalar = *force_scalar;
  if (spec.scalar != "rational" && spec.scalar != "f64") {
    throw std::invalid_argument("--scalar must be rational or f64");
  }
  return spec;
}

template <typename Scalar>
void print_element(const Options& opt, const Element<Scalar>& x) {
  if (opt.json_output) {
    std::cout << element_to_json(x).dump() << "\n";
  } else {
    std::cout << format_element(x) << "\n";
  }
}

template <typename Scalar>
void print_scalar(const Options& opt, const Scalar& s) {
  if (opt.json_output) {
    std::cout << json(format_scalar(s)).dump() << "\n";
  } else {
    std::cout << format_scalar(s) << "\n";
  }
}

template <typename Scalar>
Poly<Scalar> read_poly(const std::string& text, const Algebra<Scalar>& algebra) {
  if (!text.empty() && text.front() == '[') return poly_from_json(json::parse(text), algebra);
  return parse_poly(text, algebra);
}

template <typename Scalar>
void print_poly(const Options& opt, const Poly<Scalar>& f) {
  if (opt.json_output) {
    std::cout << poly_to_json(f).dump() << "\n";
  } else {
    std::cout << format_poly(f) << "\n";
  }
}

template <typename Scalar>
Element<Scalar> operand(const Options& opt, std::size_t i, const Algebra<Scalar>& algebra) {
  if (i >= opt.operands.size()) throw std::invalid_argument("missing element operand");
  return parse_element(opt.operands[i], algebra);
}

std::string table_cell(const std::string& coef, Eigen::Index k) {
  if (coef == "1") return std::to_string(k);
  if (coef == "-1") return "-" + std::to_string(k);
  return coef + "*e" + std::to_string(k);
}

template <typename Scalar>
int run_algebra(const std::string& command, const Options& opt, const Algebra<Scalar>& algebra) {
  if (command == "mul") {
    print_element(opt, mul(operand(opt, 0, algebra), operand(opt, 1, algebra)));
  } else if (command == "conj") {
    print_element(opt, conj(operand(opt, 0, algebra)));
  } else if (command == "norm") {
    print_scalar(opt, norm(operand(opt, 0, algebra)));
  } else if (command == "trace") {
    print_scalar(opt, trace(operand(opt, 0, algebra)));
  } else if (command == "inv") {
    print_element(opt, inverse(operand(opt, 0, algebra)));
  } else if (command == "solve-left") {
    const auto x = solve_left(operand(opt, 0, algebra), operand(opt, 1, algebra));
    if (!x) {
      std::cout << (opt.json_output ? "null" : "NoSolution") << "\n";
      return kExitFailure;
    }
    print_element(opt, *x);
  } else if (command == "table") {
    const Eigen::Index n = algebra.dim();
    if (opt.json_output) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < n; ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < n; ++j) {
          row.push_back(table_cell(format_scalar(algebra.structure(i, j)), i ^ j));
        }
        rows.push_back(row);
      }
      std::cout << rows.dump() << "\n";
      return 0;
    }
    for (Eigen::Index j = 0; j < n; ++j) std::cout << ",e" << j;
    std::cout << "\n";
    for (Eigen::Index i = 0; i < n; ++i) {
      std::cout << "e" << i;
      for (Eigen::Index j = 0; j < n; ++j) {
        std::cout << "," << table_cell(format_scalar(algebra.structure(i, j)), i ^ j);
      }
      std::cout << "\n";
    }
  } else if (command == "identities") {
    const auto report = identity_report(algebra, opt.trials, opt.seed);
    if (opt.json_output) {
      json out = json::array();
      for (const auto& r : report.results) {
        json entry{{"identity", r.name}, {"passed", r.passed}, {"checked", r.checked}};
        if (r.witness) {
          entry["witness"] = {{"x", format_element(r.witness->args[0])},
                              {"y", format_element(r.witness->args[1])},
                              {"z", format_element(r.witness->args[2])},
                              {"lhs", format_element(r.witness->lhs)},
                              {"rhs", format_element(r.witness->rhs)}};
        }
        out.push_back(entry);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& r : report.results) {
        std::cout << r.name << "\t" << (r.passed ? "PASS" : "FAIL") << "\t" << r.checked;
        if (r.witness) {
          std::cout << "\tx=" << format_element(r.witness->args[0])
                    << " y=" << format_element(r.witness->args[1])
                    << " z=" << format_element(r.witness->args[2]);
        }
        std::cout << "\n";
      }
    }
  }
  return 0;
}

template <typename Scalar>
int run_poly(const std::string& command, const Options& opt, const Algebra<Scalar>& algebra) {
  const auto f = read_poly(opt.poly, algebra);
  if (command == "eval") {
    print_element(opt, eval(f, parse_element(opt.at, algebra)));
  } else if (command == "companion") {
    const auto c = companion(f);
    if (opt.json_output) {
      json out = json::array();
      for (Eigen::Index k = 0; k <= c.degree(); ++k) out.push_back(format_scalar(c.coeffs[k]));
      std::cout << out.dump() << "\n";
    } else {
      std::cout << format_scalar_poly(c) << "\n";
    }
  } else if (command == "divlin") {
    const auto div = right_divide_linear(f, parse_element(opt.at, algebra));
    json out{{"quotient", format_poly(div.quotient)},
             {"remainder", format_element(div.remainder)},
             {"right_factor", div.remainder.is_zero()}};
    std::cout << out.dump() << "\n";
  } else if (command == "divquad") {
    const auto div = divide_central_quadratic(f, parse_scalar<Scalar>(opt.t_param),
                                              parse_scalar<Scalar>(opt.n_param));
    json out{{"quotient", format_poly(div.quotient)},
             {"a", format_element(div.a)},
             {"b", format_element(div.b)}};
    std::cout << out.dump() << "\n";
  } else if (command == "derive") {
    print_poly(opt, derivative(f));
  }
  return 0;
}

json sphere_class_json(const SphereClass& cls) {
  json entry{{"t", cls.t}, {"n", cls.n}, {"kind", std::string(to_string(cls.kind))}, {"residual", cls.residual}};
  if (cls.lambda) entry["lambda"] = format_element(*cls.lambda);
  return entry;
}

json pair_json(const EigenPair<double>& p) {
  return json{{"lambda", format_element(p.lambda)},
              {"v", {format_element(p.v[0]), format_element(p.v[1])}}};
}

template <typename Scalar>
Matrix2<Scalar> read_matrix(const Options& opt, const Algebra<Scalar>& algebra) {
  std::ifstream in(opt.matrix_file);
  if (!in) throw std::invalid_argument("cannot open matrix file " + opt.matrix_file);
  return matrix_from_json(json::parse(in), algebra);
}

template <typename Scalar>
int run_eig_exact_capable(const std::string& command, const Options& opt,
                          const Algebra<Scalar>& algebra) {
  const auto m = read_matrix(opt, algebra);
  if (command == "zero") {
    const auto z = zero_in_spectrum(m);
    json out{{"zero_in_spectrum", z.member}};
    if (z.witness) out["witness"] = format_element(*z.witness);
    std::cout << out.dump() << "\n";
  } else {
    const auto lambda = parse_element(opt.lambda.empty() ? "0" : opt.lambda, algebra);
    std::cout << json{{"lambda", format_element(lambda)}, {"eigenvalue", spectrum_oracle(m, lambda)}}.dump()
              << "\n";
  }
  return 0;
}

int run_eig(const std::string& command, const Options& opt) {
  if (command == "zero" || command == "oracle") {
    const auto spec = algebra_spec(opt);
    if (spec.scalar == "rational") return run_eig_exact_capable(command, opt, build_algebra<Rational>(spec));
    return run_eig_exact_capable(command, opt, build_algebra<double>(spec));
  }
  const auto algebra = build_algebra<double>(algebra_spec(opt, "f64"));
  const auto m = read_matrix(opt, algebra);
  if (command == "exists") {
    std::cout << pair_json(eig_exists(m)).dump() << "\n";
  } else if (command == "from-t") {
    json out = json::array();
    if (!opt.t_element.empty()) {
      for (const auto& p : eig_from_t(m, parse_element(opt.t_element, algebra))) out.push_back(pair_json(p));
    } else {
      for (const auto& p : sample_spectrum(m, opt.samples, opt.seed)) out.push_back(pair_json(p));
    }
    std::cout << out.dump(2) << "\n";
  } else if (command == "assoc") {
    const auto spectrum = assoc_eig2x2(m);
    json points = json::array();
    for (const auto& p : spectrum.points) points.push_back(format_element(p));
    json families = json::array();
    for (const auto& fam : spectrum.families) {
      families.push_back({{"t", fam.t}, {"n", fam.n},
                          {"description", "a + b s with Tr(s) = t, N(s) = n"}});
    }
    std::cout << json{{"points", points}, {"families", families}}.dump(2) << "\n";
  }
  return 0;
}

int run_repro_command(const Options& opt) {
  std::optional<std::string> only;
  if (!opt.repro_case.empty()) only = opt.repro_case;
  std::vector<ReproResult> results;
  try {
    results = run_repro(opt.seed, only);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << format_result_line(r) << "\n";
    all = all && r.passed;
  }
  if (!opt.repro_json.empty()) {
    std::ofstream out(opt.repro_json);
    out << results_to_json(results, opt.seed).dump(2) << "\n";
  }
  return all ? 0 : kExitFailure;
}

template <typename Fn>
int dispatch_scalar(const Options& opt, Fn&& fn) {
  const auto spec = algebra_spec(opt);
  if (spec.scalar == "rational") return fn(build_algebra<Rational>(spec));
  return fn(build_algebra<double>(spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Dickson algebra arithmetic, polynomials and left eigenvalues"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--gammas", opt.gammas, "comma-separated doubling parameters g_1,...,g_m")
        ->allow_extra_args(false);
    cmd->add_option("--scalar", opt.scalar, "rational or f64")->check(CLI::IsMember({"rational", "f64"}));
    cmd->add_option("--tol", opt.tol, "float-mode tolerance");
    cmd->add_option("--algebra", opt.algebra_file, "algebra descriptor JSON file");
    cmd->add_flag("--json", opt.json_output, "JSON output");
  };

  std::string command;
  std::vector<CLI::App*> algebra_cmds;
  for (const char* name : {"mul", "conj", "norm", "trace", "inv", "solve-left", "table", "identities"}) {
    auto* cmd = app.add_subcommand(name);
    add_common(cmd);
    if (std::string(name) != "table" && std::string(name) != "identities") {
      cmd->add_option("elements", opt.operands, "element operands")->required();
    }
    if (std::string(name) == "identities") {
      cmd->add_option("--seed", opt.seed);
      cmd->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    }
    algebra_cmds.push_back(cmd);
  }

  auto* poly_cmd = app.add_subcommand("poly", "one-sided polynomial operations");
  poly_cmd->require_subcommand(1);
  std::vector<CLI::App*> poly_cmds;
  for (const char* name : {"eval", "companion", "divlin", "divquad", "derive"}) {
    auto* cmd = poly_cmd->add_subcommand(name);
    add_common(cmd);
    cmd->add_option("--poly", opt.poly, "coefficients, constant term first, ';'-separated")->required();
    const std::string n = name;
    if (n == "eval" || n == "divlin") cmd->add_option("--at", opt.at, "element")->required();
    if (n == "divquad") {
      cmd->add_option("--t", opt.t_param, "trace")->required();
      cmd->add_option("--n", opt.n_param, "norm")->required();
    }
    poly_cmds.push_back(cmd);
  }

  auto* roots_cmd = app.add_subcommand("roots", "roots of a polynomial over H or O");
  add_common(roots_cmd);
  roots_cmd->add_option("--poly", opt.poly)->required();
  auto* factor_cmd = app.add_subcommand("factor", "linear factorization over H or O");
  add_common(factor_cmd);
  factor_cmd->add_option("--poly", opt.poly)->required();

  auto* eig_cmd = app.add_subcommand("eig", "left eigenvalues of 2x2 matrices");
  eig_cmd->require_subcommand(1);
  std::vector<CLI::App*> eig_cmds;
  for (const char* name : {"exists", "from-t", "zero", "oracle", "assoc"}) {
    auto* cmd = eig_cmd->add_subcommand(name);
    add_common(cmd);
    cmd->add_option("--matrix", opt.matrix_file, "matrix JSON file")->required();
    cmd->add_option("--t", opt.t_element, "multiplier t");
    cmd->add_option("--lambda", opt.lambda, "candidate eigenvalue");
    cmd->add_option("--samples", opt.samples)->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed);
    eig_cmds.push_back(cmd);
  }

  auto* repro_cmd = app.add_subcommand("repro", "replay every worked example");
  repro_cmd->add_flag("--all", opt.repro_all, "run every case (default)");
  repro_cmd->add_option("--case", opt.repro_case, "run one case, e.g. R9");
  repro_cmd->add_option("--seed", opt.seed);
  repro_cmd->add_option("--json", opt.repro_json, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    for (auto* cmd : algebra_cmds) {
      if (cmd->parsed()) {
        const std::string name = cmd->get_name();
        return dispatch_scalar(opt, [&](const auto& algebra) { return run_algebra(name, opt, algebra); });
      }
    }
    for (auto* cmd : poly_cmds) {
      if (cmd->parsed()) {
        const std::string name = cmd->get_name();
        return dispatch_scalar(opt, [&](const auto& algebra) { return run_poly(name, opt, algebra); });
      }
    }
    if (roots_cmd->parsed()) {
      const auto algebra = build_algebra<double>(algebra_spec(opt, "f64"));
      json out = json::array();
      for (const auto& cls : all_roots(read_poly(opt.poly, algebra))) out.push_back(sphere_class_json(cls));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (factor_cmd->parsed()) {
      const auto algebra = build_algebra<double>(algebra_spec(opt, "f64"));
      const auto fac = factorize(read_poly(opt.poly, algebra));
      json lambdas = json::array();
      for (const auto& l : fac.lambdas) lambdas.push_back(format_element(l));
      std::cout << json{{"leading", format_element(fac.leading)}, {"lambdas", lambdas}, {"residual", fac.residual}}.dump(2)
                << "\n";
      return 0;
    }
    for (auto* cmd : eig_cmds) {
      if (cmd->parsed()) return run_eig(cmd->get_name(), opt);
    }
    if (repro_cmd->parsed()) return run_repro_command(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
