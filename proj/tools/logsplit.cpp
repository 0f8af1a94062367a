// Command-line front end: search, verify, construct and numcheck.

#include "logsplit/frontend.hpp"
#include "logsplit/numcheck.hpp"
#include "logsplit/parser.hpp"
#include "logsplit/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <iterator>

namespace {

using namespace logsplit;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 64;

struct Args {
  std::string equation;
  int degree = 3;
  int kmax = 3;
  std::string field = "auto";
  int e_tdeg = 2;
  std::string h;
  std::string e = "0";
  long k = 1;
  bool json = false;
  int trials = 5;
};

std::string read_equation(const std::string &arg) {
  if (arg != "-")
    return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

Problem load(const Args &a, bool need_equation, bool need_witness) {
  ProblemText in;
  if (!a.equation.empty())
    in.equation = read_equation(a.equation);
  in.h = a.h;
  in.e = a.e;
  in.field = a.field;
  return load_problem(in, need_equation, need_witness);
}

int cmd_search(const Args &a) {
  const Problem p = load(a, true, false);
  SearchOptions opts;
  opts.e_tdeg = a.e_tdeg;
  const SearchReport r = search_witness(*p.f, a.degree, a.kmax, p.cfg, opts);
  if (a.json) {
    std::cout << render_json(r) << '\n';
    for (const auto &n : r.notes)
      std::cerr << "note: " << n << '\n';
  } else {
    std::cout << render_text(r);
  }
  switch (r.outcome) {
  case Outcome::Found:
    return 0;
  case Outcome::NoWitnessAnyDegree:
    return 2;
  default:
    return 1;
  }
}

int cmd_verify(const Args &a) {
  const Problem p = load(a, true, true);
  const bool ok = verify_witness(*p.f, Witness{*p.h, p.e, a.k}, p.cfg);
  if (a.json)
    std::cout << json{{"verified", ok}}.dump() << '\n';
  else
    std::cout << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

int cmd_construct(const Args &a) {
  const Problem p = load(a, false, true);
  const RatFun f = construct_f(*p.h, p.e, a.k, p.cfg);
  const std::string eqn = equation_text(p.m, f);
  if (a.json)
    std::cout << json{{"f", f.to_string()}, {"equation", eqn}}.dump(2) << '\n';
  else
    std::cout << "f = " << f.to_string() << "\nequation: " << eqn << '\n';
  return 0;
}

int cmd_numcheck(const Args &a) {
  const Problem p = load(a, true, true);
  NumericReport r;
  try {
    r = check_witness_numeric(*p.f, Witness{*p.h, p.e, a.k}, a.trials, p.cfg);
  } catch (const SingularInstance &ex) {
    std::cerr << "logsplit: " << ex.what() << '\n';
    return 1;
  }
  if (a.json) {
    std::cout << json{{"max_drift", r.max_drift}, {"pass", r.pass}, {"trials", r.trials}, {"rejected", r.rejected}, {"truncated", r.truncated}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "max drift: " << r.max_drift << "\ntrials: " << r.trials << " (rejected draws: " << r.rejected
              << ", truncated near a singularity: " << r.truncated << ")\nresult: " << (r.pass ? "pass" : "fail") << '\n';
  }
  return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decide log-derivative witnesses (k*x0 - e)*h = Lie(h) for y^(m) = f"};
  app.require_subcommand(1);
  // -h is left free so that --h can name the witness polynomial
  app.set_help_flag("--help", "print this help message and exit");
  Args a;
  auto common = [&a](CLI::App *sub, bool equation_required) {
    auto *opt = sub->add_option("equation", a.equation, "the equation, e.g. \"y' = y^2\", or - for stdin");
    if (equation_required)
      opt->required();
    sub->add_option("--field", a.field, "base field: Q, Qt or auto (Qt iff t occurs)")
        ->check(CLI::IsMember({"Q", "Qt", "auto"}));
    sub->add_flag("--json", a.json, "machine-readable output");
  };
  auto witness_opts = [&a](CLI::App *sub) {
    sub->add_option("--h", a.h, "h over x0..x{m-1} and t")->required();
    sub->add_option("--e", a.e, "e in the base field (default 0)");
    sub->add_option("--k", a.k, "nonzero integer k (default 1)");
  };

  auto *search = app.add_subcommand("search", "search for a witness within degree bounds");
  common(search, true);
  search->add_option("--degree", a.degree, "total degree bound for Darboux factors")->check(CLI::Range(1, 64));
  search->add_option("--kmax", a.kmax, "bound on |k|")->check(CLI::Range(1, 1000));
  search->add_option("--e-tdeg", a.e_tdeg, "t-degree bound of the ansatz over Q(t)")->check(CLI::Range(0, 64));

  auto *verify = app.add_subcommand("verify", "check a witness exactly");
  common(verify, true);
  witness_opts(verify);

  auto *construct = app.add_subcommand("construct", "the f for which (h, e, k) is a witness");
  common(construct, false);
  witness_opts(construct);

  auto *numcheck = app.add_subcommand("numcheck", "falsify a witness along RK4 trajectories");
  common(numcheck, true);
  witness_opts(numcheck);
  numcheck->add_option("--trials", a.trials, "number of random initial conditions")->check(CLI::Range(1, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if ((verify->parsed() || construct->parsed() || numcheck->parsed()) && a.k == 0)
      throw std::invalid_argument("--k must be nonzero");
    if (search->parsed())
      return cmd_search(a);
    if (verify->parsed())
      return cmd_verify(a);
    if (construct->parsed())
      return cmd_construct(a);
    return cmd_numcheck(a);
  } catch (const ParseError &e) {
    std::cerr << "logsplit: " << (dynamic_cast<const OrderViolation *>(&e)   ? "order violation: "
                                  : dynamic_cast<const FieldViolation *>(&e) ? "field violation: "
                                                                             : "syntax error: ")
              << e.what() << '\n';
  } catch (const std::exception &e) {
    std::cerr << "logsplit: " << e.what() << '\n';
  }
  return kExitUsage;
}
