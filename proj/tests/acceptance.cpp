// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [path-to-logsplit]

#include "support.hpp"

#include "logsplit/numcheck.hpp"
#include "logsplit/witness.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace logsplit;
using namespace testing_support;

namespace {

const FieldConfig Q = FieldConfig::rationals();
const FieldConfig QT = FieldConfig::rational_functions();

struct Result {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string &why) {
    if (pass)
      detail << "first failure: " << why << "; ";
    pass = false;
  }
};

struct Instance {
  RatFun f;
  Witness w;
  FieldConfig cfg;
};

// Witnesses collected for the numeric cross-check.
std::vector<Instance> found;
std::vector<Instance> perturbed;

std::string cli_path;

RatFun kq(int m, long v) { return RatFun::constant(m, BaseElem(v)); }

bool accepted(const RatFun &f, const Witness &w, FieldConfig cfg) {
  try {
    return verify_witness(f, w, cfg);
  } catch (const std::invalid_argument &) {
    return false; // k = 0 is not a witness
  }
}

// h + x0 is a scalar multiple of h when h is itself a multiple of x0.
bool proportional(const RatFun &a, const RatFun &b) {
  const RatFun q = a / b;
  return q.num().is_constant() && q.den().is_constant();
}

RatFun random_h(std::mt19937_64 &rng, int m, int deg) {
  MultiPoly h;
  do
    h = random_poly(rng, m, deg, Q, 4);
  while (h.partial(m - 1).is_zero());
  return RatFun(h);
}

void criterion1(Result &r) {
  const RatFun x0 = RatFun::variable(1, 0);
  const std::vector<std::pair<std::string, RatFun>> cases{
      {"y' = y", x0},
      {"y' = 2*y + 3", kq(1, 2) * x0 + kq(1, 3)},
      {"y'' = y + y'", RatFun::variable(2, 0) + RatFun::variable(2, 1)}};
  for (const auto &[text, f] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = search_witness(f, 3, 3, Q);
    if (rep.outcome != Outcome::NoWitnessAnyDegree)
      r.fail(text + ": search did not prove nonexistence");
    if (!cli_path.empty()) {
      const std::string cmd = "'" + cli_path + "' search \"" + text + "\" >/dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 2)
        r.fail(text + ": CLI exit code is not 2");
    }
    const auto mid = std::chrono::steady_clock::now();
    if (search_witness_direct(f, 6, 5, Q))
      r.fail(text + ": direct oracle found a witness");
    const auto end = std::chrono::steady_clock::now();
    const double s1 = std::chrono::duration<double>(mid - start).count();
    const double s2 = std::chrono::duration<double>(end - mid).count();
    if (s1 >= 30 || s2 >= 30)
      r.fail(text + ": over 30 s");
    r.detail << text << " search " << s1 << " s, direct " << s2 << " s; ";
  }
}

std::vector<Instance> corpus() {
  const RatFun a = RatFun::variable(1, 0);
  const RatFun b0 = RatFun::variable(2, 0), b1 = RatFun::variable(2, 1);
  const RatFun t = RatFun::constant(1, BaseElem::t());
  return {{a * a, {a, BaseElem(0), 1}, Q},
          {b0 * b1, {b1, BaseElem(0), 1}, Q},
          {a * a - a, {a, BaseElem(1), 1}, Q},
          {a * a - a / t, {t * a, BaseElem(0), 1}, QT}};
}

void criterion2(Result &r) {
  int checked = 0, skipped = 0;
  for (const auto &inst : corpus()) {
    if (!accepted(inst.f, inst.w, inst.cfg))
      r.fail("corpus witness " + inst.w.h.to_string() + " rejected");
    else
      found.push_back(inst);
    const int m = inst.f.order();
    const Witness &w = inst.w;
    const std::vector<Witness> perturbations{{w.h, w.e + BaseElem(1), w.k},
                                             {w.h, w.e - BaseElem(1), w.k},
                                             {w.h, w.e, w.k + 1},
                                             {w.h, w.e, w.k - 1},
                                             {w.h + RatFun::variable(m, 0), w.e, w.k}};
    for (const auto &p : perturbations) {
      if (p.k != 0 && proportional(p.h, w.h) && p.e == w.e && p.k == w.k) {
        ++skipped; // a nonzero multiple of h is the same witness
        continue;
      }
      ++checked;
      if (accepted(inst.f, p, inst.cfg))
        r.fail("perturbation h=" + p.h.to_string() + " k=" + std::to_string(p.k) + " accepted");
      else if (p.k != 0)
        perturbed.push_back({inst.f, p, inst.cfg});
    }
  }
  r.detail << "4 corpus witnesses verified, " << checked << " perturbations rejected, " << skipped
           << " skipped as scalar multiples of h; ";
}

void criterion3(Result &r) {
  std::mt19937_64 rng(20260101);
  const auto start = std::chrono::steady_clock::now();
  int ok = 0;
  for (int n = 0; n < 50; ++n) {
    const int m = static_cast<int>(uniform(rng, 1, 3));
    const RatFun h = random_h(rng, m, 3);
    long k = 0;
    while (k == 0)
      k = uniform(rng, -3, 3);
    const BaseElem e(uniform(rng, -3, 3));
    const RatFun f = construct_f(h, e, k, Q);
    const auto rep = search_witness(f, 3, 3, Q);
    if (rep.outcome == Outcome::Found && rep.witness && verify_witness(f, *rep.witness, Q)) {
      ++ok;
      if (n % 5 == 0)
        found.push_back({f, *rep.witness, Q});
    } else {
      r.fail("h = " + h.to_string() + " not recovered");
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= 300)
    r.fail("over 5 min");
  r.detail << ok << "/50 recovered in " << s << " s; ";
}

void criterion4(Result &r) {
  std::mt19937_64 rng(20260202);
  int agree = 0, with = 0;
  for (int n = 0; n < 30; ++n) {
    const int m = static_cast<int>(uniform(rng, 1, 2));
    const RatFun h = random_h(rng, m, 2);
    const long k = uniform(rng, 1, 3);
    const RatFun f = construct_f(h, BaseElem(uniform(rng, -2, 2)), k, Q);
    // kmax 2 leaves room for instances where neither side should succeed
    const auto rep = search_witness(f, 2, 2, Q);
    const auto direct = search_witness_direct(f, 2, 2, Q);
    const bool a = rep.outcome == Outcome::Found, b = direct.has_value();
    if (a != b)
      r.fail("disagreement on f = " + f.to_string());
    else
      ++agree;
    if (a)
      ++with;
    if (direct && !verify_witness(f, *direct, Q))
      r.fail("direct witness does not verify");
    if (direct && n % 3 == 0)
      found.push_back({f, *direct, Q});
  }
  r.detail << agree << "/30 agree (" << with << " found, " << 30 - with << " none); ";
}

void criterion5(Result &r) {
  std::mt19937_64 rng(20260303);
  int laws = 0;
  for (int n = 0; n < 200; ++n) {
    const FieldConfig cfg = n % 2 ? QT : Q;
    const int m = static_cast<int>(uniform(rng, 1, 3));
    const RatFun h = random_nonzero_ratfun(rng, m, cfg);
    const RatFun g = random_nonzero_ratfun(rng, m, cfg);
    for (int i = 0; i < m; ++i) {
      const int v = valuation(h, i);
      for (int j = 0; j < m; ++j) {
        const RatFun d = partial(h, j);
        if (!d.is_zero() && valuation(d, i) < v)
          r.fail("partial derivative lowered the valuation of " + h.to_string());
        ++laws;
      }
      const RatFun dh = delta_F(h, cfg);
      if (!dh.is_zero() && valuation(dh, i) < v)
        r.fail("delta_F lowered the valuation of " + h.to_string());
      if (valuation(h * g, i) != v + valuation(g, i))
        r.fail("valuation not additive on " + h.to_string());
      laws += 2;
    }
  }
  r.detail << laws << " inequalities checked on 200 values; ";
}

void criterion6(Result &r) {
  const auto start = std::chrono::steady_clock::now();
  int passed = 0, rejected = 0;
  for (const auto &inst : found) {
    const auto rep = check_witness_numeric(inst.f, inst.w, 5, inst.cfg);
    if (rep.pass)
      ++passed;
    else
      r.fail("witness " + inst.w.h.to_string() + " drifted by " + std::to_string(rep.max_drift));
  }
  for (const auto &inst : perturbed) {
    const auto rep = check_witness_numeric(inst.f, inst.w, 5, inst.cfg);
    if (rep.pass)
      r.fail("perturbed witness " + inst.w.h.to_string() + " passed numerically");
    else
      ++rejected;
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= 60)
    r.fail("over 1 min");
  r.detail << passed << "/" << found.size() << " witnesses within 1e-5, " << rejected << "/" << perturbed.size()
           << " perturbed rejected, " << s << " s; ";
}

void criterion7(Result &r) {
  int ok = 0;
  for (const auto &inst : corpus())
    for (int lambda : {2, 3}) {
      const Witness scaled{rf_pow(inst.w.h, lambda), inst.w.e * BaseElem(lambda), inst.w.k * lambda};
      if (verify_witness(inst.f, scaled, inst.cfg))
        ++ok;
      else
        r.fail("lambda = " + std::to_string(lambda) + " on h = " + inst.w.h.to_string());
    }
  r.detail << ok << "/8 scaled witnesses verified; ";
}

} // namespace

int main(int argc, char **argv) {
  if (argc > 1)
    cli_path = argv[1];
  const std::vector<std::function<void(Result &)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      criteria[i](r);
    } catch (const std::exception &e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::string detail = r.detail.str();
    if (detail.size() >= 2)
      detail.resize(detail.size() - 2);
    std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << " (" << detail << ")" << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
