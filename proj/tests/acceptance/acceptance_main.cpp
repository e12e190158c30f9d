// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qcc/classifier4.hpp"
#include "qcc/criteria.hpp"
#include "qcc/lie_closure.hpp"
#include "qcc/model_zoo.hpp"
#include "qcc/sweep.hpp"

namespace qcc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

SystemSpec from_spacings(std::vector<double> mu, std::vector<double> d,
                         double e1 = 0.0) {
  std::vector<double> levels{e1};
  for (double m : mu) levels.push_back(levels.back() + m);
  return SystemSpec(levels, std::move(d));
}

Outcome ac1_dimension_fixtures() {
  struct Fixture {
    const char* name;
    SystemSpec spec;
    int dim;
  };
  const double r3 = std::sqrt(3.0);
  ModelParams morse;
  morse.model = ModelKind::morse;
  morse.size = 4;
  morse.b = 0.1;
  ModelParams ho;
  ho.model = ModelKind::truncated_harmonic;
  ho.size = 4;
  const std::vector<Fixture> fixtures = {
      {"morse", make_model(morse), 16},
      {"mu=(1,2,1)", from_spacings({1, 2, 1}, {1, 1, 1}), 11},
      {"N=3 equal", from_spacings({1, 1}, {1, 1}), 4},
      {"d=(r3,2,r3)", from_spacings({1, 1, 1}, {r3, 2, r3}), 4},
      {"degenerate", SystemSpec({1, 1, 1, 1}, {1, 1, 1}), 2},
      {"harmonic", make_model(ho), 16},
  };
  Outcome o;
  std::string dims;
  for (const auto& f : fixtures) {
    const auto t = Clock::now();
    const LieClosureResult r = dynamical_algebra(f.spec);
    const double s = seconds_since(t);
    dims += (dims.empty() ? "" : " ") + std::to_string(r.dimension);
    o.require(r.dimension == f.dim, std::string(f.name) + " gave " +
                                        std::to_string(r.dimension) +
                                        ", want " + std::to_string(f.dim));
    o.require(s < 1.0, std::string(f.name) + " took over 1 s");
  }
  if (o.pass) o.detail = "dims " + dims;
  return o;
}

Outcome ac2_table() {
  Outcome o;
  const auto checks = reconstruct_table();
  std::vector<int> per_row(12, 0);
  int mismatches = 0;
  bool plus = false, minus = false;
  for (const auto& c : checks) {
    ++per_row[c.row.row];
    if (!c.ok) {
      ++mismatches;
      o.require(false, "row " + std::to_string(c.row.row) + " (" +
                           c.representative + ") mismatched");
    }
    if (c.row.row == 5) {
      const double ratio = c.spec.dipole(1) / c.spec.dipole(3);
      plus = plus || ratio > 0;
      minus = minus || ratio < 0;
    }
  }
  for (int r = 1; r <= 11; ++r) {
    o.require(per_row[r] > 0, "row " + std::to_string(r) + " has no sample");
  }
  o.require(plus && minus, "d1 = +d3 and d1 = -d3 not both sampled");
  if (o.pass) {
    o.detail = std::to_string(table_rows().size()) + " rows, " +
               std::to_string(checks.size()) + " samples, 0 mismatches";
  }
  return o;
}

Outcome ac3_sweep() {
  Outcome o;
  SweepOptions opts;
  opts.count = 200;
  opts.nmin = 2;
  opts.nmax = 6;
  opts.seed = 42;
  const auto t = Clock::now();
  const SweepSummary s = run_sweep(opts);
  const double secs = seconds_since(t);
  int collisions = 0;
  for (const auto& r : s.records) {
    const DerivedParams p = derive_params(r.spec);
    const auto cmp = p.mu_cmp();
    for (std::size_t a = 0; a < p.mu.size(); ++a) {
      for (std::size_t b = a + 1; b < p.mu.size(); ++b) {
        if (cmp.equal(p.mu[a], p.mu[b])) ++collisions;
      }
    }
  }
  o.require(s.disagreements == 0,
            std::to_string(s.disagreements) + " disagreements");
  o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  o.require(collisions > 0, "no equality collisions generated");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "200 specs, 0 disagreements, %d undetermined, %d spacing "
                "collisions, %.2f s",
                s.undetermined, collisions, secs);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac4_theorem5_family() {
  Outcome o;
  const int recorded[] = {4, 11, 11, 22};  // N = 3, 4, 5, 6
  std::string dims;
  for (int n = 3; n <= 6; ++n) {
    std::vector<double> e, d(n - 1, 1.0);
    for (int k = 1; k <= n; ++k) e.push_back(k);
    const int dim = dynamical_algebra(SystemSpec(e, d)).dimension;
    dims += (dims.empty() ? "" : " ") + std::to_string(dim);
    o.require(dim < n * n, "N=" + std::to_string(n) + " reached u(N)");
    o.require(dim == recorded[n - 3],
              "N=" + std::to_string(n) + " dim " + std::to_string(dim) +
                  " differs from recorded " + std::to_string(recorded[n - 3]));
  }
  if (o.pass) o.detail = "dims for N=3..6: " + dims;
  return o;
}

Outcome ac5_theorem4_generator() {
  Outcome o;
  const auto n3 = theorem4_family(3, 1.0);
  o.require(n3 && std::abs(n3->dipoles()[0] - n3->dipoles()[1]) < 1e-12,
            "N=3 solution does not have d1 = d2");
  if (n3) {
    o.require(dynamical_algebra(*n3).dimension == 4, "N=3 oracle dim != 4");
  }
  const auto n4 = theorem4_family(4, std::sqrt(3.0));
  if (n4) {
    const double d1 = n4->dipoles()[0], d2 = n4->dipoles()[1],
                 d3 = n4->dipoles()[2];
    o.require(std::abs(d1 * d1 - d3 * d3) < 1e-12 &&
                  std::abs(d1 * d1 - 0.75 * d2 * d2) < 1e-12,
              "N=4 solution violates d1^2 = d3^2 = 3/4 d2^2");
    o.require(dynamical_algebra(*n4).dimension == 4, "N=4 oracle dim != 4");
  } else {
    o.require(false, "no N=4 solution");
  }
  for (int n : {5, 6}) {
    const auto s = theorem4_family(n, 1.0);
    if (s) {
      const DerivedParams p = derive_params(*s);
      const int dim = dynamical_algebra(*s).dimension;
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "N=%d: generator returns a valid all-v-equal spec "
                    "(v=%.4g, nonzero dipoles, oracle dim %d) instead of "
                    "reporting nonexistence",
                    n, p.v[0], dim);
      o.require(false, buf);
    }
  }
  return o;
}

Outcome ac6_closure_properties() {
  Outcome o;
  std::mt19937_64 rng(606);
  int order = 0, scale = 0, idem = 0, cert = 0, trace = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(unit_uniform(rng) * 5);  // 2..6
    const SystemSpec s = random_spec(rng, n);
    const std::vector<SkewHermMatrix> ab{build_h0(s), build_h1(s)};
    const std::vector<SkewHermMatrix> ba{build_h1(s), build_h0(s)};
    const LieClosureResult r = closure(ab);
    order += closure(ba).dimension == r.dimension;

    const double a = 0.05 + 20 * unit_uniform(rng);
    const double b = 0.05 + 20 * unit_uniform(rng);
    const std::vector<SkewHermMatrix> scaled{a * build_h0(s), b * build_h1(s)};
    scale += closure(scaled).dimension == r.dimension;

    idem += closure(r.basis).dimension == r.dimension;
    cert += certify_closure(r).closed;

    std::vector<double> e(s.levels().begin(), s.levels().end());
    const double mean = std::accumulate(e.begin(), e.end(), 0.0) / n;
    for (double& x : e) x -= mean;
    const SystemSpec traceless(e, {s.dipoles().begin(), s.dipoles().end()});
    trace += dynamical_algebra(traceless).dimension < n * n;
  }
  o.require(order == 100, "order invariance " + std::to_string(order) + "/100");
  o.require(scale == 100, "scaling invariance " + std::to_string(scale) + "/100");
  o.require(idem == 100, "idempotence " + std::to_string(idem) + "/100");
  o.require(cert == 100, "certificate " + std::to_string(cert) + "/100");
  o.require(trace == 100, "trace law " + std::to_string(trace) + "/100");
  if (o.pass) {
    o.detail = "order, scaling, idempotence, certificate, trace law: 100/100 each";
  }
  return o;
}

Outcome ac7_oscillator_trend() {
  Outcome o;
  double previous = INFINITY;
  std::string vs;
  for (int n = 3; n <= 12; ++n) {
    const auto s = theorem4_family(n, 1.0);
    if (!s) {
      o.require(false, "no family member at N=" + std::to_string(n));
      continue;
    }
    const DerivedParams p = derive_params(*s);
    const double v = p.v[0];
    const bool all_equal = std::all_of(p.v.begin(), p.v.end(), [&](double x) {
      return std::abs(x - v) < 1e-12;
    });
    o.require(all_equal, "v not constant at N=" + std::to_string(n));
    o.require(v < previous, "v not decreasing at N=" + std::to_string(n));
    previous = v;
    const int dim = dynamical_algebra(*s).dimension;
    o.require(dim == 4, "dim " + std::to_string(dim) + " at N=" + std::to_string(n));
    if (n == 3 || n == 12) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4g", v);
      vs += (vs.empty() ? "" : " -> ") + std::string(buf);
    }
  }
  if (o.pass) o.detail = "N=3..12: v " + vs + ", dim 4 throughout";
  return o;
}

Outcome ac8_performance() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::vector<double> e{0.0}, d;
  for (int k = 1; k < 10; ++k) {
    e.push_back(e.back() + 0.5 + 1.5 * unit_uniform(rng));
    d.push_back((unit_uniform(rng) < 0.5 ? -1 : 1) * (0.5 + 1.5 * unit_uniform(rng)));
  }
  const SystemSpec s(e, d);
  const auto t = Clock::now();
  const LieClosureResult r = dynamical_algebra(s);
  const double secs = seconds_since(t);
  o.require(r.dimension == 100, "dim " + std::to_string(r.dimension));
  o.require(secs < 10.0, "took " + std::to_string(secs) + " s");
  char buf[120];
  std::snprintf(buf, sizeof buf, "N=10 dim %d, %ld commutators, %.3f s",
                r.dimension, r.commutators, secs);
  if (o.pass) o.detail = buf;
  return o;
}

}  // namespace
}  // namespace qcc

int main() {
  using qcc::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 dimension fixtures", qcc::ac1_dimension_fixtures},
      {"AC2 four-level table", qcc::ac2_table},
      {"AC3 soundness sweep", qcc::ac3_sweep},
      {"AC4 uniform-dipole family", qcc::ac4_theorem5_family},
      {"AC5 all-v-equal generator", qcc::ac5_theorem4_generator},
      {"AC6 closure properties", qcc::ac6_closure_properties},
      {"AC7 oscillator trend", qcc::ac7_oscillator_trend},
      {"AC8 performance N=10", qcc::ac8_performance},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%-28s %s  %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
