// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "rellandau/app/commands.hpp"
#include "rellandau/closed_form.hpp"
#include "rellandau/fock_oracle.hpp"
#include "rellandau/spectrum.hpp"
#include "rellandau/units.hpp"

using namespace rellandau;
namespace cf = rellandau::closed_form;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;  // 0 means no runtime limit
  std::function<Outcome()> body;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double rel(double got, double expected) {
  if (expected == 0.0) return std::abs(got);
  return std::abs(got - expected) / std::abs(expected);
}

Rational r(long long num, long long den = 1) { return make_rational(num, den); }

Outcome splitting() {
  Outcome o;
  const std::vector<std::vector<Rational>> expected{
      {r(-3, 32)}, {r(-15, 32), r(-27, 32)}, {r(-39, 32), r(-55, 32), r(-83, 32)}};
  for (int N = 0; N <= 2; ++N) {
    const auto entries = spectrum::split_diagram(N, 1);
    if (entries.size() != expected[N].size()) {
      o.fail("wrong shell size at N=" + std::to_string(N));
      continue;
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].e1_coefficient != expected[N][i])
        o.fail("N=" + std::to_string(N) + ": got " + to_string(entries[i].e1_coefficient));
  }
  if (o.pass) o.detail = "-3/32 | -15/32 -27/32 | -39/32 -55/32 -83/32";
  return o;
}

Outcome si_magnitudes() {
  Outcome o;
  const auto cfg = units::axial_matched(15.0);
  const double eps = units::epsilon(cfg);
  const cf::ModelParams<double> p{1.0, eps};
  const double e0 = units::to_si_energy(cf::e0({0, 0}, p), cfg);
  const double e1 = units::to_si_energy(cf::e1({0, 0}, p), cfg);
  if (rel(e0, 0.868) > 0.005) o.fail(fmt("E0 = %.6g meV", e0));
  if (rel(e1, -0.552e-9) > 0.005) o.fail(fmt("E1 = %.6g meV", e1));
  if (rel(eps, 3.392e-9) > 0.005) o.fail(fmt("eps = %.6g", eps));
  if (o.pass) o.detail = fmt("E0 = %.4f meV, E1 = %.4g meV, eps = %.4g", e0, e1, eps);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst_energy = 0.0;
  double worst_case = 0.0;
  int points = 0;
  for (const Rational& w : {r(1, 2), r(1), r(2)}) {
    const double wd = to_double(w);
    const cf::ModelParams<Rational> p{w, 1};
    for (int n = 0; n <= 6; ++n) {
      for (int nz = 0; nz <= 6; ++nz) {
        const QuantumNumbers q{n, nz};
        const fock::AxialOracle oracle(n, wd, 1.0, fock::OracleConfig{nz + 10});
        const double d1 = rel(oracle.first_order(nz), to_double(cf::e1(q, p)));
        const double d2 = rel(oracle.second_order(nz), to_double(cf::e2(q, p)));
        worst_energy = std::max({worst_energy, d1, d2});
        if (d1 > 1e-10 || d2 > 1e-10)
          o.fail("(n=" + std::to_string(n) + ", nz=" + std::to_string(nz) + ", w=" + to_string(w) + ")");
        for (auto c : cf::kAllCases) {
          const double expected = to_double(cf::case_contribution(c, q, p));
          const double got = oracle.channel(nz, static_cast<int>(c));
          const double d = expected == 0.0 ? std::abs(got) : rel(got, expected);
          worst_case = std::max(worst_case, d);
          if ((expected == 0.0 && d > 1e-14) || (expected != 0.0 && d > 1e-12))
            o.fail("case " + std::to_string(static_cast<int>(c)) + " at (n=" + std::to_string(n) +
                   ", nz=" + std::to_string(nz) + ", w=" + to_string(w) + ")");
        }
        ++points;
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(points) + " points, max rel dev e1/e2 " + fmt("%.2g", worst_energy) + ", cases " +
               fmt("%.2g", worst_case);
  return o;
}

Outcome selection_rule() {
  Outcome o;
  const fock::OracleConfig cfg{64};
  const int trusted = cfg.max_trusted();
  double worst = 0.0;
  for (double w : {0.5, 1.0, 2.0}) {
    for (int n = 0; n <= 6; ++n) {
      const auto [h1, h2] = fock::perturbation_matrices(n, w, 1.0, cfg.dim);
      for (int i = 0; i <= trusted; ++i) {
        for (int j = 0; j <= trusted; ++j) {
          const int gap = std::abs(i - j);
          if (gap == 0 || gap == 2 || gap == 4) continue;
          worst = std::max(worst, std::abs(h1(i, j)));
        }
      }
    }
  }
  if (worst > 1e-14) o.fail(fmt("largest forbidden element %.3g", worst));
  o.detail = fmt("dim 64, trusted n_z <= %.0f, largest forbidden |H1| = %.3g", trusted, worst);
  return o;
}

Outcome moment_identity() {
  Outcome o;
  const fock::OracleConfig cfg{32};
  double worst = 0.0;
  for (int nz = 0; nz <= 20; ++nz) {
    const double x = nz;
    const double expected = -5.0 * (4 * x * x * x + 6 * x * x + 8 * x + 3);
    const double d = rel(fock::centered_moment(6, nz, cfg), expected);
    worst = std::max(worst, d);
    if (d > 1e-12) o.fail("n_z = " + std::to_string(nz));
  }
  if (o.pass) o.detail = fmt("n_z <= 20, max rel dev %.2g", worst);
  return o;
}

Outcome degeneracy_law() {
  Outcome o;
  const auto groups = spectrum::degeneracy_groups(1, r(21, 2), 10, 10);
  if (groups.size() != 11) o.fail("expected 11 shells at w = 1");
  for (std::size_t N = 0; N < groups.size() && N <= 10; ++N)
    if (groups[N].total_multiplicity != static_cast<int>(2 * N + 1) || groups[N].energy != Rational(N) + r(1, 2))
      o.fail("shell N = " + std::to_string(N));

  const std::vector<QuantumNumbers> family{{0, 4}, {4, 3}, {8, 2}, {12, 1}, {16, 0}};
  const auto quarter = spectrum::degeneracy_groups(r(1, 4), r(9, 2), 16, 4);
  const auto it = std::find_if(quarter.begin(), quarter.end(), [](const auto& g) { return g.energy == r(9, 2); });
  if (it == quarter.end() || it->members != family) o.fail("w = 1/4 group at 9/2");
  if (o.pass) o.detail = "2N+1 for N <= 10; {(0,4),(4,3),(8,2),(12,1),(16,0)} at 9/2";
  return o;
}

// Bisection on the exact energy difference, independent of the solver.
double bisect(const Polynomial& diff, double lo, double hi, double resolution) {
  Rational a(lo);
  Rational b(hi);
  const bool rising = diff(b) > 0;
  while (to_double(b - a) > resolution) {
    const Rational mid = (a + b) / 2;
    if ((diff(mid) > 0) == rising)
      b = mid;
    else
      a = mid;
  }
  return to_double((a + b) / 2);
}

Outcome crossing_shifts() {
  Outcome o;
  const std::vector<QuantumNumbers> triple{{0, 2}, {1, 1}, {2, 0}};
  const double leading[] = {0.5, 0.6875, 0.875};

  const auto lines = spectrum::make_lines(triple, 1, r(1, 1000000));
  const auto set = spectrum::find_crossings(lines, 0.5, 1.5);
  if (set.crossings.size() != 3) {
    o.fail("expected 3 crossings, got " + std::to_string(set.crossings.size()));
    return o;
  }
  double worst_bisect = 0.0;
  std::vector<double> w_stars;
  for (int i = 0; i < 3; ++i) {
    const auto& c = set.crossings[i];
    w_stars.push_back(c.w_star);
    if (std::abs(c.w_star - 1.0) > 2e-6) o.fail(fmt("w* = %.17g", c.w_star));
    if (!c.shift || rel(*c.shift / 1e-6, leading[i]) > 0.01) o.fail(fmt("shift/eps off at pair %.0f", i));
    const auto& a = *std::find_if(lines.begin(), lines.end(), [&](const auto& l) { return l.q == c.line_a; });
    const auto& b = *std::find_if(lines.begin(), lines.end(), [&](const auto& l) { return l.q == c.line_b; });
    const double reference = bisect(a.energy - b.energy, 1.0 - 2e-6, 1.0 + 2e-6, 1e-12);
    worst_bisect = std::max(worst_bisect, std::abs(c.w_star - reference));
  }
  if (worst_bisect > 1e-12) o.fail(fmt("solver vs bisection %.3g", worst_bisect));
  std::sort(w_stars.begin(), w_stars.end());
  if (std::adjacent_find(w_stars.begin(), w_stars.end()) != w_stars.end()) o.fail("crossings coincide");

  const double eps_values[] = {1e-3, 1e-6, 1e-9};
  const Rational eps_exact[] = {r(1, 1000), r(1, 1000000), r(1, 1000000000)};
  double worst_scaling = 0.0;
  std::vector<std::vector<double>> ratio(3);
  for (int k = 0; k < 3; ++k) {
    const auto s = spectrum::find_crossings(triple, 0.5, 1.5, 1, eps_exact[k]);
    if (s.crossings.size() != 3) {
      o.fail(fmt("eps = %.0e: %.0f crossings", eps_values[k], static_cast<double>(s.crossings.size())));
      return o;
    }
    for (int i = 0; i < 3; ++i) ratio[i].push_back(*s.crossings[i].shift / eps_values[k]);
  }
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) worst_scaling = std::max(worst_scaling, rel(ratio[i][k], leading[i]));
  if (worst_scaling > 0.01) o.fail(fmt("shift/eps drifts by %.3g", worst_scaling));
  if (o.pass)
    o.detail = fmt("shift/eps = %.6f, %.6f, %.6f", ratio[0][1], ratio[1][1], ratio[2][1]) +
               fmt("; bisection gap %.2g; scaling drift %.2g", worst_bisect, worst_scaling);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "rellandau_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands{
      {"verify"}, {"spectrum", "--eps", "1e-6", "--n-max", "4", "--nz-max", "4"}};
  for (const auto& command : commands) {
    std::string bodies[2];
    std::string manifests[2];
    for (int run = 0; run < 2; ++run) {
      const auto path = dir / (command[0] + std::to_string(run) + ".csv");
      std::vector<std::string> args{"rellandau"};
      args.insert(args.end(), command.begin(), command.end());
      args.push_back("--out");
      args.push_back(path.string());
      std::ostringstream out;
      std::ostringstream err;
      if (app::run_cli(args, out, err) != app::kExitOk) o.fail(command[0] + " exited non-zero");
      bodies[run] = slurp(path);
      manifests[run] = slurp(path.string() + ".manifest.json");
    }
    if (bodies[0].empty() || bodies[0] != bodies[1]) o.fail(command[0] + " output differs");
    // The manifests name different output files, so compare their checksum lines.
    auto checksum_line = [](const std::string& m) {
      const auto at = m.find("\"checksum\"");
      return at == std::string::npos ? std::string() : m.substr(at, m.find('\n', at) - at);
    };
    if (checksum_line(manifests[0]).empty() || checksum_line(manifests[0]) != checksum_line(manifests[1]))
      o.fail(command[0] + " manifest checksum differs");
  }
  if (o.pass) o.detail = "verify and spectrum byte-identical, checksums equal";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "first-order splitting coefficients", 1.0, splitting},
      {"AC2", "SI magnitudes at 15 T", 1.0, si_magnitudes},
      {"AC3", "closed forms match the Fock oracle", 10.0, oracle_equivalence},
      {"AC4", "axial selection rule", 0.0, selection_rule},
      {"AC5", "sextic moment identity", 0.0, moment_identity},
      {"AC6", "degeneracy law", 0.0, degeneracy_law},
      {"AC7", "crossing shifts", 0.0, crossing_shifts},
      {"AC8", "determinism", 0.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && seconds > c.budget_s) o.fail(fmt("took %.2f s, budget %.0f s", seconds, c.budget_s));
    if (!o.pass) ++failures;
    std::printf("%s %s %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
