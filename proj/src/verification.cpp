#include "rellandau/verification.hpp"

#include <cmath>
#include <map>
#include <string>

#include "rellandau/closed_form.hpp"
#include "rellandau/errors.hpp"
#include "rellandau/fock_oracle.hpp"

namespace rellandau::verification {

namespace cf = closed_form;

double relative_deviation(double expected, double actual) {
  const double diff = std::abs(actual - expected);
  return expected == 0.0 ? diff : diff / std::abs(expected);
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void declare(const std::string& name, double tolerance) {
    index_[name] = report_.checks.size();
    report_.checks.push_back({name, 0, 0.0, tolerance, true});
  }

  void record(const std::string& name, int n, int nz, const std::string& w, double expected, double actual,
              bool absolute = false) {
    auto& check = report_.checks[index_.at(name)];
    const double dev = absolute ? std::abs(actual - expected) : relative_deviation(expected, actual);
    ++check.points;
    if (dev > check.max_deviation || std::isnan(dev)) check.max_deviation = dev;
    if (!(dev <= check.tolerance)) {
      check.passed = false;
      report_.failures.push_back({name, n, nz, w, expected, actual, dev});
    }
  }

 private:
  VerifyReport& report_;
  std::map<std::string, std::size_t> index_;
};

std::string case_name(int step) { return step > 0 ? "case_+" + std::to_string(step) : "case_" + std::to_string(step); }

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.n_max < 0 || options.nz_max < 0) throw ConfigError("verification bounds must be non-negative");
  if (options.w_list.empty()) throw ConfigError("verification needs at least one w");
  const fock::OracleConfig cfg{options.dim, options.guard_band, options.tol};
  fock::validate(cfg);
  if (options.dim < options.nz_max + options.guard_band)
    throw ConfigError("dim " + std::to_string(options.dim) + " < nz_max + guard band (" +
                      std::to_string(options.nz_max + options.guard_band) + ")");

  VerifyReport report;
  Recorder rec(report);
  for (const char* name : {"first_order_terms", "e1", "h2_diagonal", "second_order_sum"}) rec.declare(name, options.tol);
  for (auto c : cf::kAllCases) rec.declare(case_name(static_cast<int>(c)), options.case_tol);
  rec.declare("e2", options.tol);
  rec.declare("selection_rule", options.selection_tol);
  for (const char* name : {"moment_k2", "moment_k4", "moment_k6"}) rec.declare(name, options.moment_tol);

  const bool published = options.formula == Formula::kPublished;
  const double eps = to_double(options.eps);

  for (const auto& w_exact : options.w_list) {
    const double w = to_double(w_exact);
    const std::string w_text = to_string(w_exact);
    const cf::ModelParams<Rational> params{w_exact, options.eps};
    for (int n = 0; n <= options.n_max; ++n) {
      const fock::AxialOracle oracle(n, w, eps, cfg);
      for (int nz = 0; nz <= options.nz_max; ++nz) {
        const QuantumNumbers q{n, nz};
        const auto terms = cf::first_order_terms(q, params);
        const auto oracle_terms = oracle.first_order_terms(nz);
        rec.record("first_order_terms", n, nz, w_text, to_double(terms.landau_squared), oracle_terms.landau_squared);
        rec.record("first_order_terms", n, nz, w_text, to_double(terms.cross), oracle_terms.cross);
        rec.record("first_order_terms", n, nz, w_text, to_double(terms.axial_quartic), oracle_terms.axial_quartic);

        rec.record("e1", n, nz, w_text, to_double(cf::e1(q, params)), oracle.first_order(nz));

        const Rational h2 = published ? cf::published::h2_diagonal(q, params) : cf::h2_diagonal(q, params);
        rec.record("h2_diagonal", n, nz, w_text, to_double(h2), oracle.h2_diagonal(nz));
        rec.record("second_order_sum", n, nz, w_text, to_double(cf::second_order_sum(q, params)),
                   oracle.second_order_sum(nz));
        for (auto c : cf::kAllCases) {
          const int step = static_cast<int>(c);
          rec.record(case_name(step), n, nz, w_text, to_double(cf::case_contribution(c, q, params)),
                     oracle.channel(nz, step));
        }
        const Rational e2 = published ? cf::published::e2(q, params) : cf::e2(q, params);
        rec.record("e2", n, nz, w_text, to_double(e2), oracle.second_order(nz));
      }

      const int trusted = cfg.max_trusted();
      for (int nz = 0; nz <= trusted; ++nz) {
        for (int p = 0; p <= trusted; ++p) {
          const int gap = std::abs(nz - p);
          if (gap == 0 || gap == 2 || gap == 4) continue;
          rec.record("selection_rule", n, nz, w_text, 0.0, oracle.h1()(nz, p), true);
        }
      }
    }
  }

  for (int nz = 0; nz <= options.nz_max; ++nz) {
    for (int k : {2, 4, 6}) {
      rec.record("moment_k" + std::to_string(k), -1, nz, "-", to_double(cf::axial_moment(k, nz)),
                 fock::centered_moment(k, nz, cfg));
    }
  }
  return report;
}

}  // namespace rellandau::verification
