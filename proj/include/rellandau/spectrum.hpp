#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rellandau/polynomial.hpp"
#include "rellandau/quantum_numbers.hpp"
#include "rellandau/rational.hpp"

namespace rellandau::spectrum {

// E(w) for one level at a fixed perturbation order: an exact polynomial in w
// of degree order + 1 (in hbar*omega_z units, rest mass excluded).
struct SpectralLine {
  QuantumNumbers q;
  int order = 0;
  Rational eps;
  Polynomial energy;
};

SpectralLine make_line(const QuantumNumbers& q, int order, const Rational& eps);
std::vector<SpectralLine> make_lines(const std::vector<QuantumNumbers>& levels, int order, const Rational& eps);

// All (n, n_z) with n <= n_max and n_z <= nz_max, ordered by (n, n_z).
std::vector<QuantumNumbers> enumerate_levels(int n_max, int nz_max);

struct DegeneracyGroup {
  Rational energy;
  std::vector<QuantumNumbers> members;
  int total_multiplicity = 0;
};

// Groups levels by exact unperturbed energy at rational w, keeping energies
// <= e_max. Sorted by energy; singletons are kept.
std::vector<DegeneracyGroup> degeneracy_groups(const Rational& w, const Rational& e_max, int n_max, int nz_max);

struct SplitEntry {
  QuantumNumbers q;
  Rational e0;
  Rational e1_coefficient;  // e1 / eps
  Rational e1;
  Rational total;
};

// Members of the w = 1 shell n + n_z = N with their first-order energies,
// ordered by increasing n.
std::vector<SplitEntry> split_diagram(int N, const Rational& eps);

struct Crossing {
  QuantumNumbers line_a;
  QuantumNumbers line_b;
  int order = 0;
  double w_star = 0.0;
  double e_star = 0.0;
  // Where the same pair meets at zeroth order, if that happens for w > 0.
  std::optional<Rational> unperturbed_w;
  // w_star - unperturbed_w, computed without cancellation.
  std::optional<double> shift;
};

struct CrossingSet {
  std::vector<Crossing> crossings;
  // Pairs whose energy polynomials coincide identically.
  std::vector<std::pair<QuantumNumbers, QuantumNumbers>> degenerate_pairs;
};

// Solves E_a(w) = E_b(w) for every unordered pair. Degree <= 2 by radicals,
// degree 3 by bracketing on monotone pieces. Roots are reported when
// w_lo <= w_star <= w_hi.
CrossingSet find_crossings(const std::vector<SpectralLine>& lines, double w_lo, double w_hi);
CrossingSet find_crossings(const std::vector<QuantumNumbers>& levels, double w_lo, double w_hi, int order,
                           const Rational& eps);

struct CrossingCluster {
  std::vector<Crossing> members;
  std::vector<QuantumNumbers> lines;  // distinct lines, sorted
  double w_min = 0.0;
  double w_max = 0.0;
  double e_mean = 0.0;
  int total_multiplicity = 0;  // spin multiplicities of the distinct lines
};

// Single-linkage grouping: two crossings join when both |dw| and |dE| are
// within cluster_tol. Clusters ordered by w_min.
std::vector<CrossingCluster> crossing_clusters(const std::vector<Crossing>& crossings, double cluster_tol);

int spin_degeneracy_at_crossing(const Crossing& crossing);

// Real roots of an exact polynomial inside [lo, hi], ascending.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

}  // namespace rellandau::spectrum
