#include "rellandau/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include <boost/math/tools/toms748_solve.hpp>

#include "rellandau/closed_form.hpp"
#include "rellandau/errors.hpp"

namespace rellandau::spectrum {

namespace cf = closed_form;

SpectralLine make_line(const QuantumNumbers& q, int order, const Rational& eps) {
  if (order < 0 || order > 2) throw DomainError("order must be 0, 1 or 2");
  if (eps < 0) throw DomainError("eps must be non-negative");
  const cf::ModelParams<Polynomial> p{Polynomial::variable(), Polynomial(eps)};
  return {q, order, eps, cf::decompose(q, p, order).total};
}

std::vector<SpectralLine> make_lines(const std::vector<QuantumNumbers>& levels, int order, const Rational& eps) {
  std::vector<SpectralLine> lines;
  lines.reserve(levels.size());
  for (const auto& q : levels) lines.push_back(make_line(q, order, eps));
  return lines;
}

std::vector<QuantumNumbers> enumerate_levels(int n_max, int nz_max) {
  if (n_max < 0 || nz_max < 0) throw DomainError("level bounds must be non-negative");
  std::vector<QuantumNumbers> levels;
  for (int n = 0; n <= n_max; ++n)
    for (int nz = 0; nz <= nz_max; ++nz) levels.push_back({n, nz});
  return levels;
}

std::vector<DegeneracyGroup> degeneracy_groups(const Rational& w, const Rational& e_max, int n_max, int nz_max) {
  if (w <= 0) throw DomainError("w must be positive");
  std::map<Rational, DegeneracyGroup> by_energy;
  const cf::ModelParams<Rational> p{w, Rational(0)};
  for (const auto& q : enumerate_levels(n_max, nz_max)) {
    Rational e = cf::e0(q, p);
    if (e > e_max) continue;
    auto& group = by_energy[e];
    group.energy = e;
    group.members.push_back(q);
    group.total_multiplicity += q.spin_mult();
  }
  std::vector<DegeneracyGroup> out;
  out.reserve(by_energy.size());
  for (auto& [energy, group] : by_energy) out.push_back(std::move(group));
  return out;
}

std::vector<SplitEntry> split_diagram(int N, const Rational& eps) {
  if (N < 0) throw DomainError("shell index N must be non-negative");
  const cf::ModelParams<Rational> unit{Rational(1), Rational(1)};
  const cf::ModelParams<Rational> p{Rational(1), eps};
  std::vector<SplitEntry> out;
  for (int n = 0; n <= N; ++n) {
    const QuantumNumbers q{n, N - n};
    SplitEntry entry;
    entry.q = q;
    entry.e0 = cf::e0(q, p);
    entry.e1_coefficient = cf::e1(q, unit);
    entry.e1 = cf::e1(q, p);
    entry.total = entry.e0 + entry.e1;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

// Roots of c0 + c1 x + c2 x^2 over the reals, using the exact discriminant.
std::vector<double> quadratic_roots(const Polynomial& p) {
  const Rational& c0 = p.coefficient(0);
  const Rational& c1 = p.coefficient(1);
  const Rational& c2 = p.coefficient(2);
  const Rational disc = c1 * c1 - 4 * c2 * c0;
  if (disc < 0) return {};
  const double b = to_double(c1);
  const double a = to_double(c2);
  const double c = to_double(c0);
  if (disc == 0) return {to_double(Rational(-c1 / (2 * c2)))};
  const double root_disc = std::sqrt(to_double(disc));
  const double q = -0.5 * (b + std::copysign(root_disc, b));
  std::vector<double> roots{q / a, c / q};
  std::sort(roots.begin(), roots.end());
  return roots;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
  if (p.is_zero()) throw DomainError("real_roots of the zero polynomial");
  std::vector<double> roots;
  switch (p.degree()) {
    case 0:
      break;
    case 1:
      roots.push_back(to_double(Rational(-p.coefficient(0) / p.coefficient(1))));
      break;
    case 2:
      roots = quadratic_roots(p);
      break;
    default: {
      // Split [lo, hi] at the real critical points; p is monotone on each piece.
      std::vector<double> knots{lo};
      for (double x : real_roots(p.derivative(), lo, hi))
        if (x > lo && x < hi) knots.push_back(x);
      knots.push_back(hi);
      const std::vector<double> c = p.to_double();
      for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double x0 = knots[i];
        const double x1 = knots[i + 1];
        const double f0 = horner(c, x0);
        const double f1 = horner(c, x1);
        if (f0 == 0.0) roots.push_back(x0);
        if (f1 == 0.0) roots.push_back(x1);
        if (f0 == 0.0 || f1 == 0.0 || std::signbit(f0) == std::signbit(f1)) continue;
        std::uintmax_t max_iter = 500;
        auto bracket = boost::math::tools::toms748_solve([&c](double x) { return horner(c, x); }, x0, x1, f0, f1,
                                                         boost::math::tools::eps_tolerance<double>(52), max_iter);
        roots.push_back(0.5 * (bracket.first + bracket.second));
      }
      break;
    }
  }
  std::vector<double> in_range;
  for (double r : roots)
    if (r >= lo && r <= hi) in_range.push_back(r);
  std::sort(in_range.begin(), in_range.end());
  in_range.erase(std::unique(in_range.begin(), in_range.end()), in_range.end());
  return in_range;
}

namespace {

// Zeroth-order meeting point of two levels, when it lies at positive w.
std::optional<Rational> unperturbed_crossing(const QuantumNumbers& a, const QuantumNumbers& b) {
  if (a.n == b.n) return std::nullopt;
  const Rational w0 = make_rational(b.nz - a.nz, a.n - b.n);
  if (w0 <= 0) return std::nullopt;
  return w0;
}

void crossings_of_pair(const SpectralLine& first, const SpectralLine& second, double w_lo, double w_hi,
                       CrossingSet& out) {
  const bool swap = second.q < first.q;
  const SpectralLine& a = swap ? second : first;
  const SpectralLine& b = swap ? first : second;
  const Polynomial difference = a.energy - b.energy;
  if (difference.is_zero()) {
    out.degenerate_pairs.emplace_back(a.q, b.q);
    return;
  }
  const auto w0 = unperturbed_crossing(a.q, b.q);
  // Solve in s = w - anchor so that O(eps) shifts keep full relative precision.
  const Rational anchor = w0.value_or(Rational(0));
  const double anchor_d = to_double(anchor);
  const Polynomial shifted = difference.taylor_shift(anchor);
  const auto roots = real_roots(shifted, w_lo - anchor_d, w_hi - anchor_d);

  std::optional<std::size_t> nearest;
  if (w0) {
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (!nearest || std::abs(roots[i]) < std::abs(roots[*nearest])) nearest = i;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Crossing c;
    c.line_a = a.q;
    c.line_b = b.q;
    c.order = a.order;
    c.w_star = anchor_d + roots[i];
    if (c.w_star < w_lo || c.w_star > w_hi) continue;
    c.e_star = a.energy(c.w_star);
    if (nearest && *nearest == i) {
      c.unperturbed_w = w0;
      c.shift = roots[i];
    }
    out.crossings.push_back(std::move(c));
  }
}

}  // namespace

CrossingSet find_crossings(const std::vector<SpectralLine>& lines, double w_lo, double w_hi) {
  if (!(w_lo > 0.0) || !(w_hi >= w_lo)) throw DomainError("crossing range needs 0 < w_lo <= w_hi");
  CrossingSet out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].order != lines[j].order || lines[i].eps != lines[j].eps)
        throw DomainError("lines must share order and eps");
      crossings_of_pair(lines[i], lines[j], w_lo, w_hi, out);
    }
  }
  std::sort(out.crossings.begin(), out.crossings.end(), [](const Crossing& x, const Crossing& y) {
    if (x.line_a != y.line_a) return x.line_a < y.line_a;
    if (x.line_b != y.line_b) return x.line_b < y.line_b;
    return x.w_star < y.w_star;
  });
  std::sort(out.degenerate_pairs.begin(), out.degenerate_pairs.end());
  return out;
}

CrossingSet find_crossings(const std::vector<QuantumNumbers>& levels, double w_lo, double w_hi, int order,
                           const Rational& eps) {
  return find_crossings(make_lines(levels, order, eps), w_lo, w_hi);
}

std::vector<CrossingCluster> crossing_clusters(const std::vector<Crossing>& crossings, double cluster_tol) {
  if (!(cluster_tol >= 0.0)) throw DomainError("cluster_tol must be >= 0");
  const std::size_t m = crossings.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(crossings[i].w_star - crossings[j].w_star) <= cluster_tol &&
          std::abs(crossings[i].e_star - crossings[j].e_star) <= cluster_tol)
        parent[find(i)] = find(j);

  std::map<std::size_t, CrossingCluster> by_root;
  for (std::size_t i = 0; i < m; ++i) by_root[find(i)].members.push_back(crossings[i]);

  std::vector<CrossingCluster> clusters;
  for (auto& [root, cluster] : by_root) {
    std::set<QuantumNumbers> lines;
    double e_sum = 0.0;
    cluster.w_min = cluster.members.front().w_star;
    cluster.w_max = cluster.w_min;
    for (const auto& c : cluster.members) {
      lines.insert(c.line_a);
      lines.insert(c.line_b);
      cluster.w_min = std::min(cluster.w_min, c.w_star);
      cluster.w_max = std::max(cluster.w_max, c.w_star);
      e_sum += c.e_star;
    }
    cluster.e_mean = e_sum / static_cast<double>(cluster.members.size());
    cluster.lines.assign(lines.begin(), lines.end());
    for (const auto& q : cluster.lines) cluster.total_multiplicity += q.spin_mult();
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(), [](const CrossingCluster& x, const CrossingCluster& y) {
    if (x.w_min != y.w_min) return x.w_min < y.w_min;
    return x.lines < y.lines;
  });
  return clusters;
}

int spin_degeneracy_at_crossing(const Crossing& crossing) {
  return crossing.line_a.spin_mult() + crossing.line_b.spin_mult();
}

}  // namespace rellandau::spectrum
