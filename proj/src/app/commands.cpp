#include "rellandau/app/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "rellandau/app/table.hpp"
#include "rellandau/closed_form.hpp"
#include "rellandau/errors.hpp"
#include "rellandau/spectrum.hpp"
#include "rellandau/units.hpp"
#include "rellandau/verification.hpp"

#ifndef RELLANDAU_VERSION
#define RELLANDAU_VERSION "0.0.0"
#endif

namespace rellandau::app {

std::string version() { return RELLANDAU_VERSION; }

namespace {

namespace cf = closed_form;
using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by every command that needs eps (and possibly w).
struct PhysicsFlags {
  std::string eps_text;
  std::string w_text;
  double B_tesla = 0.0;
  double k_grad = 0.0;
  double omega_z = 0.0;
  bool omega_z_from_B = false;
  std::string units = "natural";

  CLI::Option* eps = nullptr;
  CLI::Option* w = nullptr;
  CLI::Option* B = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* omega = nullptr;
  CLI::Option* from_B = nullptr;
};

void add_physics_flags(CLI::App* cmd, PhysicsFlags& f, bool with_w) {
  f.eps = cmd->add_option("--eps", f.eps_text, "Relativistic smallness hbar*omega_z/(m_e c^2): p/q or decimal");
  if (with_w) f.w = cmd->add_option("--w", f.w_text, "Frequency ratio omega_c/omega_z: p/q or decimal");
  f.B = cmd->add_option("--B-tesla", f.B_tesla, "Magnetic field (T)");
  f.k = cmd->add_option("--k-grad", f.k_grad, "Electric field gradient (V/m^2)");
  f.omega = cmd->add_option("--omega-z", f.omega_z, "Axial angular frequency (rad/s)");
  f.from_B = cmd->add_flag("--omega-z-from-B", f.omega_z_from_B, "Set omega_z to the cyclotron frequency at --B-tesla");
  cmd->add_option("--units", f.units, "Energy units")->check(CLI::IsMember({"natural", "mev"}));
}

struct Physics {
  Rational eps;
  bool eps_exact = false;
  std::optional<Rational> w;
  bool w_exact = false;
  std::optional<units::PhysicalConfig> si;
  bool mev = false;

  bool exact() const { return eps_exact && (!w || w_exact); }
};

Physics resolve(const PhysicsFlags& f, std::optional<Rational> default_eps) {
  Physics p;
  const bool si_requested = f.B->count() || f.k->count() || f.omega->count() || f.omega_z_from_B;
  if (f.eps->count() && si_requested) throw UsageError("--eps conflicts with the SI flags");
  if (si_requested) {
    if (!f.B->count()) throw UsageError("SI evaluation needs --B-tesla");
    const int axial = static_cast<int>(f.k->count() + f.omega->count() + (f.omega_z_from_B ? 1 : 0));
    if (axial != 1) throw UsageError("give exactly one of --k-grad, --omega-z, --omega-z-from-B");
    units::PhysicalConfig cfg;
    cfg.B0 = f.B_tesla;
    if (f.k->count()) cfg.k_grad = f.k_grad;
    if (f.omega->count()) cfg.omega_z_override = f.omega_z;
    if (f.omega_z_from_B) cfg.omega_z_override = units::cyclotron_frequency(cfg);
    units::validate(cfg);
    p.eps = Rational(units::epsilon(cfg));
    p.si = cfg;
  } else if (f.eps->count()) {
    p.eps = parse_rational(f.eps_text);
    p.eps_exact = true;
  } else if (default_eps) {
    p.eps = *default_eps;
    p.eps_exact = true;
  } else {
    throw UsageError("give --eps or --B-tesla with --omega-z / --k-grad / --omega-z-from-B");
  }
  if (p.eps < 0) throw DomainError("eps must be non-negative");

  if (f.w && f.w->count()) {
    p.w = parse_rational(f.w_text);
    p.w_exact = true;
    if (*p.w <= 0) throw DomainError("w must be positive");
  } else if (p.si) {
    p.w = Rational(units::cyclotron_frequency(*p.si) / units::axial_frequency(*p.si));
  }

  p.mev = f.units == "mev";
  if (p.mev && !p.si) throw UsageError("--units mev needs the SI flags");
  return p;
}

void describe(json& params, const Physics& p) {
  params["eps"] = p.eps_exact ? to_string(p.eps) : format_double(to_double(p.eps));
  if (p.w) params["w"] = p.w_exact ? to_string(*p.w) : format_double(to_double(*p.w));
  if (p.si) {
    params["B_tesla"] = p.si->B0;
    if (p.si->k_grad) params["k_grad"] = *p.si->k_grad;
    params["omega_z"] = units::axial_frequency(*p.si);
  }
  params["units"] = p.mev ? "mev" : "natural";
}

std::string level_list(const std::vector<QuantumNumbers>& levels) {
  std::string s;
  for (const auto& q : levels) {
    if (!s.empty()) s += '|';
    s += std::to_string(q.n) + ":" + std::to_string(q.nz);
  }
  return s;
}

// "n:nz,n:nz,..."
std::vector<QuantumNumbers> parse_level_list(const std::string& text) {
  std::vector<QuantumNumbers> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--lines expects n:nz pairs, got '" + item + "'");
    try {
      std::size_t used_n = 0, used_nz = 0;
      const std::string n_text = item.substr(0, colon), nz_text = item.substr(colon + 1);
      QuantumNumbers q{std::stoi(n_text, &used_n), std::stoi(nz_text, &used_nz)};
      if (used_n != n_text.size() || used_nz != nz_text.size()) throw std::invalid_argument(item);
      validate(q);
      levels.push_back(q);
    } catch (const std::logic_error&) {
      throw UsageError("--lines expects non-negative n:nz pairs, got '" + item + "'");
    }
  }
  if (levels.empty()) throw UsageError("--lines is empty");
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

struct Output {
  std::vector<Table> tables;
  json parameters = json::object();
};

struct OutputFlags {
  std::string format = "csv";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "Write to FILE plus FILE.manifest.json instead of stdout");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  f << content;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

void emit(const std::string& command, const std::vector<std::string>& args, const Output& output,
          const OutputFlags& flags, std::ostream& out) {
  RunManifest manifest;
  manifest.command = command;
  manifest.arguments.assign(args.begin() + 1, args.end());
  manifest.parameters = output.parameters;
  manifest.parameters["format"] = flags.format;
  manifest.version = version();

  std::string text;
  if (flags.format == "csv") {
    for (std::size_t i = 0; i < output.tables.size(); ++i) {
      if (i) text += '\n';
      text += to_csv(output.tables[i]);
    }
  } else {
    json payload = json::object();
    for (std::size_t i = 0; i < output.tables.size(); ++i)
      payload[i == 0 ? std::string("records") : output.tables[i].name] = to_json(output.tables[i]);
    RunManifest embedded = manifest;
    embedded.checksum = checksum(payload.dump());
    json doc = json::object();
    doc["manifest"] = embedded.to_json();
    for (auto& [key, value] : payload.items()) doc[key] = value;
    text = doc.dump(2) + "\n";
  }

  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  write_file(flags.out_path, text);
  manifest.checksum = checksum(text);
  write_file(flags.out_path + ".manifest.json", manifest.to_json().dump(2) + "\n");
}

// energy ---------------------------------------------------------------------

struct EnergyArgs {
  int n = 0;
  int nz = 0;
  int order = 2;
  bool include_rest_mass = false;
};

Output cmd_energy(const EnergyArgs& a, const PhysicsFlags& flags) {
  const Physics phys = resolve(flags, std::nullopt);
  if (!phys.w) throw UsageError("energy needs --w (or the SI flags to derive it)");
  const QuantumNumbers q{a.n, a.nz};
  const cf::ModelParams<Rational> params{*phys.w, phys.eps, a.include_rest_mass};
  const auto exact = cf::decompose(q, params, a.order);
  const auto value = cf::to_double(exact);

  Table t;
  t.name = "energy";
  t.columns = {"n", "nz", "spin_mult", "order", "w", "eps", "e0", "e1", "e2", "total"};
  std::vector<Cell> row{static_cast<long long>(q.n), static_cast<long long>(q.nz),
                        static_cast<long long>(q.spin_mult()), static_cast<long long>(a.order),
                        to_double(*phys.w), to_double(phys.eps), value.e0, value.e1, value.e2, value.total};
  if (phys.exact()) {
    for (const char* c : {"e0_exact", "e1_exact", "e2_exact", "total_exact"}) t.columns.emplace_back(c);
    for (const auto* r : {&exact.e0, &exact.e1, &exact.e2, &exact.total}) row.emplace_back(to_string(*r));
  }
  if (phys.mev) {
    for (const char* c : {"e0_mev", "e1_mev", "e2_mev", "total_mev"}) t.columns.emplace_back(c);
    for (double v : {value.e0, value.e1, value.e2, value.total}) row.emplace_back(units::to_si_energy(v, *phys.si));
  }
  t.rows.push_back(std::move(row));

  Output o;
  o.parameters["n"] = a.n;
  o.parameters["nz"] = a.nz;
  o.parameters["order"] = a.order;
  o.parameters["include_rest_mass"] = a.include_rest_mass;
  describe(o.parameters, phys);
  o.tables.push_back(std::move(t));
  return o;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  int n_max = 6;
  int nz_max = 6;
  std::string w_list = "1/2,1,2";
  int dim = 16;
  double tol = 1e-10;
  std::string eps = "1";
  std::string formula = "corrected";
};

Output cmd_verify(const VerifyArgs& a, bool& passed, std::ostream& err) {
  verification::VerifyOptions opt;
  opt.n_max = a.n_max;
  opt.nz_max = a.nz_max;
  opt.dim = a.dim;
  opt.tol = a.tol;
  opt.eps = parse_rational(a.eps);
  if (opt.eps < 0) throw ConfigError("eps must be non-negative");
  opt.formula = a.formula == "published" ? verification::Formula::kPublished : verification::Formula::kCorrected;
  opt.w_list.clear();
  std::stringstream ss(a.w_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational w = parse_rational(item);
    if (w <= 0) throw ConfigError("w values must be positive");
    opt.w_list.push_back(w);
  }

  const auto report = verification::run_verification(opt);
  passed = report.passed();

  Output o;
  o.parameters["n_max"] = opt.n_max;
  o.parameters["nz_max"] = opt.nz_max;
  o.parameters["w_list"] = a.w_list;
  o.parameters["dim"] = opt.dim;
  o.parameters["guard_band"] = opt.guard_band;
  o.parameters["eps"] = to_string(opt.eps);
  o.parameters["tol"] = opt.tol;
  o.parameters["case_tol"] = opt.case_tol;
  o.parameters["moment_tol"] = opt.moment_tol;
  o.parameters["selection_tol"] = opt.selection_tol;
  o.parameters["formula"] = a.formula;

  Table t;
  t.name = "checks";
  t.columns = {"check", "points", "max_deviation", "tolerance", "status"};
  for (const auto& c : report.checks)
    t.rows.push_back({c.name, static_cast<long long>(c.points), c.max_deviation, c.tolerance,
                      std::string(c.passed ? "pass" : "FAIL")});
  o.tables.push_back(std::move(t));

  if (!report.failures.empty()) {
    Table f;
    f.name = "failures";
    f.columns = {"check", "n", "nz", "w", "expected", "actual", "deviation"};
    for (const auto& x : report.failures) {
      f.rows.push_back({x.check, static_cast<long long>(x.n), static_cast<long long>(x.nz), x.w, x.expected,
                        x.actual, x.deviation});
    }
    const auto& first = report.failures.front();
    err << "verify: " << report.failures.size() << " failing points; first: " << first.check << " at (n=" << first.n
        << ", nz=" << first.nz << ", w=" << first.w << ") expected " << format_double(first.expected) << " got "
        << format_double(first.actual) << "\n";
    o.tables.push_back(std::move(f));
  }
  return o;
}

// spectrum -------------------------------------------------------------------

struct RangeArgs {
  double w_lo = 0.1;
  double w_hi = 2.0;
  int samples = 201;
  int n_max = 4;
  int nz_max = 4;
  int order = 1;
};

void check_range(double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw UsageError("need 0 < --w-lo < --w-hi");
}

Output cmd_spectrum(const RangeArgs& a, const PhysicsFlags& flags) {
  check_range(a.w_lo, a.w_hi);
  if (a.samples < 2) throw UsageError("--samples must be at least 2");
  const Physics phys = resolve(flags, std::nullopt);
  const double eps = to_double(phys.eps);

  Table t;
  t.name = "spectrum";
  t.columns = {"n", "nz", "spin_mult", "w", "energy"};
  for (const auto& q : spectrum::enumerate_levels(a.n_max, a.nz_max)) {
    for (int i = 0; i < a.samples; ++i) {
      const double w = a.w_lo + (a.w_hi - a.w_lo) * i / (a.samples - 1);
      double e = cf::decompose(q, cf::ModelParams<double>{w, eps}, a.order).total;
      if (phys.mev) e = units::to_si_energy(e, *phys.si);
      t.rows.push_back({static_cast<long long>(q.n), static_cast<long long>(q.nz),
                        static_cast<long long>(q.spin_mult()), w, e});
    }
  }
  Output o;
  o.parameters["w_lo"] = a.w_lo;
  o.parameters["w_hi"] = a.w_hi;
  o.parameters["samples"] = a.samples;
  o.parameters["n_max"] = a.n_max;
  o.parameters["nz_max"] = a.nz_max;
  o.parameters["order"] = a.order;
  describe(o.parameters, phys);
  o.tables.push_back(std::move(t));
  return o;
}

// crossings ------------------------------------------------------------------

Output cmd_crossings(const RangeArgs& a, const PhysicsFlags& flags, double cluster_tol_rel,
                     const std::string& lines_text) {
  check_range(a.w_lo, a.w_hi);
  const Physics phys = resolve(flags, std::nullopt);
  const auto levels = lines_text.empty() ? spectrum::enumerate_levels(a.n_max, a.nz_max) : parse_level_list(lines_text);
  const auto result = spectrum::find_crossings(levels, a.w_lo, a.w_hi, a.order, phys.eps);
  const double eps = to_double(phys.eps);
  const double cluster_tol = cluster_tol_rel * eps;
  const auto clusters = spectrum::crossing_clusters(result.crossings, cluster_tol);

  Table t;
  t.name = "crossings";
  t.columns = {"a_n", "a_nz", "b_n", "b_nz", "order", "w_star", "e_star", "unperturbed_w", "shift", "shift_over_eps",
               "spin_degeneracy"};
  for (const auto& c : result.crossings) {
    std::vector<Cell> row{static_cast<long long>(c.line_a.n), static_cast<long long>(c.line_a.nz),
                          static_cast<long long>(c.line_b.n), static_cast<long long>(c.line_b.nz),
                          static_cast<long long>(c.order), c.w_star, c.e_star};
    row.emplace_back(c.unperturbed_w ? to_string(*c.unperturbed_w) : std::string());
    if (c.shift) {
      row.emplace_back(*c.shift);
      row.emplace_back(eps > 0.0 ? Cell(*c.shift / eps) : Cell(std::string()));
    } else {
      row.emplace_back(std::string());
      row.emplace_back(std::string());
    }
    row.emplace_back(static_cast<long long>(spectrum::spin_degeneracy_at_crossing(c)));
    t.rows.push_back(std::move(row));
  }

  Table ct;
  ct.name = "clusters";
  ct.columns = {"cluster", "size", "lines", "w_min", "w_max", "e_mean", "total_multiplicity"};
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& c = clusters[i];
    ct.rows.push_back({static_cast<long long>(i), static_cast<long long>(c.members.size()), level_list(c.lines),
                       c.w_min, c.w_max, c.e_mean, static_cast<long long>(c.total_multiplicity)});
  }

  Output o;
  o.parameters["w_lo"] = a.w_lo;
  o.parameters["w_hi"] = a.w_hi;
  o.parameters["order"] = a.order;
  if (lines_text.empty()) {
    o.parameters["n_max"] = a.n_max;
    o.parameters["nz_max"] = a.nz_max;
  } else {
    o.parameters["lines"] = level_list(levels);
  }
  o.parameters["cluster_tol_rel"] = cluster_tol_rel;
  describe(o.parameters, phys);
  o.tables.push_back(std::move(t));
  o.tables.push_back(std::move(ct));
  if (!result.degenerate_pairs.empty()) {
    Table d;
    d.name = "degenerate_pairs";
    d.columns = {"a_n", "a_nz", "b_n", "b_nz"};
    for (const auto& [x, y] : result.degenerate_pairs)
      d.rows.push_back({static_cast<long long>(x.n), static_cast<long long>(x.nz), static_cast<long long>(y.n),
                        static_cast<long long>(y.nz)});
    o.tables.push_back(std::move(d));
  }
  return o;
}

// split ----------------------------------------------------------------------

Output cmd_split(int N, const std::string& eps_text) {
  const Rational eps = parse_rational(eps_text);
  if (eps < 0) throw ConfigError("eps must be non-negative");
  Table t;
  t.name = "split";
  t.columns = {"n", "nz", "spin_mult", "e0", "e1_over_eps", "e1", "total", "total_float"};
  for (const auto& s : spectrum::split_diagram(N, eps)) {
    t.rows.push_back({static_cast<long long>(s.q.n), static_cast<long long>(s.q.nz),
                      static_cast<long long>(s.q.spin_mult()), to_string(s.e0), to_string(s.e1_coefficient),
                      to_string(s.e1), to_string(s.total), to_double(s.total)});
  }
  Output o;
  o.parameters["N"] = N;
  o.parameters["w"] = "1";
  o.parameters["eps"] = to_string(eps);
  o.tables.push_back(std::move(t));
  return o;
}

// degeneracy -----------------------------------------------------------------

Output cmd_degeneracy(const std::string& w_text, const std::string& e_max_text, int n_max, int nz_max) {
  Rational w;
  try {
    w = parse_positive_fraction(w_text);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  // Without an explicit cap every group reachable inside the bounds is shown.
  const Rational e_max = e_max_text.empty() ? Rational(n_max) * w + Rational(nz_max) + make_rational(1, 2)
                                            : parse_rational(e_max_text);
  Table t;
  t.name = "degeneracy";
  t.columns = {"energy", "energy_float", "members", "member_count", "total_multiplicity"};
  for (const auto& g : spectrum::degeneracy_groups(w, e_max, n_max, nz_max)) {
    t.rows.push_back({to_string(g.energy), to_double(g.energy), level_list(g.members),
                      static_cast<long long>(g.members.size()), static_cast<long long>(g.total_multiplicity)});
  }
  Output o;
  o.parameters["w"] = to_string(w);
  o.parameters["e_max"] = to_string(e_max);
  o.parameters["n_max"] = n_max;
  o.parameters["nz_max"] = nz_max;
  o.tables.push_back(std::move(t));
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic corrections to Landau levels with a parallel linear electric field"};
  app.name(args.empty() ? "rellandau" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  OutputFlags output_flags;

  EnergyArgs energy_args;
  PhysicsFlags energy_phys;
  auto* energy = app.add_subcommand("energy", "Energies of one level up to second order");
  energy->add_option("--n", energy_args.n, "Combined Landau/spin index");
  energy->add_option("--nz", energy_args.nz, "Axial index");
  energy->add_option("--order", energy_args.order, "Highest correction order")->check(CLI::Range(0, 2));
  energy->add_flag("--include-rest-mass", energy_args.include_rest_mass, "Add the rest energy 1/eps");
  add_physics_flags(energy, energy_phys, true);
  add_output_flags(energy, output_flags);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check every closed form against the Fock-space oracle");
  verify->add_option("--n-max", verify_args.n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--nz-max", verify_args.nz_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--w-list", verify_args.w_list, "Comma-separated w values");
  verify->add_option("--dim", verify_args.dim, "Fock truncation size");
  verify->add_option("--tol", verify_args.tol, "Relative tolerance for energies");
  verify->add_option("--eps", verify_args.eps, "Perturbation strength used in the comparison");
  verify->add_option("--formula", verify_args.formula, "Second-order closed form to test")
      ->check(CLI::IsMember({"corrected", "published"}));
  add_output_flags(verify, output_flags);

  RangeArgs spectrum_args;
  PhysicsFlags spectrum_phys;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Sample E(w) for every level on a uniform grid");
  spectrum_cmd->add_option("--w-lo", spectrum_args.w_lo);
  spectrum_cmd->add_option("--w-hi", spectrum_args.w_hi);
  spectrum_cmd->add_option("--samples", spectrum_args.samples);
  spectrum_cmd->add_option("--n-max", spectrum_args.n_max)->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--nz-max", spectrum_args.nz_max)->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--order", spectrum_args.order)->check(CLI::Range(0, 2));
  add_physics_flags(spectrum_cmd, spectrum_phys, false);
  add_output_flags(spectrum_cmd, output_flags);

  RangeArgs crossing_args;
  crossing_args.w_lo = 0.1;
  crossing_args.w_hi = 2.0;
  PhysicsFlags crossing_phys;
  double cluster_tol_rel = 1e-6;
  std::string lines_text;
  auto* crossings = app.add_subcommand("crossings", "Locate pairwise level crossings analytically");
  crossings->add_option("--w-lo", crossing_args.w_lo);
  crossings->add_option("--w-hi", crossing_args.w_hi);
  crossings->add_option("--n-max", crossing_args.n_max)->check(CLI::NonNegativeNumber);
  crossings->add_option("--nz-max", crossing_args.nz_max)->check(CLI::NonNegativeNumber);
  crossings->add_option("--order", crossing_args.order)->check(CLI::Range(0, 2));
  crossings->add_option("--cluster-tol", cluster_tol_rel, "Cluster radius in units of eps")
      ->check(CLI::NonNegativeNumber);
  crossings->add_option("--lines", lines_text, "Restrict to levels n:nz,n:nz,...");
  add_physics_flags(crossings, crossing_phys, false);
  add_output_flags(crossings, output_flags);

  int split_N = 2;
  std::string split_eps = "1";
  auto* split = app.add_subcommand("split", "First-order splitting of the w = 1 shell n + nz = N");
  split->add_option("--N", split_N)->check(CLI::NonNegativeNumber);
  split->add_option("--eps", split_eps);
  add_output_flags(split, output_flags);

  std::string degeneracy_w;
  std::string degeneracy_e_max;
  int degeneracy_n_max = 10;
  int degeneracy_nz_max = 10;
  auto* degeneracy = app.add_subcommand("degeneracy", "Group levels by exact unperturbed energy at rational w");
  degeneracy->add_option("--w", degeneracy_w, "Ratio as p/q")->required();
  degeneracy->add_option("--e-max", degeneracy_e_max, "Largest energy to report (hbar omega_z)");
  degeneracy->add_option("--n-max", degeneracy_n_max)->check(CLI::NonNegativeNumber);
  degeneracy->add_option("--nz-max", degeneracy_nz_max)->check(CLI::NonNegativeNumber);
  add_output_flags(degeneracy, output_flags);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*energy) {
      emit("energy", args, cmd_energy(energy_args, energy_phys), output_flags, out);
    } else if (*verify) {
      bool passed = false;
      emit("verify", args, cmd_verify(verify_args, passed, err), output_flags, out);
      return passed ? kExitOk : kExitFailure;
    } else if (*spectrum_cmd) {
      emit("spectrum", args, cmd_spectrum(spectrum_args, spectrum_phys), output_flags, out);
    } else if (*crossings) {
      emit("crossings", args, cmd_crossings(crossing_args, crossing_phys, cluster_tol_rel, lines_text), output_flags,
           out);
    } else if (*split) {
      emit("split", args, cmd_split(split_N, split_eps), output_flags, out);
    } else if (*degeneracy) {
      emit("degeneracy", args, cmd_degeneracy(degeneracy_w, degeneracy_e_max, degeneracy_n_max, degeneracy_nz_max),
           output_flags, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace rellandau::app
