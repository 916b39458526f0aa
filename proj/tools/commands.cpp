#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "pdm/error.hpp"
#include "pdm/hetero.hpp"
#include "pdm/oracle.hpp"
#include "pdm/params.hpp"
#include "pdm/spectra.hpp"
#include "pdm/states.hpp"
#include "pdm/transform.hpp"
#include "reference_tables.hpp"
#include "table.hpp"

namespace pdm::cli {

namespace {

// Bad flag values that CLI11 cannot catch by itself (malformed rationals, conflicting
// selectors). Mapped to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  int precision = 12;
};

struct OrderingOptions {
  std::string preset;
  std::string a;
  std::string b;

  OrderingParams resolve(const std::string& fallback = "bdd") const {
    const bool custom = !a.empty() || !b.empty();
    if (custom) {
      if (a.empty() || b.empty()) throw UsageError("--a and --b must be given together");
      if (!preset.empty()) throw UsageError("--ordering cannot be combined with --a/--b");
      try {
        return OrderingParams::custom(parse_rational(a), parse_rational(b));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    try {
      return parse_ordering(preset.empty() ? fallback : preset);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
};

void add_ordering_options(CLI::App* sub, OrderingOptions& o) {
  sub->add_option("--ordering", o.preset, "Preset ordering: bdd, gw, zk, lk, mm (default bdd)");
  sub->add_option("--a", o.a, "Ordering parameter a as an exact rational, e.g. -1/4");
  sub->add_option("--b", o.b, "Ordering parameter b as an exact rational");
}

ProfileId resolve_profile(const std::string& name, double ell) {
  try {
    return parse_profile(name, ell);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void add_ordering_parameters(Table& t, const ProfileId* p, const OrderingParams& o) {
  if (p) t.parameters.emplace_back("profile", std::string(to_string(p->kind())));
  if (p && p->is(ProfileKind::Parabolic)) t.parameters.emplace_back("ell", p->ell());
  t.parameters.emplace_back("ordering", o.name());
  t.parameters.emplace_back("a", format_rational(o.a));
  t.parameters.emplace_back("b", format_rational(o.b));
}

std::string describe(const SpectrumClass& c) {
  std::string s = std::string(to_string(c.kind)) + " (" + std::string(acronym(c.effective_potential_shape)) + ")";
  if (c.experimental) s += " experimental";
  if (c.outside_presets) s += " outside-presets";
  return s;
}

Table rejection(const std::string& command, const ProfileId& p, const OrderingParams& o, const SpectrumClass& c) {
  Table t;
  t.command = command;
  t.status = "rejected";
  t.message = "no physically acceptable states for the " + std::string(to_string(p.kind())) + " profile with ordering " +
              o.name() + " (omega = " + format_rational(omega_of(p.kind(), o)) + ")";
  add_ordering_parameters(t, &p, o);
  t.columns = {"status", "classification", "message"};
  t.add_row({t.status, describe(c), t.message});
  return t;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  // Each point is measured from its nearer end so that a range symmetric about 0 yields
  // exactly mirrored samples.
  for (int i = 0; i < n; ++i) {
    const int j = n - 1 - i;
    v[static_cast<std::size_t>(i)] = n == 1 ? lo : (i <= j ? lo + (hi - lo) * i / (n - 1) : hi - (hi - lo) * j / (n - 1));
  }
  return v;
}

// ---------------------------------------------------------------------------------------
// spectrum

struct SpectrumOptions {
  std::string profile;
  OrderingOptions ordering;
  int count = 3;
  double ell = 2.0;
};

Table cmd_spectrum(const SpectrumOptions& opt, int& code) {
  const auto p = resolve_profile(opt.profile, opt.ell);
  const auto o = opt.ordering.resolve();
  const auto cls = classify(p, o);
  if (!cls.has_states()) {
    code = kExitRejected;
    return rejection("spectrum", p, o, cls);
  }

  Table t;
  t.command = "spectrum";
  add_ordering_parameters(t, &p, o);
  t.parameters.emplace_back("count", std::int64_t{opt.count});
  t.columns = {"n", "parity", "e_tilde", "k", "classification", "kind"};
  const std::string label = describe(cls);
  const auto push = [&](const Level& l, const char* kind) {
    Cell k = l.k ? Cell(*l.k) : Cell();
    t.add_row({std::int64_t{l.n}, std::string(to_string(l.parity)), l.e_tilde, k, label, std::string(kind)});
  };

  switch (cls.kind) {
    case SpectrumKind::DiscreteWithMinimum: {
      const auto levels = p.is(ProfileKind::Exponential) ? exponential_levels(o, opt.count)
                                                          : levels_trigonometric(p, o, opt.count - 1);
      for (const auto& l : levels.levels) push(l, "discrete");
      break;
    }
    case SpectrumKind::ContinuousWithMinimum:
    case SpectrumKind::ContinuousPlusBound: {
      const auto bound = bound_levels_recip_quadratic(o);
      for (std::size_t i = 0; i < bound.levels.size() && static_cast<int>(i) < opt.count; ++i) push(bound.levels[i], "bound");
      t.add_row({Cell(), std::string("none"), scattering_threshold(o), Cell(), label, std::string("continuum_threshold")});
      break;
    }
    case SpectrumKind::ZeroEnergyOnly:
      push(Level{0, Parity::Even, 0.0, {}}, "zero_energy");
      t.message = "only the zero-energy state exists inside |x| <= ell; whether it is admissible depends on the "
                  "mass and potential outside";
      break;
    case SpectrumKind::ExternallyDetermined:
      t.message = "the spectrum is fixed by the mass and potential outside |x| <= ell";
      break;
    case SpectrumKind::NoSpectrum: break;
  }
  return t;
}

// ---------------------------------------------------------------------------------------
// wavefunction

struct WavefunctionOptions {
  std::string profile;
  OrderingOptions ordering;
  std::optional<int> n;
  std::optional<double> energy;
  std::string parity = "even";
  std::optional<double> x_min, x_max;
  int samples = 201;
  bool normalize = false;
  double ell = 2.0;
};

EigenState select_state(const ProfileId& p, const OrderingParams& o, const WavefunctionOptions& opt) {
  if (opt.n && opt.energy) throw UsageError("give either --n or --energy, not both");
  switch (p.kind()) {
    case ProfileKind::SolitonLike:
    case ProfileKind::ReciprocalBiquadratic:
      if (!opt.n) throw UsageError("this profile needs a level index --n");
      return trigonometric_state(p, o, *opt.n);
    case ProfileKind::Exponential:
      if (!opt.n) throw UsageError("this profile needs a level index --n");
      return exponential_state(o, *opt.n);
    case ProfileKind::ReciprocalQuadratic: {
      if (opt.n) return recip_quadratic_bound_state(o, *opt.n);
      if (!opt.energy) throw UsageError("the quadratic profile needs --n (bound state) or --energy (scattering state)");
      Parity par;
      if (opt.parity == "even") {
        par = Parity::Even;
      } else if (opt.parity == "odd") {
        par = Parity::Odd;
      } else {
        throw UsageError("--parity must be even or odd");
      }
      return recip_quadratic_scattering_state(o, *opt.energy, par);
    }
    case ProfileKind::Parabolic:
      if (!opt.energy) throw UsageError("the parabolic profile needs --energy");
      return parabolic_state(o, *opt.energy, p.ell());
  }
  throw UsageError("unknown profile");
}

Table cmd_wavefunction(const WavefunctionOptions& opt, int& code) {
  const auto p = resolve_profile(opt.profile, opt.ell);
  const auto o = opt.ordering.resolve();
  const auto cls = classify(p, o);
  if (!cls.has_states()) {
    code = kExitRejected;
    return rejection("wavefunction", p, o, cls);
  }
  auto state = select_state(p, o, opt);
  if (opt.normalize) state = normalize(state);

  const bool parabolic = p.is(ProfileKind::Parabolic);
  const double lo = opt.x_min.value_or(parabolic ? -p.ell() : -5.0);
  const double hi = opt.x_max.value_or(parabolic ? p.ell() : 5.0);
  if (!(lo < hi)) throw UsageError("--x-min must be below --x-max");

  Table t;
  t.command = "wavefunction";
  add_ordering_parameters(t, &p, o);
  t.parameters.emplace_back("n", state.n >= 0 ? Cell(std::int64_t{state.n}) : Cell());
  t.parameters.emplace_back("parity", std::string(to_string(state.parity)));
  t.parameters.emplace_back("e_tilde", state.e_tilde);
  t.parameters.emplace_back("k", state.k ? Cell(*state.k) : Cell());
  t.parameters.emplace_back("normalized", state.normalized);
  t.parameters.emplace_back("norm_constant", state.norm_constant);
  t.columns = {"x", "psi", "psi_imag", "rho", "m_of_x"};
  for (double x : linspace(lo, hi, opt.samples)) {
    const auto psi = eval(state, x);
    t.add_row({x, psi.real(), psi.imag(), std::norm(psi), mass(p, x)});
  }
  return t;
}

// ---------------------------------------------------------------------------------------
// potential

struct PotentialOptions {
  std::string profile;
  OrderingOptions ordering;
  std::optional<double> z_min, z_max;
  int samples = 400;
  double ell = 2.0;
};

Table cmd_potential(const PotentialOptions& opt) {
  const auto p = resolve_profile(opt.profile, opt.ell);
  const auto o = opt.ordering.resolve();
  const auto dom = z_domain(p);
  double lo = dom.lo, hi = dom.hi;
  switch (p.kind()) {
    case ProfileKind::SolitonLike:
    case ProfileKind::ReciprocalBiquadratic:
    case ProfileKind::Exponential:
      lo += 1e-3 * (dom.hi - dom.lo);
      hi -= 1e-3 * (dom.hi - dom.lo);
      break;
    case ProfileKind::ReciprocalQuadratic:
      lo = -6.0;
      hi = 6.0;
      break;
    case ProfileKind::Parabolic: break;
  }
  lo = opt.z_min.value_or(lo);
  hi = opt.z_max.value_or(hi);
  if (!(lo < hi)) throw UsageError("--z-min must be below --z-max");

  Table t;
  t.command = "potential";
  add_ordering_parameters(t, &p, o);
  t.parameters.emplace_back("omega", format_rational(omega_of(p.kind(), o)));
  t.columns = {"z", "V"};
  for (double z : linspace(lo, hi, opt.samples)) {
    Cell v;
    if (z == dom.lo || z == dom.hi) {  // the pole itself has no value
      t.add_row({z, v});
      continue;
    }
    try {
      v = effective_potential(p, o, z);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularPoint) throw;  // the pole itself has no value
    }
    t.add_row({z, v});
  }
  return t;
}

// ---------------------------------------------------------------------------------------
// hetero

struct HeteroOptions {
  double m1 = 0.5;
  double m2 = 1.0;
  double ell = 1.0;
  OrderingOptions ordering;
  std::string mode = "scan";
  std::optional<double> e_min, e_max;
  int points = 0;
  std::vector<double> energies{3.5, 7.0, 13.5};
  double x_min = -4.0;
  double x_max = 4.0;
  int samples = 801;
};

const char* region_of(const hetero::HeteroConfig& cfg, double x) {
  if (x < -cfg.ell) return "left";
  if (x > cfg.ell) return "right";
  return "junction";
}

Table cmd_hetero(const HeteroOptions& opt) {
  const auto o = opt.ordering.resolve();
  const auto cfg = hetero::build_config(opt.m1, opt.m2, opt.ell, o);

  Table t;
  t.command = "hetero";
  t.parameters = {{"mode", opt.mode}, {"m1", opt.m1}, {"m2", opt.m2}, {"ell", opt.ell}};
  add_ordering_parameters(t, nullptr, o);
  t.parameters.emplace_back("chi", cfg.chi);
  t.parameters.emplace_back("eta", cfg.eta);
  t.parameters.emplace_back("alpha", cfg.alpha);

  if (opt.mode == "scan") {
    const double lo = opt.e_min.value_or(0.5), hi = opt.e_max.value_or(100.0);
    const int n = opt.points > 0 ? opt.points : 512;
    if (!(lo < hi)) throw UsageError("--e-min must be below --e-max");
    // Half-open (lo, hi]: the lower end is excluded so a zero lower bound never hits Ẽ = 0.
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * (i + 1) / n;
    t.parameters.emplace_back("e_min", lo);
    t.parameters.emplace_back("e_max", hi);
    t.parameters.emplace_back("points", std::int64_t{n});
    t.columns = {"e_tilde", "r2", "t2", "r2_over_sqrt_m1", "t2_over_sqrt_m2", "flux_residual", "resonance"};
    double worst = 0.0;
    std::int64_t resonances = 0;
    for (const auto& row : hetero::rt_sweep(cfg, grid)) {
      if (row.resonance) {
        ++resonances;
        t.add_row({row.e_tilde, Cell(), Cell(), Cell(), Cell(), Cell(), true});
        continue;
      }
      worst = std::max(worst, row.flux_residual);
      t.add_row({row.e_tilde, row.r2, row.t2, row.r2 / std::sqrt(cfg.m1), row.t2 / std::sqrt(cfg.m2),
                 row.flux_residual, false});
    }
    t.summary = {{"max_flux_residual", worst}, {"resonances", resonances}};
  } else if (opt.mode == "states") {
    hetero::BoundSearch search;
    search.e_lo = opt.e_min.value_or(search.e_lo);
    search.e_hi = opt.e_max.value_or(search.e_hi);
    if (opt.points > 0) search.scan_points = opt.points;
    if (!(search.e_lo < search.e_hi) || !(search.e_hi < 0.0)) {
      throw UsageError("bound-state range must satisfy e-min < e-max < 0");
    }
    t.parameters.emplace_back("e_min", search.e_lo);
    t.parameters.emplace_back("e_max", search.e_hi);
    t.parameters.emplace_back("points", std::int64_t{search.scan_points});
    t.columns = {"e_tilde", "c1_re", "c1_im", "c2_re", "c2_im", "b_re", "b_im"};
    const auto states = hetero::find_bound_states(cfg, search);
    for (const auto& s : states) {
      t.add_row({s.e_tilde, s.c1.real(), s.c1.imag(), s.c2.real(), s.c2.imag(), s.b.real(), s.b.imag()});
    }
    t.summary = {{"count", static_cast<std::int64_t>(states.size())}};
  } else if (opt.mode == "profilepsi") {
    if (!(opt.x_min < opt.x_max)) throw UsageError("--x-min must be below --x-max");
    t.parameters.emplace_back("x_min", opt.x_min);
    t.parameters.emplace_back("x_max", opt.x_max);
    t.parameters.emplace_back("samples", std::int64_t{opt.samples});
    t.columns = {"e_tilde", "x", "region", "psi_re", "psi_im", "rho"};
    for (double e : opt.energies) {
      const auto s = hetero::scattering(cfg, e);
      for (double x : linspace(opt.x_min, opt.x_max, opt.samples)) {
        const auto psi = hetero::scattering_psi(cfg, s, x);
        t.add_row({e, x, std::string(region_of(cfg, x)), psi.real(), psi.imag(), std::norm(psi)});
      }
    }
  } else {
    throw UsageError("--mode must be scan, states or profilepsi");
  }
  return t;
}

// ---------------------------------------------------------------------------------------
// validate

struct ValidateOptions {
  std::string scope = "all";
  std::string profile;
  std::string ordering;
  int grid = 4000;
  double tol_levels = 1e-3;
  double tol_ground = 2e-3;
  double tol_exponential = 1e-4;
  std::vector<std::string> perturb;  // "profile:ordering:delta", test hook
};

struct FdOutcome {
  std::string status = "skipped";
  std::int64_t levels = 0;
  std::optional<double> max_error;
};

// Finite-difference cross-check of one arrangement against its closed-form levels.
FdOutcome fd_check(const ProfileId& p, const OrderingParams& o, const SpectrumClass& cls, const ValidateOptions& opt) {
  FdOutcome r;
  GridSpec grid;
  grid.n_points = opt.grid;
  const auto finish = [&](const OracleReport& rep) {
    r.levels = static_cast<std::int64_t>(rep.compared.size());
    double worst = 0.0;
    for (const auto& c : rep.compared) worst = std::max(worst, c.rel_error);
    r.max_error = worst;
    r.status = rep.pass ? "pass" : "fail";
  };

  if (cls.kind == SpectrumKind::DiscreteWithMinimum && !cls.experimental &&
      (p.is(ProfileKind::SolitonLike) || p.is(ProfileKind::ReciprocalBiquadratic))) {
    finish(compare(levels_trigonometric(p, o, 2), fd_spectrum_z(p, o, grid, 3), opt.tol_levels));
  } else if (cls.kind == SpectrumKind::DiscreteWithMinimum && p.is(ProfileKind::Exponential)) {
    auto analytic = exponential_levels(o, 3);
    for (auto& l : analytic.levels) l.e_tilde = *l.k;
    auto numeric = fd_spectrum_z(p, o, grid, 3, Sector::Even);
    for (auto& e : numeric) e = std::sqrt(std::max(e, 0.0));
    finish(compare(analytic, numeric, opt.tol_exponential));
  } else if (p.is(ProfileKind::ReciprocalQuadratic) && cls.has_states()) {
    const auto bound = bound_levels_recip_quadratic(o);
    if (!bound.levels.empty()) {
      finish(compare(bound, fd_spectrum_z(p, o, grid, static_cast<int>(bound.levels.size())), opt.tol_ground));
    } else {
      // No bound state: nothing in the truncated box may sit below the continuum edge.
      const double lowest = fd_spectrum_z(p, o, grid, 1).front();
      const double deficit = std::max(0.0, scattering_threshold(o) - lowest);
      r.max_error = deficit;
      r.status = deficit <= opt.tol_ground ? "pass" : "fail";
    }
  }
  return r;
}

Table cmd_validate(const ValidateOptions& opt, int& code) {
  struct Perturbation {
    ProfileKind profile;
    Preset ordering;
    Rational delta;
  };
  std::vector<Perturbation> perturbations;
  for (const auto& spec : opt.perturb) {
    const auto a = spec.find(':');
    const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("--perturb-omega expects profile:ordering:delta");
    try {
      const auto o = parse_ordering(spec.substr(a + 1, b - a - 1));
      perturbations.push_back({parse_profile(spec.substr(0, a)).kind(), *o.label, parse_rational(spec.substr(b + 1))});
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  std::optional<ProfileKind> only_profile;
  std::optional<Preset> only_ordering;
  if (opt.scope == "arrangement") {
    if (opt.profile.empty() || opt.ordering.empty()) {
      throw UsageError("--scope arrangement needs --profile and --ordering");
    }
    only_profile = resolve_profile(opt.profile, 2.0).kind();
    OrderingOptions oo;
    oo.preset = opt.ordering;
    only_ordering = *oo.resolve().label;
  } else if (opt.scope != "all") {
    throw UsageError("--scope must be all or arrangement");
  }

  std::vector<const ReferenceArrangement*> selected;
  for (const auto& ref : reference_arrangements()) {
    if (only_profile && (ref.profile != *only_profile || ref.ordering != *only_ordering)) continue;
    selected.push_back(&ref);
  }

  // Arrangements are independent; run their solves concurrently, collect in table order.
  std::vector<std::future<std::vector<Cell>>> jobs;
  for (const auto* ref : selected) {
    jobs.push_back(std::async(std::launch::async, [ref, &opt, &perturbations] {
      const auto p = ProfileId::of(ref->profile);
      const auto o = OrderingParams::preset(ref->ordering);
      const auto c = arrangement_constants(p, o);
      Rational omega = c.omega;
      for (const auto& pt : perturbations) {
        if (pt.profile == ref->profile && pt.ordering == ref->ordering) omega += pt.delta;
      }
      const auto cls = classify(p, o);
      const auto opt_text = [](const std::optional<Rational>& r) { return r ? Cell(format_rational(*r)) : Cell(); };
      const auto fd = fd_check(p, o, cls, opt);
      const bool ok = omega == ref->omega && c.v0 == ref->v0 && c.v_inf == ref->v_inf && cls.kind == ref->kind &&
                      cls.effective_potential_shape == ref->shape && fd.status != "fail";
      return std::vector<Cell>{std::string(to_string(ref->profile)),
                               std::string(to_string(ref->ordering)),
                               format_rational(omega),
                               format_rational(ref->omega),
                               opt_text(c.v0),
                               opt_text(ref->v0),
                               opt_text(c.v_inf),
                               opt_text(ref->v_inf),
                               std::string(to_string(cls.kind)),
                               std::string(to_string(ref->kind)),
                               std::string(acronym(cls.effective_potential_shape)),
                               std::string(acronym(ref->shape)),
                               fd.status,
                               fd.levels,
                               fd.max_error ? Cell(*fd.max_error) : Cell(),
                               ok};
    }));
  }

  Table t;
  t.command = "validate";
  t.parameters = {{"scope", opt.scope},
                  {"grid", std::int64_t{opt.grid}},
                  {"tol_levels", opt.tol_levels},
                  {"tol_ground", opt.tol_ground},
                  {"tol_exponential", opt.tol_exponential}};
  t.columns = {"profile",        "ordering",       "omega",        "omega_expected",
               "v0",             "v0_expected",    "v_inf",        "v_inf_expected",
               "classification", "classification_expected",       "shape",
               "shape_expected", "fd_check",       "fd_levels",    "fd_max_error",
               "pass"};
  std::string failed;
  std::int64_t failures = 0;
  for (auto& job : jobs) {
    auto row = job.get();
    if (!std::get<bool>(row.back())) {
      ++failures;
      failed += (failed.empty() ? "" : ";") + std::get<std::string>(row[0]) + ":" + std::get<std::string>(row[1]);
    }
    t.add_row(std::move(row));
  }
  t.summary = {{"pass", failures == 0},
               {"rows", static_cast<std::int64_t>(t.rows.size())},
               {"failures", failures},
               {"failed", failed}};
  if (failures) {
    t.status = "failed";
    t.message = "validation failed for " + failed;
    code = kExitRejected;
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectra, wave functions and heterostructure scattering for position-dependent-mass "
               "Hamiltonians under von Roos orderings",
               "pdm-cli"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value configuration file ([subcommand] sections for subcommand options)");

  OutputOptions output;
  app.add_option("--format", output.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", output.path, "Write the result to this file instead of standard output");
  app.add_option("--precision", output.precision, "Significant digits of numeric output (6-17)")
      ->envname("PDM_PRECISION")
      ->check(CLI::Range(6, 17));

  SpectrumOptions sp;
  auto* spectrum = app.add_subcommand("spectrum", "Energy levels and spectrum class of one arrangement");
  spectrum->add_option("--profile", sp.profile, "soliton, biquadratic, quadratic, exponential or parabolic")->required();
  add_ordering_options(spectrum, sp.ordering);
  spectrum->add_option("--count", sp.count, "Number of levels")->check(CLI::Range(1, 1000));
  spectrum->add_option("--ell", sp.ell, "Half-width of the parabolic region")->check(CLI::PositiveNumber);

  WavefunctionOptions wf;
  auto* wave = app.add_subcommand("wavefunction", "Sampled eigenfunction, density and mass");
  wave->add_option("--profile", wf.profile, "Mass profile")->required();
  add_ordering_options(wave, wf.ordering);
  wave->add_option("--n", wf.n, "Level index, counted from 0")->check(CLI::NonNegativeNumber);
  wave->add_option("--energy", wf.energy, "Energy of a continuum (quadratic) or parabolic state");
  wave->add_option("--parity", wf.parity, "Sector of a quadratic scattering state: even or odd");
  wave->add_option("--x-min", wf.x_min, "Lower end of the sample range");
  wave->add_option("--x-max", wf.x_max, "Upper end of the sample range");
  wave->add_option("--samples", wf.samples, "Number of samples")->check(CLI::Range(2, 10000000));
  wave->add_flag("--normalize", wf.normalize, "Normalize so that the integral of |psi|^2 is 1");
  wave->add_option("--ell", wf.ell, "Half-width of the parabolic region")->check(CLI::PositiveNumber);

  PotentialOptions po;
  auto* pot = app.add_subcommand("potential", "Effective potential V(z) on a uniform grid");
  pot->add_option("--profile", po.profile, "Mass profile")->required();
  add_ordering_options(pot, po.ordering);
  pot->add_option("--z-min", po.z_min, "Lower end of the sample range");
  pot->add_option("--z-max", po.z_max, "Upper end of the sample range");
  pot->add_option("--samples", po.samples, "Number of samples")->check(CLI::Range(2, 10000000));
  pot->add_option("--ell", po.ell, "Half-width of the parabolic region")->check(CLI::PositiveNumber);

  HeteroOptions he;
  auto* het = app.add_subcommand("hetero", "Double heterostructure with a parabolic junction");
  het->add_option("--m1", he.m1, "Mass on the left")->check(CLI::PositiveNumber);
  het->add_option("--m2", he.m2, "Mass on the right")->check(CLI::PositiveNumber);
  het->add_option("--ell", he.ell, "Half-width of the junction")->check(CLI::PositiveNumber);
  add_ordering_options(het, he.ordering);
  het->add_option("--mode", he.mode, "scan, states or profilepsi")->check(CLI::IsMember({"scan", "states", "profilepsi"}));
  het->add_option("--e-min", he.e_min, "Lower energy bound (scan: excluded)");
  het->add_option("--e-max", he.e_max, "Upper energy bound");
  het->add_option("--points", he.points, "Energy grid size (scan) or sign-scan size (states)")
      ->check(CLI::Range(1, 10000000));
  het->add_option("--energies", he.energies, "Comma-separated energies for profilepsi")->delimiter(',');
  het->add_option("--x-min", he.x_min, "Lower end of the profilepsi range");
  het->add_option("--x-max", he.x_max, "Upper end of the profilepsi range");
  het->add_option("--samples", he.samples, "Samples per energy for profilepsi")->check(CLI::Range(2, 10000000));

  ValidateOptions va;
  auto* val = app.add_subcommand("validate", "Conformance report over the 25 preset arrangements");
  val->add_option("--scope", va.scope, "all or arrangement")->check(CLI::IsMember({"all", "arrangement"}));
  val->add_option("--profile", va.profile, "Profile for --scope arrangement");
  val->add_option("--ordering", va.ordering, "Preset ordering for --scope arrangement");
  val->add_option("--grid", va.grid, "Finite-difference grid points")->check(CLI::Range(100, 1000000));
  val->add_option("--tol-levels", va.tol_levels, "Relative tolerance for trigonometric levels");
  val->add_option("--tol-ground", va.tol_ground, "Absolute tolerance for quadratic bound states and thresholds");
  val->add_option("--tol-exponential", va.tol_exponential, "Relative tolerance for exponential k values");
  val->add_option("--perturb-omega", va.perturb, "Test hook: add delta to omega of profile:ordering")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e, out, err);
    return cli_code == 0 ? kExitOk : kExitUsage;
  }

  // CLI11 silently ignores an environment value that fails validation; reject it instead.
  const bool precision_on_command_line = std::any_of(args.begin(), args.end(), [](const std::string& a) {
    return a == "--precision" || a.rfind("--precision=", 0) == 0;
  });
  if (const char* env = std::getenv("PDM_PRECISION"); env != nullptr && *env != '\0' && !precision_on_command_line) {
    int value = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 6 || value > 17) {
      err << "error: PDM_PRECISION must be an integer in [6, 17], got '" << env << "'\n";
      return kExitUsage;
    }
  }

  int code = kExitOk;
  Table table;
  try {
    if (*spectrum) {
      table = cmd_spectrum(sp, code);
    } else if (*wave) {
      table = cmd_wavefunction(wf, code);
    } else if (*pot) {
      table = cmd_potential(po);
    } else if (*het) {
      table = cmd_hetero(he);
    } else {
      table = cmd_validate(va, code);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "rejected: " << e.what() << '\n';
    return kExitRejected;
  }
  if (!table.message.empty() && code != kExitOk) err << table.status << ": " << table.message << '\n';

  const Format format = output.format == "json" ? Format::Json : Format::Csv;
  if (output.path.empty()) {
    write_table(out, table, format, output.precision);
  } else {
    std::ostringstream buffer;
    write_table(buffer, table, format, output.precision);
    std::ofstream file(output.path, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << output.path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace pdm::cli
