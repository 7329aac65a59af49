// timlab-cli: spectra, ground-state reports, sweeps and W-state schedules.
// Talks to the physics core only through timlab.h.
#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output.hpp"
#include "timlab.h"

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kBadArgs = 2, kOutOfRegion = 3, kFrozen = 4 };

// Carries an exit code up to main.
struct Abort {
  int code;
  std::string message;
};

int exit_for(tim_status s) {
  switch (s) {
    case TIM_OK: return kOk;
    case TIM_ERR_INVALID_ARGUMENT:
    case TIM_ERR_WRONG_SIZE:
    case TIM_ERR_DIMENSION_TOO_LARGE: return kBadArgs;
    case TIM_ERR_OUT_OF_REGION: return kOutOfRegion;
    case TIM_ERR_FROZEN_DYNAMICS:
    case TIM_ERR_ZERO_COUPLING: return kFrozen;
    default: return kFailure;
  }
}

void check(tim_status s) {
  if (s != TIM_OK) throw Abort{exit_for(s), std::string(tim_status_name(s)) + ": " + tim_last_error()};
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw Abort{kBadArgs, std::string(name) + " must be finite"};
}

class Model {
 public:
  Model(int n, double j, double b) { check(tim_model_create(n, j, b, &ptr_)); }
  ~Model() { tim_model_destroy(ptr_); }
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  const tim_model* get() const { return ptr_; }

 private:
  tim_model* ptr_ = nullptr;
};

std::complex<double> cplx(tim_complex c) { return {c.re, c.im}; }

double overlap_sq(const std::vector<tim_complex>& a, const std::vector<tim_complex>& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(cplx(a[i])) * cplx(b[i]);
  return std::norm(s);
}

std::vector<tim_complex> ket111() {
  std::vector<tim_complex> v(8, tim_complex{0.0, 0.0});
  v[7] = {1.0, 0.0};
  return v;
}

std::vector<tim_complex> w_ket() {
  std::vector<tim_complex> v(8);
  check(tim_w_state(v.data()));
  return v;
}

// Uniform grid with the end points hit exactly.
std::vector<double> linear_grid(double start, double stop, int steps) {
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = start + (stop - start) * i / (steps - 1);
  g.back() = stop;
  return g;
}

std::vector<double> log_grid(double start, double stop, int steps) {
  const double l0 = std::log(start), l1 = std::log(stop);
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (steps - 1));
  g.front() = start;
  g.back() = stop;
  return g;
}

struct Common {
  std::string format = "csv";
  std::string out;
};

using Json = nlohmann::ordered_json;

Json base_meta(const std::string& command) {
  Json meta;
  meta["command"] = command;
  meta["version"] = tim_version();
  meta["parameters"] = Json::object();
  return meta;
}

// Writes the table; for CSV the summary keys go to stderr as key=value lines.
void emit(const Common& c, const timcli::Table& table, const Json& meta,
          const std::vector<std::string>& summary_keys) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw Abort{kBadArgs, "cannot open output file " + c.out};
    os = &file;
  }
  if (c.format == "json") {
    timcli::write_json(*os, table, meta);
  } else {
    timcli::write_csv(*os, table);
    for (const auto& key : summary_keys) {
      const auto& v = meta.at(key);
      std::cerr << key << '=' << (v.is_number() ? timcli::format_double(v.get<double>()) : v.dump())
                << '\n';
    }
  }
  os->flush();
  if (!*os) throw Abort{kFailure, "write failed"};
}

// ---- subcommands ----------------------------------------------------------

void run_spectrum(const Common& c, double j, double b) {
  require_finite(j, "--j");
  require_finite(b, "--b");
  double closed[8];
  check(tim_spectrum3(j, b, closed));
  Model m(3, j, b);
  double numeric[8];
  check(tim_model_spectrum(m.get(), numeric, 8));

  std::array<int, 8> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return closed[x] < closed[y]; });

  timcli::Table t{{"rank", "label", "closed_form", "numeric", "deviation"}, {}};
  double max_dev = 0.0;
  for (int r = 0; r < 8; ++r) {
    const double dev = std::abs(closed[order[r]] - numeric[r]);
    max_dev = std::max(max_dev, dev);
    t.add_row({static_cast<long long>(r), "E" + std::to_string(order[r]), closed[order[r]],
               numeric[r], dev});
  }
  Json meta = base_meta("spectrum");
  meta["parameters"] = {{"j", j}, {"b", b}};
  meta["max_deviation"] = max_dev;
  emit(c, t, meta, {"max_deviation"});
}

void run_ground(const Common& c, double j, double b) {
  require_finite(j, "--j");
  require_finite(b, "--b");
  tim_ground_report r{};
  check(tim_ground_report_compute(j, b, &r));
  timcli::Table t{{"j", "b", "a1", "a2", "concurrence", "xi_squared", "fidelity", "relation_residual"},
                  {}};
  t.add_row({j, b, r.a1, r.a2, r.concurrence, r.xi_squared, r.fidelity, r.relation_residual});
  Json meta = base_meta("ground");
  meta["parameters"] = {{"j", j}, {"b", b}};
  emit(c, t, meta, {});
}

void check_sweep(double start, double stop, int steps) {
  require_finite(start, "--start");
  require_finite(stop, "--stop");
  if (steps < 2) throw Abort{kBadArgs, "--steps must be at least 2"};
  if (!(start < stop)) throw Abort{kBadArgs, "--start must be below --stop"};
}

void run_sweep_theta(const Common& c, double start, double stop, int steps) {
  check_sweep(start, stop, steps);
  timcli::Table t{{"theta", "concurrence", "xi_squared"}, {}};
  for (double theta : linear_grid(start, stop, steps)) {
    double conc = 0.0, xi = 0.0;
    check(tim_mixing_values(theta, &conc, &xi));
    t.add_row({theta, conc, xi});
  }
  Json meta = base_meta("sweep-theta");
  meta["parameters"] = {{"start", start}, {"stop", stop}, {"steps", steps}};
  emit(c, t, meta, {});
}

void run_sweep_field(const Common& c, double j, double start, double stop, int steps) {
  require_finite(j, "--j");
  check_sweep(start, stop, steps);
  if (start <= 0.0 || j <= 0.0) throw Abort{kOutOfRegion, "field sweep needs j > 0 and start > 0"};
  timcli::Table t{{"b", "concurrence", "xi_squared"}, {}};
  for (double b : log_grid(start, stop, steps)) {
    tim_ground_report r{};
    check(tim_ground_report_compute(j, b, &r));
    t.add_row({b, r.concurrence, r.xi_squared});
  }
  Json meta = base_meta("sweep-field");
  meta["parameters"] = {{"j", j}, {"start", start}, {"stop", stop}, {"steps", steps}};
  emit(c, t, meta, {});
}

void run_evolve(const Common& c, double j, double b, double t_max, int steps) {
  require_finite(j, "--j");
  require_finite(b, "--b");
  require_finite(t_max, "--t-max");
  if (steps < 2) throw Abort{kBadArgs, "--steps must be at least 2"};
  if (!(t_max > 0.0)) throw Abort{kBadArgs, "--t-max must be positive"};
  Model m(3, j, b);
  const auto start = ket111();
  const auto w = w_ket();
  std::vector<tim_complex> psi(8);
  timcli::Table t{{"t", "p111", "pW", "leakage"}, {}};
  double max_leak = 0.0;
  for (double time : linear_grid(0.0, t_max, steps)) {
    check(tim_model_evolve(m.get(), start.data(), time, psi.data(), psi.size()));
    const double p111 = std::norm(cplx(psi[7]));
    const double pw = overlap_sq(w, psi);
    const double leak = 1.0 - p111 - pw;
    max_leak = std::max(max_leak, std::abs(leak));
    t.add_row({time, p111, pw, leak});
  }
  Json meta = base_meta("evolve");
  meta["parameters"] = {{"j", j}, {"b", b}, {"t_max", t_max}, {"steps", steps}};
  meta["max_leakage"] = max_leak;
  emit(c, t, meta, {"max_leakage"});
}

void run_make_w(const Common& c, double j, int steps) {
  require_finite(j, "--j");
  if (steps < 2) throw Abort{kBadArgs, "--steps must be at least 2"};
  double b = 0.0, t_star = 0.0;
  check(tim_w_schedule(j, &b, &t_star));
  Model m(3, j, b);
  const auto start = ket111();
  const auto w = w_ket();
  std::vector<tim_complex> psi(8);

  timcli::Table t{{"t", "w_fidelity"}, {}};
  for (double time : linear_grid(0.0, 2.0 * t_star, steps)) {
    check(tim_model_evolve(m.get(), start.data(), time, psi.data(), psi.size()));
    t.add_row({time, overlap_sq(w, psi)});
  }
  check(tim_model_evolve(m.get(), start.data(), t_star, psi.data(), psi.size()));
  const double f_star = overlap_sq(w, psi);

  Json meta = base_meta("make-w");
  meta["parameters"] = {{"j", j}, {"steps", steps}};
  meta["b"] = b;
  meta["t_star"] = t_star;
  meta["w_fidelity_at_t_star"] = f_star;
  emit(c, t, meta, {"b", "t_star", "w_fidelity_at_t_star"});
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-diagonalization lab for the three-qubit transverse Ising ring"};
  app.set_version_flag("--version", std::string(tim_version()));
  app.require_subcommand(1);

  // One variable per subcommand option.
  Common common;
  double j = 1.0, b = 1.0, t_max = 5.0;
  // default_val() would round-trip through a short string, so defaults are set here.
  double th_start = 0.0, th_stop = std::numbers::pi, f_start = 0.01, f_stop = 10.0;
  int th_steps = 501, f_steps = 500, ev_steps = 201, w_steps = 101;

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form and numeric eigenvalues");
  spectrum->add_option("--j", j, "Exchange coupling")->required();
  spectrum->add_option("--b", b, "Transverse field")->required();
  add_common(spectrum, common);

  auto* ground = app.add_subcommand("ground", "Ground-state amplitudes and entanglement");
  ground->add_option("--j", j, "Exchange coupling")->required();
  ground->add_option("--b", b, "Transverse field")->required();
  add_common(ground, common);

  auto* sweep_theta = app.add_subcommand("sweep-theta", "Concurrence and squeezing versus mixing angle");
  sweep_theta->add_option("--start", th_start, "First angle")->capture_default_str();
  sweep_theta->add_option("--stop", th_stop, "Last angle")->capture_default_str();
  sweep_theta->add_option("--steps", th_steps, "Number of grid points")->capture_default_str();
  add_common(sweep_theta, common);

  auto* sweep_field = app.add_subcommand("sweep-field", "Ground-state entanglement versus field (log grid)");
  sweep_field->add_option("--j", j, "Exchange coupling")->capture_default_str();
  sweep_field->add_option("--start", f_start, "Smallest field")->capture_default_str();
  sweep_field->add_option("--stop", f_stop, "Largest field")->capture_default_str();
  sweep_field->add_option("--steps", f_steps, "Number of grid points")->capture_default_str();
  add_common(sweep_field, common);

  auto* evolve = app.add_subcommand("evolve", "Populations of |111> and |W> under full evolution");
  evolve->add_option("--j", j, "Exchange coupling")->required();
  evolve->add_option("--b", b, "Transverse field")->required();
  evolve->add_option("--t-max", t_max, "Final time")->capture_default_str();
  evolve->add_option("--steps", ev_steps, "Number of time points")->capture_default_str();
  add_common(evolve, common);

  auto* make_w = app.add_subcommand("make-w", "Field and time that turn |111> into |W>");
  make_w->add_option("--j", j, "Exchange coupling")->required();
  make_w->add_option("--steps", w_steps, "Number of trace points over [0, 2t*]")->capture_default_str();
  add_common(make_w, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (*spectrum) run_spectrum(common, j, b);
    else if (*ground) run_ground(common, j, b);
    else if (*sweep_theta) run_sweep_theta(common, th_start, th_stop, th_steps);
    else if (*sweep_field) run_sweep_field(common, j, f_start, f_stop, f_steps);
    else if (*evolve) run_evolve(common, j, b, t_max, ev_steps);
    else if (*make_w) run_make_w(common, j, w_steps);
  } catch (const Abort& a) {
    std::cerr << "error: " << a.message << '\n';
    return a.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
