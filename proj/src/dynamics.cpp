#include "tim/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "tim/error.hpp"
#include "tim/spectrum3.hpp"

namespace tim::dynamics {

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;
}

ComplexMatrix subspace_hamiltonian(double j, double b) {
  return {{-3.0 * b, kSqrt3 * j}, {kSqrt3 * j, 2.0 * j + b}};
}

RabiParams rabi_params(double j, double b) {
  const double k = j + 2.0 * b;
  const double omega = std::sqrt(3.0 * j * j + k * k);
  if (omega == 0.0) {
    throw Error(ErrorCode::FrozenDynamics, "omega = 0: j = 0 and b = 0 freeze the dynamics");
  }
  return {omega, std::atan2(-kSqrt3 * j, k)};
}

SubspaceAmplitudes evolve_closed(double j, double b, double t) {
  const RabiParams r = rabi_params(j, b);
  const double k = j + 2.0 * b;
  const double cos_mix = k / r.omega;
  const double sin_mix = -kSqrt3 * j / r.omega;
  const double c = std::cos(r.omega * t);
  const double s = std::sin(r.omega * t);
  return {Complex(c, cos_mix * s), Complex(0.0, sin_mix * s)};
}

StateVector evolve_full(const ModelParams& p, std::span<const Complex> state0, double t) {
  const ComplexMatrix h = hamiltonian(p);
  if (state0.size() != h.rows()) {
    throw Error(ErrorCode::WrongSize, "evolve_full: state dimension does not match 2^n");
  }
  return propagator(h, t) * state0;
}

WSchedule w_schedule(double j) {
  if (j == 0.0) throw Error(ErrorCode::ZeroCoupling, "w_schedule needs j != 0");
  return {-j / 2.0, std::numbers::pi / (2.0 * kSqrt3 * std::abs(j))};
}

EvolutionTrace trace_evolution(double j, double b, double t_max, std::size_t steps) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "trace_evolution needs steps >= 2");
  if (!(t_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "trace_evolution needs t_max > 0");
  EvolutionTrace tr;
  tr.times.reserve(steps);
  tr.amp111.reserve(steps);
  tr.amp_w.reserve(steps);
  tr.w_fidelity.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const SubspaceAmplitudes a = evolve_closed(j, b, t);
    tr.times.push_back(t);
    tr.amp111.push_back(a.c111);
    tr.amp_w.push_back(a.c_w);
    tr.w_fidelity.push_back(std::norm(a.c_w));
  }
  return tr;
}

SubspacePopulations subspace_populations(std::span<const Complex> state) {
  if (state.size() != 8) throw Error(ErrorCode::WrongSize, "subspace_populations needs 3 qubits");
  SubspacePopulations pop;
  pop.p111 = std::norm(state[0b111]);
  pop.p_w = fidelity(spectrum3::w_state(), state);
  pop.leakage = 1.0 - pop.p111 - pop.p_w;
  return pop;
}

Evolver::Evolver(const ModelParams& p) : eig_(eig_hermitian(hamiltonian(p))) {}

StateVector Evolver::evolve(std::span<const Complex> state0, double t) const {
  const ComplexMatrix& v = eig_.eigenvectors;
  const std::size_t n = dim();
  if (state0.size() != n) {
    throw Error(ErrorCode::WrongSize, "Evolver: state dimension does not match 2^n");
  }
  StateVector coeff(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) acc += std::conj(v(r, k)) * state0[r];
    coeff[k] = acc * std::polar(1.0, -eig_.eigenvalues[k] * t);
  }
  StateVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += v(r, k) * coeff[k];
    out[r] = acc;
  }
  return out;
}

}  // namespace tim::dynamics
