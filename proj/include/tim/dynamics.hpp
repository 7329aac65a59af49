#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tim/linalg.hpp"
#include "tim/model.hpp"

// Evolution of the three-qubit ring from |111>, which stays inside
// span{|111>, |W>}. Units with hbar = 1.
namespace tim::dynamics {

/// Two-level rotation parameters. cos(mixing_angle) = (j + 2b) / omega and
/// sin(mixing_angle) = -sqrt3 j / omega.
struct RabiParams {
  double omega = 0.0;
  double mixing_angle = 0.0;
};

/// Amplitudes on |111> and |W>, global phase exp(-i (j - b) t) dropped.
struct SubspaceAmplitudes {
  Complex c111{};
  Complex c_w{};
};

struct WSchedule {
  double b = 0.0;
  double t_star = 0.0;
};

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<Complex> amp111;
  std::vector<Complex> amp_w;
  std::vector<double> w_fidelity;
};

/// [[-3b, sqrt3 j], [sqrt3 j, 2j + b]] in the ordered basis (|111>, |W>).
ComplexMatrix subspace_hamiltonian(double j, double b);

/// Throws FrozenDynamics when omega = 0 (j = 0 and b = 0).
RabiParams rabi_params(double j, double b);

SubspaceAmplitudes evolve_closed(double j, double b, double t);

/// propagator(hamiltonian(p), t) applied to state0.
StateVector evolve_full(const ModelParams& p, std::span<const Complex> state0, double t);

/// b = -j/2 and t* = pi / (2 sqrt3 |j|). Throws ZeroCoupling for j = 0.
WSchedule w_schedule(double j);

/// Uniform grid of `steps` samples on [0, t_max] using the closed form.
/// Throws InvalidArgument for steps < 2 or t_max <= 0.
EvolutionTrace trace_evolution(double j, double b, double t_max, std::size_t steps);

/// Populations of an 8-amplitude state on |111>, |W> and the remainder.
struct SubspacePopulations {
  double p111 = 0.0;
  double p_w = 0.0;
  double leakage = 0.0;  // 1 - p111 - p_w
};

SubspacePopulations subspace_populations(std::span<const Complex> state);

/// Full-space evolution at many times from a single diagonalization.
class Evolver {
 public:
  explicit Evolver(const ModelParams& p);

  StateVector evolve(std::span<const Complex> state0, double t) const;
  std::size_t dim() const noexcept { return eig_.eigenvalues.size(); }

 private:
  EigenDecomposition eig_;
};

}  // namespace tim::dynamics
