#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tim/linalg.hpp"
#include "tim/model.hpp"

// Closed-form analytics for the three-qubit ring.
namespace tim::spectrum3 {

/// Eight closed-form energies e[0..7]; e[4] == e[5] and e[6] == e[7].
struct Spectrum3 {
  std::array<double, 8> e{};

  /// The same eight values in ascending order.
  std::array<double, 8> sorted() const;
};

/// Ground state a1 |111> + a2 |W> amplitudes (real for j, b > 0).
struct GroundAmplitudes {
  double a1 = 0.0;
  double a2 = 0.0;
};

/// |psi_0> ... |psi_7>: translation eigenstates grouped by excitation number.
/// psi[3] is the W state.
struct MomentumBasis {
  std::array<StateVector, 8> psi;
};

/// exp(i 2 pi / 3)
Complex omega();

/// Throws WrongSize unless p.n == 3.
Spectrum3 eigenvalues(const ModelParams& p);

/// Throws WrongSize unless p.n == 3, OutOfRegion unless j > 0 and b > 0.
GroundAmplitudes ground_amplitudes(const ModelParams& p);

/// a1 |111> + (a2 / sqrt 3)(|100> + |010> + |001>).
StateVector ground_state(const ModelParams& p);

MomentumBasis momentum_basis();

/// (|100> + |010> + |001>) / sqrt 3
StateVector w_state();

/// Matrix of H in the momentum basis, <psi_r|H|psi_c>.
ComplexMatrix momentum_matrix(const ModelParams& p);

/// Partition of momentum-basis indices into H-invariant blocks, obtained by
/// grouping nonzero couplings of momentum_matrix (threshold 1e-12). Blocks
/// are ordered by their smallest index; indices within a block ascend.
std::vector<std::vector<std::size_t>> block_structure(const ModelParams& p);

}  // namespace tim::spectrum3
