#pragma once

#include <cstddef>

#include "tim/linalg.hpp"

namespace tim {

inline constexpr int kMinQubits = 3;
inline constexpr int kMaxQubits = 10;

/// Ring of n qubits with nearest-neighbour sigma_x sigma_x exchange j and a
/// transverse field b along z. Signs of j and b are unconstrained.
struct ModelParams {
  int n = 3;
  double j = 1.0;
  double b = 1.0;

  /// Throws InvalidArgument for n < 3 or non-finite j, b; DimensionTooLarge
  /// for n > 10.
  void validate() const;
};

enum class Axis { X, Y, Z };

/// Single-site operator `op` placed at `site` (1-based, site 1 = most
/// significant tensor factor) in an n-qubit register.
ComplexMatrix site_operator(int n, int site, const ComplexMatrix& op);

/// H = j * sum_i sx_i sx_{i+1} + b * sum_i sz_i with site n+1 identified with 1.
ComplexMatrix hamiltonian(const ModelParams& p);

/// Tensor product of the chosen Pauli matrix over all n sites.
ComplexMatrix parity_op(int n, Axis axis);

/// Permutation T |m1, m2, ..., mn> = |mn, m1, ..., m(n-1)>.
ComplexMatrix translation_op(int n);

/// Product of swaps S(k, n-k+1), k = 1..floor(n/2): the ring reflection.
ComplexMatrix reflection_op(int n);

struct SymmetryReport {
  double commutator_norm_parity = 0.0;       // |[H, Sigma_z]|max
  double commutator_norm_translation = 0.0;  // |[H, T]|max
  double commutator_norm_reflection = 0.0;   // |[H, R]|max
  double field_flip_norm = 0.0;              // |Sigma_x H(j,b) Sigma_x - H(j,-b)|max
};

SymmetryReport symmetry_report(const ModelParams& p);

/// Computational basis state |index> in a 2^n register.
StateVector basis_state(int n, std::size_t index);

}  // namespace tim
