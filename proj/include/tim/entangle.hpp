#pragma once

#include <span>
#include <vector>

#include "tim/linalg.hpp"
#include "tim/model.hpp"

namespace tim {

/// Hermitian, unit-trace, positive semidefinite matrix. Construction
/// validates: Hermitian within 1e-12, trace 1 within 1e-12, eigenvalues
/// >= -1e-10 (InvalidArgument otherwise).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix from_pure(std::span<const Complex> state);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Reduced state on the qubits in `keep` (1-based, any order; the result
/// lists them in ascending order). Throws BadSubset for an empty,
/// out-of-range or repeated selection, or when rho is not 2^n dimensional.
DensityMatrix partial_trace(const DensityMatrix& rho, int n, std::span<const int> keep);

/// Entries of a two-qubit X-shaped state in the basis {00, 01, 10, 11}:
///
///   | u 0 0 y |
///   | 0 w z 0 |
///   | 0 z w 0 |
///   | y 0 0 v |
struct XStateElements {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  Complex y{};  // <00|rho|11>
  Complex z{};  // <01|rho|10>
};

/// Throws WrongSize for dim != 4, NotXForm when an entry off the diagonal
/// and anti-diagonal exceeds 1e-10, NotSymmetricMiddle when <01|rho|01> and
/// <10|rho|10> differ by more than 1e-10.
XStateElements x_elements(const DensityMatrix& rho2);

/// 2 max(0, |z| - sqrt(uv), |y| - w), clamped to [0, 1].
double concurrence_x(const XStateElements& e);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where the l_i are the
/// eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)) in decreasing order and
/// rho~ = (sy x sy) rho* (sy x sy). Only Hermitian eigensolves are used.
double concurrence_wootters(const DensityMatrix& rho2);

/// a1 = cos(theta), a2 = sin(theta) exp(i phi).
struct MixingAngles {
  double theta = 0.0;
  double phi = 0.0;

  /// theta reduced to [0, pi), phi to [0, 2 pi).
  MixingAngles normalized() const;
};

/// cos(theta) |111> + sin(theta) e^{i phi} |W>
StateVector mixing_state(const MixingAngles& m);

/// (2|a2|/3) * | |a2| - sqrt3 |a1| |
double concurrence_mixing(const MixingAngles& m);

/// 1 + (4/3)|a2| (|a2| - sqrt3 |a1|)
double squeezing_mixing(const MixingAngles& m);

/// Collective spin operator S_axis = (s_1 + s_2 + s_3)/2 on three qubits.
ComplexMatrix collective_spin(Axis axis);

/// 5/2 - (2/3)(<Sz^2> + |<S-^2>|) evaluated with explicit operators.
/// The state must be normalized (InvalidArgument) and an eigenstate of
/// Sigma_z within 1e-10 (NoDefiniteParity); WrongSize unless dim == 8.
double squeezing_parity(std::span<const Complex> state);

struct RelationCheck {
  double concurrence = 0.0;
  double xi_squared = 0.0;
  double residual = 0.0;  // |C - |xi^2 - 1| / 2|
};

RelationCheck relation_check(const MixingAngles& m);

struct EntanglementReport {
  double concurrence = 0.0;
  double xi_squared = 0.0;
};

/// Concurrence and squeezing of the three-qubit ground state (j > 0, b > 0).
EntanglementReport ground_report(const ModelParams& p);

}  // namespace tim
