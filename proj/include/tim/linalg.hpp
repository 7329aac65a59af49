#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tim {

using Complex = std::complex<double>;

/// Dense complex state vector; amplitudes indexed by computational basis
/// state with qubit 1 as the most significant bit.
using StateVector = std::vector<Complex>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix outer(std::span<const Complex> ket);  // |ket><ket|

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  Complex trace() const;

  /// Largest entry magnitude.
  double max_abs() const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;
  /// True when every eigenvalue is >= tol (pass a negative tol to allow
  /// round-off below zero). Requires a Hermitian matrix.
  bool is_psd(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
StateVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

inline constexpr std::size_t kMaxEigenDimension = 1024;
inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Throws NotHermitian if `a` deviates from its adjoint by more than 1e-12,
/// DimensionTooLarge beyond 1024, NoConvergence after 100 sweeps.
EigenDecomposition eig_hermitian(const ComplexMatrix& a);

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything lower is NotPSD.
ComplexMatrix sqrt_psd(const ComplexMatrix& a);

/// exp(-i h t) via the spectral decomposition of h.
ComplexMatrix propagator(const ComplexMatrix& h, double t);

/// exp(-i h t) assembled from a precomputed decomposition of h.
ComplexMatrix propagator(const EigenDecomposition& eig, double t);

// Vector helpers.
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);  // <bra|ket>
double norm(std::span<const Complex> v);
/// |<a|b>|^2
double fidelity(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace tim
