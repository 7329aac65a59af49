#include "tim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tim/error.hpp"

namespace tim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  const std::size_t n = ket.size();
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ket[r] * std::conj(ket[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m = *this;
  for (auto& x : m.data_) x = std::conj(x);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * (*this), identity(rows_)) <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(1e-12)) return false;
  if (rows_ == 0) return true;
  return eig_hermitian(*this).eigenvalues.front() >= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in +");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in -");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in *");
  }
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
    }
  }
  return m;
}

StateVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw Error(ErrorCode::InvalidArgument, "matrix/vector shape mismatch");
  }
  StateVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in max_abs_diff");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          m(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return m;
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) s += std::norm(a(r, c));
    }
  }
  return std::sqrt(s);
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

// Applies A <- G^H A G and V <- V G for the unitary G that acts on the (p, q)
// plane as [[c, s], [-s conj(e), c conj(e)]], where e = A(p,q)/|A(p,q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  const Complex e = apq / g;
  const Complex ec = std::conj(e);

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const double app = a(p, p).real() - t * g;
  const double aqq = a(q, q).real() + t * g;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * ec * akq;
    a(k, q) = s * akp + c * ec * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * e * aqk;
    a(q, k) = s * apk + c * e * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app;
  a(q, q) = aqq;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * ec * vkq;
    v(k, q) = s * vkp + c * ec * vkq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& input) {
  if (!input.is_square()) {
    throw Error(ErrorCode::NotHermitian, "eig_hermitian: matrix is not square");
  }
  const std::size_t n = input.rows();
  if (n > kMaxEigenDimension) {
    throw Error(ErrorCode::DimensionTooLarge,
                "eig_hermitian: dimension " + std::to_string(n) + " exceeds 1024");
  }
  if (!input.is_hermitian(1e-12 * std::max(1.0, input.max_abs()))) {
    throw Error(ErrorCode::NotHermitian, "eig_hermitian: matrix is not Hermitian");
  }

  // Work on the exactly Hermitian part so round-off asymmetry never feeds
  // the rotations.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = input(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex h = 0.5 * (input(r, c) + std::conj(input(c, r)));
      a(r, c) = h;
      a(c, r) = std::conj(h);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = 1e-14 * std::max(1.0, frobenius(a));
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Elements below the resolution of both diagonal entries are dropped.
        const double dp = std::abs(a(p, p).real());
        const double dq = std::abs(a(q, q).real());
        if (sweep > 3 && dp + 100.0 * g == dp && dq + 100.0 * g == dq) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > threshold) {
    throw Error(ErrorCode::NoConvergence, "eig_hermitian: no convergence after 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

namespace {

ComplexMatrix spectral_function(const EigenDecomposition& eig, auto&& f) {
  const ComplexMatrix& vecs = eig.eigenvectors;
  const std::size_t n = vecs.rows();
  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = f(eig.eigenvalues[k]);
    if (fk == Complex{}) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = vecs(r, k) * fk;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += vr * std::conj(vecs(c, k));
    }
  }
  return m;
}

}  // namespace

ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
  if (!a.is_hermitian(1e-12)) {
    throw Error(ErrorCode::NotHermitian, "sqrt_psd: matrix is not Hermitian");
  }
  const EigenDecomposition eig = eig_hermitian(a);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -1e-10) {
    throw Error(ErrorCode::NotPSD, "sqrt_psd: eigenvalue " +
                                       std::to_string(eig.eigenvalues.front()) +
                                       " below -1e-10");
  }
  // Eigenvalues within round-off of zero are treated as exact zeros; their
  // square roots would otherwise inject O(sqrt(eps)) noise into the null space.
  double scale = 0.0;
  for (double lambda : eig.eigenvalues) scale = std::max(scale, std::abs(lambda));
  const double floor = static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() * scale;
  return spectral_function(eig, [floor](double lambda) {
    return Complex(lambda <= floor ? 0.0 : std::sqrt(lambda), 0.0);
  });
}

ComplexMatrix propagator(const EigenDecomposition& eig, double t) {
  return spectral_function(eig, [t](double lambda) { return std::polar(1.0, -lambda * t); });
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
  if (!h.is_hermitian(1e-12)) {
    throw Error(ErrorCode::NotHermitian, "propagator: generator is not Hermitian");
  }
  return propagator(eig_hermitian(h), t);
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
  if (bra.size() != ket.size()) {
    throw Error(ErrorCode::InvalidArgument, "inner: length mismatch");
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double fidelity(std::span<const Complex> a, std::span<const Complex> b) {
  return std::norm(inner(a, b));
}

}  // namespace tim
