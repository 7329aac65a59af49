#include "tim/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "tim/error.hpp"
#include "tim/spectrum3.hpp"

namespace tim {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double concurrence_from_magnitudes(double m1, double m2) {
  return 2.0 * m2 / 3.0 * std::abs(m2 - kSqrt3 * m1);
}

double squeezing_from_magnitudes(double m1, double m2) {
  return 1.0 + 4.0 / 3.0 * m2 * (m2 - kSqrt3 * m1);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "density matrix must be square and nonempty");
  }
  if (!m_.is_hermitian(1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "density matrix trace differs from 1");
  }
  if (!m_.is_psd(-1e-10)) {
    throw Error(ErrorCode::InvalidArgument, "density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> state) {
  return DensityMatrix(ComplexMatrix::outer(state));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int n, std::span<const int> keep) {
  if (n < 1 || n > kMaxQubits || rho.dim() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::BadSubset, "partial_trace: rho is not a 2^n matrix");
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || kept.front() < 1 || kept.back() > n ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw Error(ErrorCode::BadSubset, "partial_trace: keep must be a nonempty subset of 1..n");
  }
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Scatter the bits of a sub-register configuration into full-register positions.
  auto scatter = [n](std::size_t config, const std::vector<int>& sites) {
    std::size_t full = 0;
    const std::size_t m = sites.size();
    for (std::size_t k = 0; k < m; ++k) {
      if ((config >> (m - 1 - k)) & 1U) full |= std::size_t{1} << (n - sites[k]);
    }
    return full;
  };

  const std::size_t kept_dim = std::size_t{1} << kept.size();
  const std::size_t traced_dim = std::size_t{1} << traced.size();
  const ComplexMatrix& full = rho.matrix();
  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t t = 0; t < traced_dim; ++t) {
    const std::size_t tbits = scatter(t, traced);
    for (std::size_t r = 0; r < kept_dim; ++r) {
      const std::size_t row = tbits | scatter(r, kept);
      for (std::size_t c = 0; c < kept_dim; ++c) {
        out(r, c) += full(row, tbits | scatter(c, kept));
      }
    }
  }
  return DensityMatrix(std::move(out));
}

XStateElements x_elements(const DensityMatrix& rho2) {
  if (rho2.dim() != 4) throw Error(ErrorCode::WrongSize, "x_elements needs a 4x4 matrix");
  const ComplexMatrix& m = rho2.matrix();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const bool on_x = r == c || r + c == 3;
      if (!on_x && std::abs(m(r, c)) > 1e-10) {
        throw Error(ErrorCode::NotXForm, "entry (" + std::to_string(r) + "," +
                                             std::to_string(c) + ") is outside the X pattern");
      }
    }
  }
  if (std::abs(m(1, 1) - m(2, 2)) > 1e-10) {
    throw Error(ErrorCode::NotSymmetricMiddle, "middle diagonal entries differ");
  }
  XStateElements e;
  e.u = m(0, 0).real();
  e.v = m(3, 3).real();
  e.w = 0.5 * (m(1, 1).real() + m(2, 2).real());
  e.y = m(0, 3);
  e.z = m(1, 2);
  return e;
}

double concurrence_x(const XStateElements& e) {
  const double c = 2.0 * std::max({0.0, std::abs(e.z) - std::sqrt(e.u * e.v), std::abs(e.y) - e.w});
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_wootters(const DensityMatrix& rho2) {
  if (rho2.dim() != 4) {
    throw Error(ErrorCode::WrongSize, "concurrence_wootters needs a 4x4 matrix");
  }
  const ComplexMatrix& rho = rho2.matrix();
  const ComplexMatrix flip = kron(pauli::y(), pauli::y());
  const ComplexMatrix rho_tilde = flip * rho.conj() * flip;
  const ComplexMatrix root = sqrt_psd(rho);
  ComplexMatrix r = root * rho_tilde * root;
  // Restore exact Hermiticity lost to round-off in the triple product.
  r = 0.5 * (r + r.adjoint());

  // Unit trace bounds |R| by 1, so round-off in its spectrum is absolute, about dim*eps.
  // Below that floor the eigenvalue is a zero; taking its square root would turn
  // 1e-18 noise into a 1e-9 concurrence.
  constexpr double kFloor = 4.0 * 4.0 * std::numeric_limits<double>::epsilon();
  std::vector<double> lambda = eig_hermitian(r).eigenvalues;
  for (double& mu : lambda) mu = mu <= kFloor ? 0.0 : std::sqrt(mu);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

MixingAngles MixingAngles::normalized() const {
  const double pi = std::numbers::pi;
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  if (t >= pi) t = 0.0;
  double f = std::fmod(phi, 2.0 * pi);
  if (f < 0.0) f += 2.0 * pi;
  if (f >= 2.0 * pi) f = 0.0;
  return {t, f};
}

StateVector mixing_state(const MixingAngles& m) {
  StateVector v = spectrum3::w_state();
  const Complex a2 = std::polar(std::sin(m.theta), m.phi);
  for (auto& x : v) x *= a2;
  v[0b111] = std::cos(m.theta);
  return v;
}

double concurrence_mixing(const MixingAngles& m) {
  return concurrence_from_magnitudes(std::abs(std::cos(m.theta)), std::abs(std::sin(m.theta)));
}

double squeezing_mixing(const MixingAngles& m) {
  return squeezing_from_magnitudes(std::abs(std::cos(m.theta)), std::abs(std::sin(m.theta)));
}

ComplexMatrix collective_spin(Axis axis) {
  const ComplexMatrix& s = axis == Axis::X   ? pauli::x()
                           : axis == Axis::Y ? pauli::y()
                                             : pauli::z();
  ComplexMatrix total(8, 8);
  for (int site = 1; site <= 3; ++site) total += site_operator(3, site, s);
  total *= 0.5;
  return total;
}

double squeezing_parity(std::span<const Complex> state) {
  if (state.size() != 8) throw Error(ErrorCode::WrongSize, "squeezing_parity needs 3 qubits");
  if (std::abs(norm(state) - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "squeezing_parity needs a normalized state");
  }
  const double parity = inner(state, parity_op(3, Axis::Z) * state).real();
  if (std::abs(parity) < 1.0 - 1e-10) {
    throw Error(ErrorCode::NoDefiniteParity, "state is not a Sigma_z eigenstate");
  }
  const ComplexMatrix sz = collective_spin(Axis::Z);
  const ComplexMatrix s_minus = collective_spin(Axis::X) - Complex(0.0, 1.0) * collective_spin(Axis::Y);

  const StateVector sz_psi = sz * state;
  const double sz2 = inner(sz_psi, sz_psi).real();
  const Complex sm2 = inner(state, s_minus * (s_minus * state));
  return 2.5 - 2.0 / 3.0 * (sz2 + std::abs(sm2));
}

RelationCheck relation_check(const MixingAngles& m) {
  RelationCheck r;
  r.concurrence = concurrence_mixing(m);
  r.xi_squared = squeezing_mixing(m);
  r.residual = std::abs(r.concurrence - std::abs(r.xi_squared - 1.0) / 2.0);
  return r;
}

EntanglementReport ground_report(const ModelParams& p) {
  const spectrum3::GroundAmplitudes a = spectrum3::ground_amplitudes(p);
  const double m1 = std::abs(a.a1);
  const double m2 = std::abs(a.a2);
  return {concurrence_from_magnitudes(m1, m2), squeezing_from_magnitudes(m1, m2)};
}

}  // namespace tim
