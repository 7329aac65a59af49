#include "tim/spectrum3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tim/error.hpp"

namespace tim::spectrum3 {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void require_three(const ModelParams& p) {
  p.validate();
  if (p.n != 3) throw Error(ErrorCode::WrongSize, "closed forms exist only for n = 3");
}

// Basis indices with qubit 1 as the most significant bit.
constexpr std::size_t k000 = 0b000, k001 = 0b001, k010 = 0b010, k011 = 0b011;
constexpr std::size_t k100 = 0b100, k101 = 0b101, k110 = 0b110, k111 = 0b111;

StateVector triple(std::size_t i0, std::size_t i1, std::size_t i2, Complex c1, Complex c2) {
  StateVector v(8);
  const double s = 1.0 / kSqrt3;
  v[i0] = s;
  v[i1] = s * c1;
  v[i2] = s * c2;
  return v;
}

}  // namespace

std::array<double, 8> Spectrum3::sorted() const {
  std::array<double, 8> s = e;
  std::sort(s.begin(), s.end());
  return s;
}

Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

Spectrum3 eigenvalues(const ModelParams& p) {
  require_three(p);
  const double j = p.j;
  const double b = p.b;
  const double root_plus = std::sqrt(3.0 * j * j + (j + 2.0 * b) * (j + 2.0 * b));
  const double root_minus = std::sqrt(3.0 * j * j + (j - 2.0 * b) * (j - 2.0 * b));
  Spectrum3 s;
  s.e[0] = j - b - root_plus;
  s.e[1] = j - b + root_plus;
  s.e[2] = j + b - root_minus;
  s.e[3] = j + b + root_minus;
  s.e[4] = s.e[5] = b - j;
  s.e[6] = s.e[7] = -b - j;
  return s;
}

GroundAmplitudes ground_amplitudes(const ModelParams& p) {
  require_three(p);
  if (!(p.j > 0.0) || !(p.b > 0.0)) {
    throw Error(ErrorCode::OutOfRegion, "ground-state closed form needs j > 0 and b > 0");
  }
  const double j = p.j;
  const double k = j + 2.0 * p.b;
  const double root = std::sqrt(3.0 * j * j + k * k);
  // E0 + 3b = k - root, rewritten without the cancellation at large b.
  const double shift = -3.0 * j * j / (k + root);
  const double norm = std::hypot(kSqrt3 * j, shift);
  return {kSqrt3 * j / norm, shift / norm};
}

StateVector ground_state(const ModelParams& p) {
  const GroundAmplitudes a = ground_amplitudes(p);
  StateVector v(8);
  v[k111] = a.a1;
  const double w = a.a2 / kSqrt3;
  v[k100] = w;
  v[k010] = w;
  v[k001] = w;
  return v;
}

MomentumBasis momentum_basis() {
  const Complex w = omega();
  const Complex w2 = w * w;
  MomentumBasis m;
  m.psi[0] = StateVector(8);
  m.psi[0][k000] = 1.0;
  m.psi[1] = triple(k100, k010, k001, w2, w);
  m.psi[2] = triple(k100, k010, k001, w, w2);
  m.psi[3] = triple(k100, k010, k001, 1.0, 1.0);
  m.psi[4] = triple(k011, k101, k110, w2, w);
  m.psi[5] = triple(k011, k101, k110, w, w2);
  m.psi[6] = triple(k011, k101, k110, 1.0, 1.0);
  m.psi[7] = StateVector(8);
  m.psi[7][k111] = 1.0;
  return m;
}

StateVector w_state() { return momentum_basis().psi[3]; }

ComplexMatrix momentum_matrix(const ModelParams& p) {
  require_three(p);
  const ComplexMatrix h = hamiltonian(p);
  const MomentumBasis basis = momentum_basis();
  ComplexMatrix m(8, 8);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = inner(basis.psi[r], h * basis.psi[c]);
  }
  return m;
}

std::vector<std::vector<std::size_t>> block_structure(const ModelParams& p) {
  const ComplexMatrix m = momentum_matrix(p);
  std::array<std::size_t, 8> parent{};
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = r + 1; c < 8; ++c) {
      if (std::abs(m(r, c)) > 1e-12) parent[find(c)] = find(r);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::array<int, 8> slot;
  slot.fill(-1);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return blocks;
}

}  // namespace tim::spectrum3
