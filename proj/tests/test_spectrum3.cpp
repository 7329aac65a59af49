#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tim/error.hpp"
#include "tim/model.hpp"
#include "tim/spectrum3.hpp"

using namespace tim;
using namespace tim::spectrum3;

namespace {

StateVector numeric_ground(const ModelParams& p) {
  const auto eig = eig_hermitian(oracle::bitwise_hamiltonian(p.n, p.j, p.b));
  StateVector v(8);
  for (std::size_t r = 0; r < 8; ++r) v[r] = eig.eigenvectors(r, 0);
  return v;
}

}  // namespace

TEST_CASE("closed-form eigenvalues at J = B = 1") {
  const Spectrum3 s = eigenvalues({3, 1.0, 1.0});
  CHECK(std::abs(s.e[0] + 2.0 * std::sqrt(3.0)) <= 1e-15);
  CHECK(s.e[4] == 0.0);
  CHECK(s.e[5] == 0.0);
  CHECK(s.e[6] == -2.0);
  CHECK(s.e[7] == -2.0);
}

TEST_CASE("closed-form eigenvalues at B = 0 are degenerate at the bottom") {
  const Spectrum3 s = eigenvalues({3, 1.0, 0.0});
  CHECK(s.e[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.e[6] == -1.0);
  CHECK(s.e[7] == -1.0);
}

TEST_CASE("eigenvalues rejects other ring sizes") {
  try {
    (void)eigenvalues({4, 1.0, 1.0});
    FAIL("expected WrongSize");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongSize);
  }
}

TEST_CASE("closed-form spectrum equals the numeric spectrum over a grid") {
  double worst = 0.0;
  for (int a = 1; a <= 30; ++a) {
    for (int c = 1; c <= 30; ++c) {
      const ModelParams p{3, 0.1 * a, 0.1 * c};
      const auto closed = eigenvalues(p).sorted();
      const auto numeric = eig_hermitian(oracle::bitwise_hamiltonian(3, p.j, p.b)).eigenvalues;
      for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(closed[k] - numeric[k]));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("E0 is the lowest level for J, B > 0") {
  for (int a = 1; a <= 20; ++a) {
    for (int c = 1; c <= 20; ++c) {
      const Spectrum3 s = eigenvalues({3, 0.15 * a, 0.15 * c});
      CHECK(*std::min_element(s.e.begin(), s.e.end()) == s.e[0]);
      CHECK(s.e[4] == s.e[5]);
      CHECK(s.e[6] == s.e[7]);
    }
  }
}

TEST_CASE("ground amplitudes in the small-field limit") {
  const GroundAmplitudes a = ground_amplitudes({3, 1.0, 1e-9});
  CHECK(a.a1 == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-8));
  CHECK(a.a2 == doctest::Approx(-0.5).epsilon(1e-8));
}

TEST_CASE("ground state tends to |111> in the large-field limit") {
  // Eq. (9) puts a1 on |111>; for large b the shift E0 + 3b -> 0-, so a1 -> 1.
  const ModelParams p{3, 1.0, 1e6};
  const GroundAmplitudes a = ground_amplitudes(p);
  CHECK(a.a1 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(a.a2) <= 1e-6);
  CHECK(a.a2 < 0.0);
  CHECK(fidelity(ground_state(p), basis_state(3, 0b111)) >= 1.0 - 1e-10);
}

TEST_CASE("ground amplitudes are normalized with a1 > 0 and a2 < 0") {
  for (int a = 1; a <= 25; ++a) {
    for (int c = 1; c <= 25; ++c) {
      const GroundAmplitudes g = ground_amplitudes({3, 0.2 * a, 0.13 * c});
      CHECK(std::abs(g.a1 * g.a1 + g.a2 * g.a2 - 1.0) <= 1e-12);
      CHECK(g.a1 > 0.0);
      CHECK(g.a2 < 0.0);
    }
  }
}

TEST_CASE("ground amplitudes reject the region outside j, b > 0") {
  for (auto p : {ModelParams{3, 0.0, 1.0}, ModelParams{3, 1.0, 0.0}, ModelParams{3, -1.0, 1.0},
                 ModelParams{3, 1.0, -0.5}}) {
    try {
      (void)ground_amplitudes(p);
      FAIL("expected OutOfRegion");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OutOfRegion);
    }
  }
}

TEST_CASE("ground state matches the numeric ground vector at J = B = 1") {
  const ModelParams p{3, 1.0, 1.0};
  const StateVector g = ground_state(p);
  CHECK(std::abs(norm(g) - 1.0) <= 1e-15);
  CHECK(std::abs(std::abs(inner(g, numeric_ground(p))) - 1.0) <= 1e-10);
}

TEST_CASE("ground state is parity -1 and translation invariant") {
  for (double b : {0.01, 0.5, 3.0}) {
    const StateVector g = ground_state({3, 1.0, b});
    CHECK(inner(g, parity_op(3, Axis::Z) * g).real() == doctest::Approx(-1.0).epsilon(1e-14));
    const StateVector tg = translation_op(3) * g;
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(tg[i] - g[i]) <= 1e-15);
  }
}

TEST_CASE("momentum basis is orthonormal and diagonalizes T") {
  const MomentumBasis m = momentum_basis();
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t c = 0; c < 8; ++c) {
      const Complex g = inner(m.psi[a], m.psi[c]);
      CHECK(std::abs(g - Complex(a == c ? 1.0 : 0.0)) <= 1e-12);
    }
  }
  const Complex w = omega();
  const Complex expected[] = {1.0, w, w * w, 1.0, w, w * w, 1.0, 1.0};
  const ComplexMatrix t = translation_op(3);
  for (std::size_t a = 0; a < 8; ++a) {
    const StateVector tv = t * m.psi[a];
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(tv[i] - expected[a] * m.psi[a][i]) <= 1e-12);
  }
  CHECK(std::abs(w - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) == 0.0);
}

TEST_CASE("W-state diagonal element of H") {
  for (double j : {1.0, -0.4}) {
    for (double b : {2.0, -1.5}) {
      const ComplexMatrix m = momentum_matrix({3, j, b});
      CHECK(std::abs(m(3, 3) - (2.0 * j + b)) <= 1e-12);
    }
  }
}

TEST_CASE("momentum-basis couplings and block structure") {
  const double j = 0.9, b = 0.4;
  const ComplexMatrix m = momentum_matrix({3, j, b});
  // |111> couples to W, |000> couples to the symmetric two-excitation state.
  CHECK(std::abs(m(7, 3) - std::sqrt(3.0) * j) <= 1e-12);
  CHECK(std::abs(m(0, 6) - std::sqrt(3.0) * j) <= 1e-12);
  CHECK(std::abs(m(0, 3)) <= 1e-12);
  CHECK(std::abs(m(1, 2)) <= 1e-12);

  const auto blocks = block_structure({3, j, b});
  const std::vector<std::vector<std::size_t>> golden{{0, 6}, {1}, {2}, {3, 7}, {4}, {5}};
  CHECK(blocks == golden);
}

TEST_CASE("momentum matrix is block diagonal with blocks of size at most two") {
  for (int a = 1; a <= 10; ++a) {
    for (int c = 1; c <= 10; ++c) {
      const ModelParams p{3, 0.3 * a, 0.3 * c};
      const auto blocks = block_structure(p);
      const ComplexMatrix m = momentum_matrix(p);
      std::array<std::size_t, 8> owner{};
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        CHECK(blocks[k].size() <= 2);
        for (auto i : blocks[k]) owner[i] = k;
      }
      for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t q = 0; q < 8; ++q) {
          if (owner[r] != owner[q]) CHECK(std::abs(m(r, q)) <= 1e-12);
        }
      }
    }
  }
}
