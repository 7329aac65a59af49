#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tim/entangle.hpp"
#include "tim/error.hpp"
#include "tim/spectrum3.hpp"

using namespace tim;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

const std::vector<int> kFirstPair{1, 2};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tim::Error");
  return ErrorCode::InvalidArgument;
}

DensityMatrix reduced_pair(std::span<const Complex> state) {
  return partial_trace(DensityMatrix::from_pure(state), 3, kFirstPair);
}

DensityMatrix bell() {
  const double h = 1.0 / std::numbers::sqrt2;
  return DensityMatrix::from_pure(StateVector{h, 0.0, 0.0, h});
}

}  // namespace

TEST_CASE("density matrix validation") {
  CHECK(code_of([] { DensityMatrix(ComplexMatrix::identity(2)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { DensityMatrix(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5})); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("partial trace of the mixing state reproduces the X-state elements") {
  for (double theta : {0.2, 1.0, 2.0, 2.9}) {
    for (double phi : {0.0, 0.8, 4.0}) {
      const Complex a1 = std::cos(theta);
      const Complex a2 = std::polar(std::sin(theta), phi);
      const XStateElements e = x_elements(reduced_pair(mixing_state({theta, phi})));
      const double a2sq = std::norm(a2);
      CHECK(std::abs(e.y - a2 * std::conj(a1) / kSqrt3) <= 1e-14);
      CHECK(std::abs(e.z - a2sq / 3.0) <= 1e-14);
      CHECK(std::abs(e.w - a2sq / 3.0) <= 1e-14);
      CHECK(std::abs(e.u - a2sq / 3.0) <= 1e-14);
      CHECK(std::abs(e.v - std::norm(a1)) <= 1e-14);
    }
  }
}

TEST_CASE("partial trace of a product state returns the factor") {
  std::mt19937_64 rng(31);
  const StateVector a = oracle::random_state(2, rng);
  const StateVector b = oracle::random_state(4, rng);
  const ComplexMatrix ra = ComplexMatrix::outer(a);
  const ComplexMatrix rho = kron(ra, ComplexMatrix::outer(b));
  const std::vector<int> keep{1};
  CHECK(max_abs_diff(partial_trace(DensityMatrix(rho), 3, keep).matrix(), ra) <= 1e-15);
  const std::vector<int> keep23{3, 2};
  CHECK(max_abs_diff(partial_trace(DensityMatrix(rho), 3, keep23).matrix(),
                     ComplexMatrix::outer(b)) <= 1e-15);
}

TEST_CASE("partial trace of GHZ down to one qubit") {
  const double h = 1.0 / std::numbers::sqrt2;
  StateVector ghz(8);
  ghz[0] = h;
  ghz[7] = h;
  const std::vector<int> keep{1};
  const auto r = partial_trace(DensityMatrix::from_pure(ghz), 3, keep);
  CHECK(max_abs_diff(r.matrix(), ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5})) <= 1e-15);
}

TEST_CASE("partial trace keeps middle qubits in order") {
  // |0 1 0 1> keeping {2, 4} must give |11>; keeping {1, 2} gives |01>.
  const DensityMatrix rho = DensityMatrix::from_pure(basis_state(4, 0b0101));
  const std::vector<int> keep24{2, 4};
  CHECK(partial_trace(rho, 4, keep24).matrix()(3, 3) == Complex(1.0));
  const std::vector<int> keep12{1, 2};
  CHECK(partial_trace(rho, 4, keep12).matrix()(1, 1) == Complex(1.0));
}

TEST_CASE("partial trace rejects bad subsets") {
  const DensityMatrix rho = DensityMatrix::from_pure(basis_state(3, 0));
  for (const std::vector<int>& keep :
       {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{4}, std::vector<int>{1, 1}}) {
    CHECK(code_of([&] { (void)partial_trace(rho, 3, keep); }) == ErrorCode::BadSubset);
  }
  CHECK(code_of([&] { (void)partial_trace(rho, 4, kFirstPair); }) == ErrorCode::BadSubset);
}

TEST_CASE("x_elements fixed cases") {
  const XStateElements e = x_elements(bell());
  CHECK(e.u == doctest::Approx(0.5));
  CHECK(e.v == doctest::Approx(0.5));
  CHECK(std::abs(e.y - 0.5) <= 1e-15);
  CHECK(e.w == 0.0);
  CHECK(e.z == Complex{});

  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= 0.25;
  const XStateElements m = x_elements(DensityMatrix(mixed));
  CHECK(m.u == 0.25);
  CHECK(m.v == 0.25);
  CHECK(m.w == 0.25);
  CHECK(m.y == Complex{});
  CHECK(m.z == Complex{});

  const XStateElements w = x_elements(reduced_pair(spectrum3::w_state()));
  CHECK(w.u == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(w.w == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(w.z - 1.0 / 3.0) <= 1e-15);
  CHECK(w.v == 0.0);
  CHECK(w.y == Complex{});
}

TEST_CASE("x_elements rejects non-X shapes") {
  std::mt19937_64 rng(41);
  const auto generic = DensityMatrix::from_pure(oracle::random_state(4, rng));
  CHECK(code_of([&] { (void)x_elements(generic); }) == ErrorCode::NotXForm);
  const auto asym = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.4, 0.3, 0.2, 0.1}));
  CHECK(code_of([&] { (void)x_elements(asym); }) == ErrorCode::NotSymmetricMiddle);
  const auto small = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5}));
  CHECK(code_of([&] { (void)x_elements(small); }) == ErrorCode::WrongSize);
}

TEST_CASE("concurrence_x fixed cases") {
  CHECK(concurrence_x({0.5, 0.5, 0.0, 0.5, 0.0}) == doctest::Approx(1.0));
  CHECK(concurrence_x({0.25, 0.25, 0.25, 0.0, 0.0}) == 0.0);
  CHECK(concurrence_x({1.0 / 3.0, 0.0, 1.0 / 3.0, 0.0, 1.0 / 3.0}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("concurrence_wootters fixed cases") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const StateVector a = oracle::random_state(2, rng);
    const StateVector b = oracle::random_state(2, rng);
    StateVector prod(4);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) prod[2 * r + c] = a[r] * b[c];
    }
    CHECK(concurrence_wootters(DensityMatrix::from_pure(prod)) <= 1e-12);
  }
  CHECK(concurrence_wootters(bell()) == doctest::Approx(1.0).epsilon(1e-12));

  const DensityMatrix ground = reduced_pair(spectrum3::ground_state({3, 1.0, 1.0}));
  CHECK(std::abs(concurrence_wootters(ground) - concurrence_x(x_elements(ground))) <= 1e-9);
}

TEST_CASE("concurrence_wootters agrees with the X formula on random X-states") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const oracle::XState x = oracle::random_x_state(rng);
    const double generic = concurrence_wootters(DensityMatrix(x.matrix()));
    const double shortcut = concurrence_x({x.u, x.v, x.w, x.y, x.z});
    CHECK(std::abs(generic - shortcut) <= 1e-9);
  }
}

TEST_CASE("mixing state fixed cases") {
  CHECK(mixing_state({0.0, 1.3}) == basis_state(3, 0b111));
  const StateVector w = mixing_state({kPi / 2.0, 0.7});
  CHECK(fidelity(w, spectrum3::w_state()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(inner(spectrum3::w_state(), w) - std::polar(1.0, 0.7)) <= 1e-15);
  const StateVector s = mixing_state({kPi / 3.0, 0.0});
  CHECK(s[0b111].real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s[0b100].real() == doctest::Approx(kSqrt3 / 2.0 / kSqrt3).epsilon(1e-15));
  CHECK(std::abs(norm(s) - 1.0) <= 1e-15);
}

TEST_CASE("concurrence_mixing landmarks") {
  CHECK(concurrence_mixing({kPi / 3.0, 0.0}) <= 1e-15);
  CHECK(concurrence_mixing({2.0 * kPi / 3.0, 0.0}) <= 1e-15);
  CHECK(std::abs(concurrence_mixing({kPi / 2.0, 0.0}) - 2.0 / 3.0) <= 1e-15);
  // a1 = sqrt3/2, |a2| = 1/2
  CHECK(std::abs(concurrence_mixing({-kPi / 6.0, 0.0}) - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("squeezing_mixing landmarks") {
  CHECK(std::abs(squeezing_mixing({kPi / 3.0, 0.0}) - 1.0) <= 1e-15);
  CHECK(std::abs(squeezing_mixing({kPi / 2.0, 0.0}) - 7.0 / 3.0) <= 1e-15);
  CHECK(std::abs(squeezing_mixing({kPi / 6.0, 0.0}) - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("squeezing_parity on |111> and W") {
  CHECK(std::abs(squeezing_parity(basis_state(3, 0b111)) - 1.0) <= 1e-14);
  CHECK(std::abs(squeezing_parity(spectrum3::w_state()) - 7.0 / 3.0) <= 1e-14);
}

TEST_CASE("squeezing_parity equals the closed form over theta and phi") {
  for (int a = 0; a < 40; ++a) {
    for (int f = 0; f < 8; ++f) {
      const MixingAngles m{kPi * a / 40.0, 2.0 * kPi * f / 8.0};
      CHECK(std::abs(squeezing_parity(mixing_state(m)) - squeezing_mixing(m)) <= 1e-12);
    }
  }
}

TEST_CASE("squeezing_parity preconditions") {
  StateVector mixed(8);
  mixed[0] = 1.0 / std::numbers::sqrt2;
  mixed[1] = 1.0 / std::numbers::sqrt2;
  CHECK(code_of([&] { (void)squeezing_parity(mixed); }) == ErrorCode::NoDefiniteParity);
  StateVector unnormalized(8);
  unnormalized[7] = 2.0;
  CHECK(code_of([&] { (void)squeezing_parity(unnormalized); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)squeezing_parity(StateVector{1.0, 0.0}); }) == ErrorCode::WrongSize);
}

TEST_CASE("relation between concurrence and squeezing") {
  const RelationCheck w = relation_check({kPi / 2.0, 0.0});
  CHECK(w.concurrence == doctest::Approx(2.0 / 3.0));
  CHECK(w.xi_squared == doctest::Approx(7.0 / 3.0));
  CHECK(w.residual <= 1e-15);
  const RelationCheck zero = relation_check({0.0, 0.0});
  CHECK(zero.concurrence == 0.0);
  CHECK(zero.xi_squared == 1.0);
  CHECK(zero.residual == 0.0);

  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) worst = std::max(worst, relation_check({theta(rng), 0.0}).residual);
  CHECK(worst <= 1e-12);
}

TEST_CASE("mixing closed forms are phase independent and pi periodic") {
  for (int a = 0; a < 100; ++a) {
    const double theta = kPi * a / 100.0;
    const double c0 = concurrence_mixing({theta, 0.0});
    const double x0 = squeezing_mixing({theta, 0.0});
    for (int f = 1; f < 16; ++f) {
      CHECK(std::abs(concurrence_mixing({theta, 2.0 * kPi * f / 16.0}) - c0) <= 1e-12);
      CHECK(std::abs(squeezing_mixing({theta, 2.0 * kPi * f / 16.0}) - x0) <= 1e-12);
    }
    CHECK(std::abs(concurrence_mixing({theta + kPi, 0.0}) - c0) <= 1e-12);
    CHECK(std::abs(squeezing_mixing({theta + kPi, 0.0}) - x0) <= 1e-12);
  }
}

TEST_CASE("entanglement and squeezing regions in theta") {
  const double t1 = kPi / 3.0, t2 = 2.0 * kPi / 3.0;
  for (int i = 1; i < 3142; ++i) {
    const double theta = 1e-3 * i;
    if (std::abs(theta - t1) < 1e-6 || std::abs(theta - t2) < 1e-6) continue;
    const double c = concurrence_mixing({theta, 0.0});
    const double x = squeezing_mixing({theta, 0.0});
    if (theta < t1 || theta > t2) {
      CHECK((c > 0.0) == (x < 1.0));
    } else {
      CHECK(c > 0.0);
      CHECK(x > 1.0);
    }
  }
}

TEST_CASE("Wootters oracle agrees with the mixing closed form") {
  for (int a = 0; a < 60; ++a) {
    const MixingAngles m{kPi * a / 60.0, 0.37 * a};
    const double generic = concurrence_wootters(reduced_pair(mixing_state(m)));
    CHECK(std::abs(generic - concurrence_mixing(m)) <= 1e-9);
  }
}

TEST_CASE("MixingAngles normalization") {
  const MixingAngles m = MixingAngles{-kPi / 4.0, 7.0 * kPi}.normalized();
  CHECK(m.theta == doctest::Approx(3.0 * kPi / 4.0));
  CHECK(m.phi == doctest::Approx(kPi));
  const MixingAngles z = MixingAngles{kPi, 2.0 * kPi}.normalized();
  CHECK(z.theta >= 0.0);
  CHECK(z.theta < kPi);
  CHECK(z.phi >= 0.0);
  CHECK(z.phi < 2.0 * kPi);
}

TEST_CASE("ground report limits and relation") {
  const EntanglementReport small = ground_report({3, 1.0, 1e-6});
  CHECK(std::abs(small.concurrence - 1.0 / 3.0) <= 1e-5);
  CHECK(std::abs(small.xi_squared - 1.0 / 3.0) <= 1e-5);
  const EntanglementReport large = ground_report({3, 1.0, 1e3});
  CHECK(large.concurrence <= 1e-2);
  CHECK(std::abs(large.xi_squared - 1.0) <= 1e-2);
  const EntanglementReport one = ground_report({3, 1.0, 1.0});
  CHECK(std::abs(one.xi_squared - (1.0 - 2.0 * one.concurrence)) <= 1e-12);
  CHECK(code_of([] { (void)ground_report({3, 1.0, 0.0}); }) == ErrorCode::OutOfRegion);
}

TEST_CASE("ground report is monotone in the field") {
  double prev_c = 2.0, prev_x = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double b = 0.01 + (10.0 - 0.01) * i / 999.0;
    const EntanglementReport r = ground_report({3, 1.0, b});
    CHECK(r.concurrence < prev_c);
    CHECK(r.xi_squared > prev_x);
    CHECK(r.xi_squared <= 1.0 + 1e-12);
    prev_c = r.concurrence;
    prev_x = r.xi_squared;
  }
}
