#include "timlab.h"

#include <cmath>
#include <cstring>
#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "tim/dynamics.hpp"
#include "tim/entangle.hpp"
#include "tim/error.hpp"
#include "tim/linalg.hpp"
#include "tim/model.hpp"
#include "tim/spectrum3.hpp"

struct tim_model {
  tim::ModelParams params;
  tim::ComplexMatrix hamiltonian;
  tim::EigenDecomposition eig;
};

namespace {

static_assert(sizeof(tim_complex) == sizeof(tim::Complex));

thread_local std::string g_last_error;

tim_status map_code(tim::ErrorCode code) {
  switch (code) {
    case tim::ErrorCode::InvalidArgument: return TIM_ERR_INVALID_ARGUMENT;
    case tim::ErrorCode::NotHermitian: return TIM_ERR_NOT_HERMITIAN;
    case tim::ErrorCode::NoConvergence: return TIM_ERR_NO_CONVERGENCE;
    case tim::ErrorCode::NotPSD: return TIM_ERR_NOT_PSD;
    case tim::ErrorCode::DimensionTooLarge: return TIM_ERR_DIMENSION_TOO_LARGE;
    case tim::ErrorCode::WrongSize: return TIM_ERR_WRONG_SIZE;
    case tim::ErrorCode::OutOfRegion: return TIM_ERR_OUT_OF_REGION;
    case tim::ErrorCode::BadSubset: return TIM_ERR_BAD_SUBSET;
    case tim::ErrorCode::NotXForm: return TIM_ERR_NOT_X_FORM;
    case tim::ErrorCode::NotSymmetricMiddle: return TIM_ERR_NOT_SYMMETRIC_MIDDLE;
    case tim::ErrorCode::NoDefiniteParity: return TIM_ERR_NO_DEFINITE_PARITY;
    case tim::ErrorCode::FrozenDynamics: return TIM_ERR_FROZEN_DYNAMICS;
    case tim::ErrorCode::ZeroCoupling: return TIM_ERR_ZERO_COUPLING;
  }
  return TIM_ERR_INTERNAL;
}

tim_status fail(tim_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
tim_status guarded(F&& body) noexcept {
  try {
    body();
    return TIM_OK;
  } catch (const tim::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TIM_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw tim::Error(tim::ErrorCode::InvalidArgument, message);
}

void require_len(size_t got, size_t want, const char* what) {
  if (got != want) {
    throw tim::Error(tim::ErrorCode::WrongSize, std::string(what) + ": expected length " +
                                                     std::to_string(want) + ", got " +
                                                     std::to_string(got));
  }
}

std::span<const tim::Complex> as_span(const tim_complex* p, size_t n) {
  return {reinterpret_cast<const tim::Complex*>(p), n};
}

void copy_out(std::span<const tim::Complex> src, tim_complex* dst) {
  std::memcpy(dst, src.data(), src.size() * sizeof(tim_complex));
}

tim::ComplexMatrix read_matrix(const tim_complex* p, size_t dim) {
  auto s = as_span(p, dim * dim);
  return tim::ComplexMatrix(dim, dim, std::vector<tim::Complex>(s.begin(), s.end()));
}

}  // namespace

extern "C" {

TIMLAB_API const char* tim_version(void) { return TIMLAB_VERSION; }

TIMLAB_API const char* tim_status_name(tim_status status) {
  switch (status) {
    case TIM_OK: return "OK";
    case TIM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TIM_ERR_NOT_HERMITIAN: return "NotHermitian";
    case TIM_ERR_NO_CONVERGENCE: return "NoConvergence";
    case TIM_ERR_NOT_PSD: return "NotPSD";
    case TIM_ERR_DIMENSION_TOO_LARGE: return "DimensionTooLarge";
    case TIM_ERR_WRONG_SIZE: return "WrongSize";
    case TIM_ERR_OUT_OF_REGION: return "OutOfRegion";
    case TIM_ERR_BAD_SUBSET: return "BadSubset";
    case TIM_ERR_NOT_X_FORM: return "NotXForm";
    case TIM_ERR_NOT_SYMMETRIC_MIDDLE: return "NotSymmetricMiddle";
    case TIM_ERR_NO_DEFINITE_PARITY: return "NoDefiniteParity";
    case TIM_ERR_FROZEN_DYNAMICS: return "FrozenDynamics";
    case TIM_ERR_ZERO_COUPLING: return "ZeroCoupling";
    case TIM_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

TIMLAB_API const char* tim_last_error(void) { return g_last_error.c_str(); }

TIMLAB_API tim_status tim_model_create(int n, double j, double b, tim_model** out) {
  return guarded([&] {
    require(out != nullptr, "tim_model_create: out is null");
    *out = nullptr;
    auto model = std::make_unique<tim_model>();
    model->params = {n, j, b};
    model->hamiltonian = tim::hamiltonian(model->params);
    model->eig = tim::eig_hermitian(model->hamiltonian);
    *out = model.release();
  });
}

TIMLAB_API void tim_model_destroy(tim_model* model) { delete model; }

TIMLAB_API tim_status tim_model_dimension(const tim_model* model, size_t* dim) {
  return guarded([&] {
    require(model && dim, "tim_model_dimension: null argument");
    *dim = model->hamiltonian.rows();
  });
}

TIMLAB_API tim_status tim_model_hamiltonian(const tim_model* model, tim_complex* out, size_t len) {
  return guarded([&] {
    require(model && out, "tim_model_hamiltonian: null argument");
    require_len(len, model->hamiltonian.entries().size(), "tim_model_hamiltonian");
    copy_out(model->hamiltonian.entries(), out);
  });
}

TIMLAB_API tim_status tim_model_spectrum(const tim_model* model, double* out, size_t len) {
  return guarded([&] {
    require(model && out, "tim_model_spectrum: null argument");
    require_len(len, model->eig.eigenvalues.size(), "tim_model_spectrum");
    std::copy(model->eig.eigenvalues.begin(), model->eig.eigenvalues.end(), out);
  });
}

TIMLAB_API tim_status tim_model_ground_vector(const tim_model* model, tim_complex* out, size_t len) {
  return guarded([&] {
    require(model && out, "tim_model_ground_vector: null argument");
    const auto& v = model->eig.eigenvectors;
    require_len(len, v.rows(), "tim_model_ground_vector");
    for (size_t r = 0; r < v.rows(); ++r) out[r] = {v(r, 0).real(), v(r, 0).imag()};
  });
}

TIMLAB_API tim_status tim_model_evolve(const tim_model* model, const tim_complex* state0, double t,
                                       tim_complex* out, size_t len) {
  return guarded([&] {
    require(model && state0 && out, "tim_model_evolve: null argument");
    require(std::isfinite(t), "tim_model_evolve: t must be finite");
    require_len(len, model->hamiltonian.rows(), "tim_model_evolve");
    const tim::StateVector psi = tim::propagator(model->eig, t) * as_span(state0, len);
    copy_out(psi, out);
  });
}

TIMLAB_API tim_status tim_model_symmetry_report(const tim_model* model, tim_symmetry_report* out) {
  return guarded([&] {
    require(model && out, "tim_model_symmetry_report: null argument");
    const tim::SymmetryReport r = tim::symmetry_report(model->params);
    *out = {r.commutator_norm_parity, r.commutator_norm_translation, r.commutator_norm_reflection,
            r.field_flip_norm};
  });
}

TIMLAB_API tim_status tim_spectrum3(double j, double b, double out[8]) {
  return guarded([&] {
    require(out != nullptr, "tim_spectrum3: out is null");
    const auto s = tim::spectrum3::eigenvalues({3, j, b});
    std::copy(s.e.begin(), s.e.end(), out);
  });
}

TIMLAB_API tim_status tim_ground_report_compute(double j, double b, tim_ground_report* out) {
  return guarded([&] {
    require(out != nullptr, "tim_ground_report_compute: out is null");
    const tim::ModelParams p{3, j, b};
    const auto amps = tim::spectrum3::ground_amplitudes(p);
    const auto report = tim::ground_report(p);
    const tim::StateVector analytic = tim::spectrum3::ground_state(p);
    const auto eig = tim::eig_hermitian(tim::hamiltonian(p));
    tim::StateVector numeric(8);
    for (size_t r = 0; r < 8; ++r) numeric[r] = eig.eigenvectors(r, 0);
    out->a1 = amps.a1;
    out->a2 = amps.a2;
    out->concurrence = report.concurrence;
    out->xi_squared = report.xi_squared;
    out->fidelity = std::abs(tim::inner(analytic, numeric));
    out->relation_residual = std::abs(report.xi_squared - (1.0 - 2.0 * report.concurrence));
  });
}

TIMLAB_API tim_status tim_mixing_state(double theta, double phi, tim_complex out[8]) {
  return guarded([&] {
    require(out != nullptr, "tim_mixing_state: out is null");
    copy_out(tim::mixing_state({theta, phi}), out);
  });
}

TIMLAB_API tim_status tim_mixing_values(double theta, double* concurrence, double* xi_squared) {
  return guarded([&] {
    require(concurrence && xi_squared, "tim_mixing_values: null argument");
    require(std::isfinite(theta), "tim_mixing_values: theta must be finite");
    *concurrence = tim::concurrence_mixing({theta, 0.0});
    *xi_squared = tim::squeezing_mixing({theta, 0.0});
  });
}

TIMLAB_API tim_status tim_w_state(tim_complex out[8]) {
  return guarded([&] {
    require(out != nullptr, "tim_w_state: out is null");
    copy_out(tim::spectrum3::w_state(), out);
  });
}

TIMLAB_API tim_status tim_partial_trace(const tim_complex* rho, int n, const int* keep,
                                        size_t keep_len, tim_complex* out, size_t out_len) {
  return guarded([&] {
    require(rho && out && (keep || keep_len == 0), "tim_partial_trace: null argument");
    if (n < 1 || n > tim::kMaxQubits) {
      throw tim::Error(tim::ErrorCode::BadSubset, "tim_partial_trace: n out of range");
    }
    const size_t dim = size_t{1} << n;
    const tim::DensityMatrix full(read_matrix(rho, dim));
    const tim::DensityMatrix reduced =
        tim::partial_trace(full, n, std::span<const int>(keep, keep_len));
    require_len(out_len, reduced.matrix().entries().size(), "tim_partial_trace");
    copy_out(reduced.matrix().entries(), out);
  });
}

TIMLAB_API tim_status tim_concurrence_x(const tim_complex rho2[16], double* out) {
  return guarded([&] {
    require(rho2 && out, "tim_concurrence_x: null argument");
    *out = tim::concurrence_x(tim::x_elements(tim::DensityMatrix(read_matrix(rho2, 4))));
  });
}

TIMLAB_API tim_status tim_concurrence_wootters(const tim_complex rho2[16], double* out) {
  return guarded([&] {
    require(rho2 && out, "tim_concurrence_wootters: null argument");
    *out = tim::concurrence_wootters(tim::DensityMatrix(read_matrix(rho2, 4)));
  });
}

TIMLAB_API tim_status tim_squeezing_parity(const tim_complex state[8], double* out) {
  return guarded([&] {
    require(state && out, "tim_squeezing_parity: null argument");
    *out = tim::squeezing_parity(as_span(state, 8));
  });
}

TIMLAB_API tim_status tim_w_schedule(double j, double* b, double* t_star) {
  return guarded([&] {
    require(b && t_star, "tim_w_schedule: null argument");
    const auto s = tim::dynamics::w_schedule(j);
    *b = s.b;
    *t_star = s.t_star;
  });
}

TIMLAB_API tim_status tim_rabi_params(double j, double b, double* omega, double* mixing_angle) {
  return guarded([&] {
    require(omega && mixing_angle, "tim_rabi_params: null argument");
    const auto r = tim::dynamics::rabi_params(j, b);
    *omega = r.omega;
    *mixing_angle = r.mixing_angle;
  });
}

TIMLAB_API tim_status tim_evolve_closed(double j, double b, double t, tim_complex* c111,
                                        tim_complex* c_w) {
  return guarded([&] {
    require(c111 && c_w, "tim_evolve_closed: null argument");
    const auto a = tim::dynamics::evolve_closed(j, b, t);
    *c111 = {a.c111.real(), a.c111.imag()};
    *c_w = {a.c_w.real(), a.c_w.imag()};
  });
}

}  // extern "C"
