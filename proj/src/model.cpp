#include "tim/model.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "tim/error.hpp"

namespace tim {

void ModelParams::validate() const {
  if (n < kMinQubits) {
    throw Error(ErrorCode::InvalidArgument,
                "ring needs at least 3 qubits, got " + std::to_string(n));
  }
  if (n > kMaxQubits) {
    throw Error(ErrorCode::DimensionTooLarge,
                "ring size " + std::to_string(n) + " exceeds 10 qubits");
  }
  if (!std::isfinite(j) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "j and b must be finite");
  }
}

namespace {

void check_register(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "register needs at least one qubit");
  if (n > kMaxQubits) {
    throw Error(ErrorCode::DimensionTooLarge,
                "register size " + std::to_string(n) + " exceeds 10 qubits");
  }
}

// Kronecker chain over sites 1..n with identity on sites not in `ops`.
ComplexMatrix chain(int n, const std::map<int, ComplexMatrix>& ops) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int site = 1; site <= n; ++site) {
    auto it = ops.find(site);
    out = kron(out, it == ops.end() ? pauli::identity() : it->second);
  }
  return out;
}

ComplexMatrix pauli_for(Axis axis) {
  switch (axis) {
    case Axis::X: return pauli::x();
    case Axis::Y: return pauli::y();
    case Axis::Z: return pauli::z();
  }
  return pauli::identity();
}

std::size_t bit_of_site(int n, int site) { return static_cast<std::size_t>(n - site); }

template <typename Map>
ComplexMatrix permutation(int n, Map&& map_index) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) m(map_index(idx), idx) = 1.0;
  return m;
}

}  // namespace

ComplexMatrix site_operator(int n, int site, const ComplexMatrix& op) {
  check_register(n);
  if (site < 1 || site > n) {
    throw Error(ErrorCode::InvalidArgument, "site index out of range");
  }
  return chain(n, {{site, op}});
}

ComplexMatrix hamiltonian(const ModelParams& p) {
  p.validate();
  const std::size_t dim = std::size_t{1} << p.n;
  ComplexMatrix h(dim, dim);
  for (int i = 1; i <= p.n; ++i) {
    const int next = i == p.n ? 1 : i + 1;
    ComplexMatrix bond = chain(p.n, {{i, pauli::x()}, {next, pauli::x()}});
    bond *= p.j;
    h += bond;
    ComplexMatrix field = site_operator(p.n, i, pauli::z());
    field *= p.b;
    h += field;
  }
  return h;
}

ComplexMatrix parity_op(int n, Axis axis) {
  check_register(n);
  std::map<int, ComplexMatrix> ops;
  for (int site = 1; site <= n; ++site) ops.emplace(site, pauli_for(axis));
  return chain(n, ops);
}

ComplexMatrix translation_op(int n) {
  check_register(n);
  // Site k's bit moves to site k+1; site n wraps to site 1.
  return permutation(n, [n](std::size_t idx) {
    std::size_t out = 0;
    for (int site = 1; site <= n; ++site) {
      const int target = site == n ? 1 : site + 1;
      if ((idx >> bit_of_site(n, site)) & 1U) out |= std::size_t{1} << bit_of_site(n, target);
    }
    return out;
  });
}

ComplexMatrix reflection_op(int n) {
  check_register(n);
  return permutation(n, [n](std::size_t idx) {
    std::size_t out = 0;
    for (int site = 1; site <= n; ++site) {
      if ((idx >> bit_of_site(n, site)) & 1U) {
        out |= std::size_t{1} << bit_of_site(n, n - site + 1);
      }
    }
    return out;
  });
}

SymmetryReport symmetry_report(const ModelParams& p) {
  const ComplexMatrix h = hamiltonian(p);
  const ComplexMatrix sx = parity_op(p.n, Axis::X);
  const ComplexMatrix flipped = hamiltonian({p.n, p.j, -p.b});

  SymmetryReport r;
  r.commutator_norm_parity = commutator(h, parity_op(p.n, Axis::Z)).max_abs();
  r.commutator_norm_translation = commutator(h, translation_op(p.n)).max_abs();
  r.commutator_norm_reflection = commutator(h, reflection_op(p.n)).max_abs();
  r.field_flip_norm = max_abs_diff(sx * h * sx, flipped);
  return r;
}

StateVector basis_state(int n, std::size_t index) {
  check_register(n);
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

}  // namespace tim
