// Copyright 2026 The analog-search-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASL_PROPAGATOR_HPP
#define ASL_PROPAGATOR_HPP

#include <complex>
#include <string>
#include <vector>

#include "asl/kinematics.hpp"

// Brute-force evolution oracles. Everything here is deliberately dependency
// free and deterministic: dense storage, closed-form 2x2 eigensolve, cyclic
// Jacobi for larger Hermitian matrices, fixed-step RK4 as the second,
// independent route. These validate the closed forms in kinematics.hpp and
// power the proof-bound harness; they are not tuned for large N (cap 4096).

namespace asl {

using cxd = std::complex<double>;

enum class BasisTag { wr_2d, computational_nd };

// Normalized amplitude vector. Construction rejects |norm^2 - 1| > 1e-10;
// nothing here ever renormalizes silently.
class StateVector {
 public:
  StateVector(std::vector<cxd> amplitudes, BasisTag basis);

  const std::vector<cxd>& amplitudes() const { return amps_; }
  BasisTag basis() const { return basis_; }
  std::size_t dimension() const { return amps_.size(); }
  double norm_squared() const;

  static constexpr double norm_tolerance = 1e-10;

 private:
  std::vector<cxd> amps_;
  BasisTag basis_;
};

// Dense Hermitian matrix in energy units, row-major. Construction enforces
// dimension >= 2 and max |H - H^dagger| <= 1e-12.
class HamiltonianSpec {
 public:
  HamiltonianSpec(std::size_t dimension, std::vector<cxd> matrix,
                  std::string label);

  std::size_t dimension() const { return dim_; }
  const std::vector<cxd>& matrix() const { return mat_; }
  const std::string& label() const { return label_; }
  cxd at(std::size_t i, std::size_t j) const { return mat_[i * dim_ + j]; }

  // Frobenius norm; upper bound on the spectral norm, used for step-size
  // checks.
  double frobenius_norm() const;

  static constexpr double hermiticity_tolerance = 1e-12;

 private:
  std::size_t dim_;
  std::vector<cxd> mat_;
  std::string label_;
};

// Full eigendecomposition H = V diag(lambda) V^dagger. 2x2 uses the
// trace/determinant closed form; larger dimensions run cyclic Jacobi sweeps
// to an off-diagonal threshold of 1e-14 relative to the largest entry.
// Eigenvalues come out ascending.
class HermitianEigensystem {
 public:
  explicit HermitianEigensystem(const HamiltonianSpec& h);

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  // Column k of the returned row-major matrix is the k-th eigenvector.
  const std::vector<cxd>& eigenvectors() const { return eigenvectors_; }
  std::size_t dimension() const { return dim_; }

  // exp(-i H t / hbar) |psi0> through the decomposition.
  StateVector evolve(const StateVector& psi0, double t, double hbar) const;

 private:
  std::size_t dim_;
  std::vector<double> eigenvalues_;
  std::vector<cxd> eigenvectors_;
};

// exp(-i H t / hbar) |psi0> via a fresh eigendecomposition.
StateVector evolve_exact(const HamiltonianSpec& h, const StateVector& psi0,
                         double t, double hbar);

// Fixed-step classical RK4 on i hbar dpsi/dt = H psi. Requires
// ||H||_F * dt / hbar <= 0.01 and at most 1e8 steps (resource_error beyond).
StateVector evolve_ode(const HamiltonianSpec& h, const StateVector& psi0,
                       double t, double hbar, double dt);

// |<a|b>|^2.
Probability fidelity(const StateVector& a, const StateVector& b);

// 2x2 Hamiltonian E|w><w| + gamma E|s><s| in the {|w>, |r>} basis, with
// |s> = x|w> + sqrt(1-x^2)|r>.
HamiltonianSpec build_hamiltonian_2d(const SearchConfig& cfg);

// |s> and |w> expressed in the {|w>, |r>} basis.
StateVector source_state_2d(const SearchConfig& cfg);
StateVector target_state_2d();

// N-dimensional search instance with |s> the uniform superposition
// (x = 1/sqrt(N)) over the computational basis.
struct FullSpaceSet {
  std::vector<HamiltonianSpec> per_target;  // E|w><w| + gamma E|s><s|, w = 0..N-1
  HamiltonianSpec driver;                   // gamma E|s><s| alone
};

// Single H_w = E|w><w| + gamma E|s><s|. N in [4, 4096].
HamiltonianSpec build_fullspace_hamiltonian(std::size_t dimension, double gamma,
                                            double energy, std::size_t target);

// Driver-only matrix gamma E|s><s|.
HamiltonianSpec build_fullspace_driver(std::size_t dimension, double gamma,
                                       double energy);

// All N target Hamiltonians plus the driver. Memory is N+1 dense matrices;
// intended for desk-scale N only.
FullSpaceSet build_fullspace_hamiltonians(std::size_t dimension, double gamma,
                                          double energy);

// Uniform superposition in the computational basis.
StateVector uniform_state(std::size_t dimension);

}  // namespace asl

#endif
