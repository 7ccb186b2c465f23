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

#include "asl/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "asl/errors.hpp"

namespace asl {

namespace {

double norm_squared_of(const std::vector<cxd>& amps) {
  double n = 0.0;
  for (const cxd& a : amps) n += std::norm(a);
  return n;
}

// Golub-Van-Loan style rotation parameters eliminating a real off-diagonal
// beta between diagonal entries app and aqq. Returns {c, s, t}.
struct RotationParams {
  double c, s, t;
};

RotationParams symmetric_rotation(double app, double aqq, double beta) {
  const double tau = (aqq - app) / (2.0 * beta);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c, t};
}

}  // namespace

StateVector::StateVector(std::vector<cxd> amplitudes, BasisTag basis)
    : amps_(std::move(amplitudes)), basis_(basis) {
  if (amps_.empty()) throw domain_error("state vector must not be empty");
  const double n2 = norm_squared_of(amps_);
  if (std::abs(n2 - 1.0) > norm_tolerance)
    throw domain_error("state vector not normalized: |amplitudes|^2 = " +
                       std::to_string(n2));
}

double StateVector::norm_squared() const { return norm_squared_of(amps_); }

HamiltonianSpec::HamiltonianSpec(std::size_t dimension, std::vector<cxd> matrix,
                                 std::string label)
    : dim_(dimension), mat_(std::move(matrix)), label_(std::move(label)) {
  if (dim_ < 2) throw domain_error("Hamiltonian dimension must be >= 2");
  if (mat_.size() != dim_ * dim_)
    throw domain_error("Hamiltonian matrix size does not match dimension");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const cxd diff = mat_[i * dim_ + j] - std::conj(mat_[j * dim_ + i]);
      if (std::abs(diff) > hermiticity_tolerance)
        throw domain_error("Hamiltonian '" + label_ + "' is not Hermitian at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

double HamiltonianSpec::frobenius_norm() const {
  double s = 0.0;
  for (const cxd& v : mat_) s += std::norm(v);
  return std::sqrt(s);
}

HermitianEigensystem::HermitianEigensystem(const HamiltonianSpec& h)
    : dim_(h.dimension()) {
  eigenvalues_.assign(dim_, 0.0);
  eigenvectors_.assign(dim_ * dim_, cxd(0.0, 0.0));

  if (dim_ == 2) {
    // Closed form from trace and determinant.
    const double a = h.at(0, 0).real();
    const double d = h.at(1, 1).real();
    const cxd b = h.at(0, 1);
    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double r = std::hypot(half_gap, std::abs(b));
    eigenvalues_[0] = mean - r;
    eigenvalues_[1] = mean + r;
    if (std::abs(b) == 0.0) {
      const bool swap = a > d;
      eigenvectors_[0] = swap ? cxd(0.0) : cxd(1.0);
      eigenvectors_[2] = swap ? cxd(1.0) : cxd(0.0);
      eigenvectors_[1] = swap ? cxd(1.0) : cxd(0.0);
      eigenvectors_[3] = swap ? cxd(0.0) : cxd(1.0);
      return;
    }
    // (H - lambda) (b, lambda - a)^T = 0 for either eigenvalue.
    const cxd lo0 = b, lo1 = cxd(-r - half_gap, 0.0);
    const cxd hi0 = b, hi1 = cxd(r - half_gap, 0.0);
    const double nlo = std::sqrt(std::norm(lo0) + std::norm(lo1));
    const double nhi = std::sqrt(std::norm(hi0) + std::norm(hi1));
    eigenvectors_[0] = lo0 / nlo;
    eigenvectors_[2] = lo1 / nlo;
    eigenvectors_[1] = hi0 / nhi;
    eigenvectors_[3] = hi1 / nhi;
    return;
  }

  // Cyclic Jacobi on a working copy; V accumulates the rotations.
  std::vector<cxd> a = h.matrix();
  std::vector<cxd>& v = eigenvectors_;
  for (std::size_t i = 0; i < dim_; ++i) v[i * dim_ + i] = cxd(1.0);

  double scale = 0.0;
  for (const cxd& e : a) scale = std::max(scale, std::abs(e));
  if (scale == 0.0) return;  // zero matrix: eigenvalues all 0, V = I
  const double tol = 1e-14 * scale;

  const auto off_max = [&]() {
    double m = 0.0;
    for (std::size_t p = 0; p < dim_; ++p)
      for (std::size_t q = p + 1; q < dim_; ++q)
        m = std::max(m, std::abs(a[p * dim_ + q]));
    return m;
  };

  constexpr int max_sweeps = 100;
  int sweep = 0;
  while (off_max() > tol) {
    if (++sweep > max_sweeps)
      throw numeric_error("Jacobi eigensolve did not converge in " +
                          std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p < dim_; ++p) {
      for (std::size_t q = p + 1; q < dim_; ++q) {
        const cxd apq = a[p * dim_ + q];
        const double beta = std::abs(apq);
        if (beta <= tol) continue;
        const cxd phase = apq / beta;  // apq = beta * phase
        const double app = a[p * dim_ + p].real();
        const double aqq = a[q * dim_ + q].real();
        const auto [c, s, t] = symmetric_rotation(app, aqq, beta);

        // J restricted to (p,q): [[c, s], [-s conj(phase), c conj(phase)]].
        const cxd jqp = -s * std::conj(phase);
        const cxd jqq = c * std::conj(phase);

        // Right-multiply columns p,q of A and V by J.
        for (std::size_t i = 0; i < dim_; ++i) {
          const cxd aip = a[i * dim_ + p], aiq = a[i * dim_ + q];
          a[i * dim_ + p] = c * aip + jqp * aiq;
          a[i * dim_ + q] = s * aip + jqq * aiq;
          const cxd vip = v[i * dim_ + p], viq = v[i * dim_ + q];
          v[i * dim_ + p] = c * vip + jqp * viq;
          v[i * dim_ + q] = s * vip + jqq * viq;
        }
        // Left-multiply rows p,q of A by J^dagger.
        for (std::size_t j = 0; j < dim_; ++j) {
          const cxd apj = a[p * dim_ + j], aqj = a[q * dim_ + j];
          a[p * dim_ + j] = c * apj + std::conj(jqp) * aqj;
          a[q * dim_ + j] = s * apj + std::conj(jqq) * aqj;
        }
        // Exact values for the pivot block.
        a[p * dim_ + q] = cxd(0.0);
        a[q * dim_ + p] = cxd(0.0);
        a[p * dim_ + p] = cxd(app - t * beta, 0.0);
        a[q * dim_ + q] = cxd(aqq + t * beta, 0.0);
      }
    }
  }

  // Sort ascending, permute eigenvector columns accordingly.
  std::vector<std::size_t> order(dim_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(dim_);
  for (std::size_t i = 0; i < dim_; ++i) diag[i] = a[i * dim_ + i].real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return diag[l] < diag[r]; });
  std::vector<cxd> sorted_v(dim_ * dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    eigenvalues_[k] = diag[order[k]];
    for (std::size_t i = 0; i < dim_; ++i)
      sorted_v[i * dim_ + k] = v[i * dim_ + order[k]];
  }
  eigenvectors_ = std::move(sorted_v);
}

StateVector HermitianEigensystem::evolve(const StateVector& psi0, double t,
                                         double hbar) const {
  if (psi0.dimension() != dim_)
    throw domain_error("state dimension does not match Hamiltonian");
  if (!(hbar > 0.0)) throw domain_error("hbar must be > 0");

  const std::vector<cxd>& in = psi0.amplitudes();
  // y = V^dagger psi0, phased, then back: psi = V (e^{-i lambda t/hbar} y).
  std::vector<cxd> y(dim_, cxd(0.0));
  for (std::size_t k = 0; k < dim_; ++k) {
    cxd acc(0.0);
    for (std::size_t i = 0; i < dim_; ++i)
      acc += std::conj(eigenvectors_[i * dim_ + k]) * in[i];
    y[k] = acc * std::polar(1.0, -eigenvalues_[k] * t / hbar);
  }
  std::vector<cxd> out(dim_, cxd(0.0));
  for (std::size_t i = 0; i < dim_; ++i) {
    cxd acc(0.0);
    for (std::size_t k = 0; k < dim_; ++k)
      acc += eigenvectors_[i * dim_ + k] * y[k];
    out[i] = acc;
  }
  return StateVector(std::move(out), psi0.basis());
}

StateVector evolve_exact(const HamiltonianSpec& h, const StateVector& psi0,
                         double t, double hbar) {
  return HermitianEigensystem(h).evolve(psi0, t, hbar);
}

StateVector evolve_ode(const HamiltonianSpec& h, const StateVector& psi0,
                       double t, double hbar, double dt) {
  if (psi0.dimension() != h.dimension())
    throw domain_error("state dimension does not match Hamiltonian");
  if (!(hbar > 0.0)) throw domain_error("hbar must be > 0");
  if (!(t >= 0.0)) throw domain_error("t must be >= 0");
  if (!(dt > 0.0)) throw domain_error("dt must be > 0");
  if (h.frobenius_norm() * dt / hbar > 0.01)
    throw domain_error("RK4 step too large: require ||H|| dt / hbar <= 0.01");
  if (t == 0.0) return psi0;

  const double raw_steps = std::ceil(t / dt);
  if (raw_steps > 1e8)
    throw resource_error("RK4 step count exceeds 1e8");
  const std::size_t steps = static_cast<std::size_t>(raw_steps);
  const double hstep = t / static_cast<double>(steps);

  const std::size_t n = h.dimension();
  const std::vector<cxd>& mat = h.matrix();
  const cxd minus_i_over_hbar(0.0, -1.0 / hbar);

  const auto rhs = [&](const std::vector<cxd>& psi, std::vector<cxd>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      cxd acc(0.0);
      for (std::size_t j = 0; j < n; ++j) acc += mat[i * n + j] * psi[j];
      out[i] = minus_i_over_hbar * acc;
    }
  };

  std::vector<cxd> psi = psi0.amplitudes();
  std::vector<cxd> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t s = 0; s < steps; ++s) {
    rhs(psi, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * hstep * k1[i];
    rhs(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * hstep * k2[i];
    rhs(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + hstep * k3[i];
    rhs(tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      psi[i] += hstep / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return StateVector(std::move(psi), psi0.basis());
}

Probability fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension())
    throw domain_error("fidelity requires equal dimensions");
  cxd overlap(0.0);
  for (std::size_t i = 0; i < a.dimension(); ++i)
    overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  double raw = std::norm(overlap);
  // Inputs are normalized only to 1e-10, so |<a|b>|^2 may poke past 1 by up
  // to ~2e-10 without anything being wrong.
  if (raw > 1.0 && raw <= 1.0 + 3.0 * StateVector::norm_tolerance) raw = 1.0;
  return Probability::from_raw(raw);
}

HamiltonianSpec build_hamiltonian_2d(const SearchConfig& cfg) {
  cfg.validate();
  const double e = cfg.energy, g = cfg.gamma, x = cfg.x;
  const double root = std::sqrt(1.0 - x * x);
  std::vector<cxd> m(4);
  m[0] = cxd(e + g * e * x * x, 0.0);
  m[1] = cxd(g * e * x * root, 0.0);
  m[2] = m[1];
  m[3] = cxd(g * e * (1.0 - x * x), 0.0);
  return HamiltonianSpec(2, std::move(m), "search-2d");
}

StateVector source_state_2d(const SearchConfig& cfg) {
  cfg.validate();
  return StateVector({cxd(cfg.x, 0.0), cxd(std::sqrt(1.0 - cfg.x * cfg.x), 0.0)},
                     BasisTag::wr_2d);
}

StateVector target_state_2d() {
  return StateVector({cxd(1.0, 0.0), cxd(0.0, 0.0)}, BasisTag::wr_2d);
}

namespace {

void check_fullspace_dim(std::size_t n) {
  if (n < 4)
    throw domain_error("full-space dimension must be >= 4, got " +
                       std::to_string(n));
  if (n > 4096)
    throw domain_error("full-space dimension capped at 4096, got " +
                       std::to_string(n));
}

}  // namespace

HamiltonianSpec build_fullspace_hamiltonian(std::size_t dimension, double gamma,
                                            double energy, std::size_t target) {
  check_fullspace_dim(dimension);
  if (target >= dimension) throw domain_error("target index out of range");
  if (!(gamma >= 1.0)) throw domain_error("gamma must be >= 1");
  if (!(energy > 0.0)) throw domain_error("energy must be > 0");
  const double drive = gamma * energy / static_cast<double>(dimension);
  std::vector<cxd> m(dimension * dimension, cxd(drive, 0.0));
  m[target * dimension + target] += energy;
  return HamiltonianSpec(dimension, std::move(m),
                         "search-N" + std::to_string(dimension) + "-w" +
                             std::to_string(target));
}

HamiltonianSpec build_fullspace_driver(std::size_t dimension, double gamma,
                                       double energy) {
  check_fullspace_dim(dimension);
  if (!(gamma >= 1.0)) throw domain_error("gamma must be >= 1");
  if (!(energy > 0.0)) throw domain_error("energy must be > 0");
  const double drive = gamma * energy / static_cast<double>(dimension);
  std::vector<cxd> m(dimension * dimension, cxd(drive, 0.0));
  return HamiltonianSpec(dimension, std::move(m),
                         "driver-N" + std::to_string(dimension));
}

FullSpaceSet build_fullspace_hamiltonians(std::size_t dimension, double gamma,
                                          double energy) {
  check_fullspace_dim(dimension);
  FullSpaceSet set{{}, build_fullspace_driver(dimension, gamma, energy)};
  set.per_target.reserve(dimension);
  for (std::size_t w = 0; w < dimension; ++w)
    set.per_target.push_back(
        build_fullspace_hamiltonian(dimension, gamma, energy, w));
  return set;
}

StateVector uniform_state(std::size_t dimension) {
  if (dimension < 2) throw domain_error("dimension must be >= 2");
  const double amp = 1.0 / std::sqrt(static_cast<double>(dimension));
  return StateVector(std::vector<cxd>(dimension, cxd(amp, 0.0)),
                     BasisTag::computational_nd);
}

}  // namespace asl
