// Copyright 2026 The cvkernels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cvk/fock.hpp"
#include "cvk/types.hpp"

namespace cvk {

enum class Family { coherent, squeezed, single_photon, thermal };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::coherent: return "coherent";
    case Family::squeezed: return "squeezed";
    case Family::single_photon: return "single-photon";
    case Family::thermal: return "thermal";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  if (name == "coherent") return Family::coherent;
  if (name == "squeezed") return Family::squeezed;
  if (name == "single-photon" || name == "single_photon" || name == "photon") return Family::single_photon;
  if (name == "thermal") return Family::thermal;
  throw UsageError("unknown state family '" + std::string(name) + "'");
}

/// Encoded state family with its parameters. eta is the transmissivity (loss = 1 - eta).
/// Multi-mode specs are products of identical single-mode states.
struct StateSpec {
  Family family = Family::coherent;
  double r = 0.0;
  double nbar = 0.0;
  double eta = 1.0;
  std::size_t modes = 1;

  static StateSpec coherent(double eta = 1.0, std::size_t modes = 1) { return {Family::coherent, 0.0, 0.0, eta, modes}; }
  static StateSpec squeezed(double r, double eta = 1.0, std::size_t modes = 1) {
    return {Family::squeezed, r, 0.0, eta, modes};
  }
  static StateSpec single_photon(double eta = 1.0, std::size_t modes = 1) {
    return {Family::single_photon, 0.0, 0.0, eta, modes};
  }
  static StateSpec thermal(double nbar, double eta = 1.0, std::size_t modes = 1) {
    return {Family::thermal, 0.0, nbar, eta, modes};
  }

  [[nodiscard]] StateSpec with_eta(double e) const {
    StateSpec s = *this;
    s.eta = e;
    return s;
  }

  void validate() const {
    require_transmissivity(eta);
    if (modes == 0) throw UsageError("state needs at least one mode");
    if (!std::isfinite(r)) throw UsageError("squeezing parameter must be finite");
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw UsageError("thermal occupation must be finite and >= 0");
  }

  [[nodiscard]] bool is_gaussian() const { return family != Family::single_photon; }
};

/// Gaussian state in (q1, p1, q2, p2, ...) ordering; the vacuum has covariance I/2.
class GaussianState {
 public:
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd covariance)
      : mean_(std::move(mean)), cov_(std::move(covariance)) {
    if (mean_.size() == 0 || mean_.size() % 2 != 0 || cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
      throw UsageError("gaussian state needs a 2N mean and a 2N x 2N covariance");
    }
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw UsageError("covariance matrix is not symmetric");
    }
    const Eigen::VectorXd nu = symplectic_eigenvalues();
    if (nu.minCoeff() < 0.5 - 1e-9) {
      throw UsageError("covariance violates the uncertainty principle (symplectic eigenvalue " +
                       std::to_string(nu.minCoeff()) + ")");
    }
  }

  static GaussianState vacuum(std::size_t modes) {
    const auto n = static_cast<Eigen::Index>(2 * modes);
    return {Eigen::VectorXd::Zero(n), 0.5 * Eigen::MatrixXd::Identity(n, n)};
  }

  [[nodiscard]] std::size_t modes() const { return static_cast<std::size_t>(mean_.size() / 2); }
  [[nodiscard]] const Eigen::VectorXd& mean() const { return mean_; }
  [[nodiscard]] const Eigen::MatrixXd& covariance() const { return cov_; }

  /// Moduli of the eigenvalues of i*Omega*Sigma, one per mode, ascending.
  [[nodiscard]] Eigen::VectorXd symplectic_eigenvalues() const {
    const Eigen::Index n = cov_.rows();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
      return Eigen::VectorXd::Zero(n / 2);
    }
    const Eigen::MatrixXd root = es.operatorSqrt();
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j += 2) {
      omega(j, j + 1) = 1.0;
      omega(j + 1, j) = -1.0;
    }
    const MatrixXc h = complex(0.0, 1.0) * (root * omega * root).cast<complex>();
    Eigen::SelfAdjointEigenSolver<MatrixXc> hs(h);
    // eigenvalues come in +-nu pairs; the upper half are the nu
    return hs.eigenvalues().tail(n / 2);
  }

  [[nodiscard]] double max_std() const { return std::sqrt(cov_.diagonal().maxCoeff()); }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

/// Product of per-mode number-basis density matrices at a common cutoff.
class FockState {
 public:
  FockState(std::vector<MatrixXc> modes, double tol) : modes_(std::move(modes)), tol_(tol) {
    if (modes_.empty()) throw UsageError("fock state needs at least one mode");
    for (const MatrixXc& m : modes_) {
      if (m.rows() != m.cols() || m.rows() != modes_.front().rows()) {
        throw UsageError("fock state modes must share a square cutoff");
      }
      if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw UsageError("density matrix is not Hermitian");
      const double tr = m.trace().real();
      if (tr > 1.0 + 1e-12) throw UsageError("density matrix trace exceeds one");
      if (tr < 1.0 - tol_) {
        throw CutoffError("cutoff " + std::to_string(cutoff()) + " leaks " + show(1.0 - tr) +
                          " of the trace (tolerance " + show(tol_) + ")");
      }
    }
  }

  explicit FockState(MatrixXc single, double tol) : FockState(std::vector<MatrixXc>{std::move(single)}, tol) {}

  [[nodiscard]] std::size_t modes() const { return modes_.size(); }
  [[nodiscard]] std::size_t cutoff() const { return static_cast<std::size_t>(modes_.front().rows()); }
  [[nodiscard]] double tolerance() const { return tol_; }
  [[nodiscard]] const MatrixXc& matrix(std::size_t mode = 0) const { return modes_.at(mode); }
  [[nodiscard]] const std::vector<MatrixXc>& mode_matrices() const { return modes_; }

  [[nodiscard]] double trace() const {
    double t = 1.0;
    for (const MatrixXc& m : modes_) t *= m.trace().real();
    return t;
  }

  /// Smallest eigenvalue over all modes; O(D^3), so not part of construction.
  [[nodiscard]] double min_eigenvalue() const {
    double lo = 1.0;
    for (const MatrixXc& m : modes_) {
      Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
      lo = std::min(lo, es.eigenvalues().minCoeff());
    }
    return lo;
  }

  /// q standard deviation bound from the mean photon number of the widest mode.
  [[nodiscard]] double max_std() const {
    double best = 0.0;
    for (const MatrixXc& m : modes_) {
      double n_mean = 0.0;
      for (Eigen::Index n = 0; n < m.rows(); ++n) n_mean += static_cast<double>(n) * m(n, n).real();
      best = std::max(best, std::sqrt(n_mean + 0.5));
    }
    return best;
  }

 private:
  std::vector<MatrixXc> modes_;
  double tol_;
};

using State = std::variant<GaussianState, FockState>;

/// Number-basis working parameters for states that have no Gaussian form.
struct FockOptions {
  std::size_t cutoff = 48;
  double tol = 1e-10;
};

namespace detail {

inline MatrixXc undamped_fock_mode(const StateSpec& spec, std::size_t cutoff) {
  switch (spec.family) {
    case Family::coherent: return fock::vacuum(cutoff);
    case Family::squeezed: return fock::squeezed_vacuum(spec.r, cutoff);
    case Family::single_photon: return fock::number_state(1, cutoff);
    case Family::thermal: return fock::thermal(spec.nbar, cutoff);
  }
  throw UsageError("unsupported state family");
}

}  // namespace detail

inline GaussianState apply_loss(const GaussianState& s, double eta) {
  require_transmissivity(eta);
  const auto n = s.covariance().rows();
  return {std::sqrt(eta) * s.mean(), eta * s.covariance() + (1.0 - eta) * 0.5 * Eigen::MatrixXd::Identity(n, n)};
}

inline FockState apply_loss(const FockState& s, double eta) {
  std::vector<MatrixXc> out;
  out.reserve(s.modes());
  for (const MatrixXc& m : s.mode_matrices()) out.push_back(fock::apply_loss(m, eta));
  return {std::move(out), s.tolerance()};
}

inline State apply_loss(const State& s, double eta) {
  return std::visit([eta](const auto& v) -> State { return apply_loss(v, eta); }, s);
}

/// Number-basis form of any family at the given cutoff, loss applied.
inline FockState make_fock_state(const StateSpec& spec, std::size_t cutoff, double tol) {
  spec.validate();
  if (cutoff == 0) throw UsageError("cutoff must be at least 1");
  const MatrixXc base = detail::undamped_fock_mode(spec, cutoff);
  const MatrixXc mode = fock::apply_loss(base, spec.eta);
  return {std::vector<MatrixXc>(spec.modes, mode), tol};
}

/// Gaussian form of the coherent, squeezed and thermal families, loss applied.
inline GaussianState make_gaussian_state(const StateSpec& spec) {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(2 * spec.modes);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; j += 2) {
    switch (spec.family) {
      case Family::coherent:
        cov(j, j) = cov(j + 1, j + 1) = 0.5;
        break;
      case Family::squeezed:
        cov(j, j) = 0.5 * std::exp(-2.0 * spec.r);
        cov(j + 1, j + 1) = 0.5 * std::exp(2.0 * spec.r);
        break;
      case Family::thermal:
        cov(j, j) = cov(j + 1, j + 1) = spec.nbar + 0.5;
        break;
      case Family::single_photon:
        throw UsageError("the single-photon family has no Gaussian form");
    }
  }
  return apply_loss(GaussianState(Eigen::VectorXd::Zero(n), cov), spec.eta);
}

/// Coherent/squeezed/thermal give a GaussianState, single photon a FockState.
inline State make_state(const StateSpec& spec, const FockOptions& opts = {}) {
  if (spec.is_gaussian()) return make_gaussian_state(spec);
  return make_fock_state(spec, opts.cutoff, opts.tol);
}

/// Encoding x -> rho(x): the Wigner function moves by +x in amplitude space,
/// i.e. the (q, p) mean moves by sqrt(2) * x.
inline GaussianState displace(const GaussianState& s, const DataPoint& x) {
  if (x.modes() != s.modes()) throw UsageError("data point has " + std::to_string(x.modes()) + " modes, state has " + std::to_string(s.modes()));
  Eigen::VectorXd mean = s.mean();
  for (std::size_t i = 0; i < x.size(); ++i) mean(static_cast<Eigen::Index>(i)) += std::sqrt(2.0) * x[i];
  return {std::move(mean), s.covariance()};
}

inline FockState displace(const FockState& s, const DataPoint& x) {
  if (x.modes() != s.modes()) throw UsageError("data point has " + std::to_string(x.modes()) + " modes, state has " + std::to_string(s.modes()));
  std::vector<MatrixXc> out;
  out.reserve(s.modes());
  for (std::size_t j = 0; j < s.modes(); ++j) {
    const complex a = x.alpha(j);
    if (a == 0.0) {
      out.push_back(s.matrix(j));
      continue;
    }
    const MatrixXc d = fock::displacement_matrix(a, s.cutoff());
    MatrixXc m = d * s.matrix(j) * d.adjoint();
    out.emplace_back(0.5 * (m + m.adjoint()));
  }
  return {std::move(out), s.tolerance()};
}

inline State displace(const State& s, const DataPoint& x) {
  return std::visit([&x](const auto& v) -> State { return displace(v, x); }, s);
}

/// W(alpha) with integral over d^2 alpha equal to one; alpha given per mode as (Re, Im).
inline double wigner(const GaussianState& s, const DataPoint& alpha) {
  if (alpha.modes() != s.modes()) throw UsageError("phase-space point has the wrong number of modes");
  const auto n = s.mean().size();
  Eigen::VectorXd r(n);
  for (Eigen::Index i = 0; i < n; ++i) r(i) = std::sqrt(2.0) * alpha[static_cast<std::size_t>(i)] - s.mean()(i);
  Eigen::LLT<Eigen::MatrixXd> llt(s.covariance());
  const double quad = r.dot(llt.solve(r));
  const double sqrt_det = llt.matrixL().toDenseMatrix().diagonal().prod();
  return std::exp(-0.5 * quad) / (std::pow(pi, static_cast<double>(s.modes())) * sqrt_det);
}

inline double wigner(const FockState& s, const DataPoint& alpha) {
  if (alpha.modes() != s.modes()) throw UsageError("phase-space point has the wrong number of modes");
  double w = 1.0;
  for (std::size_t j = 0; j < s.modes(); ++j) w *= fock::wigner(s.matrix(j), alpha.alpha(j));
  return w;
}

inline double wigner(const State& s, const DataPoint& alpha) {
  return std::visit([&alpha](const auto& v) { return wigner(v, alpha); }, s);
}

inline std::vector<double> wigner_at(const State& s, std::span<const DataPoint> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const DataPoint& p : points) out.push_back(wigner(s, p));
  return out;
}

inline double purity(const GaussianState& s) {
  return 1.0 / std::sqrt((2.0 * s.covariance()).determinant());
}

inline double purity(const FockState& s) {
  double p = 1.0;
  for (const MatrixXc& m : s.mode_matrices()) p *= fock::purity(m);
  return p;
}

inline double purity(const State& s) {
  return std::visit([](const auto& v) { return purity(v); }, s);
}

inline std::size_t modes(const State& s) {
  return std::visit([](const auto& v) { return v.modes(); }, s);
}

inline double max_std(const State& s) {
  return std::visit([](const auto& v) { return v.max_std(); }, s);
}

}  // namespace cvk
