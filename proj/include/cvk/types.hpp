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

#include <cmath>
#include <cstdio>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cvk {

using complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: bad parameter ranges, dimension mismatches.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input data that violates a contract (PSD, malformed rows, singular systems).
class DataError : public Error {
 public:
  using Error::Error;
};

/// The number-basis truncation could not reach the requested tolerance.
class CutoffError : public Error {
 public:
  using Error::Error;
};

/// A quadrature grid whose boundary still carries Wigner mass.
class GridError : public Error {
 public:
  using Error::Error;
};

/// Displacement amplitudes of a data point: per mode (x1, x2) = (Re, Im) of alpha.
class DataPoint {
 public:
  DataPoint() = default;

  explicit DataPoint(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

  DataPoint(std::initializer_list<double> coords) : coords_(coords) { validate(); }

  static DataPoint zeros(std::size_t modes) { return DataPoint(std::vector<double>(2 * modes, 0.0)); }

  static DataPoint from_alphas(std::span<const complex> alphas) {
    std::vector<double> c;
    c.reserve(2 * alphas.size());
    for (const complex& a : alphas) {
      c.push_back(a.real());
      c.push_back(a.imag());
    }
    return DataPoint(std::move(c));
  }

  [[nodiscard]] std::size_t modes() const { return coords_.size() / 2; }
  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] std::span<const double> coords() const { return coords_; }
  [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] complex alpha(std::size_t mode) const { return {coords_[2 * mode], coords_[2 * mode + 1]}; }

  [[nodiscard]] double norm_sq() const {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return s;
  }

  friend DataPoint operator+(const DataPoint& a, const DataPoint& b) {
    a.require_same_modes(b);
    std::vector<double> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return DataPoint(std::move(c));
  }

  friend DataPoint operator-(const DataPoint& a, const DataPoint& b) {
    a.require_same_modes(b);
    std::vector<double> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return DataPoint(std::move(c));
  }

  friend DataPoint operator*(double s, const DataPoint& a) {
    std::vector<double> c(a.coords_);
    for (double& v : c) v *= s;
    return DataPoint(std::move(c));
  }

  friend bool operator==(const DataPoint&, const DataPoint&) = default;

  void require_same_modes(const DataPoint& other) const {
    if (other.coords_.size() != coords_.size()) {
      throw UsageError("data point dimension mismatch: " + std::to_string(coords_.size()) + " vs " +
                       std::to_string(other.coords_.size()));
    }
  }

 private:
  void validate() const {
    if (coords_.empty() || coords_.size() % 2 != 0) {
      throw UsageError("data point needs 2N coordinates, got " + std::to_string(coords_.size()));
    }
    for (double c : coords_) {
      if (!std::isfinite(c)) throw UsageError("data point has a non-finite coordinate");
    }
  }

  std::vector<double> coords_;
};

/// |x - x'|^2 summed over all modes.
inline double distance_sq(const DataPoint& x, const DataPoint& y) {
  x.require_same_modes(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

/// Compact rendering of a number for error messages.
inline std::string show(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline void require_transmissivity(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw UsageError("transmissivity must lie in [0, 1], got " + show(eta));
  }
}

}  // namespace cvk
