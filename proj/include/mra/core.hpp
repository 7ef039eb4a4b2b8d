/*
Copyright 2026 the mra-toolkit authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#ifndef MRA_CORE_HPP
#define MRA_CORE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mra {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
inline constexpr double kInvSqrt2 = 1.0 / kSqrt2;

/// Library-wide default tolerances and grid sizes. Commands and operations
/// take these as overridable parameters; the values here are the single
/// source of truth.
namespace defaults {
inline constexpr double norm_tol = 1e-10;
inline constexpr double check_tol = 1e-10;
inline constexpr int grid_points = 4096;
inline constexpr int product_depth = 20;
inline constexpr double window = 32.0;       // periodization window [-window, window]
inline constexpr int step_denominator = 64;  // sample step 1/64
inline constexpr int cascade_max_iters = 100;
inline constexpr double cascade_tol = 1e-10;
}  // namespace defaults

/// Base type for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyFilter : Error {
  EmptyFilter() : Error("filter has no nonzero coefficients") {}
};

/// A constructor-level normalization invariant failed. `invariant` names the
/// violated condition ("sum" or "energy"), `deviation` says by how much.
struct NormalizationViolation : Error {
  NormalizationViolation(std::string which, double dev)
      : Error("normalization violation: " + which + " deviates by " + std::to_string(dev)),
        invariant(std::move(which)),
        deviation(dev) {}
  std::string invariant;
  double deviation;
};

struct FilterNotQMF : Error {
  explicit FilterNotQMF(double dev)
      : Error("filter fails the Smith-Barnwell check, max deviation " + std::to_string(dev)),
        deviation(dev) {}
  double deviation;
};

struct NotUnimodular : Error {
  explicit NotUnimodular(double dev)
      : Error("modulation is not unimodular on the grid, max | |nu|-1 | = " + std::to_string(dev)),
        max_deviation(dev) {}
  double max_deviation;
};

struct UnsupportedModulation : Error {
  using Error::Error;
};

struct StepNotUnitDivisor : Error {
  explicit StepNotUnitDivisor(double step)
      : Error("sample step " + std::to_string(step) + " does not divide 1 into integer parts") {}
};

struct WindowTooSmall : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct OddLength : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct TooManyLevels : Error {
  using Error::Error;
};

struct MalformedDecomposition : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Finitely supported coefficient sequence c_offset, ..., c_{offset+n-1}.
/// The raw representation shared by scaling filters, wavelet filters and
/// trigonometric polynomials.
struct FilterCoeffs {
  int offset = 0;
  CVec coeffs;

  int first_index() const { return offset; }
  int last_index() const { return offset + static_cast<int>(coeffs.size()) - 1; }
  int length() const { return static_cast<int>(coeffs.size()); }

  /// Coefficient at absolute index k, zero outside the support.
  Complex at(int k) const {
    const int j = k - offset;
    if (j < 0 || j >= length()) return Complex{0.0, 0.0};
    return coeffs[static_cast<std::size_t>(j)];
  }
};

/// Reduce x to the half-open unit interval [0, 1). Evaluating 1-periodic
/// functions through this reduction makes t(xi) and t(xi + 1) bitwise equal
/// whenever xi + 1 is exactly representable.
inline double unit_frac(double x) {
  const double f = x - std::floor(x);
  return f < 1.0 ? f : 0.0;
}

/// t(xi) = sum_k c_k e^{-2 pi i k xi}, evaluated 1-periodically.
inline Complex eval_fourier_series(const FilterCoeffs& c, double xi) {
  const double f = unit_frac(xi);
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    const double k = static_cast<double>(c.offset + static_cast<int>(j));
    acc += c.coeffs[j] * std::polar(1.0, -kTwoPi * k * f);
  }
  return acc;
}

/// Outcome of a numerical verification. `params` records every knob that
/// shaped the result (grid size, truncation window, tolerance, ...) so the
/// reported deviation is interpretable.
struct CheckReport {
  bool pass = false;
  double max_deviation = 0.0;
  double argmax_xi = 0.0;
  std::map<std::string, double> params;
};

inline double energy(const CVec& v) {
  double e = 0.0;
  for (const Complex& z : v) e += std::norm(z);
  return e;
}

inline Complex coeff_sum(const CVec& v) {
  Complex s{0.0, 0.0};
  for (const Complex& z : v) s += z;
  return s;
}

}  // namespace mra

#endif  // MRA_CORE_HPP
