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
#ifndef MRA_FOURIER_HPP
#define MRA_FOURIER_HPP

#include <utility>

#include "mra/filters.hpp"

namespace mra {

/// Uniform samples of a function of xi on a window:
/// values[i] ~ g^(window_start + i * step). The step must divide 1 into an
/// integer number of parts so integer translates xi + k are exact grid
/// shifts; no interpolation is ever performed.
class FourierSamples {
 public:
  FourierSamples(double window_start, double step, CVec values)
      : window_start_(window_start), step_(step), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("FourierSamples: values must be nonempty");
    if (!(step > 0.0)) throw StepNotUnitDivisor(step);
    const double ratio = 1.0 / step;
    const long long r = std::llround(ratio);
    if (r < 1 || std::abs(ratio - static_cast<double>(r)) > 1e-9) throw StepNotUnitDivisor(step);
    per_unit_ = static_cast<int>(r);
  }

  double window_start() const { return window_start_; }
  double step() const { return step_; }
  const CVec& values() const { return values_; }
  CVec& values() { return values_; }

  /// Number of grid steps per unit interval (1/step).
  int per_unit() const { return per_unit_; }

  double xi_at(std::size_t i) const { return window_start_ + static_cast<double>(i) * step_; }
  double window_end() const { return xi_at(values_.size() - 1); }

 private:
  double window_start_;
  double step_;
  CVec values_;
  int per_unit_;
};

/// Truncated infinite-product evaluation of the scaling function transform,
///
///   phi^(xi) = prod_{j=1..depth} m0(xi / 2^j),
///
/// with phi^(0) = 1 fixed by the sum-sqrt(2) filter normalization. The factor
/// |m0| <= 1 for any Smith-Barnwell filter, so finite depth can only
/// over-estimate the magnitude.
inline Complex phi_hat_product(const ScalingFilter& filter, double xi, int depth) {
  if (depth < 1) throw std::invalid_argument("phi_hat_product: depth must be >= 1");
  Complex prod{1.0, 0.0};
  for (int j = 1; j <= depth; ++j) {
    prod *= eval_m0(filter, std::ldexp(xi, -j));
  }
  return prod;
}

/// Grid driver over phi_hat_product.
inline FourierSamples sample_phi_hat(const ScalingFilter& filter, double window_start, double step,
                                     int count, int depth = defaults::product_depth) {
  if (count < 1) throw std::invalid_argument("sample_phi_hat: count must be >= 1");
  CVec values(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(i)] =
        phi_hat_product(filter, window_start + static_cast<double>(i) * step, depth);
  }
  return FourierSamples(window_start, step, std::move(values));
}

/// Orthonormal-translates criterion on the Fourier side: translates of g are
/// orthonormal iff sum_k |g^(xi + k)|^2 = 1 for (almost) every xi. Tested at
/// every residue class xi in [0,1) representable on the grid, with the sum
/// truncated to the sample window; the window width is recorded in the report
/// so the achievable tolerance is interpretable.
///
/// Precondition: the window spans at least [-1, 1] (throws WindowTooSmall).
inline CheckReport periodization_check(const FourierSamples& samples, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("periodization_check: tol must be positive");
  if (samples.window_start() > -1.0 || samples.window_end() < 1.0) {
    throw WindowTooSmall("periodization_check: sample window must span [-1, 1]");
  }
  const int r = samples.per_unit();
  const CVec& v = samples.values();
  std::vector<double> sums(static_cast<std::size_t>(r), 0.0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    sums[j % static_cast<std::size_t>(r)] += std::norm(v[j]);
  }
  double max_dev = 0.0;
  for (int i = 0; i < r; ++i) {
    max_dev = std::max(max_dev, std::abs(sums[static_cast<std::size_t>(i)] - 1.0));
  }
  // earliest residue within rounding of the maximum
  double argmax = 0.0;
  for (int i = 0; i < r; ++i) {
    if (std::abs(sums[static_cast<std::size_t>(i)] - 1.0) >= max_dev * (1.0 - 1e-12)) {
      argmax = unit_frac(samples.window_start() + static_cast<double>(i) * samples.step());
      break;
    }
  }
  CheckReport report;
  report.max_deviation = max_dev;
  report.argmax_xi = argmax;
  report.pass = max_dev <= tol;
  report.params = {{"tol", tol},
                   {"step", samples.step()},
                   {"window_start", samples.window_start()},
                   {"window_end", samples.window_end()},
                   {"window_width", samples.window_end() - samples.window_start()}};
  return report;
}

/// Grid estimate of the measure of supp(g^) inside the window:
/// step * #{ i : |values[i]| > threshold }.
inline double support_measure(const FourierSamples& samples, double threshold) {
  if (threshold <= 0.0) throw std::invalid_argument("support_measure: threshold must be positive");
  std::size_t count = 0;
  for (const Complex& z : samples.values()) {
    if (std::abs(z) > threshold) ++count;
  }
  return samples.step() * static_cast<double>(count);
}

}  // namespace mra

#endif  // MRA_FOURIER_HPP
