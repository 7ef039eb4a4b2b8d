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
#ifndef MRA_CASCADE_HPP
#define MRA_CASCADE_HPP

#include <algorithm>
#include <utility>

#include "mra/filters.hpp"

namespace mra {

/// Samples of a function on a dyadic grid with spacing 2^-scale_log2:
/// values[i] ~ f(support_start + i * 2^-scale_log2).
struct SampledFunction {
  int support_start = 0;
  int scale_log2 = 0;
  CVec values;

  double spacing() const { return std::ldexp(1.0, -scale_log2); }
  double x_at(std::size_t i) const {
    return static_cast<double>(support_start) + static_cast<double>(i) * spacing();
  }
  /// Rectangle-rule L2 norm, (sum |v_i|^2 * 2^-scale_log2)^(1/2).
  double discrete_norm() const { return std::sqrt(energy(values) * spacing()); }
};

/// The cascade iteration ran out of iterations before the sup-norm change
/// dropped below tolerance. Carries the last iterate for inspection.
struct NoConvergence : Error {
  NoConvergence(SampledFunction iterate, int iters, double res)
      : Error("cascade did not converge after " + std::to_string(iters) +
              " iterations, last sup-change " + std::to_string(res)),
        last_iterate(std::move(iterate)),
        iterations(iters),
        residual(res) {}
  SampledFunction last_iterate;
  int iterations;
  double residual;
};

struct CascadeResult {
  SampledFunction phi;
  int iterations = 0;
  double final_change = 0.0;
};

/// Realize the scaling function on a dyadic grid by fixed-point iteration of
/// the two-scale relation,
///
///   f_{n+1}(x) = sqrt(2) sum_k alpha_k f_n(2x - k),
///
/// starting from the box function on [0, 1). A filter supported on
/// [offset, offset+len-1] yields phi supported on the same interval; samples
/// are stored for the full closed interval, so both endpoints are present.
/// Convergence is measured by the sup-norm change between iterates.
///
/// Preconditions: the filter passes smith_barnwell_check at module defaults
/// (FilterNotQMF), scale_log2 >= 1 and max_iters >= 1.
inline CascadeResult cascade_scaling(const ScalingFilter& filter, int scale_log2,
                                     int max_iters = defaults::cascade_max_iters,
                                     double tol = defaults::cascade_tol) {
  if (scale_log2 < 1) throw std::invalid_argument("cascade_scaling: scale_log2 must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("cascade_scaling: max_iters must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("cascade_scaling: tol must be positive");
  const CheckReport sb = smith_barnwell_check(filter);
  if (!sb.pass) throw FilterNotQMF(sb.max_deviation);

  const CVec& taps = filter.coeffs();
  const int len = filter.length();
  const int res = 1 << scale_log2;  // grid points per unit interval
  const std::size_t n = static_cast<std::size_t>(std::max(len - 1, 0)) * res + 1;

  // work in support-local coordinates g(x) = phi(x + offset), x in [0, len-1]
  CVec cur(n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<long long>(i) < res) cur[i] = Complex{1.0, 0.0};
  }

  CVec next(n);
  double change = 0.0;
  for (int iter = 1; iter <= max_iters; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      const long long two_i = 2 * static_cast<long long>(i);
      for (int j = 0; j < len; ++j) {
        const long long src = two_i - static_cast<long long>(j) * res;
        if (src >= 0 && src < static_cast<long long>(n)) {
          acc += taps[static_cast<std::size_t>(j)] * cur[static_cast<std::size_t>(src)];
        }
      }
      next[i] = kSqrt2 * acc;
    }
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - cur[i]));
    cur.swap(next);
    if (change <= tol) {
      return CascadeResult{SampledFunction{filter.offset(), scale_log2, std::move(cur)}, iter,
                           change};
    }
  }
  throw NoConvergence(SampledFunction{filter.offset(), scale_log2, std::move(cur)}, max_iters,
                      change);
}

/// Realize the wavelet from converged scaling-function samples,
///
///   psi(x) = sqrt(2) sum_k beta_k phi(2x - k),
///
/// at the same grid spacing as phi. The support start is floored to an
/// integer grid index; a grid at scale_log2 >= 1 resolves the half-integer
/// endpoints exactly (GridMismatch otherwise).
inline SampledFunction realize_wavelet(const SampledFunction& phi, const WaveletSystem& system) {
  if (phi.scale_log2 < 1) {
    throw GridMismatch("realize_wavelet: phi must be sampled at scale_log2 >= 1");
  }
  if (phi.values.empty()) throw std::invalid_argument("realize_wavelet: phi has no samples");
  const FilterCoeffs& w = system.wavelet;
  const int res = 1 << phi.scale_log2;
  const int phi_first = phi.support_start;
  // psi is supported on [ (phi_first + w_first)/2 , (phi_last + w_last)/2 ]
  const int lo2 = phi_first + w.first_index();
  const int hi2 = (phi_first + static_cast<int>((phi.values.size() - 1)) / res) + w.last_index();
  const int start = (lo2 >= 0) ? lo2 / 2 : -((-lo2 + 1) / 2);
  const int end = (hi2 >= 0) ? (hi2 + 1) / 2 : -((-hi2) / 2);
  const std::size_t n = static_cast<std::size_t>(end - start) * res + 1;

  SampledFunction psi{start, phi.scale_log2, CVec(n, Complex{0.0, 0.0})};
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < w.length(); ++j) {
      // sample index of phi(2x - k) for x = start + i/res, k = w.offset + j
      const long long src = (2LL * start - phi_first - w.offset - j) * res + 2LL * i;
      if (src >= 0 && src < static_cast<long long>(phi.values.size())) {
        acc += w.coeffs[static_cast<std::size_t>(j)] * phi.values[static_cast<std::size_t>(src)];
      }
    }
    psi.values[i] = kSqrt2 * acc;
  }
  return psi;
}

/// Inner products of f against integer translates of g, rectangle rule on
/// the shared dyadic grid. Translates are exact index shifts.
struct GramTable {
  int min_shift = 0;
  CVec values;

  Complex at(int k) const {
    const int j = k - min_shift;
    if (j < 0 || j >= static_cast<int>(values.size())) return Complex{0.0, 0.0};
    return values[static_cast<std::size_t>(j)];
  }
};

/// G[k] = sum_x f(x) conj(g(x - k)) * spacing, for k in [min_shift, max_shift].
inline GramTable cross_gram(const SampledFunction& f, const SampledFunction& g, int min_shift,
                            int max_shift) {
  if (f.scale_log2 != g.scale_log2) {
    throw GridMismatch("cross_gram: samples live on different dyadic grids");
  }
  if (min_shift > max_shift) throw std::invalid_argument("cross_gram: empty shift range");
  const int res = 1 << f.scale_log2;
  GramTable table{min_shift, CVec(static_cast<std::size_t>(max_shift - min_shift + 1))};
  for (int k = min_shift; k <= max_shift; ++k) {
    Complex acc{0.0, 0.0};
    const long long delta = (static_cast<long long>(f.support_start) - g.support_start - k) * res;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      const long long src = static_cast<long long>(i) + delta;
      if (src >= 0 && src < static_cast<long long>(g.values.size())) {
        acc += f.values[i] * std::conj(g.values[static_cast<std::size_t>(src)]);
      }
    }
    table.values[static_cast<std::size_t>(k - min_shift)] = acc * f.spacing();
  }
  return table;
}

inline GramTable translate_gram(const SampledFunction& f, int min_shift, int max_shift) {
  return cross_gram(f, f, min_shift, max_shift);
}

/// max_k | G[k] - delta_{k,0} | over the table's shift range.
inline double gram_delta_deviation(const GramTable& table) {
  double dev = 0.0;
  for (std::size_t j = 0; j < table.values.size(); ++j) {
    const int k = table.min_shift + static_cast<int>(j);
    const Complex target = (k == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    dev = std::max(dev, std::abs(table.values[j] - target));
  }
  return dev;
}

/// max | G[k] | (no delta target); for cross-orthogonality checks.
inline double gram_max_abs(const GramTable& table) {
  double dev = 0.0;
  for (const Complex& z : table.values) dev = std::max(dev, std::abs(z));
  return dev;
}

}  // namespace mra

#endif  // MRA_CASCADE_HPP
