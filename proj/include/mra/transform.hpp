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
#ifndef MRA_TRANSFORM_HPP
#define MRA_TRANSFORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "mra/filters.hpp"

namespace mra {

/// A finite signal: coefficients of a function over the fine-scale basis.
/// Multi-level decomposition requires the length to be divisible by
/// 2^levels; power-of-two lengths admit every level count.
using Signal = CVec;

/// Result of a multi-level orthogonal decomposition: one coarsest
/// approximation band plus one detail band per level, stored coarsest first
/// (details[j] has length approx.size() * 2^j).
struct Decomposition {
  CVec approx;
  std::vector<CVec> details;
  std::string system_id;

  int levels() const { return static_cast<int>(details.size()); }
};

namespace detail {

inline std::size_t wrap_index(long long i, std::size_t n) {
  const long long m = static_cast<long long>(n);
  long long r = i % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

}  // namespace detail

/// One analysis step, periodic (circular) boundary handling:
///
///   a[k] = sum_n conj(alpha_{n-2k}) s[n]
///   d[k] = sum_n conj(beta_{n-2k})  s[n]
///
/// Circular convolution keeps the split exactly orthogonal on finite
/// signals, so |a|^2 + |d|^2 = |s|^2 up to rounding.
inline std::pair<CVec, CVec> analyze_once(const Signal& signal, const WaveletSystem& system) {
  const std::size_t n = signal.size();
  if (n < 2 || n % 2 != 0) throw OddLength("analyze_once: signal length must be even and >= 2");
  const std::size_t half = n / 2;
  const FilterCoeffs& a = system.scaling.sequence();
  const FilterCoeffs& w = system.wavelet;
  CVec approx(half, Complex{0.0, 0.0});
  CVec detail_band(half, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < half; ++k) {
    Complex sa{0.0, 0.0};
    for (int j = 0; j < a.length(); ++j) {
      const std::size_t src = detail::wrap_index(
          static_cast<long long>(a.offset) + j + 2 * static_cast<long long>(k), n);
      sa += std::conj(a.coeffs[static_cast<std::size_t>(j)]) * signal[src];
    }
    approx[k] = sa;
    Complex sd{0.0, 0.0};
    for (int j = 0; j < w.length(); ++j) {
      const std::size_t src = detail::wrap_index(
          static_cast<long long>(w.offset) + j + 2 * static_cast<long long>(k), n);
      sd += std::conj(w.coeffs[static_cast<std::size_t>(j)]) * signal[src];
    }
    detail_band[k] = sd;
  }
  return {std::move(approx), std::move(detail_band)};
}

/// One synthesis step, the adjoint of analyze_once:
///
///   s[n] = sum_k alpha_{n-2k} a[k] + sum_k beta_{n-2k} d[k].
///
/// Exact inverse of analyze_once up to rounding for any orthonormal system.
inline Signal synthesize_once(const CVec& approx, const CVec& detail_band,
                              const WaveletSystem& system) {
  if (approx.size() != detail_band.size()) {
    throw LengthMismatch("synthesize_once: approx and detail lengths differ");
  }
  if (approx.empty()) throw LengthMismatch("synthesize_once: empty bands");
  const std::size_t n = 2 * approx.size();
  const FilterCoeffs& a = system.scaling.sequence();
  const FilterCoeffs& w = system.wavelet;
  Signal out(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < approx.size(); ++k) {
    for (int j = 0; j < a.length(); ++j) {
      const std::size_t dst = detail::wrap_index(
          static_cast<long long>(a.offset) + j + 2 * static_cast<long long>(k), n);
      out[dst] += a.coeffs[static_cast<std::size_t>(j)] * approx[k];
    }
    for (int j = 0; j < w.length(); ++j) {
      const std::size_t dst = detail::wrap_index(
          static_cast<long long>(w.offset) + j + 2 * static_cast<long long>(k), n);
      out[dst] += w.coeffs[static_cast<std::size_t>(j)] * detail_band[k];
    }
  }
  return out;
}

/// Multi-level analysis: repeatedly split the approximation band. Requires
/// 2^levels to divide the signal length (TooManyLevels otherwise).
inline Decomposition analyze(const Signal& signal, const WaveletSystem& system, int levels) {
  if (levels < 1) throw std::invalid_argument("analyze: levels must be >= 1");
  if (levels > 62) throw TooManyLevels("analyze: level count out of range");
  const unsigned long long block = 1ull << levels;
  if (signal.empty() || signal.size() % block != 0) {
    throw TooManyLevels("analyze: 2^levels must divide the signal length");
  }
  Decomposition decomp;
  decomp.system_id = system_id(system);
  decomp.details.resize(static_cast<std::size_t>(levels));
  CVec cur = signal;
  for (int lvl = 0; lvl < levels; ++lvl) {
    auto [approx, detail_band] = analyze_once(cur, system);
    // coarsest band is stored first
    decomp.details[static_cast<std::size_t>(levels - 1 - lvl)] = std::move(detail_band);
    cur = std::move(approx);
  }
  decomp.approx = std::move(cur);
  return decomp;
}

/// Structural validation of a decomposition (band count and doubling
/// lengths); throws MalformedDecomposition.
inline void validate(const Decomposition& decomp) {
  if (decomp.approx.empty() || decomp.details.empty()) {
    throw MalformedDecomposition("decomposition must have an approx band and >= 1 detail bands");
  }
  std::size_t expect = decomp.approx.size();
  for (std::size_t j = 0; j < decomp.details.size(); ++j) {
    if (decomp.details[j].size() != expect) {
      throw MalformedDecomposition("detail band " + std::to_string(j) +
                                   " has length " + std::to_string(decomp.details[j].size()) +
                                   ", expected " + std::to_string(expect));
    }
    expect *= 2;
  }
}

/// Multi-level synthesis, inverse of analyze: perfect reconstruction up to
/// rounding for any orthonormal system.
inline Signal synthesize(const Decomposition& decomp, const WaveletSystem& system) {
  validate(decomp);
  Signal cur = decomp.approx;
  for (const CVec& detail_band : decomp.details) {
    cur = synthesize_once(cur, detail_band, system);
  }
  return cur;
}

/// Total energy of a decomposition, sum of all band energies.
inline double decomposition_energy(const Decomposition& decomp) {
  double e = energy(decomp.approx);
  for (const CVec& d : decomp.details) e += energy(d);
  return e;
}

}  // namespace mra

#endif  // MRA_TRANSFORM_HPP
