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
#ifndef MRA_FILTERS_HPP
#define MRA_FILTERS_HPP

#include <cstdint>
#include <cstdio>
#include <utility>

#include "mra/core.hpp"

namespace mra {

/// Two-scale coefficient sequence alpha_k of a scaling function:
///
///   (1/sqrt(2)) phi(x/2) = sum_k alpha_k phi(x - k)
///
/// Construction trims exact zero coefficients at both ends and enforces the
/// two normalization invariants
///
///   sum_k alpha_k        = sqrt(2)   (low-pass symbol equals 1 at xi = 0)
///   sum_k |alpha_k|^2    = 1         (unit energy, orthonormal translates)
///
/// each within `norm_tol`.
class ScalingFilter {
 public:
  ScalingFilter(int offset, CVec coeffs, double norm_tol = defaults::norm_tol) {
    // canonical trimming: drop exact zeros at both ends
    std::size_t lo = 0, hi = coeffs.size();
    while (lo < hi && coeffs[lo] == Complex{0.0, 0.0}) ++lo;
    while (hi > lo && coeffs[hi - 1] == Complex{0.0, 0.0}) --hi;
    if (lo == hi) throw EmptyFilter{};
    seq_.offset = offset + static_cast<int>(lo);
    seq_.coeffs.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                       coeffs.begin() + static_cast<std::ptrdiff_t>(hi));

    const double sum_dev = std::abs(coeff_sum(seq_.coeffs) - Complex{kSqrt2, 0.0});
    if (sum_dev > norm_tol) throw NormalizationViolation("sum", sum_dev);
    const double energy_dev = std::abs(energy(seq_.coeffs) - 1.0);
    if (energy_dev > norm_tol) throw NormalizationViolation("energy", energy_dev);
  }

  const FilterCoeffs& sequence() const { return seq_; }
  int offset() const { return seq_.offset; }
  const CVec& coeffs() const { return seq_.coeffs; }
  int length() const { return seq_.length(); }

 private:
  FilterCoeffs seq_;
};

inline ScalingFilter make_scaling_filter(int offset, CVec coeffs,
                                         double norm_tol = defaults::norm_tol) {
  return ScalingFilter(offset, std::move(coeffs), norm_tol);
}

/// Low-pass symbol of a two-scale coefficient sequence,
/// m0(xi) = (1/sqrt(2)) sum_k c_k e^{-2 pi i k xi}. Exactly 1-periodic via
/// argument reduction; also used for wavelet sequences (then usually called
/// the high-pass symbol G).
inline Complex eval_m0(const FilterCoeffs& filter, double xi) {
  return kInvSqrt2 * eval_fourier_series(filter, xi);
}

inline Complex eval_m0(const ScalingFilter& filter, double xi) {
  return eval_m0(filter.sequence(), xi);
}

/// Verify the Smith-Barnwell (power complementarity) condition
///
///   |m0(xi)|^2 + |m0(xi + 1/2)|^2 = 1
///
/// on the uniform grid xi_i = i / grid_points. Accepts any raw coefficient
/// sequence, normalized or not; failures are reported, not thrown.
inline CheckReport smith_barnwell_check(const FilterCoeffs& filter,
                                        int grid_points = defaults::grid_points,
                                        double tol = defaults::check_tol) {
  if (grid_points < 2) throw std::invalid_argument("smith_barnwell_check: grid_points must be >= 2");
  if (tol <= 0.0) throw std::invalid_argument("smith_barnwell_check: tol must be positive");
  std::vector<double> dev(static_cast<std::size_t>(grid_points));
  double max_dev = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double xi = static_cast<double>(i) / static_cast<double>(grid_points);
    dev[static_cast<std::size_t>(i)] =
        std::abs(std::norm(eval_m0(filter, xi)) + std::norm(eval_m0(filter, xi + 0.5)) - 1.0);
    max_dev = std::max(max_dev, dev[static_cast<std::size_t>(i)]);
  }
  // earliest grid point within rounding of the maximum, so plateaus report
  // their first point deterministically
  double argmax = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    if (dev[static_cast<std::size_t>(i)] >= max_dev * (1.0 - 1e-12)) {
      argmax = static_cast<double>(i) / static_cast<double>(grid_points);
      break;
    }
  }
  CheckReport report;
  report.max_deviation = max_dev;
  report.argmax_xi = argmax;
  report.pass = max_dev <= tol;
  report.params = {{"grid_points", static_cast<double>(grid_points)}, {"tol", tol}};
  return report;
}

inline CheckReport smith_barnwell_check(const ScalingFilter& filter,
                                        int grid_points = defaults::grid_points,
                                        double tol = defaults::check_tol) {
  return smith_barnwell_check(filter.sequence(), grid_points, tol);
}

/// 1-periodic trigonometric polynomial t(xi) = sum_k c_k e^{-2 pi i k xi}
/// with finitely many Fourier coefficients.
struct TrigPolynomial {
  int offset = 0;
  CVec coeffs;

  Complex operator()(double xi) const {
    return eval_fourier_series(FilterCoeffs{offset, coeffs}, xi);
  }
};

/// Record of the support normalization and modulations applied to a wavelet
/// filter: the accumulated index shift of the coefficient sequence and the
/// accumulated unimodular scalar factor.
struct Provenance {
  long long shift = 0;
  Complex scalar{1.0, 0.0};
};

/// A scaling filter together with a derived wavelet filter beta_k, the
/// two-scale coefficients of the wavelet: psi(x) = sqrt(2) sum_k beta_k phi(2x - k).
struct WaveletSystem {
  ScalingFilter scaling;
  FilterCoeffs wavelet;
  Provenance provenance;
};

namespace detail {

inline void validate_wavelet_sequence(const FilterCoeffs& w, double norm_tol) {
  const double energy_dev = std::abs(energy(w.coeffs) - 1.0);
  if (energy_dev > norm_tol) throw NormalizationViolation("wavelet energy", energy_dev);
  const double sum_dev = std::abs(coeff_sum(w.coeffs));
  if (sum_dev > norm_tol) throw NormalizationViolation("wavelet sum", sum_dev);
}

}  // namespace detail

/// Derive the wavelet filter from a scaling filter.
///
/// The wavelet symbol is G(xi) = e^{2 pi i xi} conj(m0(xi + 1/2)). Writing
/// m0(xi) = (1/sqrt(2)) sum_k alpha_k e^{-2 pi i k xi} and expanding,
///
///   conj(m0(xi + 1/2)) = (1/sqrt(2)) sum_k conj(alpha_k) (-1)^k e^{+2 pi i k xi}
///   G(xi)              = (1/sqrt(2)) sum_k (-1)^k conj(alpha_k) e^{+2 pi i (k+1) xi}
///                      = (1/sqrt(2)) sum_n (-1)^{n+1} conj(alpha_{-n-1}) e^{-2 pi i n xi}
///
/// (substituting n = -(k+1)), so the wavelet coefficients are
///
///   beta_n = (-1)^{n+1} conj(alpha_{-n-1}).
///
/// With `normalize_support` set, the sequence is additionally shifted by an
/// even amount so its support starts at index 0 (index 1 when the parity of
/// offset + length forces it) and negated if the first coefficient has
/// negative real part. Both moves multiply the wavelet symbol by a unimodular
/// monomial and preserve every orthonormality property; odd shifts would not.
///
/// Precondition: the filter passes smith_barnwell_check at the module default
/// tolerance (throws FilterNotQMF otherwise).
inline WaveletSystem derive_wavelet(const ScalingFilter& filter, bool normalize_support = true,
                                    double norm_tol = defaults::norm_tol) {
  const CheckReport sb = smith_barnwell_check(filter);
  if (!sb.pass) throw FilterNotQMF(sb.max_deviation);

  const FilterCoeffs& a = filter.sequence();
  FilterCoeffs w;
  w.offset = -a.last_index() - 1;
  w.coeffs.resize(a.coeffs.size());
  for (int n = w.offset; n <= -a.first_index() - 1; ++n) {
    const double sign = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
    w.coeffs[static_cast<std::size_t>(n - w.offset)] = sign * std::conj(a.at(-n - 1));
  }

  Provenance prov;
  if (normalize_support) {
    long long shift = -static_cast<long long>(w.offset);
    if (shift % 2 != 0) ++shift;  // only even shifts keep the system orthonormal
    w.offset += static_cast<int>(shift);
    Complex scalar{1.0, 0.0};
    if (w.coeffs.front().real() < 0.0) {
      scalar = Complex{-1.0, 0.0};
      for (Complex& c : w.coeffs) c = -c;
    }
    prov.shift = shift;
    prov.scalar = scalar;
  }

  detail::validate_wavelet_sequence(w, norm_tol);
  return WaveletSystem{filter, std::move(w), prov};
}

/// Replace the wavelet symbol G(xi) by nu(2 xi) G(xi), i.e. the realized
/// wavelet transform by psi_new^(xi) = nu(xi) psi_old^(xi). Only monomials
/// nu(xi) = c e^{-2 pi i M xi} with |c| = 1 keep the filter support finite;
/// such a nu shifts the wavelet sequence by 2M (the realized wavelet by M)
/// and scales it by c. Any other nu that is unimodular on the verification
/// grid is rejected with UnsupportedModulation; a nu that is not unimodular
/// on the grid is rejected with NotUnimodular first.
inline WaveletSystem modulate(const WaveletSystem& system, const TrigPolynomial& nu,
                              int grid_points = defaults::grid_points,
                              double tol = defaults::check_tol) {
  if (grid_points < 1) throw std::invalid_argument("modulate: grid_points must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("modulate: tol must be positive");

  double max_dev = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double xi = static_cast<double>(i) / static_cast<double>(grid_points);
    max_dev = std::max(max_dev, std::abs(std::abs(nu(xi)) - 1.0));
  }
  if (max_dev > tol) throw NotUnimodular(max_dev);

  int monomial_index = -1;
  int significant = 0;
  for (std::size_t j = 0; j < nu.coeffs.size(); ++j) {
    if (std::abs(nu.coeffs[j]) > tol) {
      ++significant;
      monomial_index = static_cast<int>(j);
    }
  }
  if (significant != 1) {
    throw UnsupportedModulation(
        "modulation is unimodular on the grid but not a monomial c*e^{-2 pi i M xi}; "
        "only monomials preserve finite filter support");
  }

  const int freq = nu.offset + monomial_index;
  Complex c = nu.coeffs[static_cast<std::size_t>(monomial_index)];
  c /= std::abs(c);

  WaveletSystem out{system.scaling, system.wavelet, system.provenance};
  out.wavelet.offset += 2 * freq;
  for (Complex& v : out.wavelet.coeffs) v *= c;
  out.provenance.shift += 2LL * freq;
  out.provenance.scalar *= c;
  detail::validate_wavelet_sequence(out.wavelet, std::max(defaults::norm_tol, 4.0 * tol));
  return out;
}

/// Stable content fingerprint of a wavelet system (FNV-1a over the formatted
/// coefficients). Used as the provenance id in decompositions and reports.
inline std::string system_id(const WaveletSystem& system) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const char* s) {
    for (; *s; ++s) {
      h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*s));
      h *= 1099511628211ull;
    }
  };
  char buf[96];
  auto mix_sequence = [&](const char* tag, const FilterCoeffs& f) {
    std::snprintf(buf, sizeof buf, "%s:%d;", tag, f.offset);
    mix(buf);
    for (const Complex& z : f.coeffs) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g;", z.real(), z.imag());
      mix(buf);
    }
  };
  mix_sequence("s", system.scaling.sequence());
  mix_sequence("w", system.wavelet);
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace mra

#endif  // MRA_FILTERS_HPP
