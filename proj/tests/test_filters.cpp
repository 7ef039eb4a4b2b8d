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
#include <doctest.h>

#include "support.hpp"

using namespace mra;
using namespace mra_test;

TEST_CASE("scaling filter construction accepts the step filter") {
  ScalingFilter f = make_scaling_filter(0, {Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}}, 1e-12);
  CHECK(f.offset() == 0);
  REQUIRE(f.length() == 2);
  CHECK(f.coeffs()[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));

  // idempotent on its own output
  ScalingFilter g = make_scaling_filter(f.offset(), f.coeffs(), 1e-12);
  CHECK(g.offset() == f.offset());
  CHECK(g.coeffs() == f.coeffs());
}

TEST_CASE("scaling filter construction rejects bad input") {
  CHECK_THROWS_AS(make_scaling_filter(0, {}), EmptyFilter);
  CHECK_THROWS_AS(make_scaling_filter(0, {Complex{0, 0}, Complex{0, 0}}), EmptyFilter);

  // sum 2 instead of sqrt(2)
  try {
    make_scaling_filter(0, {Complex{1, 0}, Complex{1, 0}});
    FAIL("expected NormalizationViolation");
  } catch (const NormalizationViolation& e) {
    CHECK(e.invariant == "sum");
    CHECK(close(e.deviation, 2.0 - kSqrt2, 1e-12));
  }

  // sum is sqrt(2) but energy is 2
  try {
    make_scaling_filter(0, {Complex{kSqrt2, 0}});
    FAIL("expected NormalizationViolation");
  } catch (const NormalizationViolation& e) {
    CHECK(e.invariant == "energy");
    CHECK(close(e.deviation, 1.0, 1e-12));
  }
}

TEST_CASE("scaling filter construction trims zero ends") {
  ScalingFilter f = make_scaling_filter(
      -1, {Complex{0, 0}, Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}, Complex{0, 0}});
  CHECK(f.offset() == 0);
  CHECK(f.length() == 2);
}

TEST_CASE("low-pass symbol values for the step filter") {
  ScalingFilter haar = haar_filter();
  CHECK(cclose(eval_m0(haar, 0.0), Complex{1, 0}, 1e-15));
  CHECK(std::abs(eval_m0(haar, 0.5)) <= 1e-15);
  // hand evaluation: (1/2)(1 + e^{-pi i / 2}) = (1 - i)/2
  CHECK(cclose(eval_m0(haar, 0.25), Complex{0.5, -0.5}, 1e-15));
}

TEST_CASE("low-pass symbol is exactly periodic on representable points") {
  ScalingFilter d4 = d4_filter();
  for (int i = 0; i < 64; ++i) {
    const double xi = static_cast<double>(i) / 64.0 - 0.5;  // dyadic, xi + 1 exact
    CHECK(eval_m0(d4, xi) == eval_m0(d4, xi + 1.0));
    CHECK(eval_m0(d4, xi) == eval_m0(d4, xi - 1.0));
  }
}

TEST_CASE("smith-barnwell check on the step filter") {
  CheckReport r = smith_barnwell_check(haar_filter(), 4096, 1e-12);
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-15);
  CHECK(r.params.at("grid_points") == 4096.0);
}

TEST_CASE("smith-barnwell check accepts raw unnormalized sequences") {
  // [1, 1] has a constant deviation of exactly 1; first grid point reported
  CheckReport r = smith_barnwell_check(FilterCoeffs{0, {Complex{1, 0}, Complex{1, 0}}}, 4096, 1e-10);
  CHECK_FALSE(r.pass);
  CHECK(close(r.max_deviation, 1.0, 1e-12));
  CHECK(r.argmax_xi == 0.0);

  // a single unit tap has a constant symbol with |m0|^2 = 1/2 on both branches
  CheckReport unit = smith_barnwell_check(FilterCoeffs{0, {Complex{1, 0}}}, 512, 1e-12);
  CHECK(unit.pass);
  CHECK(unit.max_deviation <= 1e-15);

  // a single 1/sqrt(2) tap gives 1/4 + 1/4, deviation 1/2
  CheckReport small = smith_barnwell_check(FilterCoeffs{0, {Complex{kInvSqrt2, 0}}}, 512, 1e-10);
  CHECK_FALSE(small.pass);
  CHECK(close(small.max_deviation, 0.5, 1e-12));

  CHECK_THROWS_AS(smith_barnwell_check(FilterCoeffs{0, {Complex{1, 0}}}, 1, 1e-10),
                  std::invalid_argument);
}

TEST_CASE("d4 oracle solves the defining system and matches the frozen coefficients") {
  D4OracleResult oracle = run_d4_oracle();
  CHECK(oracle.system_residual <= 1e-13);
  for (int i = 0; i < 4; ++i) {
    CHECK(close(oracle.coeffs[static_cast<std::size_t>(i)], kD4[static_cast<std::size_t>(i)], 1e-12));
  }

  // the 4-tap rotation family with angle pi/3 must give the same filter
  CVec fam = four_tap_family(kPi / 3.0);
  for (int i = 0; i < 4; ++i) {
    CHECK(close(fam[static_cast<std::size_t>(i)].real(), kD4[static_cast<std::size_t>(i)], 1e-13));
  }

  // cross-check the power-complementarity identity on independent grids,
  // one of them prime so it shares no points with the dyadic grid
  CHECK(smith_barnwell_check(d4_filter(), 4096, 1e-10).pass);
  CHECK(smith_barnwell_check(d4_filter(), 12289, 1e-10).pass);
  CHECK(smith_barnwell_check(d4_filter(), 9973, 1e-10).pass);
}

TEST_CASE("wavelet derivation reproduces the step wavelet") {
  ScalingFilter haar = haar_filter();

  WaveletSystem raw = derive_wavelet(haar, /*normalize_support=*/false);
  CHECK(raw.wavelet.offset == -2);
  REQUIRE(raw.wavelet.length() == 2);
  CHECK(cclose(raw.wavelet.at(-2), Complex{-kInvSqrt2, 0}, 1e-15));
  CHECK(cclose(raw.wavelet.at(-1), Complex{kInvSqrt2, 0}, 1e-15));
  CHECK(raw.provenance.shift == 0);

  WaveletSystem norm = derive_wavelet(haar, /*normalize_support=*/true);
  CHECK(norm.wavelet.offset == 0);
  REQUIRE(norm.wavelet.length() == 2);
  CHECK(cclose(norm.wavelet.at(0), Complex{kInvSqrt2, 0}, 1e-15));
  CHECK(cclose(norm.wavelet.at(1), Complex{-kInvSqrt2, 0}, 1e-15));
  CHECK(norm.provenance.shift == 2);
  CHECK(cclose(norm.provenance.scalar, Complex{-1, 0}, 0.0));
}

TEST_CASE("wavelet derivation requires a power-complementary filter") {
  // passes both constructor invariants but has a nonzero lag-2 product
  const double a = kSqrt2 / 6.0, b = 2.0 * kSqrt2 / 3.0;
  ScalingFilter f = make_scaling_filter(0, {Complex{a, 0}, Complex{b, 0}, Complex{a, 0}}, 1e-12);
  CHECK_THROWS_AS(derive_wavelet(f), FilterNotQMF);
}

TEST_CASE("derived wavelet symbol completes the filter bank") {
  for (const ScalingFilter& f : {haar_filter(), d4_filter()}) {
    WaveletSystem sys = derive_wavelet(f, true);
    CHECK(close(std::abs(energy(sys.wavelet.coeffs) - 1.0), 0.0, 1e-12));
    CHECK(std::abs(coeff_sum(sys.wavelet.coeffs)) <= 1e-12);
    for (int i = 0; i < 4096; ++i) {
      const double xi = i / 4096.0;
      const double power =
          std::norm(eval_m0(f, xi)) + std::norm(eval_m0(sys.wavelet, xi)) - 1.0;
      CHECK(std::abs(power) <= 1e-10);
    }
  }
}

static double unitarity_deviation(const WaveletSystem& sys, int grid) {
  double dev = 0.0;
  const FilterCoeffs& a = sys.scaling.sequence();
  for (int i = 0; i < grid; ++i) {
    const double xi = static_cast<double>(i) / grid;
    const Complex m0 = eval_m0(a, xi), m0h = eval_m0(a, xi + 0.5);
    const Complex g = eval_m0(sys.wavelet, xi), gh = eval_m0(sys.wavelet, xi + 0.5);
    dev = std::max(dev, std::abs(std::norm(m0) + std::norm(g) - 1.0));
    dev = std::max(dev, std::abs(std::norm(m0h) + std::norm(gh) - 1.0));
    dev = std::max(dev, std::abs(m0 * std::conj(g) + m0h * std::conj(gh)));
  }
  return dev;
}

TEST_CASE("modulation matrix is unitary for derived and modulated systems") {
  std::mt19937_64 rng(7021);
  std::vector<WaveletSystem> systems;
  systems.push_back(derive_wavelet(haar_filter(), true));
  systems.push_back(derive_wavelet(d4_filter(), true));
  systems.push_back(derive_wavelet(d4_filter(), false));
  for (int k : {2, 3, 5}) systems.push_back(derive_wavelet(random_qmf_filter(rng, k), true));

  const std::vector<TrigPolynomial> modulations = {
      {0, {Complex{1, 0}}},           // identity
      {0, {Complex{-1, 0}}},          // sign flip
      {0, {Complex{0, 1}}},           // complex unimodular scalar
      {1, {Complex{1, 0}}},           // e^{-2 pi i xi}
      {2, {Complex{1, 0}}},           // e^{-4 pi i xi}
      {-3, {Complex{-1, 0}}},         // negative frequency with flip
  };
  for (const WaveletSystem& base : systems) {
    CHECK(unitarity_deviation(base, 512) <= 1e-10);
    for (const TrigPolynomial& nu : modulations) {
      WaveletSystem mod = modulate(base, nu, 512, 1e-10);
      CHECK(unitarity_deviation(mod, 512) <= 1e-10);
      CHECK(close(energy(mod.wavelet.coeffs), 1.0, 1e-10));
      CHECK(std::abs(coeff_sum(mod.wavelet.coeffs)) <= 1e-10);
    }
  }
}

TEST_CASE("modulation by the identity returns the same system") {
  WaveletSystem sys = derive_wavelet(haar_filter(), true);
  WaveletSystem same = modulate(sys, TrigPolynomial{0, {Complex{1, 0}}});
  CHECK(same.wavelet.offset == sys.wavelet.offset);
  CHECK(same.wavelet.coeffs == sys.wavelet.coeffs);
  CHECK(same.provenance.shift == sys.provenance.shift);
}

TEST_CASE("monomial modulation shifts the wavelet sequence by twice the frequency") {
  WaveletSystem sys = derive_wavelet(haar_filter(), true);

  WaveletSystem shifted = modulate(sys, TrigPolynomial{1, {Complex{1, 0}}});
  CHECK(shifted.wavelet.offset == sys.wavelet.offset + 2);
  CHECK(shifted.wavelet.coeffs == sys.wavelet.coeffs);
  CHECK(shifted.provenance.shift == sys.provenance.shift + 2);

  WaveletSystem shifted2 = modulate(sys, TrigPolynomial{2, {Complex{1, 0}}});
  CHECK(shifted2.wavelet.offset == sys.wavelet.offset + 4);

  WaveletSystem negated = modulate(sys, TrigPolynomial{0, {Complex{-1, 0}}});
  CHECK(negated.wavelet.offset == sys.wavelet.offset);
  CHECK(cclose(negated.wavelet.at(0), -sys.wavelet.at(0), 0.0));
}

TEST_CASE("modulation rejects non-unimodular and non-monomial multipliers") {
  WaveletSystem sys = derive_wavelet(haar_filter(), true);

  // 1 + e^{-2 pi i xi} has |nu(0)| = 2
  try {
    modulate(sys, TrigPolynomial{0, {Complex{1, 0}, Complex{1, 0}}});
    FAIL("expected NotUnimodular");
  } catch (const NotUnimodular& e) {
    CHECK(close(e.max_deviation, 1.0, 1e-12));
  }

  // unimodular at both points of a 2-point grid but not a monomial
  TrigPolynomial tricky{0, {Complex{0.5, 0.5}, Complex{0.5, -0.5}}};
  CHECK(std::abs(std::abs(tricky(0.0)) - 1.0) <= 1e-15);
  CHECK(std::abs(std::abs(tricky(0.5)) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(modulate(sys, tricky, 2, 1e-10), UnsupportedModulation);
}

TEST_CASE("system id is stable and content-sensitive") {
  WaveletSystem a = derive_wavelet(haar_filter(), true);
  WaveletSystem b = derive_wavelet(haar_filter(), true);
  CHECK(system_id(a) == system_id(b));
  WaveletSystem c = modulate(a, TrigPolynomial{1, {Complex{1, 0}}});
  CHECK(system_id(a) != system_id(c));
}
