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

// Command-line surface of the toolkit. Reports are single-line JSON on
// stdout with pinned key order and float format, so identical inputs give
// byte-identical output. Exit codes: 0 success or check passed, 1 a check ran
// to completion and failed, 2 usage or input errors.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mra/mra.hpp"

namespace {

using namespace mra;

void print_line(const std::string& s) { std::fputs((s + "\n").c_str(), stdout); }

int finish_check(CheckReport report) {
  print_line(report_to_json(report));
  return report.pass ? 0 : 1;
}

struct DeriveOpts {
  std::string filter_path;
  std::string out_path;
  bool raw = false;
};

int run_derive(const DeriveOpts& o) {
  ScalingFilter filter = load_scaling_filter(o.filter_path);
  WaveletSystem sys = derive_wavelet(filter, !o.raw);
  save_system(o.out_path, sys);
  JsonWriter w;
  w.begin_object();
  w.key("wavelet_offset").value(sys.wavelet.offset);
  w.key("wavelet_length").value(sys.wavelet.length());
  w.key("applied_shift").value(sys.provenance.shift);
  w.key("applied_scalar").value(sys.provenance.scalar);
  w.key("system_id").value(system_id(sys));
  w.key("out").value(o.out_path);
  w.end_object();
  print_line(w.str());
  return 0;
}

struct CheckOpts {
  std::string filter_path;
  std::string samples_path;
  int grid = defaults::grid_points;
  double tol = defaults::check_tol;
  double window = defaults::window;
  int step_den = defaults::step_denominator;
  int depth = defaults::product_depth;
  double threshold = 1e-3;
  double support_tol = -1.0;  // default: one grid step
  int max_shift = 3;
};

FourierSamples samples_for_check(const CheckOpts& o, CheckReport* report_params) {
  if (!o.samples_path.empty()) {
    return load_fourier_csv(o.samples_path);
  }
  ScalingFilter filter = load_scaling_filter(o.filter_path);
  if (o.window <= 0.0) throw std::invalid_argument("--window must be positive");
  if (o.step_den < 1) throw std::invalid_argument("--step-den must be >= 1");
  const int count = static_cast<int>(std::llround(2.0 * o.window * o.step_den)) + 1;
  FourierSamples s = sample_phi_hat(filter, -o.window, 1.0 / o.step_den, count, o.depth);
  if (report_params != nullptr) {
    report_params->params["depth"] = static_cast<double>(o.depth);
  }
  return s;
}

int run_check_smith_barnwell(const CheckOpts& o) {
  // raw coefficients on purpose: the check accepts unnormalized sequences
  FilterCoeffs seq = load_filter_coeffs(o.filter_path);
  return finish_check(smith_barnwell_check(seq, o.grid, o.tol));
}

int run_check_lemma1(const CheckOpts& o) {
  CheckReport extra;
  FourierSamples s = samples_for_check(o, &extra);
  CheckReport report = periodization_check(s, o.tol);
  report.params.insert(extra.params.begin(), extra.params.end());
  return finish_check(report);
}

int run_check_support(const CheckOpts& o) {
  CheckReport extra;
  FourierSamples s = samples_for_check(o, &extra);
  const double measure = support_measure(s, o.threshold);
  const double tol = (o.support_tol > 0.0) ? o.support_tol : s.step();
  CheckReport report;
  report.max_deviation = std::max(0.0, 1.0 - measure);
  report.argmax_xi = 0.0;
  report.pass = measure >= 1.0 - tol;
  report.params = {{"threshold", o.threshold},
                   {"tol", tol},
                   {"step", s.step()},
                   {"measure", measure},
                   {"window_start", s.window_start()},
                   {"window_end", s.window_end()}};
  report.params.insert(extra.params.begin(), extra.params.end());
  return finish_check(report);
}

int run_check_gram(const CheckOpts& o) {
  SampledFunction f = load_function_csv(o.samples_path);
  GramTable table = translate_gram(f, -o.max_shift, o.max_shift);
  CheckReport report;
  report.max_deviation = 0.0;
  report.argmax_xi = 0.0;
  for (int k = -o.max_shift; k <= o.max_shift; ++k) {
    const Complex target = (k == 0) ? Complex{1, 0} : Complex{0, 0};
    const double dev = std::abs(table.at(k) - target);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.argmax_xi = static_cast<double>(k);
    }
  }
  report.pass = report.max_deviation <= o.tol;
  report.params = {{"max_shift", static_cast<double>(o.max_shift)},
                   {"tol", o.tol},
                   {"scale_log2", static_cast<double>(f.scale_log2)}};
  return finish_check(report);
}

struct CascadeOpts {
  std::string filter_path;
  std::string out_path;
  int scale = 6;
  int iters = defaults::cascade_max_iters;
  double tol = defaults::cascade_tol;
};

int run_cascade(const CascadeOpts& o) {
  ScalingFilter filter = load_scaling_filter(o.filter_path);
  bool converged = true;
  SampledFunction phi{0, 0, {}};
  int iterations = 0;
  double final_change = 0.0;
  try {
    CascadeResult res = cascade_scaling(filter, o.scale, o.iters, o.tol);
    phi = std::move(res.phi);
    iterations = res.iterations;
    final_change = res.final_change;
  } catch (NoConvergence& e) {
    converged = false;
    phi = std::move(e.last_iterate);
    iterations = e.iterations;
    final_change = e.residual;
  }
  save_function_csv(o.out_path, phi);
  JsonWriter w;
  w.begin_object();
  w.key("converged").value(converged);
  w.key("iterations").value(iterations);
  w.key("final_change").value(final_change);
  w.key("norm").value(phi.discrete_norm());
  w.key("support_start").value(phi.support_start);
  w.key("scale_log2").value(phi.scale_log2);
  w.key("out").value(o.out_path);
  w.end_object();
  print_line(w.str());
  return converged ? 0 : 1;
}

struct RealizeOpts {
  std::string phi_path;
  std::string system_path;
  std::string out_path;
};

int run_realize(const RealizeOpts& o) {
  SampledFunction phi = load_function_csv(o.phi_path);
  WaveletSystem sys = load_system(o.system_path);
  SampledFunction psi = realize_wavelet(phi, sys);
  save_function_csv(o.out_path, psi);
  JsonWriter w;
  w.begin_object();
  w.key("norm").value(psi.discrete_norm());
  w.key("support_start").value(psi.support_start);
  w.key("scale_log2").value(psi.scale_log2);
  w.key("out").value(o.out_path);
  w.end_object();
  print_line(w.str());
  return 0;
}

struct DwtOpts {
  std::string signal_path;
  std::string system_path;
  std::string out_path;
  int levels = 1;
};

int run_dwt(const DwtOpts& o) {
  Signal in = load_signal_csv(o.signal_path);
  WaveletSystem sys = load_system(o.system_path);
  Decomposition dec = analyze(in, sys, o.levels);
  save_decomposition(o.out_path, dec);
  const double ein = energy(in);
  const double edec = decomposition_energy(dec);
  JsonWriter w;
  w.begin_object();
  w.key("levels").value(dec.levels());
  w.key("input_energy").value(ein);
  w.key("decomposition_energy").value(edec);
  w.key("energy_deviation").value(std::abs(ein - edec) / std::max(1.0, ein));
  w.key("system_id").value(dec.system_id);
  w.key("out").value(o.out_path);
  w.end_object();
  print_line(w.str());
  return 0;
}

struct IdwtOpts {
  std::string decomp_path;
  std::string system_path;
  std::string out_path;
};

int run_idwt(const IdwtOpts& o) {
  Decomposition dec = load_decomposition(o.decomp_path);
  WaveletSystem sys = load_system(o.system_path);
  Signal out = synthesize(dec, sys);
  save_signal_csv(o.out_path, out);
  JsonWriter w;
  w.begin_object();
  w.key("length").value(out.size());
  w.key("energy").value(energy(out));
  w.key("out").value(o.out_path);
  w.end_object();
  print_line(w.str());
  return 0;
}

int fail_input(const std::string& what) {
  JsonWriter w;
  w.begin_object();
  w.key("error").value(what);
  w.end_object();
  print_line(w.str());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthonormal wavelet toolkit: filter verification, dyadic realization and\n"
               "multi-level signal decomposition"};
  app.require_subcommand(1);

  DeriveOpts derive_opts;
  CLI::App* derive = app.add_subcommand("derive", "derive the wavelet filter from a scaling filter");
  derive->add_option("--filter", derive_opts.filter_path, "scaling filter JSON")->required();
  derive->add_option("--out", derive_opts.out_path, "output wavelet system JSON")->required();
  derive->add_flag("--raw", derive_opts.raw, "keep the raw support (skip shift/sign normalization)");

  CheckOpts check_opts;
  CLI::App* check = app.add_subcommand("check", "run a verification and exit 0/1 by its outcome");
  check->require_subcommand(1);

  CLI::App* sb = check->add_subcommand("smith-barnwell",
                                       "|m0(xi)|^2 + |m0(xi+1/2)|^2 = 1 on a uniform grid");
  sb->add_option("--filter", check_opts.filter_path, "filter JSON (raw, unvalidated)")->required();
  sb->add_option("--grid", check_opts.grid, "grid points (default 4096)");
  sb->add_option("--tol", check_opts.tol, "tolerance (default 1e-10)");

  CLI::App* lemma1 = check->add_subcommand(
      "lemma1", "orthonormal-translates periodization: sum_k |g^(xi+k)|^2 = 1 per residue");
  lemma1->add_option("--filter", check_opts.filter_path,
                     "scaling filter JSON (g^ built by the truncated product)");
  lemma1->add_option("--samples", check_opts.samples_path, "Fourier samples CSV (xi,re,im)");
  lemma1->add_option("--window", check_opts.window, "half-width of the sample window (default 32)");
  lemma1->add_option("--step-den", check_opts.step_den, "samples per unit interval (default 64)");
  lemma1->add_option("--depth", check_opts.depth, "product truncation depth (default 20)");
  lemma1->add_option("--tol", check_opts.tol, "tolerance (default 1e-10)");

  CLI::App* support = check->add_subcommand(
      "support", "grid estimate of measure(supp g^) with the >= 1 necessity bound");
  support->add_option("--filter", check_opts.filter_path, "scaling filter JSON");
  support->add_option("--samples", check_opts.samples_path, "Fourier samples CSV (xi,re,im)");
  support->add_option("--window", check_opts.window, "half-width of the sample window (default 32)");
  support->add_option("--step-den", check_opts.step_den, "samples per unit interval (default 64)");
  support->add_option("--depth", check_opts.depth, "product truncation depth (default 20)");
  support->add_option("--threshold", check_opts.threshold, "support threshold (default 1e-3)");
  support->add_option("--tol", check_opts.support_tol,
                      "pass when measure >= 1 - tol (default: one grid step)");

  CLI::App* gram = check->add_subcommand(
      "gram", "discrete inner products against integer translates vs delta_{k,0}");
  gram->add_option("--samples", check_opts.samples_path, "function CSV (x,re,im) with sidecar")
      ->required();
  gram->add_option("--max-shift", check_opts.max_shift, "check |k| <= max-shift (default 3)");
  gram->add_option("--tol", check_opts.tol, "tolerance (default 1e-10)");

  CascadeOpts cascade_opts;
  CLI::App* cascade = app.add_subcommand("cascade",
                                         "realize the scaling function on a dyadic grid");
  cascade->add_option("--filter", cascade_opts.filter_path, "scaling filter JSON")->required();
  cascade->add_option("--out", cascade_opts.out_path, "output CSV (+ .meta.json sidecar)")
      ->required();
  cascade->add_option("--scale", cascade_opts.scale, "grid scale, spacing 2^-scale (default 6)");
  cascade->add_option("--iters", cascade_opts.iters, "max iterations (default 100)");
  cascade->add_option("--tol", cascade_opts.tol, "sup-change tolerance (default 1e-10)");

  RealizeOpts realize_opts;
  CLI::App* realize = app.add_subcommand("realize-wavelet",
                                         "realize the wavelet from scaling-function samples");
  realize->add_option("--phi", realize_opts.phi_path, "scaling function CSV (+ sidecar)")
      ->required();
  realize->add_option("--system", realize_opts.system_path, "wavelet system JSON")->required();
  realize->add_option("--out", realize_opts.out_path, "output CSV (+ sidecar)")->required();

  DwtOpts dwt_opts;
  CLI::App* dwt = app.add_subcommand("dwt", "multi-level orthogonal analysis of a signal");
  dwt->add_option("--signal", dwt_opts.signal_path, "signal CSV (re,im)")->required();
  dwt->add_option("--system", dwt_opts.system_path, "wavelet system JSON")->required();
  dwt->add_option("--levels", dwt_opts.levels, "number of levels")->required();
  dwt->add_option("--out", dwt_opts.out_path, "output decomposition JSON")->required();

  IdwtOpts idwt_opts;
  CLI::App* idwt = app.add_subcommand("idwt", "synthesize a signal from a decomposition");
  idwt->add_option("--decomp", idwt_opts.decomp_path, "decomposition JSON")->required();
  idwt->add_option("--system", idwt_opts.system_path, "wavelet system JSON")->required();
  idwt->add_option("--out", idwt_opts.out_path, "output signal CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*derive) return run_derive(derive_opts);
    if (*check) {
      if (!check_opts.samples_path.empty() && !check_opts.filter_path.empty()) {
        return fail_input("give either --filter or --samples, not both");
      }
      if (*sb) return run_check_smith_barnwell(check_opts);
      if (check_opts.samples_path.empty() && check_opts.filter_path.empty()) {
        return fail_input("one of --filter or --samples is required");
      }
      if (*lemma1) return run_check_lemma1(check_opts);
      if (*support) return run_check_support(check_opts);
      if (*gram) return run_check_gram(check_opts);
    }
    if (*cascade) return run_cascade(cascade_opts);
    if (*realize) return run_realize(realize_opts);
    if (*dwt) return run_dwt(dwt_opts);
    if (*idwt) return run_idwt(idwt_opts);
  } catch (const Error& e) {
    return fail_input(e.what());
  } catch (const std::exception& e) {
    return fail_input(e.what());
  }
  return fail_input("no command selected");
}
