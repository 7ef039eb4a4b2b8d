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
#ifndef MRA_IO_HPP
#define MRA_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mra/cascade.hpp"
#include "mra/fourier.hpp"
#include "mra/transform.hpp"

namespace mra {

/// Fixed float formatting for every emitted artifact: 17 significant digits,
/// enough to round-trip any double, so identical inputs produce byte-identical
/// files and reports.
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

/// Minimal JSON emitter with caller-controlled key order. nlohmann::json is
/// used for parsing only; emission goes through this writer so the float
/// format and key order stay pinned.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const std::string& name) {
    comma();
    out_ << '"' << name << "\":";
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double v) { return raw(format_double(v)); }
  JsonWriter& value(int v) { return raw(std::to_string(v)); }
  JsonWriter& value(long long v) { return raw(std::to_string(v)); }
  JsonWriter& value(std::size_t v) { return raw(std::to_string(v)); }
  JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& value(const std::string& v) {
    comma();
    out_ << '"';
    for (char c : v) {
      switch (c) {
        case '"': out_ << "\\\""; break;
        case '\\': out_ << "\\\\"; break;
        case '\n': out_ << "\\n"; break;
        case '\t': out_ << "\\t"; break;
        default: out_ << c;
      }
    }
    out_ << '"';
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }

  /// [re, im]
  JsonWriter& value(const Complex& z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
  }

  std::string str() const { return out_.str(); }

 private:
  JsonWriter& open(char c) {
    comma();
    out_ << c;
    need_comma_.push_back(false);
    return *this;
  }
  JsonWriter& close(char c) {
    out_ << c;
    need_comma_.pop_back();
    mark_value();
    return *this;
  }
  JsonWriter& raw(const std::string& s) {
    comma();
    out_ << s;
    return *this;
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;  // value follows its key, no comma
      return;
    }
    if (!need_comma_.empty()) {
      if (need_comma_.back()) out_ << ',';
      need_comma_.back() = true;
    }
  }
  void mark_value() {
    if (pending_value_) pending_value_ = false;
    if (!need_comma_.empty()) need_comma_.back() = true;
  }

  std::ostringstream out_;
  std::vector<bool> need_comma_;
  bool pending_value_ = false;
};

inline std::string report_to_json(const CheckReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("pass").value(report.pass);
  w.key("max_deviation").value(report.max_deviation);
  w.key("argmax_xi").value(report.argmax_xi);
  w.key("params").begin_object();
  for (const auto& [name, v] : report.params) w.key(name).value(v);
  w.end_object();
  w.end_object();
  return w.str();
}

namespace io_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

inline nlohmann::json parse_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline CVec parse_complex_array(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of [re, im] pairs");
  CVec out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError(what + " entries must be [re, im] number pairs");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

inline void emit_complex_array(JsonWriter& w, const CVec& v) {
  w.begin_array();
  for (const Complex& z : v) w.value(z);
  w.end_array();
}

inline FilterCoeffs parse_filter_object(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs")) {
    throw ParseError(what + " must be an object with \"offset\" and \"coeffs\"");
  }
  if (!j["offset"].is_number_integer()) throw ParseError(what + ": \"offset\" must be an integer");
  FilterCoeffs f;
  f.offset = j["offset"].get<int>();
  f.coeffs = parse_complex_array(j["coeffs"], what + ".coeffs");
  return f;
}

inline void emit_filter_object(JsonWriter& w, const FilterCoeffs& f) {
  w.begin_object();
  w.key("offset").value(f.offset);
  w.key("coeffs");
  emit_complex_array(w, f.coeffs);
  w.end_object();
}

}  // namespace io_detail

// ---- filter files: { "offset": int, "coeffs": [[re, im], ...] } ----

inline FilterCoeffs load_filter_coeffs(const std::string& path) {
  return io_detail::parse_filter_object(io_detail::parse_json(path), path);
}

inline ScalingFilter load_scaling_filter(const std::string& path,
                                         double norm_tol = defaults::norm_tol) {
  FilterCoeffs f = load_filter_coeffs(path);
  return ScalingFilter(f.offset, std::move(f.coeffs), norm_tol);
}

inline std::string filter_to_json(const FilterCoeffs& f) {
  JsonWriter w;
  io_detail::emit_filter_object(w, f);
  return w.str();
}

inline void save_filter(const std::string& path, const FilterCoeffs& f) {
  io_detail::write_file(path, filter_to_json(f) + "\n");
}

// ---- wavelet system files ----

inline std::string system_to_json(const WaveletSystem& system) {
  JsonWriter w;
  w.begin_object();
  w.key("scaling");
  io_detail::emit_filter_object(w, system.scaling.sequence());
  w.key("wavelet");
  io_detail::emit_filter_object(w, system.wavelet);
  w.key("provenance").begin_object();
  w.key("shift").value(system.provenance.shift);
  w.key("scalar").value(system.provenance.scalar);
  w.end_object();
  w.key("system_id").value(system_id(system));
  w.end_object();
  return w.str();
}

inline void save_system(const std::string& path, const WaveletSystem& system) {
  io_detail::write_file(path, system_to_json(system) + "\n");
}

inline WaveletSystem load_system(const std::string& path,
                                 double norm_tol = defaults::norm_tol) {
  const nlohmann::json j = io_detail::parse_json(path);
  if (!j.is_object() || !j.contains("scaling") || !j.contains("wavelet")) {
    throw ParseError(path + ": system file must contain \"scaling\" and \"wavelet\"");
  }
  FilterCoeffs s = io_detail::parse_filter_object(j["scaling"], path + ".scaling");
  FilterCoeffs w = io_detail::parse_filter_object(j["wavelet"], path + ".wavelet");
  Provenance prov;
  if (j.contains("provenance") && j["provenance"].is_object()) {
    const auto& p = j["provenance"];
    if (p.contains("shift") && p["shift"].is_number_integer()) {
      prov.shift = p["shift"].get<long long>();
    }
    if (p.contains("scalar") && p["scalar"].is_array() && p["scalar"].size() == 2) {
      prov.scalar = Complex{p["scalar"][0].get<double>(), p["scalar"][1].get<double>()};
    }
  }
  ScalingFilter scaling(s.offset, std::move(s.coeffs), norm_tol);
  detail::validate_wavelet_sequence(w, norm_tol);
  return WaveletSystem{std::move(scaling), std::move(w), prov};
}

// ---- CSV formats ----

namespace io_detail {

inline std::vector<double> parse_csv_row(const std::string& line, std::size_t columns,
                                         const std::string& path, std::size_t lineno) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(',', pos);
    const std::string cell = line.substr(pos, next == std::string::npos ? next : next - pos);
    char* endp = nullptr;
    const double v = std::strtod(cell.c_str(), &endp);
    if (endp == cell.c_str() || *endp != '\0') {
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad numeric cell '" + cell + "'");
    }
    row.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (row.size() != columns) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                     std::to_string(columns) + " columns");
  }
  return row;
}

inline std::vector<std::vector<double>> load_csv(const std::string& path,
                                                 const std::string& header,
                                                 std::size_t columns) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw ParseError(path + ": expected header '" + header + "', got '" + line + "'");
  }
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(parse_csv_row(line, columns, path, lineno));
  }
  if (rows.empty()) throw ParseError(path + ": no data rows");
  return rows;
}

}  // namespace io_detail

/// Signal CSV: header `re,im`, one row per sample.
inline void save_signal_csv(const std::string& path, const Signal& signal) {
  std::ostringstream out;
  out << "re,im\n";
  for (const Complex& z : signal) {
    out << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
  }
  io_detail::write_file(path, out.str());
}

inline Signal load_signal_csv(const std::string& path) {
  Signal signal;
  for (const auto& row : io_detail::load_csv(path, "re,im", 2)) {
    signal.emplace_back(row[0], row[1]);
  }
  return signal;
}

/// Fourier-sample CSV: header `xi,re,im`.
inline void save_fourier_csv(const std::string& path, const FourierSamples& samples) {
  std::ostringstream out;
  out << "xi,re,im\n";
  for (std::size_t i = 0; i < samples.values().size(); ++i) {
    const Complex& z = samples.values()[i];
    out << format_double(samples.xi_at(i)) << ',' << format_double(z.real()) << ','
        << format_double(z.imag()) << '\n';
  }
  io_detail::write_file(path, out.str());
}

inline FourierSamples load_fourier_csv(const std::string& path) {
  const auto rows = io_detail::load_csv(path, "xi,re,im", 3);
  if (rows.size() < 2) throw ParseError(path + ": need at least two samples");
  const double start = rows[0][0];
  const double step = rows[1][0] - rows[0][0];
  if (!(step > 0.0)) throw ParseError(path + ": xi column must be strictly increasing");
  CVec values;
  values.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double expect = start + static_cast<double>(i) * step;
    if (std::abs(rows[i][0] - expect) > 1e-9 * std::max(1.0, std::abs(expect))) {
      throw ParseError(path + ": xi column is not uniformly spaced");
    }
    values.emplace_back(rows[i][1], rows[i][2]);
  }
  return FourierSamples(start, step, std::move(values));
}

/// Dyadic-grid sample CSV: header `x,re,im`, plus a metadata sidecar at
/// `<path>.meta.json` holding { "support_start": int, "scale_log2": int }.
inline std::string sidecar_path(const std::string& csv_path) { return csv_path + ".meta.json"; }

inline void save_function_csv(const std::string& path, const SampledFunction& f) {
  std::ostringstream out;
  out << "x,re,im\n";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    out << format_double(f.x_at(i)) << ',' << format_double(f.values[i].real()) << ','
        << format_double(f.values[i].imag()) << '\n';
  }
  io_detail::write_file(path, out.str());
  JsonWriter w;
  w.begin_object();
  w.key("support_start").value(f.support_start);
  w.key("scale_log2").value(f.scale_log2);
  w.end_object();
  io_detail::write_file(sidecar_path(path), w.str() + "\n");
}

inline SampledFunction load_function_csv(const std::string& path) {
  const nlohmann::json meta = io_detail::parse_json(sidecar_path(path));
  if (!meta.is_object() || !meta.contains("support_start") || !meta.contains("scale_log2") ||
      !meta["support_start"].is_number_integer() || !meta["scale_log2"].is_number_integer()) {
    throw ParseError(sidecar_path(path) + ": need integer \"support_start\" and \"scale_log2\"");
  }
  SampledFunction f;
  f.support_start = meta["support_start"].get<int>();
  f.scale_log2 = meta["scale_log2"].get<int>();
  if (f.scale_log2 < 0 || f.scale_log2 > 30) {
    throw ParseError(sidecar_path(path) + ": scale_log2 out of range");
  }
  for (const auto& row : io_detail::load_csv(path, "x,re,im", 3)) {
    f.values.emplace_back(row[1], row[2]);
  }
  return f;
}

// ---- decomposition files ----

inline std::string decomposition_to_json(const Decomposition& decomp) {
  JsonWriter w;
  w.begin_object();
  w.key("levels").value(decomp.levels());
  w.key("approx");
  io_detail::emit_complex_array(w, decomp.approx);
  w.key("details").begin_array();
  for (const CVec& band : decomp.details) io_detail::emit_complex_array(w, band);
  w.end_array();
  w.key("system_id").value(decomp.system_id);
  w.end_object();
  return w.str();
}

inline void save_decomposition(const std::string& path, const Decomposition& decomp) {
  io_detail::write_file(path, decomposition_to_json(decomp) + "\n");
}

inline Decomposition load_decomposition(const std::string& path) {
  const nlohmann::json j = io_detail::parse_json(path);
  if (!j.is_object() || !j.contains("approx") || !j.contains("details")) {
    throw ParseError(path + ": decomposition must contain \"approx\" and \"details\"");
  }
  Decomposition decomp;
  decomp.approx = io_detail::parse_complex_array(j["approx"], path + ".approx");
  if (!j["details"].is_array()) throw ParseError(path + ": \"details\" must be an array");
  for (const auto& band : j["details"]) {
    decomp.details.push_back(io_detail::parse_complex_array(band, path + ".details[]"));
  }
  if (j.contains("system_id") && j["system_id"].is_string()) {
    decomp.system_id = j["system_id"].get<std::string>();
  }
  if (j.contains("levels") && j["levels"].is_number_integer() &&
      j["levels"].get<int>() != decomp.levels()) {
    throw ParseError(path + ": \"levels\" does not match the number of detail bands");
  }
  try {
    validate(decomp);
  } catch (const MalformedDecomposition& e) {
    throw ParseError(path + ": " + e.what());
  }
  return decomp;
}

}  // namespace mra

#endif  // MRA_IO_HPP
