// Copyright 2026 The corrnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrnoise/report_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>

namespace corrnoise {
namespace {

void header(std::ostream& os, std::string_view schema, const CsvMeta& meta, std::string_view columns) {
  os << "# schema=" << schema << " version=" << kCsvSchemaVersion << '\n'
     << "# config_hash=" << hash_hex(meta.config_hash) << '\n'
     << "# seed=" << meta.seed << '\n'
     << columns << '\n';
}

nlohmann::json finite_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

double overlay_scale(const std::vector<double>& measure, const std::vector<double>& reference) {
  const double m = max_of(measure);
  return m > 0.0 ? max_of(reference) / m : 1.0;
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::uint64_t config_hash(const nlohmann::json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(h));
  return buf.data();
}

double max_of(const std::vector<double>& values) {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

void write_trajectory_csv(std::ostream& os, const TrajectoryReport& rep, const CsvMeta& meta) {
  header(os, "trajectory", meta, "t,F,infidelity,purity,d_g,d_c");
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    os << format_number(rep.times[i]) << ',' << format_number(rep.fidelity[i]) << ','
       << format_number(rep.infidelity[i]) << ',' << format_number(rep.purity[i]) << ','
       << (rep.d_g.empty() ? std::string() : format_number(rep.d_g[i])) << ',' << format_number(rep.d_c[i])
       << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepGrid& grid, const CsvMeta& meta) {
  header(os, "sweep", meta, "r,c,final_infidelity,integrated_dc,n_realizations,converged,error");
  for (const auto& cell : grid.cells) {
    os << format_number(cell.r) << ',' << format_number(cell.c) << ',';
    if (cell.error.empty()) {
      os << format_number(cell.final_infidelity) << ',' << format_number(cell.integrated_d_c) << ','
         << cell.n_realizations << ',' << (cell.converged ? 1 : 0) << ",\n";
    } else {
      os << ",,,0," << quoted(cell.error) << '\n';
    }
  }
}

void write_ramsey_csv(std::ostream& os, const RamseyResult& res, const std::vector<double>& predicted,
                      const CsvMeta& meta) {
  header(os, "ramsey", meta, "t,probability,predicted,realizations,converged");
  for (std::size_t i = 0; i < res.wait_times.size(); ++i) {
    os << format_number(res.wait_times[i]) << ',' << format_number(res.probabilities[i]) << ','
       << (i < predicted.size() ? format_number(predicted[i]) : std::string()) << ',' << res.realizations[i]
       << ',' << (res.converged[i] ? 1 : 0) << '\n';
  }
}

void write_score_csv(std::ostream& os, const Ranking& ranking, const CsvMeta& meta) {
  header(os, "score", meta, "rank,label,d_A,n_gates,partial");
  for (std::size_t i = 0; i < ranking.scores.size(); ++i) {
    const auto& s = ranking.scores[i];
    os << i + 1 << ',' << quoted(s.label) << ',' << format_number(s.d_A) << ',' << s.gate_scores.size() << ','
       << (s.partial ? 1 : 0) << '\n';
  }
}

void write_gate_scores_csv(std::ostream& os, const Ranking& ranking, const CsvMeta& meta) {
  header(os, "gate_scores", meta, "label,index,gate,qubits,theta,badness,weight_m,weight_mprime,unscored");
  for (const auto& s : ranking.scores) {
    for (std::size_t i = 0; i < s.gate_scores.size(); ++i) {
      const auto& g = s.gate_scores[i];
      std::string qubits;
      for (int q : g.gate.qubits) qubits += (qubits.empty() ? "" : " ") + std::to_string(q);
      os << quoted(s.label) << ',' << i << ',' << gate_name(g.gate.kind) << ',' << qubits << ','
         << (g.gate.theta ? format_number(*g.gate.theta) : std::string()) << ',' << format_number(g.badness)
         << ',' << format_number(g.weight_m) << ',' << format_number(g.weight_mprime) << ','
         << (g.unscored ? 1 : 0) << '\n';
    }
  }
}

void write_score_table(std::ostream& os, const Ranking& ranking) {
  std::size_t width = 5;
  for (const auto& s : ranking.scores) width = std::max(width, s.label.size());
  os << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(width) + 2) << "label" << std::setw(12)
     << "d_A" << "gates\n";
  for (std::size_t i = 0; i < ranking.scores.size(); ++i) {
    const auto& s = ranking.scores[i];
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s.d_A);
    os << std::setw(6) << i + 1 << std::setw(static_cast<int>(width) + 2) << s.label << std::setw(12) << buf
       << s.gate_scores.size() << (s.partial ? "  (partial)" : "") << '\n';
  }
  for (const auto& w : ranking.warnings) os << "warning: " << w << '\n';
}

nlohmann::json trajectory_metadata(const TrajectoryReport& rep, const CsvMeta& meta) {
  nlohmann::json j;
  j["schema_version"] = kCsvSchemaVersion;
  j["config_hash"] = hash_hex(meta.config_hash);
  j["seed"] = meta.seed;
  j["gate_model"] = std::string(to_string(rep.gate_model));
  j["n_realizations"] = rep.n_realizations_used;
  j["converged"] = rep.converged;
  j["final_infidelity"] = rep.final_infidelity();
  j["final_infidelity_stderr"] = rep.final_infidelity_stderr;
  j["final_purity"] = rep.final_purity();
  j["integrated_d_c"] = rep.integrated_d_c;
  j["interval_edges"] = rep.interval_edges;
  j["scale_d_c"] = overlay_scale(rep.d_c, rep.infidelity);
  if (!rep.d_g.empty()) {
    j["integrated_d_g"] = rep.integrated_d_g;
    j["scale_d_g"] = overlay_scale(rep.d_g, rep.infidelity);
  }
  return j;
}

nlohmann::json ramsey_metadata(const RamseyResult& res, const CsvMeta& meta) {
  nlohmann::json j;
  j["schema_version"] = kCsvSchemaVersion;
  j["config_hash"] = hash_hex(meta.config_hash);
  j["seed"] = meta.seed;
  j["variant"] = std::string(to_string(res.variant));
  j["fitted_envelope_rate"] = res.fit.sigma2;
  j["fitted_envelope_rate_stderr"] = res.fit.sigma2_stderr;
  j["oscillation_freq"] = res.fit.omega;
  j["fit_residual"] = res.fit.residual;
  j["infinite_t2"] = res.fit.infinite_t2;
  j["t2_effective"] = finite_or_null(res.t2_effective);
  j["n_oscillations"] = finite_or_null(res.n_oscillations);
  j["all_converged"] = res.all_converged();
  return j;
}

}  // namespace corrnoise
