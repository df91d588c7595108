// Copyright 2026 The stripe Authors.
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

#include "stripe/results_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace stripe {
namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw ConfigError("csv", "bad value '" + std::string(field) + "' on line " + std::to_string(line));
  }
  return value;
}

ordered_json summary_to_json(const Summary& s) {
  return ordered_json{{"n", s.n},
                      {"mean", s.mean},
                      {"stderr", s.stderr_mean},
                      {"ci95_halfwidth", 1.96 * s.stderr_mean},
                      {"median", s.median},
                      {"p05", s.p05},
                      {"p95", s.p95}};
}

Summary summary_from_json(const ordered_json& j) {
  Summary s;
  s.n = j.at("n").get<std::size_t>();
  s.mean = j.at("mean").get<double>();
  s.stderr_mean = j.at("stderr").get<double>();
  s.median = j.at("median").get<double>();
  s.p05 = j.at("p05").get<double>();
  s.p95 = j.at("p95").get<double>();
  return s;
}

}  // namespace

std::string csv_file_name(Algorithm algorithm) { return std::string(algorithm_name(algorithm)) + ".csv"; }

std::string to_csv(const std::vector<UeSample>& samples) {
  std::string out = "drop,ue,se_bps_hz,mse\n";
  for (const auto& s : samples) {
    out += std::to_string(s.drop);
    out += ',';
    out += std::to_string(s.ue);
    out += ',';
    out += format_double(s.se);
    out += ',';
    out += format_double(s.mse);
    out += '\n';
  }
  return out;
}

std::vector<UeSample> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<UeSample> samples;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "drop,ue,se_bps_hz,mse") throw ConfigError("csv", "unexpected header '" + line + "'");
      continue;
    }
    if (line.empty()) continue;
    std::string_view rest = line;
    std::string_view fields[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (i == 3)) {
        throw ConfigError("csv", "expected 4 fields on line " + std::to_string(line_no));
      }
      fields[i] = rest.substr(0, comma);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    samples.push_back({parse_field<std::size_t>(fields[0], line_no), parse_field<std::size_t>(fields[1], line_no),
                       parse_field<double>(fields[2], line_no), parse_field<double>(fields[3], line_no)});
  }
  if (line_no == 0) throw ConfigError("csv", "empty file");
  return samples;
}

std::string summary_json(const CampaignResult& result) {
  const SimConfig& c = result.config;
  ordered_json config = {{"L", c.L},
                         {"N", c.N},
                         {"K", c.K},
                         {"tau_c", c.tau_c},
                         {"tau_p", c.tau_p},
                         {"ue_power_mW", c.ue_power_mW},
                         {"noise_power_dBm", c.noise_power_dBm},
                         {"bandwidth_Hz", c.bandwidth_Hz},
                         {"area_side_m", c.area_side_m},
                         {"stripe_length_m", c.stripe_length_m},
                         {"ue_box_side_m", c.ue_box_side_m},
                         {"ap_ue_height_diff_m", c.ap_ue_height_diff_m},
                         {"asd_deg", c.asd_deg},
                         {"rng_seed", c.rng_seed},
                         {"n_drops", c.n_drops},
                         {"n_fades", c.n_fades},
                         {"pilots", std::string(pilot_scheme_name(c.pilots))},
                         {"correlation", std::string(correlation_model_name(c.correlation))},
                         {"algorithms", format_algorithm_list(c.algorithms)}};
  if (c.rls_delta) config["rls_delta"] = *c.rls_delta;

  ordered_json algos = ordered_json::object();
  for (const auto& a : result.algorithms) {
    algos[std::string(algorithm_name(a.algorithm))] = {
        {"se", summary_to_json(a.se)}, {"mse", summary_to_json(a.mse)}, {"csv", csv_file_name(a.algorithm)}};
  }

  const FronthaulParams& p = result.fronthaul.params;
  ordered_json rows = ordered_json::array();
  for (const auto& r : result.fronthaul.rows) {
    rows.push_back({{"algorithm", std::string(algorithm_name(r.algorithm))},
                    {"data_reals", r.data_reals},
                    {"stats_reals", r.stats_reals},
                    {"total_per_link", r.total_per_link},
                    {"total_network", r.total_network},
                    {"savings_vs_centralized", r.savings_vs_centralized}});
  }
  ordered_json fronthaul = {{"params", {{"K", p.K}, {"tau_c", p.tau_c}, {"tau_p", p.tau_p}, {"N", p.N}, {"L", p.L}}},
                            {"rows", rows}};
  if (p.tau_c > p.tau_p && p.L > 0) {
    const Latency lat = latency_blocks(p.tau_c - p.tau_p, p.L);
    fronthaul["latency"] = {{"t_u", p.tau_c - p.tau_p}, {"pipelined", lat.pipelined}, {"naive", lat.naive}};
  }

  ordered_json j = {{"schema", "stripe-summary/1"},
                    {"config", config},
                    {"algorithms", algos},
                    {"fronthaul", fronthaul},
                    {"provenance",
                     {{"config_hash", result.provenance.config_hash},
                      {"seed", result.provenance.seed},
                      {"version", result.provenance.version}}}};
  return j.dump(2) + "\n";
}

std::map<std::string, SummaryEntry> parse_summary_json(const std::string& text) {
  std::map<std::string, SummaryEntry> out;
  try {
    const ordered_json j = ordered_json::parse(text);
    for (const auto& [name, entry] : j.at("algorithms").items()) {
      out[name] = {summary_from_json(entry.at("se")), summary_from_json(entry.at("mse"))};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("summary", e.what());
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("path", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<UeSample> read_csv_file(const std::filesystem::path& path) { return parse_csv(read_text_file(path)); }

void write_results(const std::filesystem::path& dir, const CampaignResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("out", "cannot create " + dir.string() + ": " + ec.message());
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("out", "cannot write " + path.string());
    out << text;
  };
  for (const auto& a : result.algorithms) write(dir / csv_file_name(a.algorithm), to_csv(a.samples));
  write(dir / "summary.json", summary_json(result));
}

}  // namespace stripe
