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

#include "stripe/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace stripe {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
    return s.substr(1, s.size() - 2);
  return s;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError(std::string(key), "cannot parse '" + std::string(value) + "'");
  return out;
}

using Setter = std::function<void(SimConfig&, std::string_view key, std::string_view value)>;

template <typename T>
Setter number_setter(T SimConfig::*field) {
  return [field](SimConfig& c, std::string_view key, std::string_view value) {
    c.*field = parse_number<T>(key, value);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"L", number_setter(&SimConfig::L)},
      {"N", number_setter(&SimConfig::N)},
      {"K", number_setter(&SimConfig::K)},
      {"tau_c", number_setter(&SimConfig::tau_c)},
      {"tau_p", number_setter(&SimConfig::tau_p)},
      {"ue_power_mW", number_setter(&SimConfig::ue_power_mW)},
      {"noise_power_dBm", number_setter(&SimConfig::noise_power_dBm)},
      {"bandwidth_Hz", number_setter(&SimConfig::bandwidth_Hz)},
      {"area_side_m", number_setter(&SimConfig::area_side_m)},
      {"stripe_length_m", number_setter(&SimConfig::stripe_length_m)},
      {"ue_box_side_m", number_setter(&SimConfig::ue_box_side_m)},
      {"ap_ue_height_diff_m", number_setter(&SimConfig::ap_ue_height_diff_m)},
      {"asd_deg", number_setter(&SimConfig::asd_deg)},
      {"rng_seed", number_setter(&SimConfig::rng_seed)},
      {"n_drops", number_setter(&SimConfig::n_drops)},
      {"n_fades", number_setter(&SimConfig::n_fades)},
      {"pilots",
       [](SimConfig& c, std::string_view key, std::string_view v) {
         if (v == "greedy")
           c.pilots = PilotScheme::kGreedy;
         else if (v == "roundrobin")
           c.pilots = PilotScheme::kRoundRobin;
         else
           throw ConfigError(std::string(key), "expected greedy|roundrobin");
       }},
      {"correlation",
       [](SimConfig& c, std::string_view key, std::string_view v) {
         if (v == "local_scattering")
           c.correlation = CorrelationModel::kLocalScattering;
         else if (v == "gaussian_approx")
           c.correlation = CorrelationModel::kGaussianApprox;
         else
           throw ConfigError(std::string(key), "expected local_scattering|gaussian_approx");
       }},
      {"algorithms",
       [](SimConfig& c, std::string_view key, std::string_view v) {
         try {
           c.algorithms = parse_algorithm_list(v);
         } catch (const ConfigError& e) {
           throw ConfigError(std::string(key), e.what());
         }
       }},
      {"rls_delta",
       [](SimConfig& c, std::string_view key, std::string_view v) {
         if (v == "auto")
           c.rls_delta.reset();
         else
           c.rls_delta = parse_number<double>(key, v);
       }},
  };
  return table;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kCentralized: return "cent";
    case Algorithm::kOslp: return "oslp";
    case Algorithm::kAltOslp: return "altoslp";
    case Algorithm::kNLmmse: return "nlmmse";
    case Algorithm::kSequentialMr: return "smr";
    case Algorithm::kRls: return "rls";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::kCentralized, Algorithm::kOslp, Algorithm::kAltOslp, Algorithm::kNLmmse,
                 Algorithm::kSequentialMr, Algorithm::kRls}) {
    if (algorithm_name(a) == name) return a;
  }
  throw ConfigError("algorithms", "unknown algorithm '" + std::string(name) + "'");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view csv) {
  std::vector<Algorithm> out;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    const auto item = trim(csv.substr(0, comma));
    if (!item.empty()) {
      const auto a = parse_algorithm(item);
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_algorithm_list(const std::vector<Algorithm>& algos) {
  std::string out;
  for (std::size_t i = 0; i < algos.size(); ++i) {
    if (i) out += ',';
    out += algorithm_name(algos[i]);
  }
  return out;
}

std::string_view pilot_scheme_name(PilotScheme s) {
  return s == PilotScheme::kGreedy ? "greedy" : "roundrobin";
}

std::string_view correlation_model_name(CorrelationModel m) {
  return m == CorrelationModel::kLocalScattering ? "local_scattering" : "gaussian_approx";
}

void validate(const SimConfig& c) {
  if (c.L < 1) throw ConfigError("L", "must be >= 1");
  if (c.N < 1) throw ConfigError("N", "must be >= 1");
  if (c.K < 1) throw ConfigError("K", "must be >= 1");
  if (c.tau_c < 1) throw ConfigError("tau_c", "must be >= 1");
  if (c.tau_p < 1 || c.tau_p > c.tau_c) throw ConfigError("tau_p", "must satisfy 1 <= tau_p <= tau_c");
  if (!(c.ue_power_mW > 0.0) || !std::isfinite(c.ue_power_mW))
    throw ConfigError("ue_power_mW", "must be > 0");
  if (!std::isfinite(c.noise_power_dBm)) throw ConfigError("noise_power_dBm", "must be finite");
  if (!(c.area_side_m > 0.0)) throw ConfigError("area_side_m", "must be > 0");
  if (!(c.stripe_length_m >= 4.0 * c.area_side_m))
    throw ConfigError("stripe_length_m", "must cover the area perimeter");
  if (!(c.ue_box_side_m > 0.0) || c.ue_box_side_m > c.area_side_m)
    throw ConfigError("ue_box_side_m", "must lie in (0, area_side_m]");
  if (!(c.ap_ue_height_diff_m > 0.0)) throw ConfigError("ap_ue_height_diff_m", "must be > 0");
  if (!(c.asd_deg > 0.0) || !std::isfinite(c.asd_deg)) throw ConfigError("asd_deg", "must be > 0");
  if (c.n_drops < 1) throw ConfigError("n_drops", "must be >= 1");
  if (c.n_fades < 1) throw ConfigError("n_fades", "must be >= 1");
  if (c.algorithms.empty()) throw ConfigError("algorithms", "must not be empty");
  if (c.rls_delta && !(*c.rls_delta > 0.0)) throw ConfigError("rls_delta", "must be > 0");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double noise_power_mw(const SimConfig& c) { return dbm_to_mw(c.noise_power_dBm); }

RVec ue_powers(const SimConfig& c) { return RVec::Constant(static_cast<Eigen::Index>(c.K), c.ue_power_mW); }

std::size_t default_tau_p(std::size_t K) { return std::min<std::size_t>(K, 20); }

std::vector<std::string> preset_names() {
  return {"paper-fig3", "paper-fig4", "paper-fig5", "paper-fig6"};
}

SimConfig preset(std::string_view name) {
  SimConfig c;
  if (name == "paper-fig3") {
    c.L = 24, c.N = 4, c.K = 10;
    c.algorithms = {Algorithm::kOslp, Algorithm::kCentralized, Algorithm::kNLmmse,
                    Algorithm::kSequentialMr};
  } else if (name == "paper-fig4") {
    c.L = 24, c.N = 1, c.K = 24;
    c.algorithms = {Algorithm::kOslp, Algorithm::kNLmmse, Algorithm::kRls,
                    Algorithm::kSequentialMr};
  } else if (name == "paper-fig5") {
    c.L = 24, c.N = 1, c.K = 10, c.ue_power_mW = 1.0;
    c.algorithms = {Algorithm::kOslp, Algorithm::kNLmmse, Algorithm::kRls};
  } else if (name == "paper-fig6") {
    c.L = 60, c.N = 4, c.K = 20;
    c.algorithms = {Algorithm::kOslp, Algorithm::kRls};
  } else {
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
  }
  c.tau_p = default_tau_p(c.K);
  return c;
}

SimConfig parse_config(std::string_view text, const SimConfig& base) {
  SimConfig c = base;
  bool tau_p_given = false;
  bool k_given = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = unquote(trim(line.substr(eq + 1)));

    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(std::string(key), "unknown key");
    it->second(c, key, value);
    tau_p_given |= key == "tau_p";
    k_given |= key == "K";
  }
  if (k_given && !tau_p_given) c.tau_p = default_tau_p(c.K);
  return c;
}

SimConfig load_config_file(const std::string& path, const SimConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

std::string to_config_text(const SimConfig& c) {
  std::map<std::string, std::string> kv = {
      {"L", std::to_string(c.L)},
      {"N", std::to_string(c.N)},
      {"K", std::to_string(c.K)},
      {"tau_c", std::to_string(c.tau_c)},
      {"tau_p", std::to_string(c.tau_p)},
      {"ue_power_mW", format_double(c.ue_power_mW)},
      {"noise_power_dBm", format_double(c.noise_power_dBm)},
      {"bandwidth_Hz", format_double(c.bandwidth_Hz)},
      {"area_side_m", format_double(c.area_side_m)},
      {"stripe_length_m", format_double(c.stripe_length_m)},
      {"ue_box_side_m", format_double(c.ue_box_side_m)},
      {"ap_ue_height_diff_m", format_double(c.ap_ue_height_diff_m)},
      {"asd_deg", format_double(c.asd_deg)},
      {"rng_seed", std::to_string(c.rng_seed)},
      {"n_drops", std::to_string(c.n_drops)},
      {"n_fades", std::to_string(c.n_fades)},
      {"pilots", std::string(pilot_scheme_name(c.pilots))},
      {"correlation", std::string(correlation_model_name(c.correlation))},
      {"algorithms", '"' + format_algorithm_list(c.algorithms) + '"'},
      {"rls_delta", c.rls_delta ? format_double(*c.rls_delta) : "auto"},
  };
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

std::uint64_t config_hash(const SimConfig& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : to_config_text(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace stripe
