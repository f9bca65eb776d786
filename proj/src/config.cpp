// Copyright 2026 The hallmhd Authors
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

#include "hallmhd/config.hpp"

#include <openssl/sha.h>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "hallmhd/ledger.hpp"

namespace hallmhd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(source_, line_, what); }

  double real(const std::string& v) const {
    double x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) fail("'" + v + "' is not a number");
    return x;
  }

  long long integer(const std::string& v) const {
    long long x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) fail("'" + v + "' is not an integer");
    return x;
  }

  // Range checks reuse PhysParams::validate on otherwise default parameters.
  void physics(PhysParams& target, double PhysParams::*field, const std::string& v) const {
    PhysParams probe;
    probe.*field = real(v);
    try {
      probe.validate();
    } catch (const ParamError& e) {
      fail(e.what());
    }
    target.*field = probe.*field;
  }

  RunConfig run(const std::string& text) {
    RunConfig c;
    std::istringstream is(text);
    std::string section;
    std::map<std::string, int> seen;
    for (std::string raw; std::getline(is, raw);) {
      ++line_;
      const auto cut = raw.find_first_of("#;");
      const std::string l = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
      if (l.empty()) continue;
      if (l.front() == '[') {
        if (l.back() != ']') fail("malformed section header");
        section = trim(l.substr(1, l.size() - 2));
        static const char* const kSections[] = {"physics", "grid", "time", "initial", "output", "sweep", "verify"};
        bool known = false;
        for (const char* s : kSections) known = known || section == s;
        if (!known) fail("unknown section [" + section + "]");
        continue;
      }
      const auto eq = l.find('=');
      if (eq == std::string::npos) fail("expected key = value");
      if (section.empty()) fail("key outside of any section");
      const std::string key = trim(l.substr(0, eq));
      const std::string val = trim(l.substr(eq + 1));
      if (!seen.emplace(section + "." + key, line_).second) fail("duplicate key '" + key + "'");
      assign(c, section, key, val);
    }
    line_ = 0;
    if (c.dealias_fraction <= 0 || c.dealias_fraction > 1) fail("dealias_fraction must lie in (0, 1]");
    return c;
  }

 private:
  void assign(RunConfig& c, const std::string& sec, const std::string& key, const std::string& v) {
    auto positive = [&](double x, const char* what) {
      if (!(x > 0)) fail(std::string(what) + " must be positive");
      return x;
    };
    if (sec == "physics") {
      static const std::map<std::string, double PhysParams::*> kFields = {
          {"beta", &PhysParams::beta},     {"eta", &PhysParams::eta},       {"gamma", &PhysParams::gamma},
          {"s", &PhysParams::sobolev_s},   {"K", &PhysParams::band_K},      {"R", &PhysParams::band_R},
          {"delta", &PhysParams::band_delta}};
      const auto it = kFields.find(key);
      if (it == kFields.end()) fail("unknown key '" + key + "' in [physics]");
      physics(c.physics, it->second, v);
    } else if (sec == "grid") {
      if (key == "n") {
        const long long n = integer(v);
        if (n < 8 || n % 2 != 0 || n > 1024) fail("n must be even and in [8, 1024]");
        c.n = static_cast<int>(n);
      } else if (key == "dealias_fraction") {
        c.dealias_fraction = real(v);
        if (!(c.dealias_fraction > 0 && c.dealias_fraction <= 1)) fail("dealias_fraction must lie in (0, 1]");
      } else {
        fail("unknown key '" + key + "' in [grid]");
      }
    } else if (sec == "time") {
      if (key == "dt_policy") {
        if (v == "auto") c.dt_policy = DtPolicy::automatic;
        else if (v == "fixed") c.dt_policy = DtPolicy::fixed;
        else fail("dt_policy must be auto or fixed");
      } else if (key == "dt") {
        c.dt = positive(real(v), "dt");
      } else if (key == "T") {
        c.T = real(v);
        if (!(c.T >= 0)) fail("T must be nonnegative");
      } else if (key == "cfl_safety") {
        c.cfl_safety = real(v);
        if (!(c.cfl_safety > 0 && c.cfl_safety <= 1)) fail("cfl_safety must lie in (0, 1]");
      } else if (key == "probe_interval") {
        c.probe_interval = positive(real(v), "probe_interval");
      } else {
        fail("unknown key '" + key + "' in [time]");
      }
    } else if (sec == "initial") {
      if (key == "preset") {
        const auto p = parse_preset(v);
        if (!p) fail("unknown preset '" + v + "'");
        c.initial.preset = *p;
      } else if (key == "amplitude") {
        c.initial.amplitude = real(v);
        if (!(c.initial.amplitude >= 0)) fail("amplitude must be nonnegative");
      } else if (key == "e0_policy") {
        const auto p = parse_e_policy(v);
        if (!p) fail("e0_policy must be zero or well_prepared");
        c.initial.e_policy = *p;
      } else if (key == "seed") {
        const long long s = integer(v);
        if (s < 0) fail("seed must be nonnegative");
        c.initial.seed = static_cast<std::uint64_t>(s);
      } else {
        fail("unknown key '" + key + "' in [initial]");
      }
    } else if (sec == "output") {
      if (key == "directory") {
        if (v.empty()) fail("directory must not be empty");
        c.output_directory = v;
      } else if (key == "snapshot_every") {
        const long long s = integer(v);
        if (s < 0) fail("snapshot_every must be nonnegative");
        c.snapshot_every = static_cast<int>(s);
      } else if (key == "formats") {
        c.formats = split_list(v);
        for (const auto& f : c.formats)
          if (f != "csv" && f != "json") fail("unknown format '" + f + "'");
      } else {
        fail("unknown key '" + key + "' in [output]");
      }
    } else if (sec == "sweep") {
      if (key == "gamma_list") {
        std::vector<double> g;
        for (const auto& item : split_list(v)) g.push_back(real(item));
        if (g.empty()) fail("gamma_list is empty");
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!(g[i] > 0 && g[i] <= 1)) fail("every gamma must lie in (0, 1]");
          if (i > 0 && !(g[i] < g[i - 1])) fail("gamma_list must be strictly decreasing");
        }
        c.gamma_list = std::move(g);
      } else if (key == "workers") {
        const long long w = integer(v);
        if (w < 1) fail("workers must be >= 1");
        c.workers = static_cast<int>(w);
      } else {
        fail("unknown key '" + key + "' in [sweep]");
      }
    } else if (sec == "verify") {
      if (key == "eigen_samples") {
        const long long s = integer(v);
        if (s < 1) fail("eigen_samples must be >= 1");
        c.eigen_samples = static_cast<int>(s);
      } else if (key == "seed") {
        const long long s = integer(v);
        if (s < 0) fail("seed must be nonnegative");
        c.verify_seed = static_cast<std::uint64_t>(s);
      } else if (key == "bound_points") {
        const long long s = integer(v);
        if (s < 1) fail("bound_points must be >= 1");
        c.bound_points = static_cast<int>(s);
      } else {
        fail("unknown key '" + key + "' in [verify]");
      }
    }
  }

  std::string source_;
  int line_ = 0;
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source) {
  return Parser(source).run(text);
}

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), path);
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  const auto& p = c.physics;
  os << "[physics]\n"
     << "beta = " << format_double(p.beta) << "\n"
     << "eta = " << format_double(p.eta) << "\n"
     << "gamma = " << format_double(p.gamma) << "\n"
     << "s = " << format_double(p.sobolev_s) << "\n"
     << "K = " << format_double(p.band_K) << "\n"
     << "R = " << format_double(p.band_R) << "\n"
     << "delta = " << format_double(p.band_delta) << "\n\n"
     << "[grid]\n"
     << "n = " << c.n << "\n"
     << "dealias_fraction = " << format_double(c.dealias_fraction) << "\n\n"
     << "[time]\n"
     << "dt_policy = " << (c.dt_policy == DtPolicy::automatic ? "auto" : "fixed") << "\n"
     << "dt = " << format_double(c.dt) << "\n"
     << "T = " << format_double(c.T) << "\n"
     << "cfl_safety = " << format_double(c.cfl_safety) << "\n"
     << "probe_interval = " << format_double(c.probe_interval) << "\n\n"
     << "[initial]\n"
     << "preset = " << to_string(c.initial.preset) << "\n"
     << "amplitude = " << format_double(c.initial.amplitude) << "\n"
     << "e0_policy = " << to_string(c.initial.e_policy) << "\n"
     << "seed = " << c.initial.seed << "\n\n"
     << "[output]\n"
     << "directory = " << c.output_directory << "\n"
     << "snapshot_every = " << c.snapshot_every << "\n"
     << "formats = " << join(c.formats) << "\n\n"
     << "[sweep]\n";
  if (c.gamma_list) {
    std::vector<std::string> g;
    for (double v : *c.gamma_list) g.push_back(format_double(v));
    os << "gamma_list = " << join(g) << "\n";
  }
  os << "workers = " << c.workers << "\n\n"
     << "[verify]\n"
     << "eigen_samples = " << c.eigen_samples << "\n"
     << "seed = " << c.verify_seed << "\n"
     << "bound_points = " << c.bound_points << "\n";
  return os.str();
}

std::string config_hash(const RunConfig& c) {
  RunConfig h = c;
  h.output_directory = "-";
  h.workers = 1;
  const std::string text = serialize_config(h);
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest);
  char hex[17];
  for (int i = 0; i < 8; ++i) std::snprintf(hex + 2 * i, 3, "%02x", digest[i]);
  return std::string(hex, 16);
}

}  // namespace hallmhd
