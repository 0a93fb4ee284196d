// Copyright 2026 The UPB Dimer Authors
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

#include "upb/config.hpp"

#include <fstream>
#include <set>
#include <string>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "upb/types.hpp"

namespace upb {

namespace pt = boost::property_tree;

std::vector<double> GridRange::values() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = count > 1 ? start + (stop - start) * static_cast<double>(i) /
                                     static_cast<double>(count - 1)
                       : start;
  }
  return out;
}

void GridRange::validate(const std::string& name) const {
  if (count < 1) throw ConfigError("grid " + name + ": count must be >= 1");
  if (!(stop >= start)) throw ConfigError("grid " + name + ": stop must be >= start");
}

std::optional<std::string> RunConfig::option(const std::string& section,
                                             const std::string& key) const {
  const auto it = options.find(section + "." + key);
  if (it == options.end()) return std::nullopt;
  return it->second;
}

void RunConfig::merge(const RunConfig& over) {
  auto take = [](auto& mine, const auto& theirs) {
    if (theirs) mine = theirs;
  };
  take(hopping, over.hopping);
  take(kerr, over.kerr);
  take(detuning, over.detuning);
  take(decay, over.decay);
  take(cross_kerr, over.cross_kerr);
  take(detuning_mismatch, over.detuning_mismatch);
  take(decay_mismatch, over.decay_mismatch);
  take(kerr_mismatch, over.kerr_mismatch);
  take(amplitude, over.amplitude);
  take(phase_deg, over.phase_deg);
  take(ratio, over.ratio);
  take(pulse_width, over.pulse_width);
  take(cutoff, over.cutoff);
  take(output_path, over.output_path);
  for (const auto& [k, v] : over.grids) grids[k] = v;
  for (const auto& [k, v] : over.options) options[k] = v;
}

namespace {

template <class T>
T read_value(const pt::ptree& node, const std::string& where) {
  try {
    return node.get_value<T>();
  } catch (const pt::ptree_bad_data&) {
    throw ConfigError("invalid value '" + node.data() + "' for " + where);
  }
}

const std::set<std::string> kSubcommandSections{
    "locus",    "phase-scan", "g2tau",       "landscape", "pulsed", "disorder",
    "compensate", "overshoot", "single-site", "convert",   "verify"};

}  // namespace

RunConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  RunConfig cfg;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty() && body.empty()) {
      throw ConfigError("key '" + section + "' outside any section");
    }
    for (const auto& [key, node] : body) {
      const std::string where = section + "." + key;
      auto real = [&] { return read_value<double>(node, where); };
      if (section == "dimer") {
        if (key == "J") cfg.hopping = real();
        else if (key == "U") cfg.kerr = real();
        else if (key == "Delta") cfg.detuning = real();
        else if (key == "gamma") cfg.decay = real();
        else if (key == "Ux") cfg.cross_kerr = real();
        else if (key == "delta_Delta") cfg.detuning_mismatch = real();
        else if (key == "delta_gamma") cfg.decay_mismatch = real();
        else if (key == "delta_U") cfg.kerr_mismatch = real();
        else throw ConfigError("unknown key " + where);
      } else if (section == "drive") {
        if (key == "F1") cfg.amplitude = real();
        else if (key == "phi") cfg.phase_deg = real();
        else if (key == "ratio") cfg.ratio = real();
        else if (key == "sigma") cfg.pulse_width = real();
        else throw ConfigError("unknown key " + where);
      } else if (section == "numerics") {
        if (key == "Ncut") cfg.cutoff = read_value<int>(node, where);
        else throw ConfigError("unknown key " + where);
      } else if (section == "output") {
        if (key == "path") cfg.output_path = node.data();
        else throw ConfigError("unknown key " + where);
      } else if (section.rfind("grid.", 0) == 0) {
        GridRange& g = cfg.grids[section.substr(5)];
        if (key == "start") g.start = real();
        else if (key == "stop") g.stop = real();
        else if (key == "count") {
          const long n = read_value<long>(node, where);
          if (n < 1) throw ConfigError("grid " + section.substr(5) + ": count must be >= 1");
          g.count = static_cast<std::size_t>(n);
        }
        else throw ConfigError("unknown key " + where);
      } else if (kSubcommandSections.count(section)) {
        cfg.options[where] = node.data();
      } else {
        throw ConfigError("unknown section [" + section + "]");
      }
    }
  }
  for (const auto& [name, g] : cfg.grids) g.validate(name);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot read config file " + path);
  return parse_config(file);
}

}  // namespace upb
