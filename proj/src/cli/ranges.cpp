// Copyright 2026 The PFA-TQFT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfa/cli/ranges.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "pfa/error.hpp"
#include "pfa/phase.hpp"
#include "pfa/rng.hpp"

namespace pfa::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) {
      break;
    }
    s.remove_prefix(pos + 1);
  }
  return out;
}

int to_int(std::string_view token, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParameterError("bad integer '" + std::string(token) + "' in '" + std::string(spec) + "'");
  }
  return value;
}

double to_double(std::string_view token, std::string_view spec) {
  std::string s(token);
  char *end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno != 0 || !std::isfinite(v)) {
    throw ParameterError("bad number '" + s + "' in '" + std::string(spec) + "'");
  }
  return v;
}

std::size_t to_count(std::string_view token, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParameterError("bad count '" + std::string(token) + "' in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view spec) {
  if (spec.empty()) {
    throw ParameterError("empty integer list");
  }
  std::vector<int> out;
  for (auto part : split(spec, ',')) {
    auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(to_int(part, spec));
      continue;
    }
    const int lo = to_int(part.substr(0, dots), spec);
    const int hi = to_int(part.substr(dots + 2), spec);
    if (hi < lo) {
      throw ParameterError("descending range '" + std::string(part) + "'");
    }
    if (hi - lo > 100000) {
      throw ParameterError("range '" + std::string(part) + "' is too long");
    }
    for (int v = lo; v <= hi; ++v) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> expand_depths(std::string_view spec, int num_qubits) {
  std::vector<int> out;
  for (auto part : split(spec, ',')) {
    if (part == "all") {
      for (int d = 1; d <= num_qubits; ++d) {
        out.push_back(d);
      }
    } else if (part == "full") {
      out.push_back(num_qubits);
    } else {
      for (int d : parse_int_list(part)) {
        out.push_back(d);
      }
    }
  }
  for (int d : out) {
    if (d < 1 || d > num_qubits) {
      throw ParameterError("depth " + std::to_string(d) + " outside [1, " + std::to_string(num_qubits) +
                           "] for m=" + std::to_string(num_qubits));
    }
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view spec) {
  if (spec.empty()) {
    throw ParameterError("empty number list");
  }
  std::vector<double> out;
  for (auto part : split(spec, ',')) {
    auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(to_double(part, spec));
      continue;
    }
    auto colon = part.find(':', dots);
    if (colon == std::string_view::npos) {
      throw ParameterError("real range '" + std::string(part) + "' needs a ':logN' or ':linN' suffix");
    }
    const double lo = to_double(part.substr(0, dots), spec);
    const double hi = to_double(part.substr(dots + 2, colon - dots - 2), spec);
    std::string_view how = part.substr(colon + 1);
    const bool log_scale = how.starts_with("log");
    if (!log_scale && !how.starts_with("lin")) {
      throw ParameterError("unknown spacing '" + std::string(how) + "'");
    }
    const std::size_t n = to_count(how.substr(3), spec);
    if (n < 2) {
      throw ParameterError("a generated range needs at least 2 points");
    }
    if (log_scale && !(lo > 0.0 && hi > 0.0)) {
      throw ParameterError("log range endpoints must be positive");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      double v = log_scale ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
      if (i == 0) {
        v = lo;
      } else if (i + 1 == n) {
        v = hi;
      }
      out.push_back(v);
    }
  }
  return out;
}

std::vector<double> PhaseSpec::resolve(std::uint64_t seed, std::size_t *wrapped_inputs) const {
  std::vector<double> out;
  std::size_t wrapped = 0;
  switch (kind) {
    case Kind::kGrid:
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back((static_cast<double>(i) + 0.5) / static_cast<double>(count));
      }
      break;
    case Kind::kRandom: {
      SeededRng rng(seed);
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(rng.uniform());
      }
      break;
    }
    case Kind::kList:
      for (double v : values) {
        const double w = wrap_phase(v);
        wrapped += (w != v);
        out.push_back(w);
      }
      break;
  }
  if (wrapped_inputs) {
    *wrapped_inputs = wrapped;
  }
  return out;
}

std::string PhaseSpec::to_string() const {
  switch (kind) {
    case Kind::kGrid:
      return "grid:" + std::to_string(count);
    case Kind::kRandom:
      return "random:" + std::to_string(count);
    case Kind::kList: {
      std::string s = "list:";
      for (std::size_t i = 0; i < values.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
        s += (i ? "," : "") + std::string(buf);
      }
      return s;
    }
  }
  return {};
}

PhaseSpec parse_phase_spec(std::string_view spec) {
  PhaseSpec p;
  if (spec.starts_with("grid:")) {
    p.kind = PhaseSpec::Kind::kGrid;
    p.count = to_count(spec.substr(5), spec);
  } else if (spec.starts_with("random:")) {
    p.kind = PhaseSpec::Kind::kRandom;
    p.count = to_count(spec.substr(7), spec);
  } else if (spec.starts_with("list:")) {
    p.kind = PhaseSpec::Kind::kList;
    p.values = parse_real_list(spec.substr(5));
    p.count = p.values.size();
  } else {
    p.kind = PhaseSpec::Kind::kRandom;
    p.count = to_count(spec, spec);
  }
  if (p.count == 0) {
    throw ParameterError("phase set '" + std::string(spec) + "' is empty");
  }
  return p;
}

}  // namespace pfa::cli
