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

#include "pfa/cli/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#ifndef PFA_TQFT_VERSION
#define PFA_TQFT_VERSION "0.0.0"
#endif

namespace pfa::cli {

std::string_view tool_version() { return PFA_TQFT_VERSION; }

std::string format_double(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(const std::string &v) const { return csv_escape(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(double v) const {
    if (!std::isfinite(v)) {
      return nullptr;
    }
    return v;
  }
  nlohmann::ordered_json operator()(const std::string &v) const { return v; }
  nlohmann::ordered_json operator()(bool v) const { return v; }
};

}  // namespace

std::string render_csv(const Table &table, const Metadata &meta) {
  std::string out;
  out += "# tool=" + std::string(kToolName) + " version=" + std::string(tool_version()) + " command=" + meta.command +
         "\n";
  out += "# config:";
  for (const auto &[k, v] : meta.config) {
    out += " " + k + "=" + v;
  }
  out += "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + table.columns[i];
  }
  out += "\n";
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += std::visit(CsvCell{}, row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const Table &table, const Metadata &meta) {
  nlohmann::ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = tool_version();
  doc["command"] = meta.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto &[k, v] : meta.config) {
    config[k] = v;
  }
  doc["config"] = config;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto &row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      record[table.columns[i]] = std::visit(JsonCell{}, row[i]);
    }
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const Table &table, const Metadata &meta, Format format) {
  return format == Format::kCsv ? render_csv(table, meta) : render_json(table, meta);
}

}  // namespace pfa::cli
