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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pfa::cli {

inline constexpr std::string_view kToolName = "pfa-tqft";
std::string_view tool_version();

/// Empty cells (monostate) render as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Resolved configuration of one run, in a fixed key order.
struct Metadata {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;

  void set(std::string key, std::string value) { config.emplace_back(std::move(key), std::move(value)); }
};

enum class Format { kCsv, kJson };

/// printf("%.17g"); non-finite values become "nan", "inf", "-inf".
std::string format_double(double value);

/// Comment lines "# tool=... version=... command=..." and "# config: k=v ...",
/// then a snake_case header row and one line per record.
std::string render_csv(const Table &table, const Metadata &meta);

/// {"tool", "version", "command", "config": {...}, "columns": [...], "rows": [{...}]}
std::string render_json(const Table &table, const Metadata &meta);

std::string render(const Table &table, const Metadata &meta, Format format);

}  // namespace pfa::cli
