// Copyright 2026 The cuetrunc Authors.
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

#ifndef CUETRUNC_CLI_EMIT_HPP_
#define CUETRUNC_CLI_EMIT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cuetrunc::cli {

enum class Format { kJson, kCsv };

using Value = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

/// One output row; field order is preserved on emission.
struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  Record& add(std::string key, Value value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

/// Formats a double with 17 significant digits in the C locale.
std::string format_double(double v);

/// JSON: one object for a single record, otherwise an array of objects.
/// CSV: header row with the union of keys in first-seen order, then one line
/// per record with missing fields left empty. Throws std::invalid_argument
/// on an empty record set.
std::string emit(std::span<const Record> records, Format format);

/// Splits one CSV line written by emit back into fields.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace cuetrunc::cli

#endif  // CUETRUNC_CLI_EMIT_HPP_
