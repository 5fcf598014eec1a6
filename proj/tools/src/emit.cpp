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

#include "cuetrunc/cli/emit.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace cuetrunc::cli {

namespace {

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string json_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
  if (const auto* d = std::get_if<double>(&v)) {
    return std::isfinite(*d) ? format_double(*d) : "null";
  }
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return json_escape(std::get<std::string>(v));
}

std::string csv_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return csv_escape(std::get<std::string>(v));
}

std::string json_object(const Record& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : r.fields) {
    if (!first) out += ", ";
    first = false;
    out += json_escape(key);
    out += ": ";
    out += json_value(value);
  }
  out += "}";
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string emit(std::span<const Record> records, Format format) {
  if (records.empty()) throw std::invalid_argument("emit: no records to write");
  std::string out;
  if (format == Format::kJson) {
    if (records.size() == 1) return json_object(records.front()) + "\n";
    out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out += "  ";
      out += json_object(records[i]);
      out += i + 1 < records.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
  }

  std::vector<std::string> header;
  for (const Record& r : records) {
    for (const auto& field : r.fields) {
      bool seen = false;
      for (const auto& h : header) seen = seen || h == field.first;
      if (!seen) header.push_back(field.first);
    }
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out.push_back(',');
    out += csv_escape(header[c]);
  }
  out.push_back('\n');
  for (const Record& r : records) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c) out.push_back(',');
      for (const auto& [key, value] : r.fields) {
        if (key == header[c]) {
          out += csv_value(value);
          break;
        }
      }
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  return out;
}

}  // namespace cuetrunc::cli
