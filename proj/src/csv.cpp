// Copyright 2026 The qwr Authors
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

#include "qwr/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwr {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || first == last) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

std::string spectrum_csv(const Spectrum& spec) {
  std::string out = "l,probability\n";
  for (int i = 0; i < spec.size(); ++i) {
    out += std::to_string(spec.lmin() + i);
    out += ',';
    out += format_double(spec.weights()[static_cast<std::size_t>(i)]);
    out += '\n';
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void emit_spectrum_csv(const Spectrum& spec, const std::filesystem::path& path) {
  write_file(path, spectrum_csv(spec));
}

Spectrum parse_spectrum_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "l,probability") {
    throw std::invalid_argument("spectrum csv: expected header 'l,probability'");
  }
  int lmin = 0, expect = 0;
  bool first = true;
  std::vector<double> w;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("spectrum csv: malformed row '" + line + "'");
    int l = 0;
    const std::string ls = line.substr(0, comma);
    const auto r = std::from_chars(ls.data(), ls.data() + ls.size(), l);
    if (r.ec != std::errc{} || r.ptr != ls.data() + ls.size()) {
      throw std::invalid_argument("spectrum csv: bad l in '" + line + "'");
    }
    if (first) {
      lmin = expect = l;
      first = false;
    }
    if (l != expect) throw std::invalid_argument("spectrum csv: l values must be consecutive and ascending");
    ++expect;
    w.push_back(parse_double(line.substr(comma + 1)));
  }
  if (w.empty()) throw std::invalid_argument("spectrum csv: no rows");
  return Spectrum(lmin, std::move(w));
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_spectrum_csv(ss.str());
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  const auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(header);
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw std::invalid_argument("write_csv: row width differs from header");
    append_row(r);
  }
  write_file(path, out);
}

}  // namespace qwr
