// Copyright 2026 The regprod Authors
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

#include "regprod/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "regprod/error.hpp"

namespace regprod {

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing", "path");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path, "path");
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path, "path");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void EmitCsv(const CsvTable& table, const std::string& path) {
  std::string text;
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j) text += ',';
    text += table.header[j];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw Error(ErrorCode::kInvalidArgument, "CSV row width differs from header");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) text += ',';
      text += FormatDouble(row[j]);
    }
    text += '\n';
  }
  WriteTextFile(path, text);
}

void EmitCsv(const Trajectory& traj, const std::vector<std::string>& header,
             const std::string& path) {
  if (header.size() != traj.dim() + 1) {
    throw Error(ErrorCode::kInvalidArgument, "CSV header width differs from trajectory");
  }
  CsvTable table{header, {}};
  table.rows.reserve(traj.grid().size());
  for (std::size_t k = 0; k < traj.grid().size(); ++k) {
    std::vector<double> row{traj.grid().t(k)};
    const auto r = traj.row(k);
    row.insert(row.end(), r.begin(), r.end());
    table.rows.push_back(std::move(row));
  }
  EmitCsv(table, path);
}

CsvTable ReadCsv(const std::string& path) {
  std::istringstream in(ReadTextFile(path));
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kIo, path + " is empty", "path");
  {
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) table.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        throw Error(ErrorCode::kIo, "non-numeric CSV cell '" + cell + "' in " + path);
      }
      row.push_back(v);
    }
    if (row.size() != table.header.size()) {
      throw Error(ErrorCode::kIo, "ragged CSV row in " + path);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace regprod
