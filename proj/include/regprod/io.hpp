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

#pragma once

#include <string>
#include <vector>

#include "regprod/integrator.hpp"

namespace regprod {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Writes `header` then one line per row, numbers in %.17g, '\n' line ends.
/// Every row must have header.size() entries. Throws kIo on write failure.
void EmitCsv(const CsvTable& table, const std::string& path);

/// The same, for a trajectory with a leading time column. `header` includes
/// the time column name.
void EmitCsv(const Trajectory& traj, const std::vector<std::string>& header,
             const std::string& path);

/// Reads a file written by EmitCsv. Throws kIo.
CsvTable ReadCsv(const std::string& path);

/// %.17g.
std::string FormatDouble(double x);

void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

}  // namespace regprod
