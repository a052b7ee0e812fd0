// Copyright 2026 The greedy-mbrl Authors. All rights reserved.
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

#ifndef GMBRL_CSV_HPP_
#define GMBRL_CSV_HPP_

#include <string>
#include <vector>

namespace gmbrl {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  // Index of a header column; throws if absent.
  int column(const std::string& name) const;
};

// Strict numeric CSV: a header line and uniform-width numeric rows.
// Malformed input throws std::invalid_argument with the 1-based line number.
CsvTable read_csv(const std::string& path);

// Deterministic number formatting shared by every writer: integers print as
// integers, everything else as %.17g so values round-trip exactly.
std::string format_number(double x);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace gmbrl

#endif  // GMBRL_CSV_HPP_
