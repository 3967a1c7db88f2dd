// Copyright 2026 The xsep authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XSEP_RECORDS_HPP
#define XSEP_RECORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xsep::cli {

enum class Format { text, csv, json };

Format parse_format(const std::string& name);

/// One computed statistic. `exact` is present only for closed-form results
/// whose exactness holds; `error` only for estimated methods.
struct OutputRecord {
  std::string statistic;
  double alpha = 0;
  double k = 0;
  std::optional<std::string> exact;
  double float_value = 0;
  std::string method;  // closed | mc | quad
  std::optional<double> error;
  std::optional<std::uint64_t> seed;
};

/// Shortest-of-17-significant-digits rendering ("%.17g", C locale).
std::string fmt17(double v);

std::string csv_header();
std::string csv_row(const OutputRecord& r);
std::string json_line(const OutputRecord& r);
std::string text_line(const OutputRecord& r);

/// Full document in the requested format (CSV gets the header; JSON is one
/// object per line; text is aligned for reading). Ends with a newline.
std::string render(const std::vector<OutputRecord>& records, Format format);

}  // namespace xsep::cli

#endif  // XSEP_RECORDS_HPP
