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

#include "xsep/records.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace xsep::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_header() { return "statistic,alpha,k,exact,float,method,error,seed"; }

std::string csv_row(const OutputRecord& r) {
  std::string row = r.statistic;
  row += ',';
  row += fmt17(r.alpha);
  row += ',';
  row += fmt17(r.k);
  row += ',';
  if (r.exact) row += *r.exact;
  row += ',';
  row += fmt17(r.float_value);
  row += ',';
  row += r.method;
  row += ',';
  if (r.error) row += fmt17(*r.error);
  row += ',';
  if (r.seed) row += std::to_string(*r.seed);
  return row;
}

std::string json_line(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["statistic"] = r.statistic;
  j["alpha"] = r.alpha;
  j["k"] = r.k;
  if (r.exact) j["exact"] = *r.exact;
  j["float_value"] = r.float_value;
  j["method"] = r.method;
  if (r.error) j["error"] = *r.error;
  if (r.seed) j["seed"] = *r.seed;
  return j.dump();
}

std::string text_line(const OutputRecord& r) {
  std::ostringstream os;
  os << r.statistic << "  alpha=" << fmt17(r.alpha) << "  k=" << fmt17(r.k);
  if (r.exact) os << "  exact=" << *r.exact;
  os << "  value=" << fmt17(r.float_value) << "  [" << r.method << "]";
  if (r.error) os << "  err=" << fmt17(*r.error);
  if (r.seed) os << "  seed=" << *r.seed;
  return os.str();
}

std::string render(const std::vector<OutputRecord>& records, Format format) {
  std::string out;
  if (format == Format::csv) {
    out += csv_header();
    out += '\n';
  }
  for (const OutputRecord& r : records) {
    switch (format) {
      case Format::csv:
        out += csv_row(r);
        break;
      case Format::json:
        out += json_line(r);
        break;
      case Format::text:
        out += text_line(r);
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace xsep::cli
