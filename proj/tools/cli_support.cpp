// Copyright 2026 The dicke-sim Authors
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

#include "cli_support.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dicke_cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

long parse_count(std::string_view text, std::string_view spec) {
  text = trim(text);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw UsageError("grid '" + std::string(spec) + "': count must be an integer >= 1");
  }
  return value;
}

std::string escape_gnuplot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  return out;
}

}  // namespace

double parse_double(std::string_view text) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() ||
      !std::isfinite(value)) {
    throw UsageError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_grid(std::string_view spec) {
  const std::vector<std::string_view> parts = split(spec, ':');
  const bool log_scale = trim(parts.front()) == "log";
  if (parts.size() == 1) {
    std::vector<double> values;
    for (std::string_view item : split(spec, ',')) values.push_back(parse_double(item));
    return values;
  }
  if (parts.size() != (log_scale ? 4u : 3u)) {
    throw UsageError("grid '" + std::string(spec) +
                     "': expected start:stop:count or log:start:stop:count");
  }
  const std::size_t o = log_scale ? 1 : 0;
  const double start = parse_double(parts[o]);
  const double stop = parse_double(parts[o + 1]);
  const long count = parse_count(parts[o + 2], spec);
  if (log_scale && !(start > 0.0 && stop > 0.0)) {
    throw UsageError("grid '" + std::string(spec) + "': log grid needs positive endpoints");
  }
  std::vector<double> values(count);
  if (count == 1) {
    values[0] = start;
    return values;
  }
  const double a = log_scale ? std::log(start) : start;
  const double b = log_scale ? std::log(stop) : stop;
  for (long k = 0; k < count; ++k) {
    const double x = a + (b - a) * double(k) / double(count - 1);
    values[k] = log_scale ? std::exp(x) : x;
  }
  values.front() = start;
  values.back() = stop;
  return values;
}

int parse_two_j(std::string_view text) {
  const double j = parse_double(text);
  const double two_j = 2.0 * j;
  if (!(j >= 0.0) || two_j != std::round(two_j) || two_j > 1e6) {
    throw UsageError("j must be a non-negative integer or half-integer, got '" +
                     std::string(text) + "'");
  }
  return static_cast<int>(two_j);
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[64];
  // Plain mode spells out large integers digit for digit; scientific keeps
  // the significand at 17 digits or fewer.
  const auto [ptr, ec] =
      std::abs(value) >= 1e17
          ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific)
          : std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      if (row[c]) out << format_number(*row[c]);
    }
    out << '\n';
  }
}

namespace {

nlohmann::ordered_json table_json(const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c]) obj[table.columns[c]] = *row[c];
      else obj[table.columns[c]] = nullptr;
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace

void write_json(std::ostream& out, const Table& table) {
  out << table_json(table).dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Csv) write_csv(out, table);
  else write_json(out, table);
}

void write_sections(std::ostream& out,
                    const std::vector<std::pair<std::string, Table>>& sections,
                    Format format) {
  if (format == Format::Csv) {
    for (std::size_t k = 0; k < sections.size(); ++k) {
      if (k) out << '\n';
      write_csv(out, sections[k].second);
    }
    return;
  }
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [name, table] : sections) obj[name] = table_json(table);
  out << obj.dump(2) << '\n';
}

std::string gnuplot_script(const std::string& csv_path, const Table& table,
                           const std::string& x_column,
                           const std::string& y_column,
                           const std::string& group_column, bool log_x) {
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) throw UsageError("no column named " + name);
    return static_cast<std::size_t>(it - table.columns.begin());
  };
  const std::size_t xi = index_of(x_column) + 1;
  const std::size_t yi = index_of(y_column) + 1;
  const std::string file = escape_gnuplot(csv_path);

  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key outside\n"
    << "set xlabel '" << x_column << "'\n"
    << "set ylabel '" << y_column << "'\n";
  if (log_x) s << "set logscale x\n";
  if (group_column.empty()) {
    s << "plot '" << file << "' every ::1 using " << xi << ':' << yi
      << " with lines title '" << y_column << "'\n";
    return s.str();
  }
  const std::size_t gi = index_of(group_column);
  std::vector<double> groups;
  std::set<double> seen;
  for (const auto& row : table.rows) {
    if (row[gi] && seen.insert(*row[gi]).second) groups.push_back(*row[gi]);
  }
  s << "plot ";
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const std::string g = format_number(groups[k]);
    if (k) s << ", \\\n     ";
    s << "'" << file << "' every ::1 using " << xi << ":($" << gi + 1
      << "==" << g << " ? $" << yi << " : 1/0) with lines title '"
      << group_column << "=" << g << "'";
  }
  s << '\n';
  return s.str();
}

}  // namespace dicke_cli
