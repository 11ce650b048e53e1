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

// Pieces of the command-line front end that do not touch the simulator:
// grid specs, spin parsing, number formatting, table output and the row pool.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace dicke_cli {

/// Bad arguments; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulator or I/O failure; mapped to exit code 1.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts `x`, `a,b,c`, `start:stop:count` and `log:start:stop:count`.
/// Endpoints are reproduced exactly.
std::vector<double> parse_grid(std::string_view spec);

/// Parses j (integer or half-integer, e.g. "1", "1.5") and returns 2j.
int parse_two_j(std::string_view text);

double parse_double(std::string_view text);

/// Shortest decimal that round-trips to the same double. -0 prints as 0.
std::string format_number(double value);

using Cell = std::optional<double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// Header row, then one line per row; empty cells print as nothing.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects keyed by column name; empty cells are null.
void write_json(std::ostream& out, const Table& table);

void write_table(std::ostream& out, const Table& table, Format format);

/// Several named tables: CSV blocks separated by a blank line, or one JSON
/// object keyed by name.
void write_sections(std::ostream& out,
                    const std::vector<std::pair<std::string, Table>>& sections,
                    Format format);

/// gnuplot script plotting `y_column` against `x_column` of `csv_path`, one
/// curve per distinct value of `group_column` when it is non-empty.
std::string gnuplot_script(const std::string& csv_path, const Table& table,
                           const std::string& x_column,
                           const std::string& y_column,
                           const std::string& group_column, bool log_x);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads (0 = hardware width).
/// If any call throws, the exception from the lowest index is rethrown after
/// all workers finish, so failures are schedule-independent.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t width = std::min<std::size_t>(jobs, n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace dicke_cli
