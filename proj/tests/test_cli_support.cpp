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

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "cli_support.hpp"
#include "json.hpp"

using namespace dicke_cli;

TEST_CASE("grid specs") {
  CHECK(parse_grid("2.5") == std::vector<double>{2.5});
  CHECK(parse_grid("1, 2,3") == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(parse_grid("0:1:5") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(parse_grid("3:3:1") == std::vector<double>{3.0});
  const auto lg = parse_grid("log:0.001:1000:7");
  REQUIRE(lg.size() == 7);
  CHECK(lg.front() == 0.001);
  CHECK(lg.back() == 1000.0);
  for (std::size_t k = 0; k < lg.size(); ++k) {
    CHECK(lg[k] == doctest::Approx(std::pow(10.0, -3.0 + double(k))).epsilon(1e-13));
  }
  const auto desc = parse_grid("1:0:3");
  CHECK(desc == std::vector<double>{1.0, 0.5, 0.0});
}

TEST_CASE("malformed grid specs are usage errors") {
  for (const char* bad : {"", "x", "1:2", "1:2:0", "1:2:-3", "1:2:3.5", "1:2:3:4",
                          "log:0:1:3", "log:1:-2:3", "log:1:2", "1,,2", "nan",
                          "inf:2:3", "1e999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_grid(bad), UsageError);
  }
}

TEST_CASE("spin values") {
  CHECK(parse_two_j("1") == 2);
  CHECK(parse_two_j("0.5") == 1);
  CHECK(parse_two_j("64") == 128);
  CHECK(parse_two_j("7.5") == 15);
  CHECK(parse_two_j("0") == 0);
  CHECK_THROWS_AS(parse_two_j("0.3"), UsageError);
  CHECK_THROWS_AS(parse_two_j("-1"), UsageError);
  CHECK_THROWS_AS(parse_two_j("one"), UsageError);
}

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 11.0) == "0.09090909090909091");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(format_number(92365443094128214016.0) == "9.236544309412821e+19");
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mant(-10.0, 10.0);
  std::uniform_int_distribution<int> ex(-300, 300);
  for (int trial = 0; trial < 2000; ++trial) {
    const double x = mant(rng) * std::pow(10.0, ex(rng));
    const std::string s = format_number(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
    std::string digits;
    for (char c : s) {
      if (c == 'e') break;
      if (c >= '0' && c <= '9') digits += c;
    }
    digits.erase(0, digits.find_first_not_of('0'));
    digits.erase(digits.find_last_not_of('0') + 1);
    CAPTURE(s);
    CHECK(digits.size() <= 17);
  }
}

TEST_CASE("CSV and JSON carry the same values") {
  Table t{{"a", "b", "c"}, {{1.0, 0.1, std::nullopt}, {-2.5e-17, 3.0, 1.0 / 3.0}}};
  std::ostringstream csv;
  write_csv(csv, t);
  CHECK(csv.str() == "a,b,c\n1,0.1,\n-2.5e-17,3,0.3333333333333333\n");
  std::ostringstream js;
  write_json(js, t);
  const auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["a"].get<double>() == 1.0);
  CHECK(parsed[0]["c"].is_null());
  CHECK(parsed[1]["a"].get<double>() == -2.5e-17);
  CHECK(parsed[1]["c"].get<double>() == 1.0 / 3.0);
  std::ostringstream sections;
  write_sections(sections, {{"x", t}, {"y", Table{{"v"}, {{2.0}}}}}, Format::Csv);
  CHECK(sections.str() == csv.str() + "\nv\n2\n");
  std::ostringstream sj;
  write_sections(sj, {{"x", t}, {"y", Table{{"v"}, {{2.0}}}}}, Format::Json);
  CHECK(nlohmann::json::parse(sj.str())["y"][0]["v"].get<double>() == 2.0);
}

TEST_CASE("gnuplot script names the CSV and its columns") {
  Table t{{"j", "omega_r", "pair_concurrence"},
          {{1.0, 0.5, 0.1}, {1.0, 1.0, 0.2}, {4.0, 0.5, 0.01}}};
  const std::string s = gnuplot_script("out.csv", t, "omega_r", "pair_concurrence", "j", false);
  CHECK(s.find("set datafile separator ','") != std::string::npos);
  CHECK(s.find("'out.csv'") != std::string::npos);
  CHECK(s.find("$1==1 ?") != std::string::npos);
  CHECK(s.find("$1==4 ?") != std::string::npos);
  CHECK(s.find("logscale") == std::string::npos);
  const std::string single = gnuplot_script("o'q.csv", t, "omega_r", "pair_concurrence", "", true);
  CHECK(single.find("using 2:3") != std::string::npos);
  CHECK(single.find("'o''q.csv'") != std::string::npos);
  CHECK(single.find("set logscale x") != std::string::npos);
  CHECK_THROWS_AS(gnuplot_script("o.csv", t, "nope", "j", "", false), UsageError);
}

TEST_CASE("parallel_for visits every index once for any width") {
  for (unsigned jobs : {0u, 1u, 2u, 7u, 64u}) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), jobs, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("parallel_for reports the lowest failing index") {
  for (unsigned jobs : {1u, 3u, 8u}) {
    try {
      parallel_for(100, jobs, [](std::size_t i) {
        if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected a failure");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "7");
    }
  }
}
