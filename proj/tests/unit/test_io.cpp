// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <string>

#include "errors.hpp"
#include "io.hpp"
#include "minimize.hpp"
#include "support.hpp"

using namespace spherepot;

namespace {

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("config text round trip is exact") {
  const PointConfig c = random_uniform_config(SphereDim(3), 7, 4);
  const std::string text = format_config(c);
  CHECK(text.rfind("# sphere-config v1 n=3 N=7\n", 0) == 0);
  const PointConfig back = parse_config(text);
  CHECK(back.coords() == c.coords());
  CHECK(format_config(back) == text);
}

TEST_CASE("comments and blank lines are ignored") {
  const PointConfig c = parse_config("# sphere-config v1 n=2 N=2\n\n# note\n0 0 1\n0 0 -1\n");
  CHECK(c.size() == 2);
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_config("0 0 1\n0 0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_config("# sphere-config v1 n=2 N=3\n0 0 1\n0 0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_config("# sphere-config v1 n=2 N=2\n0 0 1\n0 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_config("# sphere-config v1 n=2 N=2\n0 0 1\n0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_config("# sphere-config v1 n=2 N=2\n0 0 1\n0 0 1\n"), CoincidentPointsError);
  CHECK_THROWS_AS(parse_config("# sphere-config v1 n=2 N=2\n0 0 1\n0 0 2\n"), DomainError);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "spherepot_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "c.txt").string();
  const PointConfig c = random_uniform_config(SphereDim(2), 5, 1);
  save_config(c, path);
  CHECK(load_config(path).coords() == c.coords());
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS_AS(load_config((dir / "missing.txt").string()), IoError);
  CHECK_THROWS_AS(save_config(c, (dir / "no" / "such" / "dir.txt").string()), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("experiment CSV and SVG") {
  MinimizeParams p;
  p.restarts = 2;
  p.max_iters = 50;
  const Experiment e = figure_experiment(SphereDim(3), {4, 5, 6}, p);
  const std::string csv = format_experiment_csv(e);
  CHECK(csv.rfind("n,N,restart,final_energy,finite_bound,asymptotic_bound,converged,iters\n", 0) == 0);
  CHECK(count(csv, "\n") == 1 + 6);
  CHECK(format_double(0.1) == "0.10000000000000001");
  const std::string svg = format_experiment_svg(e);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count(svg, "class=\"cross\"") == 6);
  CHECK(count(svg, "class=\"bound\"") == 1);
  CHECK(count(svg, "class=\"asymptotic\"") == 1);
}

}  // TEST_SUITE
