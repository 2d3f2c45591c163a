#pragma once

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bolforge/loop_table.hpp"
#include "bolforge/search.hpp"
#include "oracle.hpp"

namespace testing {

using bolforge::Element;
using bolforge::LoopTable;

inline LoopTable from_oracle(const oracle::Table& t) {
  std::vector<std::uint8_t> cells;
  for (const auto& row : t)
    for (int v : row) cells.push_back(static_cast<std::uint8_t>(v));
  return LoopTable::from_cells(t.size(), std::move(cells));
}

inline oracle::Table to_oracle(const LoopTable& L) {
  const std::size_t n = L.order();
  oracle::Table t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = L.cell(a, b);
  return t;
}

inline LoopTable rows(std::initializer_list<std::initializer_list<int>> r) {
  oracle::Table t;
  for (const auto& row : r) t.emplace_back(row);
  return from_oracle(t);
}

inline std::vector<LoopTable> enumerate(std::size_t n, bolforge::ClassConstraint c,
                                        int workers = 1) {
  bolforge::SearchSpec spec;
  spec.order = n;
  spec.constraint = c;
  spec.workers = workers;
  auto result = bolforge::enumerate(spec);
  REQUIRE(result.exhausted);
  return result.representatives;
}

inline std::vector<Element> elems(std::initializer_list<std::size_t> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<std::size_t> indices(std::span<const Element> xs) {
  std::vector<std::size_t> out;
  for (auto x : xs) out.push_back(x.index());
  return out;
}

inline std::string data_path(const std::string& rel) {
  return std::string(BOLFORGE_DATA_DIR) + "/" + rel;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("bolforge_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// Random identity-fixing permutation of 0..n-1.
inline std::vector<std::size_t> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

}  // namespace testing
