#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bolforge/loop_table.hpp"

namespace bolforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw MalformedInput("not a non-negative integer: '" + std::string(token) + "'", line);
  }
  return value;
}

std::vector<std::size_t> split_row(std::string_view text, bool csv, std::size_t line) {
  std::vector<std::size_t> out;
  if (csv) {
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      out.push_back(parse_number(text.substr(start, comma - start), line));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(parse_number(text.substr(i, j - i), line));
    i = j;
  }
  return out;
}

struct Line {
  std::string_view text;
  std::size_t number;
};

}  // namespace

LoopTable parse_loop(std::string_view text, ParseOptions options) {
  std::vector<Line> data;
  std::optional<std::size_t> identity;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    ++number;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("identity=")) {
      identity = parse_number(line.substr(9), number);
      continue;
    }
    data.push_back({line, number});
  }
  if (data.empty()) throw MalformedInput("no table found", 0);

  const bool csv = data.front().text.find(',') != std::string_view::npos;
  std::size_t n = 0;
  std::size_t first_row = 0;
  if (csv) {
    n = data.size();
  } else {
    auto header = split_row(data.front().text, false, data.front().number);
    if (header.size() != 1) {
      throw MalformedInput("first line must hold the order", data.front().number);
    }
    n = header.front();
    first_row = 1;
    if (n == 0) throw MalformedInput("order must be positive", data.front().number);
    if (n > kMaxOrder) {
      throw MalformedInput("order " + std::to_string(n) + " exceeds maximum " +
                               std::to_string(kMaxOrder),
                           data.front().number);
    }
    if (data.size() - first_row != n) {
      throw MalformedInput("expected " + std::to_string(n) + " rows, found " +
                               std::to_string(data.size() - first_row),
                           data.back().number);
    }
  }
  if (n > kMaxOrder) throw MalformedInput("order exceeds maximum 255", 0);

  std::vector<std::uint8_t> cells;
  cells.reserve(n * n);
  for (std::size_t r = first_row; r < data.size(); ++r) {
    auto row = split_row(data[r].text, csv, data[r].number);
    if (row.size() != n) {
      throw MalformedInput("expected " + std::to_string(n) + " cells, found " +
                               std::to_string(row.size()),
                           data[r].number);
    }
    for (std::size_t v : row) {
      if (v >= n) {
        throw MalformedInput("cell value " + std::to_string(v) + " out of range 0.." +
                                 std::to_string(n - 1),
                             data[r].number);
      }
      cells.push_back(static_cast<std::uint8_t>(v));
    }
  }
  LoopTable loop = LoopTable::from_cells(n, std::move(cells), identity);
  return options.normalize ? loop.normalized() : loop;
}

LoopTable load_loop_file(const std::filesystem::path& path, ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string(), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_loop(buffer.str(), options);
}

std::string serialize_loop(const LoopTable& loop) {
  const std::size_t n = loop.order();
  std::string out = std::to_string(n) + "\n";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out += ' ';
      out += std::to_string(loop.cell(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_loop_csv(const LoopTable& loop) {
  const std::size_t n = loop.order();
  std::string out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out += ',';
      out += std::to_string(loop.cell(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string table_digest(const LoopTable& loop) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_loop(loop)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace bolforge
