#include "bolforge/loop_table.hpp"

#include <algorithm>
#include <numeric>

namespace bolforge {

namespace {

// Returns the offending index, or n if every row (or column) is a permutation.
std::size_t first_bad_row(std::size_t n, const std::vector<std::uint8_t>& cells,
                          bool columns) {
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t v = columns ? cells[j * n + i] : cells[i * n + j];
      if (seen[v]) return i;
      seen[v] = true;
    }
  }
  return n;
}

bool is_neutral(std::size_t n, const std::vector<std::uint8_t>& cells, std::size_t e) {
  for (std::size_t x = 0; x < n; ++x) {
    if (cells[e * n + x] != x || cells[x * n + e] != x) return false;
  }
  return true;
}

}  // namespace

LoopTable LoopTable::from_cells(std::size_t order, std::vector<std::uint8_t> cells,
                                std::optional<std::size_t> identity) {
  if (order == 0) throw MalformedInput("order must be positive", 0);
  if (order > kMaxOrder) {
    throw MalformedInput("order " + std::to_string(order) + " exceeds maximum " +
                             std::to_string(kMaxOrder),
                         0);
  }
  if (cells.size() != order * order) {
    throw MalformedInput("expected " + std::to_string(order * order) + " cells, got " +
                             std::to_string(cells.size()),
                         0);
  }
  for (std::uint8_t v : cells) {
    if (v >= order) {
      throw MalformedInput("cell value " + std::to_string(v) + " out of range", 0);
    }
  }
  if (auto r = first_bad_row(order, cells, false); r < order) {
    throw NotLatinSquare(NotLatinSquare::Axis::Row, r);
  }
  if (auto c = first_bad_row(order, cells, true); c < order) {
    throw NotLatinSquare(NotLatinSquare::Axis::Column, c);
  }

  // A Latin square has at most one two-sided neutral element.
  std::size_t e = order;
  if (identity) {
    if (*identity >= order || !is_neutral(order, cells, *identity)) {
      throw NoIdentity("declared identity " + std::to_string(*identity) +
                       " is not a neutral element");
    }
    e = *identity;
  } else {
    for (std::size_t k = 0; k < order; ++k) {
      if (is_neutral(order, cells, k)) {
        e = k;
        break;
      }
    }
    if (e == order) throw NoIdentity("no two-sided neutral element");
  }

  auto data = std::make_shared<Data>();
  data->order = order;
  data->identity = e;
  data->left_div.resize(order * order);
  data->right_div.resize(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t x = 0; x < order; ++x) {
      std::uint8_t b = cells[a * order + x];
      data->left_div[a * order + b] = static_cast<std::uint8_t>(x);
      // x*a = c, so rdiv(c, a) = x.
      std::uint8_t c = cells[x * order + a];
      data->right_div[a * order + c] = static_cast<std::uint8_t>(x);
    }
  }
  data->cells = std::move(cells);
  return LoopTable(std::move(data));
}

void LoopTable::check(Element x) const {
  if (x.index() >= order()) throw IndexOutOfRange(x.index(), order());
}

Element LoopTable::mul(Element a, Element b) const {
  check(a);
  check(b);
  return Element(cell(a.index(), b.index()));
}

Element LoopTable::ldiv(Element a, Element b) const {
  check(a);
  check(b);
  return Element(left_div_cell(a.index(), b.index()));
}

Element LoopTable::rdiv(Element b, Element a) const {
  check(a);
  check(b);
  return Element(right_div_cell(b.index(), a.index()));
}

bool LoopTable::has_two_sided_inverse(Element x) const {
  check(x);
  const std::size_t e = data_->identity;
  return left_div_cell(x.index(), e) == right_div_cell(e, x.index());
}

Element LoopTable::inverse(Element x) const {
  check(x);
  const std::size_t e = data_->identity;
  std::size_t right = left_div_cell(x.index(), e);
  std::size_t left = right_div_cell(e, x.index());
  if (left != right) throw NoTwoSidedInverse(x.index(), left, right);
  return Element(right);
}

Element LoopTable::power(Element x, long long exponent) const {
  check(x);
  std::size_t base = x.index();
  if (exponent < 0) {
    base = inverse(x).index();
    exponent = -exponent;
  }
  std::size_t acc = data_->identity;
  for (long long k = 0; k < exponent; ++k) acc = cell(base, acc);
  return Element(acc);
}

std::size_t LoopTable::element_order(Element x) const {
  check(x);
  const std::size_t e = data_->identity;
  std::size_t acc = cell(x.index(), e);
  std::size_t k = 1;
  while (acc != e) {
    acc = cell(x.index(), acc);
    ++k;
  }
  return k;
}

LoopTable LoopTable::transposed() const {
  const std::size_t n = order();
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a * n + b] = cell(b, a);
  return from_cells(n, std::move(out), data_->identity);
}

LoopTable LoopTable::relabeled(std::span<const std::size_t> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw MalformedInput("relabeling has wrong size", 0);
  std::vector<bool> hit(n);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) throw MalformedInput("relabeling is not a permutation", 0);
    hit[p] = true;
  }
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out[perm[a] * n + perm[b]] = static_cast<std::uint8_t>(perm[cell(a, b)]);
  return from_cells(n, std::move(out), perm[data_->identity]);
}

LoopTable LoopTable::normalized() const {
  if (data_->identity == 0) return *this;
  std::vector<std::size_t> perm(order());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[0], perm[data_->identity]);
  return relabeled(perm);
}

std::vector<Element> LoopTable::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.emplace_back(i);
  return out;
}

ElementSubset::ElementSubset(LoopTable parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order()) {
  for (Element x : members_) {
    if (x.index() >= parent_.order()) throw IndexOutOfRange(x.index(), parent_.order());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_) mask_[x.index()] = true;
}

bool ElementSubset::is_subset_of(const ElementSubset& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return other.contains(x); });
}

ElementSubset ElementSubset::intersect(const ElementSubset& other) const {
  std::vector<Element> out;
  for (Element x : members_)
    if (other.contains(x)) out.push_back(x);
  return ElementSubset(parent_, std::move(out));
}

}  // namespace bolforge
