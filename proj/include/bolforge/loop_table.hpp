#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bolforge/errors.hpp"

namespace bolforge {

/// Largest order a table may have; cells are stored in one byte.
inline constexpr std::size_t kMaxOrder = 255;

/// Index of an element in some LoopTable. Range is checked by the table
/// operations that receive it.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::size_t index) : index_(index) {}
  constexpr std::size_t index() const { return index_; }
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::size_t index_ = 0;
};

/// Immutable Cayley table of a finite loop. Copies share storage, so passing
/// tables around (including across threads) is cheap and safe.
///
/// Every row and column is a permutation of 0..n-1, and the identity row and
/// column are the identity permutation. Construction enforces both.
class LoopTable {
 public:
  /// Validates `cells` (row-major, cells[a*n+b] = a*b). The identity is
  /// auto-detected unless `identity` is given, in which case it is checked.
  static LoopTable from_cells(std::size_t order, std::vector<std::uint8_t> cells,
                              std::optional<std::size_t> identity = {});

  std::size_t order() const { return data_->order; }
  Element identity() const { return Element(data_->identity); }

  // Unchecked accessors for hot loops.
  std::uint8_t cell(std::size_t a, std::size_t b) const {
    return data_->cells[a * data_->order + b];
  }
  std::uint8_t left_div_cell(std::size_t a, std::size_t b) const {
    return data_->left_div[a * data_->order + b];
  }
  std::uint8_t right_div_cell(std::size_t b, std::size_t a) const {
    return data_->right_div[a * data_->order + b];
  }
  std::span<const std::uint8_t> cells() const { return data_->cells; }
  std::span<const std::uint8_t> row(std::size_t a) const {
    return std::span<const std::uint8_t>(data_->cells).subspan(a * order(), order());
  }

  Element mul(Element a, Element b) const;
  /// The unique x with a*x = b.
  Element ldiv(Element a, Element b) const;
  /// The unique y with y*a = b.
  Element rdiv(Element b, Element a) const;
  /// Two-sided inverse; throws NoTwoSidedInverse when ldiv(x,e) != rdiv(e,x).
  Element inverse(Element x) const;
  bool has_two_sided_inverse(Element x) const;
  /// Left-bracketed power: x^0 = e, x^(k+1) = x*x^k, x^(-k-1) = x^-1 * x^-k.
  Element power(Element x, long long exponent) const;
  /// Least k >= 1 with power(x, k) = e.
  std::size_t element_order(Element x) const;

  /// Opposite loop (a o b = b*a). Left Bol tables map to right Bol tables.
  LoopTable transposed() const;
  /// Table of the isomorphic loop obtained by renaming element i to perm[i].
  LoopTable relabeled(std::span<const std::size_t> perm) const;
  /// Swaps the identity with element 0 if needed.
  LoopTable normalized() const;

  std::vector<Element> elements() const;

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.data_ == b.data_ ||
           (a.order() == b.order() && a.data_->cells == b.data_->cells);
  }
  /// Row-major lexicographic comparison; used to sort representatives.
  friend bool operator<(const LoopTable& a, const LoopTable& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.data_->cells < b.data_->cells;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::size_t identity = 0;
    std::vector<std::uint8_t> cells;
    std::vector<std::uint8_t> left_div;
    std::vector<std::uint8_t> right_div;
  };
  explicit LoopTable(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  void check(Element x) const;

  std::shared_ptr<const Data> data_;
};

/// Subset of the elements of a fixed loop, kept sorted and duplicate-free.
class ElementSubset {
 public:
  explicit ElementSubset(LoopTable parent, std::vector<Element> members = {});

  const LoopTable& parent() const { return parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element x) const { return x.index() < mask_.size() && mask_[x.index()]; }
  bool is_subset_of(const ElementSubset& other) const;
  ElementSubset intersect(const ElementSubset& other) const;

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  LoopTable parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

struct ParseOptions {
  /// Relabel so that the identity becomes element 0.
  bool normalize = false;
};

/// Reads the canonical text format (optional '#' comments, a line holding n,
/// n rows of n integers, optional "identity=k" line) or its CSV variant
/// (n rows of n comma-separated cells, no size line).
LoopTable parse_loop(std::string_view text, ParseOptions options = {});
LoopTable load_loop_file(const std::filesystem::path& path, ParseOptions options = {});

std::string serialize_loop(const LoopTable& loop);
std::string serialize_loop_csv(const LoopTable& loop);

/// Stable 64-bit FNV-1a digest of the serialized table, as 16 hex digits.
std::string table_digest(const LoopTable& loop);

}  // namespace bolforge
