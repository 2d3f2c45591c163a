#include "bolforge/canonical.hpp"

#include <vector>

namespace bolforge {

namespace {

// Shared labeling state: lab[element] -> label, inv[label] -> element.
struct Labeling {
  explicit Labeling(std::size_t n, std::size_t identity) : lab(n, -1), inv(n, -1) {
    lab[identity] = 0;
    inv[0] = static_cast<int>(identity);
    next = 1;
  }
  int give(std::size_t element) {
    lab[element] = next;
    inv[next] = static_cast<int>(element);
    return next++;
  }
  void take_back(std::size_t element) {
    --next;
    inv[next] = -1;
    lab[element] = -1;
  }

  std::vector<int> lab;
  std::vector<int> inv;
  int next = 0;
};

class MinimalTable {
 public:
  explicit MinimalTable(const LoopTable& loop)
      : loop_(loop),
        n_(loop.order()),
        labels_(n_, loop.identity().index()),
        current_(n_ * n_),
        best_(n_ * n_) {}

  std::vector<std::uint8_t> run() {
    for (std::size_t j = 0; j < n_; ++j) {
      current_[j] = static_cast<std::uint8_t>(j);
      current_[j * n_] = static_cast<std::uint8_t>(j);
    }
    search(n_, false);
    return best_;
  }

 private:
  void search(std::size_t pos, bool less) {
    if (pos == n_ * n_) {
      if (less || !have_best_) {
        best_ = current_;
        have_best_ = true;
        ++best_version_;
      }
      return;
    }
    // A new best shares this frame's prefix, so `less` no longer holds.
    const std::uint64_t version = best_version_;
    auto still = [&] { return less && version == best_version_; };
    const std::size_t i = pos / n_, j = pos % n_;
    for (std::size_t axis : {i, j}) {
      if (labels_.inv[axis] >= 0) continue;
      // Labels are handed out in order, so the unassigned one is the next.
      for (std::size_t w = 0; w < n_; ++w) {
        if (labels_.lab[w] >= 0) continue;
        labels_.give(w);
        search(pos, still());
        labels_.take_back(w);
      }
      return;
    }
    const std::size_t v = loop_.cell(labels_.inv[i], labels_.inv[j]);
    const bool fresh = labels_.lab[v] < 0;
    const int value = fresh ? labels_.give(v) : labels_.lab[v];
    bool still_less = still();
    bool pruned = false;
    if (have_best_ && !still_less) {
      if (value > best_[pos]) pruned = true;
      else if (value < best_[pos]) still_less = true;
    }
    if (!pruned) {
      current_[pos] = static_cast<std::uint8_t>(value);
      search(pos + 1, still_less);
    }
    if (fresh) labels_.take_back(v);
  }

  const LoopTable& loop_;
  std::size_t n_;
  Labeling labels_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  bool have_best_ = false;
  std::uint64_t best_version_ = 0;
};

class PartialMinimality {
 public:
  PartialMinimality(std::span<const std::int8_t> cells, std::size_t n)
      : cells_(cells), n_(n), labels_(n, 0) {}

  bool smaller_exists() { return search(n_); }

 private:
  bool search(std::size_t pos) {
    if (pos == n_ * n_) return false;
    const std::size_t i = pos / n_, j = pos % n_;
    for (std::size_t axis : {i, j}) {
      if (labels_.inv[axis] >= 0) continue;
      for (std::size_t w = 0; w < n_; ++w) {
        if (labels_.lab[w] >= 0) continue;
        labels_.give(w);
        const bool found = search(pos);
        labels_.take_back(w);
        if (found) return true;
      }
      return false;
    }
    const std::int8_t v = cells_[labels_.inv[i] * n_ + labels_.inv[j]];
    const std::int8_t target = cells_[pos];
    if (v < 0 || target < 0) return false;  // unknown: nothing provable
    const bool fresh = labels_.lab[v] < 0;
    const int value = fresh ? labels_.next : labels_.lab[v];
    if (value != target) return value < target;
    if (fresh) labels_.give(v);
    const bool found = search(pos + 1);
    if (fresh) labels_.take_back(v);
    return found;
  }

  std::span<const std::int8_t> cells_;
  std::size_t n_;
  Labeling labels_;
};

}  // namespace

LoopTable canonical_form(const LoopTable& loop) {
  return LoopTable::from_cells(loop.order(), MinimalTable(loop).run(), 0);
}

bool are_isomorphic(const LoopTable& a, const LoopTable& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

namespace detail {

bool has_smaller_relabeling(std::span<const std::int8_t> cells, std::size_t order) {
  return PartialMinimality(cells, order).smaller_exists();
}

}  // namespace detail

}  // namespace bolforge
