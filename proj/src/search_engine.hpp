#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bolforge/search.hpp"

namespace bolforge::detail {

/// Budget shared by every engine working on one search.
struct SearchControl {
  std::uint64_t node_budget = 0;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
};

/// One side of an identity as a product tree over variables x, y, z.
/// Nodes are stored children-first, so the root is the last node.
struct Term {
  struct Node {
    std::int8_t var = -1;  // 0..2 for a leaf
    std::int8_t left = -1;
    std::int8_t right = -1;
  };
  std::vector<Node> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  /// Postfix code: 0..2 pushes a variable, -1 multiplies the top two.
  static Term from_postfix(std::initializer_list<std::int8_t> code);
};

struct Equation {
  Term lhs;
  Term rhs;
};

std::vector<Equation> equations_for(ClassConstraint constraint);

/// Backtracking completion of a Cayley table with identity 0.
///
/// Cells are filled in row-major order with ascending values. Every placed
/// cell is queued and re-checks the Latin constraints of its row, column and
/// value. Once the queue drains, all identity instances are scanned: when one
/// side is known the value is pushed down the other side, cancelling through
/// rows and columns where the needed entry is already placed, until an
/// unknown cell with known operands is forced. This repeats to a fixpoint. Partial tables that cannot complete to a
/// canonical form are dropped each time a row is finished.
class SearchEngine {
 public:
  using Cells = std::vector<std::int8_t>;
  /// Called on complete tables; returning true stops the search.
  using LeafVisitor = std::function<bool(const Cells&)>;

  SearchEngine(const SearchSpec& spec, SearchControl& control);

  /// Identity row/column plus propagation. False if no completion exists.
  bool reset();
  /// Restores a frontier state produced by collect_frontier.
  bool load(const Cells& state);

  /// Depth-first until `split_rows` rows past the identity row are complete;
  /// the states reached there are appended in search order.
  void collect_frontier(std::size_t split_rows, std::vector<Cells>& out);
  /// Depth-first to the leaves. `cancelled` is polled between nodes.
  void run(const LeafVisitor& visit, const std::function<bool()>& cancelled = {});

  const SearchStats& stats() const { return stats_; }
  bool stopped_by_budget() const { return budget_stop_; }

 private:
  bool assign(std::size_t cell, int value);
  void undo(std::size_t mark);

  bool propagate();
  bool latin_after(std::size_t cell);
  bool line_hidden_single(int axis, std::size_t line, int value);
  bool cell_single(std::size_t cell);
  bool equations_full_scan();
  bool check_instance(const Equation& eq, const int vars[3]);
  void evaluate(const Term& term, const int vars[3], int* values) const;
  bool force(const Term& term, int node, int value, int* values);

  std::size_t complete_rows() const;
  int next_open_cell() const;
  bool charge_node();

  enum class Phase { Frontier, Leaves };
  void dfs(Phase phase, std::size_t rows_done);

  std::size_t n_;
  std::uint64_t full_;
  std::vector<Equation> equations_;
  bool iso_pruning_;
  SearchControl& control_;

  Cells cells_;
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
  // row_pos_[a*n+v]: the column c with a*c = v, or -1; col_pos_ likewise.
  std::vector<std::int8_t> row_pos_;
  std::vector<std::int8_t> col_pos_;
  std::vector<std::size_t> trail_;
  std::size_t queue_head_ = 0;

  std::size_t split_rows_ = 0;
  std::vector<Cells>* frontier_ = nullptr;
  const LeafVisitor* visit_ = nullptr;
  const std::function<bool()>* cancelled_ = nullptr;
  bool stop_ = false;
  bool budget_stop_ = false;
  SearchStats stats_;
};

}  // namespace bolforge::detail
