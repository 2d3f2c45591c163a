#include "search_engine.hpp"

#include <bit>

#include "bolforge/canonical.hpp"

namespace bolforge::detail {

namespace {

constexpr std::int8_t X = 0, Y = 1, Z = 2, M = -1;

// x(y*xz) = (x*yx)z
Equation left_bol() {
  return {Term::from_postfix({X, Y, X, Z, M, M, M}), Term::from_postfix({X, Y, X, M, M, Z, M})};
}
// (zx*y)x = z(xy*x)
Equation right_bol() {
  return {Term::from_postfix({Z, X, M, Y, M, X, M}), Term::from_postfix({Z, X, Y, M, X, M, M})};
}
// x(yz) = (xy)z
Equation associativity() {
  return {Term::from_postfix({X, Y, Z, M, M}), Term::from_postfix({X, Y, M, Z, M})};
}

constexpr int kMaxNodes = 16;

}  // namespace

Term Term::from_postfix(std::initializer_list<std::int8_t> code) {
  Term t;
  std::vector<std::int8_t> stack;
  for (std::int8_t op : code) {
    Node node;
    if (op >= 0) {
      node.var = op;
    } else {
      node.right = stack.back();
      stack.pop_back();
      node.left = stack.back();
      stack.pop_back();
    }
    stack.push_back(static_cast<std::int8_t>(t.nodes.size()));
    t.nodes.push_back(node);
  }
  return t;
}

std::vector<Equation> equations_for(ClassConstraint constraint) {
  switch (constraint) {
    case ClassConstraint::None: return {};
    case ClassConstraint::LeftBol: return {left_bol()};
    case ClassConstraint::RightBol: return {right_bol()};
    case ClassConstraint::Moufang: return {left_bol(), right_bol()};
    case ClassConstraint::Associative: return {associativity()};
  }
  return {};
}

SearchEngine::SearchEngine(const SearchSpec& spec, SearchControl& control)
    : n_(spec.order),
      full_(n_ == 64 ? ~0ULL : ((1ULL << n_) - 1)),
      equations_(equations_for(spec.constraint)),
      iso_pruning_(spec.isomorphism_pruning),
      control_(control),
      cells_(n_ * n_, -1),
      row_used_(n_, 0),
      col_used_(n_, 0),
      row_pos_(n_ * n_, -1),
      col_pos_(n_ * n_, -1) {}

bool SearchEngine::assign(std::size_t cell, int value) {
  const std::int8_t current = cells_[cell];
  if (current >= 0) return current == value;
  const std::size_t r = cell / n_, c = cell % n_;
  const std::uint64_t bit = 1ULL << value;
  if ((row_used_[r] | col_used_[c]) & bit) return false;
  cells_[cell] = static_cast<std::int8_t>(value);
  row_used_[r] |= bit;
  col_used_[c] |= bit;
  row_pos_[r * n_ + value] = static_cast<std::int8_t>(c);
  col_pos_[c * n_ + value] = static_cast<std::int8_t>(r);
  trail_.push_back(cell);
  return true;
}

void SearchEngine::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const std::size_t cell = trail_.back();
    trail_.pop_back();
    const std::size_t r = cell / n_, c = cell % n_;
    const int value = cells_[cell];
    const std::uint64_t bit = 1ULL << value;
    row_used_[r] &= ~bit;
    col_used_[c] &= ~bit;
    row_pos_[r * n_ + value] = -1;
    col_pos_[c * n_ + value] = -1;
    cells_[cell] = -1;
  }
  // Everything below the mark was propagated before the decision was made.
  if (queue_head_ > mark) queue_head_ = mark;
}

bool SearchEngine::cell_single(std::size_t cell) {
  if (cells_[cell] >= 0) return true;
  const std::uint64_t dom = full_ & ~(row_used_[cell / n_] | col_used_[cell % n_]);
  if (dom == 0) return false;
  if ((dom & (dom - 1)) == 0) return assign(cell, std::countr_zero(dom));
  return true;
}

// `value` must still find a place in the given row (axis 0) or column.
bool SearchEngine::line_hidden_single(int axis, std::size_t line, int value) {
  const std::uint64_t bit = 1ULL << value;
  if ((axis == 0 ? row_used_[line] : col_used_[line]) & bit) return true;
  std::size_t places = 0, where = 0;
  for (std::size_t k = 0; k < n_ && places < 2; ++k) {
    const std::size_t cell = axis == 0 ? line * n_ + k : k * n_ + line;
    if (cells_[cell] >= 0) continue;
    if (!((axis == 0 ? col_used_[k] : row_used_[k]) & bit)) {
      ++places;
      where = cell;
    }
  }
  if (places == 0) return false;
  if (places == 1) return assign(where, value);
  return true;
}

bool SearchEngine::latin_after(std::size_t cell) {
  const std::size_t r = cell / n_, c = cell % n_;
  const int v = cells_[cell];
  for (std::size_t k = 0; k < n_; ++k) {
    if (!cell_single(r * n_ + k) || !cell_single(k * n_ + c)) return false;
  }
  // v left column c and row r: other lines may now have one place for v.
  for (std::size_t k = 0; k < n_; ++k) {
    if (!line_hidden_single(0, k, v) || !line_hidden_single(1, k, v)) return false;
  }
  // Row r and column c lost a free cell for each missing value.
  for (std::uint64_t m = full_ & ~row_used_[r]; m; m &= m - 1) {
    if (!line_hidden_single(0, r, std::countr_zero(m))) return false;
  }
  for (std::uint64_t m = full_ & ~col_used_[c]; m; m &= m - 1) {
    if (!line_hidden_single(1, c, std::countr_zero(m))) return false;
  }
  return true;
}

void SearchEngine::evaluate(const Term& term, const int vars[3], int* values) const {
  for (std::size_t k = 0; k < term.nodes.size(); ++k) {
    const Term::Node& node = term.nodes[k];
    if (node.var >= 0) {
      values[k] = vars[node.var];
      continue;
    }
    const int a = values[node.left], b = values[node.right];
    values[k] = (a >= 0 && b >= 0) ? cells_[a * n_ + b] : -1;
  }
}

// Makes `node` evaluate to `value`: checks it when known, assigns the cell
// when only the outermost product is missing, and otherwise cancels a known
// operand (a*w = value with a*c = value placed gives w = c) and recurses.
bool SearchEngine::force(const Term& term, int node, int value, int* values) {
  if (values[node] >= 0) return values[node] == value;
  const Term::Node& nd = term.nodes[node];
  const int a = values[nd.left], b = values[nd.right];
  if (a >= 0 && b >= 0) {
    if (!assign(a * n_ + b, value)) return false;
    values[node] = value;
    return true;
  }
  if (a >= 0) {
    const int c = row_pos_[a * n_ + value];
    return c < 0 || force(term, nd.right, c, values);
  }
  if (b >= 0) {
    const int r = col_pos_[b * n_ + value];
    return r < 0 || force(term, nd.left, r, values);
  }
  return true;
}

bool SearchEngine::check_instance(const Equation& eq, const int vars[3]) {
  int lhs[kMaxNodes], rhs[kMaxNodes];
  evaluate(eq.lhs, vars, lhs);
  evaluate(eq.rhs, vars, rhs);
  const int l = lhs[eq.lhs.root()], r = rhs[eq.rhs.root()];
  if (l >= 0 && r >= 0) return l == r;
  if (l >= 0) return force(eq.rhs, eq.rhs.root(), l, rhs);
  if (r >= 0) return force(eq.lhs, eq.lhs.root(), r, lhs);
  return true;
}

bool SearchEngine::equations_full_scan() {
  int vars[3];
  const int count = static_cast<int>(n_);
  for (const Equation& eq : equations_) {
    for (vars[0] = 0; vars[0] < count; ++vars[0])
      for (vars[1] = 0; vars[1] < count; ++vars[1])
        for (vars[2] = 0; vars[2] < count; ++vars[2])
          if (!check_instance(eq, vars)) return false;
  }
  return true;
}

bool SearchEngine::propagate() {
  for (;;) {
    while (queue_head_ < trail_.size()) {
      const std::size_t cell = trail_[queue_head_++];
      if (!latin_after(cell)) {
        ++stats_.latin_prunes;
        return false;
      }
    }
    if (equations_.empty()) return true;
    const std::size_t before = trail_.size();
    if (!equations_full_scan()) {
      ++stats_.identity_prunes;
      return false;
    }
    if (trail_.size() == before) return true;
  }
}

bool SearchEngine::reset() {
  undo(0);
  queue_head_ = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (!assign(j, static_cast<int>(j)) || !assign(j * n_, static_cast<int>(j))) return false;
  }
  return propagate() && equations_full_scan() && propagate();
}

bool SearchEngine::load(const Cells& state) {
  if (!reset()) return false;
  for (std::size_t cell = 0; cell < state.size(); ++cell) {
    if (state[cell] >= 0 && !assign(cell, state[cell])) return false;
  }
  return propagate();
}

std::size_t SearchEngine::complete_rows() const {
  std::size_t rows = 0;
  for (; rows < n_; ++rows) {
    for (std::size_t c = 0; c < n_; ++c)
      if (cells_[rows * n_ + c] < 0) return rows;
  }
  return rows;
}

int SearchEngine::next_open_cell() const {
  for (std::size_t cell = n_; cell < n_ * n_; ++cell)
    if (cells_[cell] < 0) return static_cast<int>(cell);
  return -1;
}

bool SearchEngine::charge_node() {
  ++stats_.nodes;
  const std::uint64_t total = control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
  if (control_.budget_hit.load(std::memory_order_relaxed)) {
    budget_stop_ = true;
    return false;
  }
  if (total > control_.node_budget ||
      ((total & 255) == 0 && std::chrono::steady_clock::now() > control_.deadline)) {
    control_.budget_hit.store(true, std::memory_order_relaxed);
    budget_stop_ = true;
    return false;
  }
  return true;
}

void SearchEngine::collect_frontier(std::size_t split_rows, std::vector<Cells>& out) {
  split_rows_ = split_rows;
  frontier_ = &out;
  stop_ = false;
  dfs(Phase::Frontier, complete_rows());
  frontier_ = nullptr;
}

void SearchEngine::run(const LeafVisitor& visit, const std::function<bool()>& cancelled) {
  visit_ = &visit;
  cancelled_ = cancelled ? &cancelled : nullptr;
  stop_ = false;
  dfs(Phase::Leaves, complete_rows());
  visit_ = nullptr;
  cancelled_ = nullptr;
}

void SearchEngine::dfs(Phase phase, std::size_t rows_done) {
  if (phase == Phase::Frontier && rows_done >= split_rows_ + 1) {
    frontier_->push_back(cells_);
    return;
  }
  const int cell = next_open_cell();
  if (cell < 0) {
    if (phase == Phase::Frontier) {
      frontier_->push_back(cells_);
      return;
    }
    ++stats_.leaves;
    if ((*visit_)(cells_)) stop_ = true;
    return;
  }
  const std::size_t r = cell / n_, c = cell % n_;
  std::uint64_t dom = full_ & ~(row_used_[r] | col_used_[c]);
  while (dom && !stop_) {
    const int v = std::countr_zero(dom);
    dom &= dom - 1;
    if (cancelled_ && (*cancelled_)()) {
      stop_ = true;
      break;
    }
    if (!charge_node()) {
      stop_ = true;
      break;
    }
    const std::size_t mark = trail_.size();
    if (assign(cell, v) && propagate()) {
      const std::size_t rows = complete_rows();
      if (rows > rows_done && iso_pruning_ && has_smaller_relabeling(cells_, n_)) {
        ++stats_.isomorphism_prunes;
      } else {
        dfs(phase, rows);
      }
    }
    undo(mark);
  }
}

}  // namespace bolforge::detail
