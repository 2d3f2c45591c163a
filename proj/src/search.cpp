#include "bolforge/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>

#include "bolforge/canonical.hpp"
#include "search_engine.hpp"

namespace bolforge {

namespace {

using detail::SearchControl;
using detail::SearchEngine;
using Cells = SearchEngine::Cells;

constexpr std::array<std::pair<ClassConstraint, std::string_view>, 5> kConstraints{{
    {ClassConstraint::None, "none"},
    {ClassConstraint::LeftBol, "left-bol"},
    {ClassConstraint::RightBol, "right-bol"},
    {ClassConstraint::Moufang, "moufang"},
    {ClassConstraint::Associative, "associative"},
}};

constexpr std::array<std::pair<Target, std::string_view>, 4> kTargets{{
    {Target::Any, "any"},
    {Target::Nonassociative, "nonassociative"},
    {Target::CommutantNotSubloop, "commutant-not-subloop"},
    {Target::ConjectureWitness, "conjecture-witness"},
}};

void init_control(SearchControl& control, const SearchSpec& spec) {
  control.node_budget = spec.limits.node_budget;
  control.deadline = std::chrono::steady_clock::now() + spec.limits.wall_budget;
}

LoopTable to_table(const Cells& cells, std::size_t n) {
  return LoopTable::from_cells(n, std::vector<std::uint8_t>(cells.begin(), cells.end()), 0);
}

// Search pruning is never trusted for the final verdict.
void reverify(const LoopTable& loop, ClassConstraint constraint) {
  if (!satisfies(loop, constraint)) {
    throw std::logic_error("search emitted a loop violating constraint " +
                           std::string(constraint_name(constraint)));
  }
}

SearchResult finish_enumeration(const SearchSpec& spec, std::vector<LoopTable> forms,
                                SearchStats stats, bool budget_hit) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  SearchResult result;
  for (auto& form : forms) {
    reverify(form, spec.constraint);
    if (match_target(form, spec.target)) result.representatives.push_back(std::move(form));
  }
  result.stats = stats;
  result.exhausted = !budget_hit;
  result.status = budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Completed;
  return result;
}

struct Found {
  LoopTable loop;
  std::vector<Witness> tuples;
};

std::optional<Found> examine(const Cells& cells, const SearchSpec& spec) {
  LoopTable form = canonical_form(to_table(cells, spec.order));
  auto tuples = match_target(form, spec.target);
  if (!tuples) return std::nullopt;
  reverify(form, spec.constraint);
  return Found{std::move(form), std::move(*tuples)};
}

SearchResult finish_find(std::optional<Found> found, SearchStats stats, bool budget_hit) {
  SearchResult result;
  result.stats = stats;
  if (found) {
    result.representatives.push_back(found->loop);
    result.witnesses.push_back({found->loop, std::move(found->tuples)});
    result.status = budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Found;
  } else {
    result.status = budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
    result.exhausted = !budget_hit;
  }
  return result;
}

struct Subtree {
  std::vector<LoopTable> forms;
  std::optional<Found> found;
  SearchStats stats;
};

}  // namespace

std::string_view constraint_name(ClassConstraint c) {
  for (const auto& [k, name] : kConstraints)
    if (k == c) return name;
  return "unknown";
}

std::optional<ClassConstraint> constraint_from_name(std::string_view name) {
  if (name == "group") return ClassConstraint::Associative;
  for (const auto& [k, n] : kConstraints)
    if (n == name) return k;
  return std::nullopt;
}

std::string_view target_name(Target t) {
  for (const auto& [k, name] : kTargets)
    if (k == t) return name;
  return "unknown";
}

std::optional<Target> target_from_name(std::string_view name) {
  for (const auto& [k, n] : kTargets)
    if (n == name) return k;
  return std::nullopt;
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Completed: return "completed";
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  latin_prunes += o.latin_prunes;
  identity_prunes += o.identity_prunes;
  isomorphism_prunes += o.isomorphism_prunes;
  leaves += o.leaves;
  subtrees += o.subtrees;
  return *this;
}

void SearchSpec::validate() const {
  if (order < 1 || order > 64) throw InvalidSearchSpec("search order must be in 1..64");
  if (workers < 1) throw InvalidSearchSpec("worker count must be positive");
  if (limits.node_budget == 0) throw InvalidSearchSpec("node budget must be positive");
  if (limits.wall_budget.count() <= 0) throw InvalidSearchSpec("wall budget must be positive");
}

bool satisfies(const LoopTable& loop, ClassConstraint constraint) {
  switch (constraint) {
    case ClassConstraint::None: return true;
    case ClassConstraint::LeftBol: return is_left_bol(loop).holds;
    case ClassConstraint::RightBol: return is_right_bol(loop).holds;
    case ClassConstraint::Moufang: return is_moufang(loop).holds;
    case ClassConstraint::Associative: return is_associative(loop).holds;
  }
  return false;
}

std::optional<std::vector<Witness>> match_target(const LoopTable& loop, Target target) {
  switch (target) {
    case Target::Any: return std::vector<Witness>{};
    case Target::Nonassociative: {
      Verdict v = is_associative(loop);
      if (v) return std::nullopt;
      return std::move(v.witnesses);
    }
    case Target::CommutantNotSubloop: {
      Verdict v = is_subloop(commutant(loop));
      if (v) return std::nullopt;
      return std::move(v.witnesses);
    }
    case Target::ConjectureWitness: {
      if (!is_uniquely_2_divisible(loop)) return std::nullopt;
      const ElementSubset C = commutant(loop);
      std::vector<Witness> out;
      for (Element a : C.members()) {
        const Element c = square_root(loop, a).value();
        if (!C.contains(c)) out.push_back({"root-outside-commutant", {a, c}});
      }
      if (out.empty()) return std::nullopt;
      return out;
    }
  }
  return std::nullopt;
}

SearchResult enumerate(const SearchSpec& spec) {
  spec.validate();
  if (spec.mode != SearchMode::EnumerateAll) throw InvalidSearchSpec("enumerate needs enumerate-all mode");

  SearchControl control;
  init_control(control, spec);
  SearchEngine root(spec, control);
  std::vector<Cells> frontier;
  if (root.reset()) root.collect_frontier(spec.split_rows, frontier);

  std::vector<Subtree> parts(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.workers)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
    SearchEngine engine(spec, control);
    Subtree& part = parts[i];
    if (engine.load(frontier[i])) {
      engine.run([&](const Cells& cells) {
        part.forms.push_back(canonical_form(to_table(cells, spec.order)));
        return false;
      });
    }
    part.stats = engine.stats();
  }

  SearchStats stats = root.stats();
  stats.subtrees = frontier.size();
  std::vector<LoopTable> forms;
  for (auto& part : parts) {
    stats += part.stats;
    forms.insert(forms.end(), part.forms.begin(), part.forms.end());
  }
  return finish_enumeration(spec, std::move(forms), stats, control.budget_hit.load());
}

SearchResult find_first(const SearchSpec& spec) {
  spec.validate();
  if (spec.mode != SearchMode::FindFirst) throw InvalidSearchSpec("find_first needs find-first mode");

  SearchControl control;
  init_control(control, spec);
  SearchEngine root(spec, control);
  std::vector<Cells> frontier;
  if (root.reset()) root.collect_frontier(spec.split_rows, frontier);

  // Lowest subtree index holding a witness so far; higher subtrees give up.
  const std::size_t none = frontier.size();
  std::atomic<std::size_t> best{none};
  std::vector<Subtree> parts(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.workers)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(frontier.size()); ++si) {
    const std::size_t i = static_cast<std::size_t>(si);
    if (best.load() < i) continue;
    SearchEngine engine(spec, control);
    Subtree& part = parts[i];
    if (engine.load(frontier[i])) {
      engine.run(
          [&](const Cells& cells) {
            part.found = examine(cells, spec);
            if (!part.found) return false;
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return true;
          },
          [&] { return best.load(std::memory_order_relaxed) < i; });
    }
    part.stats = engine.stats();
  }

  SearchStats stats = root.stats();
  stats.subtrees = frontier.size();
  for (const auto& part : parts) stats += part.stats;
  std::optional<Found> found;
  if (best.load() != none) found = std::move(parts[best.load()].found);
  return finish_find(std::move(found), stats, control.budget_hit.load());
}

SearchResult run_search(const SearchSpec& spec) {
  return spec.mode == SearchMode::EnumerateAll ? enumerate(spec) : find_first(spec);
}

SearchResult run_search_serial(const SearchSpec& spec) {
  spec.validate();
  SearchControl control;
  init_control(control, spec);
  SearchEngine engine(spec, control);
  std::vector<LoopTable> forms;
  std::optional<Found> found;
  if (engine.reset()) {
    engine.run([&](const Cells& cells) {
      if (spec.mode == SearchMode::FindFirst) {
        found = examine(cells, spec);
        return found.has_value();
      }
      forms.push_back(canonical_form(to_table(cells, spec.order)));
      return false;
    });
  }
  SearchStats stats = engine.stats();
  stats.subtrees = 1;
  const bool budget_hit = control.budget_hit.load();
  if (spec.mode == SearchMode::FindFirst) return finish_find(std::move(found), stats, budget_hit);
  return finish_enumeration(spec, std::move(forms), stats, budget_hit);
}

}  // namespace bolforge
