#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolforge/properties.hpp"

namespace bolforge {

enum class ClassConstraint { None, LeftBol, RightBol, Moufang, Associative };
enum class SearchMode { EnumerateAll, FindFirst };
enum class Target {
  Any,
  Nonassociative,
  /// C(L) is not closed under mul, ldiv or rdiv.
  CommutantNotSubloop,
  /// Uniquely 2-divisible with some a in C(L) whose square root is outside C(L).
  ConjectureWitness,
};

std::string_view constraint_name(ClassConstraint c);
std::optional<ClassConstraint> constraint_from_name(std::string_view name);
std::string_view target_name(Target t);
std::optional<Target> target_from_name(std::string_view name);

struct SearchLimits {
  std::uint64_t node_budget = 100'000'000;
  std::chrono::milliseconds wall_budget{10 * 60 * 1000};
};

struct SearchSpec {
  std::size_t order = 1;
  ClassConstraint constraint = ClassConstraint::None;
  SearchMode mode = SearchMode::EnumerateAll;
  /// Find mode: the predicate to hunt for. Enumerate mode: a filter applied
  /// to the representatives (Any keeps all).
  Target target = Target::Any;
  SearchLimits limits;
  int workers = 1;
  /// The tree is cut into independent subtrees once this many rows after
  /// the identity row are complete.
  std::size_t split_rows = 1;
  /// Reject partial tables that cannot complete to a canonical form.
  bool isomorphism_pruning = true;

  /// Throws InvalidSearchSpec.
  void validate() const;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t latin_prunes = 0;
  std::uint64_t identity_prunes = 0;
  std::uint64_t isomorphism_prunes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t subtrees = 0;

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchWitness {
  LoopTable loop;
  std::vector<Witness> tuples;
};

enum class SearchStatus { Completed, Found, NotFound, BudgetExhausted };
std::string_view status_name(SearchStatus s);

struct SearchResult {
  /// Canonical forms, pairwise non-isomorphic, ascending.
  std::vector<LoopTable> representatives;
  SearchStats stats;
  std::vector<SearchWitness> witnesses;
  /// True only when the whole tree was traversed within budget.
  bool exhausted = false;
  SearchStatus status = SearchStatus::Completed;
};

/// Every isomorphism class of the given order satisfying the constraint
/// (and the target filter). Subtrees run on `spec.workers` OpenMP threads;
/// the result does not depend on the worker count.
SearchResult enumerate(const SearchSpec& spec);

/// First loop in search order satisfying constraint and target, emitted as
/// its canonical form with the witness tuples for that form. The answer is
/// the same for every worker count.
SearchResult find_first(const SearchSpec& spec);

/// Dispatches on spec.mode.
SearchResult run_search(const SearchSpec& spec);

/// Single-threaded depth-first search over the whole tree without subtree
/// splitting. Kept as the reference the parallel driver is tested against.
SearchResult run_search_serial(const SearchSpec& spec);

bool satisfies(const LoopTable& loop, ClassConstraint constraint);
/// Witness tuples when the loop matches the target, nullopt otherwise.
std::optional<std::vector<Witness>> match_target(const LoopTable& loop, Target target);

}  // namespace bolforge
