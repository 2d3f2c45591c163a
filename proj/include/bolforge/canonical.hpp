#pragma once

#include <cstdint>
#include <span>

#include "bolforge/loop_table.hpp"

namespace bolforge {

/// Lexicographically least table (row-major) over all relabelings that send
/// the identity to 0. Two loops are isomorphic iff their canonical forms are
/// equal.
///
/// The relabeling is built row by row: a cell whose product has no label
/// yet can only be minimal by taking the smallest free label, so the search
/// branches only where a row or column label is still unassigned (at most
/// once per generator of the loop) and is exact at every supported order.
LoopTable canonical_form(const LoopTable& loop);

bool are_isomorphic(const LoopTable& a, const LoopTable& b);

namespace detail {

/// `cells` is a partial row-major table with identity 0 and -1 for unknown
/// cells. Returns true when some identity-fixing relabeling is provably
/// lexicographically smaller than every completion, i.e. no completion can
/// be a canonical form.
bool has_smaller_relabeling(std::span<const std::int8_t> cells, std::size_t order);

}  // namespace detail

}  // namespace bolforge
