#pragma once

#include <cstddef>

#include "bolforge/loop_table.hpp"

namespace bolforge {

LoopTable cyclic_group(std::size_t n);
/// Componentwise product; element (a, b) has index a * |B| + b.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);
/// Z_p x| Z_q with (a, b)(c, d) = (a + r^b c mod p, b + d mod q); requires
/// r^q = 1 mod p. Element (a, b) has index b * p + a.
LoopTable semidirect_product(std::size_t p, std::size_t q, std::size_t r);
/// S3 as Z_3 x| Z_2.
LoopTable symmetric_group_3();
LoopTable klein_four();

/// The loop x o y = (x y^2 x)^(1/2) on an odd-order group G, square roots
/// taken in G. Throws NotAGroup or EvenOrder for bad input and
/// PostConstructionCheckFailed if the result is not a left Bol loop with
/// two-sided inverses.
LoopTable construct_bruck_from_group(const LoopTable& group);

}  // namespace bolforge
