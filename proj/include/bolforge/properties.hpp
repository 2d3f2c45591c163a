#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bolforge/loop_table.hpp"

namespace bolforge {

/// A tuple of elements demonstrating that a property fails. `relation` names
/// the violated condition when a property has several (e.g. "mul", "ldiv").
struct Witness {
  std::string relation;
  std::vector<Element> elements;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of an exhaustive check. Failed verdicts carry up to
/// kMaxWitnesses violating tuples, lexicographically first first.
struct Verdict {
  static constexpr std::size_t kMaxWitnesses = 3;

  bool holds = true;
  std::vector<Witness> witnesses;

  explicit operator bool() const { return holds; }
  /// Records a violation; returns true once enough witnesses are collected.
  bool fail(Witness w) {
    holds = false;
    witnesses.push_back(std::move(w));
    return witnesses.size() >= kMaxWitnesses;
  }
};

// Identities, all checked over every tuple.

/// x(y*xz) = (x*yx)z; witness (x,y,z).
Verdict is_left_bol(const LoopTable& loop);
/// (zx*y)x = z(xy*x); witness (x,y,z).
Verdict is_right_bol(const LoopTable& loop);
Verdict is_moufang(const LoopTable& loop);
/// x(yz) = (xy)z; witness (x,y,z).
Verdict is_associative(const LoopTable& loop);
Verdict is_commutative(const LoopTable& loop);
/// x^-1*xy = x*x^-1y = y. Elements without a two-sided inverse fail with
/// relation "no-two-sided-inverse".
Verdict has_lip(const LoopTable& loop);
/// x*xy = x^2 y; witness (x,y).
Verdict has_lap(const LoopTable& loop);
/// Every single element generates an associative subloop. Witness
/// (x, a, b, c) with a,b,c in <x> and a(bc) != (ab)c.
Verdict is_power_associative(const LoopTable& loop);
Verdict has_two_sided_inverses(const LoopTable& loop);

// Distinguished subsets.

ElementSubset commutant(const LoopTable& loop);
/// Commutant elements a with a*xy = ax*y, x*ay = xa*y, xy*a = x*ya.
ElementSubset center(const LoopTable& loop);
/// Elements a with a(x*ay) = (a*xa)y for all x,y.
ElementSubset bol_elements(const LoopTable& loop);
/// Least superset of S and {e} closed under mul, ldiv and rdiv.
ElementSubset generated_subloop(const ElementSubset& subset);

/// e in S and S closed under mul, ldiv, rdiv; witness (a,b) with the
/// operation as relation ("mul", "ldiv", "rdiv") or "identity".
Verdict is_subloop(const ElementSubset& subset);
/// xS = Sx, x(yS) = (xy)S, (Sx)y = S(xy) for all x,y. Throws NotASubloop.
Verdict is_normal(const ElementSubset& subset);

/// Squaring map injective; witness is the first colliding pair.
Verdict is_uniquely_2_divisible(const LoopTable& loop);

struct SquareRoot {
  enum class Kind { Unique, None, NotUnique };
  Kind kind = Kind::None;
  /// All c with c*c = a, ascending.
  std::vector<Element> roots;

  bool unique() const { return kind == Kind::Unique; }
  Element value() const { return roots.front(); }
};
SquareRoot square_root(const LoopTable& loop, Element a);

/// How to read the product x*yx when deciding twisted closure.
enum class Bracketing {
  RightNested,  // x*(y*x)
  LeftNested,   // (x*y)*x
};
/// e in S, S closed under two-sided inverses and (x,y) -> x*yx.
Verdict is_twisted_closed(const ElementSubset& subset,
                          Bracketing bracketing = Bracketing::RightNested);

/// Per-property verdicts for one loop plus its distinguished subsets.
struct PropertyReport {
  std::string loop_id;
  std::size_t order = 0;
  std::size_t identity = 0;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<std::pair<std::string, std::vector<Element>>> sets;

  const Verdict* find(std::string_view property) const;
};

PropertyReport build_property_report(const LoopTable& loop, std::string loop_id);
/// Stable JSON text: {"loop": id, ..., "properties": {name: "holds" |
/// {"fails": [witness, ...]}}, "sets": {...}}.
std::string to_json(const PropertyReport& report);

}  // namespace bolforge
