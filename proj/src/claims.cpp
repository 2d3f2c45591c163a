#include "bolforge/claims.hpp"

#include <algorithm>
#include <array>

namespace bolforge {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 10> kNames{{
    {ClaimId::Lemma1, "LEMMA1"},
    {ClaimId::Lemma2, "LEMMA2"},
    {ClaimId::Theorem1, "THEOREM1"},
    {ClaimId::Corollary, "COROLLARY"},
    {ClaimId::Remark1Ext, "REMARK1_EXT"},
    {ClaimId::Remark2Ext, "REMARK2_EXT"},
    {ClaimId::GlaubermanParity, "GLAUBERMAN_PARITY"},
    {ClaimId::MoufangCommutant, "MOUFANG_COMMUTANT"},
    {ClaimId::GroupCoincidence, "GROUP_COINCIDENCE"},
    {ClaimId::CenterNormal, "CENTER_NORMAL"},
}};

ClaimVerdict verified(ClaimId id, std::string scope, std::string note = {}) {
  return {id, ClaimStatus::Verified, std::move(scope), std::move(note), {}};
}

ClaimVerdict unmet(ClaimId id, std::string scope, std::string hypothesis) {
  return {id, ClaimStatus::HypothesisNotMet, std::move(scope), std::move(hypothesis), {}};
}

ClaimVerdict refuted(ClaimId id, std::string scope, std::vector<Witness> witnesses,
                     std::string note = {}) {
  return {id, ClaimStatus::Refuted, std::move(scope), std::move(note), std::move(witnesses)};
}

Witness witness(std::string relation, std::initializer_list<std::size_t> xs) {
  Witness w{std::move(relation), {}};
  for (std::size_t x : xs) w.elements.emplace_back(x);
  return w;
}

// First commutant element of even order, if any.
std::optional<Element> even_order_member(const LoopTable& loop, const ElementSubset& s) {
  for (Element a : s.members())
    if (loop.element_order(a) % 2 == 0) return a;
  return std::nullopt;
}

}  // namespace

std::string_view claim_name(ClaimId id) {
  for (const auto& [c, name] : kNames)
    if (c == id) return name;
  return "UNKNOWN";
}

std::optional<ClaimId> claim_from_name(std::string_view name) {
  for (const auto& [c, n] : kNames)
    if (n == name) return c;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = [] {
    std::vector<ClaimId> out;
    for (const auto& [c, name] : kNames) out.push_back(c);
    return out;
  }();
  return claims;
}

std::string_view status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::HypothesisNotMet: return "hypothesis-not-met";
    case ClaimStatus::Refuted: return "REFUTED";
  }
  return "unknown";
}

ClaimVerdict check_lemma1(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::Lemma1;
  if (!is_left_bol(L)) return unmet(id, std::move(scope), "not left Bol");
  const ElementSubset C = commutant(L);
  std::vector<Witness> misses;
  for (Element a : C.members()) {
    const std::size_t sq = L.cell(a.index(), a.index());
    if (!C.contains(Element(sq))) misses.push_back(witness("a^2", {a.index()}));
    if (!C.contains(L.inverse(a))) misses.push_back(witness("b^-1", {a.index()}));
    for (Element b : C.members()) {
      if (!C.contains(Element(L.cell(sq, b.index()))))
        misses.push_back(witness("a^2*b", {a.index(), b.index()}));
    }
  }
  if (!misses.empty()) return refuted(id, std::move(scope), std::move(misses));
  return verified(id, std::move(scope));
}

ClaimVerdict check_lemma2(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::Lemma2;
  if (!is_left_bol(L)) return unmet(id, std::move(scope), "not left Bol");
  const ElementSubset C = commutant(L);
  std::vector<Witness> misses;
  for (Element a : C.members()) {
    const ElementSubset cyclic = generated_subloop(ElementSubset(L, {a}));
    for (Element g : cyclic.members()) {
      if (!C.contains(g)) misses.push_back(witness("<a>", {a.index(), g.index()}));
    }
  }
  if (!misses.empty()) return refuted(id, std::move(scope), std::move(misses));
  return verified(id, std::move(scope));
}

ClaimVerdict check_theorem1(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::Theorem1;
  if (!is_left_bol(L)) return unmet(id, std::move(scope), "not left Bol");
  const ElementSubset C = commutant(L);
  if (even_order_member(L, C)) return unmet(id, std::move(scope), "even-order commutant element");

  std::vector<Witness> misses;
  Verdict closed = is_subloop(C);
  for (auto& w : closed.witnesses) misses.push_back(std::move(w));

  // The square root used by the argument: c = a^((k+1)/2) inside <a>.
  const bool odd_loop = L.order() % 2 == 1;
  for (Element a : C.members()) {
    const std::size_t k = L.element_order(a);
    const Element c = L.power(a, static_cast<long long>((k + 1) / 2));
    if (L.mul(c, c) != a) misses.push_back(witness("c*c=a", {a.index(), c.index()}));
    if (!C.contains(c)) misses.push_back(witness("c-in-commutant", {a.index(), c.index()}));
    const ElementSubset cyclic = generated_subloop(ElementSubset(L, {a}));
    std::size_t roots_in_cyclic = 0;
    for (Element r : cyclic.members())
      if (L.mul(r, r) == a) ++roots_in_cyclic;
    if (roots_in_cyclic != 1)
      misses.push_back(witness("unique-root-in-<a>", {a.index(), c.index()}));
    const SquareRoot global = square_root(L, a);
    if (global.unique() && global.value() != c)
      misses.push_back(witness("root-matches-square_root", {a.index(), c.index()}));
    if (odd_loop && !global.unique())
      misses.push_back(witness("unique-root-odd-loop", {a.index(), c.index()}));
  }
  if (!misses.empty()) return refuted(id, std::move(scope), std::move(misses));
  return verified(id, std::move(scope));
}

ClaimVerdict check_corollary(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::Corollary;
  if (!is_left_bol(L)) return unmet(id, std::move(scope), "not left Bol");
  std::vector<Witness> misses;
  if (L.order() % 2 == 1) {
    for (Element x : L.elements())
      if (L.element_order(x) % 2 == 0) misses.push_back(witness("even-order-element", {x.index()}));
    for (auto& w : is_subloop(commutant(L)).witnesses) misses.push_back(std::move(w));
    if (!misses.empty()) return refuted(id, std::move(scope), std::move(misses));
    return verified(id, std::move(scope), "odd order: commutant is a subloop");
  }
  for (Element x : L.elements())
    if (L.element_order(x) % 2 == 0)
      return verified(id, std::move(scope), "even order: element of even order exists");
  misses.push_back(witness("no-even-order-element", {}));
  return refuted(id, std::move(scope), std::move(misses));
}

ClaimVerdict check_glauberman_parity(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::GlaubermanParity;
  if (!is_left_bol(L) && !is_right_bol(L)) return unmet(id, std::move(scope), "not Bol");
  std::optional<Element> even;
  for (Element x : L.elements()) {
    if (L.element_order(x) % 2 == 0) {
      even = x;
      break;
    }
  }
  const bool odd_loop = L.order() % 2 == 1;
  if (odd_loop && even)
    return refuted(id, std::move(scope), {witness("even-order-element", {even->index()})});
  if (!odd_loop && !even)
    return refuted(id, std::move(scope), {witness("all-orders-odd", {})});
  return verified(id, std::move(scope));
}

ClaimVerdict check_remark1_extension(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::Remark1Ext;
  if (!is_left_bol(L)) return unmet(id, std::move(scope), "not left Bol");
  const ElementSubset C = commutant(L);
  if (C.size() % 2 == 0) return unmet(id, std::move(scope), "even commutant cardinality");
  if (!is_twisted_closed(C)) return unmet(id, std::move(scope), "commutant not twisted-closed");
  Verdict closed = is_subloop(C);
  const std::string note = "odd order read as |C(L)| with twisted closure";
  if (!closed) return refuted(id, std::move(scope), std::move(closed.witnesses), note);
  return verified(id, std::move(scope), note);
}

ClaimVerdict check_remark2_extension(const LoopTable& L, std::string scope) {
  constexpr auto id = ClaimId::Remark2Ext;
  const ElementSubset S = bol_elements(L).intersect(commutant(L));
  if (even_order_member(L, S))
    return unmet(id, std::move(scope), "even-order element in B(L)∩C(L)");
  Verdict closed = is_subloop(S);
  if (!closed) return refuted(id, std::move(scope), std::move(closed.witnesses));
  return verified(id, std::move(scope));
}

std::vector<ClaimVerdict> check_static_claims(const LoopTable& L, std::string scope) {
  std::vector<ClaimVerdict> out;
  const ElementSubset C = commutant(L);
  const ElementSubset Z = center(L);

  Verdict z_sub = is_subloop(Z);
  if (!z_sub) {
    out.push_back(refuted(ClaimId::CenterNormal, scope, std::move(z_sub.witnesses),
                          "center not a subloop"));
  } else if (Verdict z_normal = is_normal(Z); !z_normal) {
    out.push_back(refuted(ClaimId::CenterNormal, scope, std::move(z_normal.witnesses)));
  } else {
    out.push_back(verified(ClaimId::CenterNormal, scope));
  }

  if (!is_associative(L)) {
    out.push_back(unmet(ClaimId::GroupCoincidence, scope, "not associative"));
  } else if (C != Z) {
    std::vector<Witness> misses;
    for (Element a : C.members())
      if (!Z.contains(a)) misses.push_back(witness("commutant-not-central", {a.index()}));
    out.push_back(refuted(ClaimId::GroupCoincidence, scope, std::move(misses)));
  } else {
    out.push_back(verified(ClaimId::GroupCoincidence, scope));
  }

  if (!is_moufang(L)) {
    out.push_back(unmet(ClaimId::MoufangCommutant, scope, "not Moufang"));
  } else if (Verdict c_sub = is_subloop(C); !c_sub) {
    out.push_back(refuted(ClaimId::MoufangCommutant, scope, std::move(c_sub.witnesses)));
  } else {
    out.push_back(verified(ClaimId::MoufangCommutant, scope));
  }
  return out;
}

ClaimVerdict check_claim(ClaimId id, const LoopTable& loop, std::string scope) {
  switch (id) {
    case ClaimId::Lemma1: return check_lemma1(loop, std::move(scope));
    case ClaimId::Lemma2: return check_lemma2(loop, std::move(scope));
    case ClaimId::Theorem1: return check_theorem1(loop, std::move(scope));
    case ClaimId::Corollary: return check_corollary(loop, std::move(scope));
    case ClaimId::Remark1Ext: return check_remark1_extension(loop, std::move(scope));
    case ClaimId::Remark2Ext: return check_remark2_extension(loop, std::move(scope));
    case ClaimId::GlaubermanParity: return check_glauberman_parity(loop, std::move(scope));
    case ClaimId::CenterNormal: return check_static_claims(loop, std::move(scope))[0];
    case ClaimId::GroupCoincidence: return check_static_claims(loop, std::move(scope))[1];
    case ClaimId::MoufangCommutant: return check_static_claims(loop, std::move(scope))[2];
  }
  throw std::logic_error("unhandled claim");
}

std::vector<ClaimVerdict> check_claims(const LoopTable& loop, std::string scope,
                                       const std::vector<ClaimId>& selection) {
  std::vector<ClaimVerdict> out;
  std::optional<std::vector<ClaimVerdict>> statics;
  for (ClaimId id : all_claims()) {
    if (std::find(selection.begin(), selection.end(), id) == selection.end()) continue;
    if (id == ClaimId::CenterNormal || id == ClaimId::GroupCoincidence ||
        id == ClaimId::MoufangCommutant) {
      if (!statics) statics = check_static_claims(loop, scope);
      const std::size_t slot = id == ClaimId::CenterNormal ? 0 : id == ClaimId::GroupCoincidence ? 1 : 2;
      out.push_back((*statics)[slot]);
    } else {
      out.push_back(check_claim(id, loop, scope));
    }
  }
  return out;
}

}  // namespace bolforge
