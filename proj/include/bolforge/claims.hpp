#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolforge/properties.hpp"

namespace bolforge {

/// Each claim is checked as (hypothesis => conclusion). When the hypothesis
/// fails the verdict says which part failed, so vacuous passes stay visible.
enum class ClaimId {
  Lemma1,
  Lemma2,
  Theorem1,
  Corollary,
  Remark1Ext,
  Remark2Ext,
  GlaubermanParity,
  MoufangCommutant,
  GroupCoincidence,
  CenterNormal,
};

enum class ClaimStatus { Verified, HypothesisNotMet, Refuted };

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);
const std::vector<ClaimId>& all_claims();
std::string_view status_name(ClaimStatus status);

struct ClaimVerdict {
  ClaimId claim{};
  ClaimStatus status = ClaimStatus::Verified;
  std::string scope;
  /// The failed hypothesis for HypothesisNotMet; optional note otherwise.
  std::string detail;
  /// Non-empty for Refuted.
  std::vector<Witness> witnesses;
};

/// For a,b in C(L) of a left Bol loop: a^2, b^-1 and a^2 b are in C(L).
ClaimVerdict check_lemma1(const LoopTable& loop, std::string scope = {});
/// For a in C(L) of a left Bol loop: <a> is contained in C(L).
ClaimVerdict check_lemma2(const LoopTable& loop, std::string scope = {});
/// Left Bol with odd-order commutant elements => C(L) is a subloop. Also
/// replays the square-root step for every a in C(L).
ClaimVerdict check_theorem1(const LoopTable& loop, std::string scope = {});
ClaimVerdict check_corollary(const LoopTable& loop, std::string scope = {});
/// Finite Bol loops: odd order <=> every element has odd order.
ClaimVerdict check_glauberman_parity(const LoopTable& loop, std::string scope = {});
/// Left Bol, C(L) twisted-closed with odd cardinality => C(L) is a subloop.
ClaimVerdict check_remark1_extension(const LoopTable& loop, std::string scope = {});
/// Any loop: B(L) and C(L) intersected, all orders odd => a subloop.
ClaimVerdict check_remark2_extension(const LoopTable& loop, std::string scope = {});
/// CENTER_NORMAL, GROUP_COINCIDENCE and MOUFANG_COMMUTANT, in that order.
std::vector<ClaimVerdict> check_static_claims(const LoopTable& loop, std::string scope = {});

ClaimVerdict check_claim(ClaimId id, const LoopTable& loop, std::string scope = {});
std::vector<ClaimVerdict> check_claims(const LoopTable& loop, std::string scope,
                                       const std::vector<ClaimId>& selection = all_claims());

}  // namespace bolforge
