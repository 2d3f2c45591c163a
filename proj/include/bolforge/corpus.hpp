#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bolforge/claims.hpp"

namespace bolforge {

/// One loop file path per line, relative to the manifest's directory.
/// Blank lines and '#' comments are ignored.
struct CorpusManifest {
  std::filesystem::path base_dir;
  std::vector<std::string> entries;

  static CorpusManifest load(const std::filesystem::path& path);
  static CorpusManifest parse(std::string_view text, std::filesystem::path base_dir = {});
};

struct CorpusEntryReport {
  std::string loop_id;
  std::optional<std::string> parse_error;
  std::vector<ClaimVerdict> verdicts;
};

struct CorpusCounts {
  std::size_t verified = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t refuted = 0;
  std::size_t parse_errors = 0;

  CorpusCounts& operator+=(const CorpusCounts& o) {
    verified += o.verified;
    hypothesis_not_met += o.hypothesis_not_met;
    refuted += o.refuted;
    parse_errors += o.parse_errors;
    return *this;
  }
  friend bool operator==(const CorpusCounts&, const CorpusCounts&) = default;
};

struct CorpusReport {
  /// Sorted by loop id.
  std::vector<CorpusEntryReport> entries;
  CorpusCounts counts;

  bool any_refuted() const { return counts.refuted > 0; }
};

/// Runs the claim checks for one loop. Swappable so tests can inject faults.
using ClaimRunner = std::function<std::vector<ClaimVerdict>(
    const LoopTable&, const std::string& loop_id, const std::vector<ClaimId>&)>;

struct CorpusOptions {
  std::vector<ClaimId> claims = all_claims();
  /// OpenMP threads for the per-loop fan-out; 1 runs serially.
  int jobs = 1;
  ClaimRunner runner;
};

/// Parse failures are collected per entry, not fatal.
CorpusReport run_corpus(const CorpusManifest& manifest, const CorpusOptions& options = {});
CorpusReport run_corpus(const std::vector<std::pair<std::string, LoopTable>>& loops,
                        const CorpusOptions& options = {});

/// Stable JSON keyed by loop id, then claim id.
std::string to_json(const CorpusReport& report);

}  // namespace bolforge
