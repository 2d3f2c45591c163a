#include "bolforge/corpus.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace bolforge {

namespace {

CorpusCounts tally(const CorpusEntryReport& e) {
  CorpusCounts c;
  if (e.parse_error) ++c.parse_errors;
  for (const auto& v : e.verdicts) {
    switch (v.status) {
      case ClaimStatus::Verified: ++c.verified; break;
      case ClaimStatus::HypothesisNotMet: ++c.hypothesis_not_met; break;
      case ClaimStatus::Refuted: ++c.refuted; break;
    }
  }
  return c;
}

ClaimRunner runner_or_default(const CorpusOptions& options) {
  if (options.runner) return options.runner;
  return [](const LoopTable& loop, const std::string& id, const std::vector<ClaimId>& claims) {
    return check_claims(loop, id, claims);
  };
}

// Entries are produced into fixed slots, so the result does not depend on
// scheduling; sorting by id makes it independent of input order too.
template <class Produce>
CorpusReport fan_out(std::size_t count, int jobs, Produce produce) {
  std::vector<CorpusEntryReport> slots(count);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    slots[i] = produce(static_cast<std::size_t>(i));
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const auto& a, const auto& b) { return a.loop_id < b.loop_id; });
  CorpusReport report;
  for (const auto& e : slots) report.counts += tally(e);
  report.entries = std::move(slots);
  return report;
}

}  // namespace

CorpusManifest CorpusManifest::parse(std::string_view text, std::filesystem::path base_dir) {
  CorpusManifest m;
  m.base_dir = std::move(base_dir);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    m.entries.push_back(line.substr(first, last - first + 1));
  }
  return m;
}

CorpusManifest CorpusManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifestNotFound("manifest not found: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.parent_path());
}

CorpusReport run_corpus(const CorpusManifest& manifest, const CorpusOptions& options) {
  const ClaimRunner run = runner_or_default(options);
  return fan_out(manifest.entries.size(), options.jobs, [&](std::size_t i) {
    CorpusEntryReport e;
    e.loop_id = manifest.entries[i];
    std::filesystem::path p(manifest.entries[i]);
    if (p.is_relative()) p = manifest.base_dir / p;
    try {
      LoopTable loop = load_loop_file(p);
      e.verdicts = run(loop, e.loop_id, options.claims);
    } catch (const LoopError& err) {
      e.parse_error = err.what();
    }
    return e;
  });
}

CorpusReport run_corpus(const std::vector<std::pair<std::string, LoopTable>>& loops,
                        const CorpusOptions& options) {
  const ClaimRunner run = runner_or_default(options);
  return fan_out(loops.size(), options.jobs, [&](std::size_t i) {
    CorpusEntryReport e;
    e.loop_id = loops[i].first;
    e.verdicts = run(loops[i].second, e.loop_id, options.claims);
    return e;
  });
}

std::string to_json(const CorpusReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["summary"] = {{"loops", report.entries.size()},
                  {"verified", report.counts.verified},
                  {"hypothesis-not-met", report.counts.hypothesis_not_met},
                  {"refuted", report.counts.refuted},
                  {"parse-errors", report.counts.parse_errors}};
  json loops = json::object();
  json errors = json::object();
  for (const auto& e : report.entries) {
    if (e.parse_error) {
      errors[e.loop_id] = *e.parse_error;
      continue;
    }
    json claims = json::object();
    for (const auto& v : e.verdicts) {
      json entry = {{"status", status_name(v.status)}};
      if (v.status == ClaimStatus::HypothesisNotMet) {
        entry["hypothesis"] = v.detail;
      } else if (!v.detail.empty()) {
        entry["note"] = v.detail;
      }
      if (!v.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : v.witnesses) {
          json tuple = json::array();
          for (Element x : w.elements) tuple.push_back(x.index());
          ws.push_back({{"relation", w.relation}, {"tuple", tuple}});
        }
        entry["witnesses"] = std::move(ws);
      }
      claims[std::string(claim_name(v.claim))] = std::move(entry);
    }
    loops[e.loop_id] = std::move(claims);
  }
  j["loops"] = std::move(loops);
  j["errors"] = std::move(errors);
  return j.dump(2) + "\n";
}

}  // namespace bolforge
