#include "bolforge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "bolforge/canonical.hpp"
#include "bolforge/constructions.hpp"
#include "bolforge/search.hpp"

namespace bolforge {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 0;
  std::string input;
  std::string out;
  bool normalize = false;
  std::vector<std::string> properties;
  std::string claims;
  int jobs = 1;
  std::size_t order = 0;
  std::string constraint = "none";
  std::string target;
  std::string filter = "any";
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 600;
  std::size_t split_rows = 1;
  bool no_iso_pruning = false;
  std::string bruck;
  std::size_t cyclic = 0;
  std::vector<std::size_t> semidirect;
  bool shuffle_check = false;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty())
    out << text;
  else
    write_text(opt.out, text);
}

std::string members_json(const ElementSubset& s) {
  json arr = json::array();
  for (Element x : s.members()) arr.push_back(x.index());
  return arr.dump() + "\n";
}

std::string loop_id_for(const std::string& path) { return fs::path(path).stem().string(); }

int cmd_check(const Options& opt, std::ostream& out, bool props_only) {
  LoopTable loop = load_loop_file(opt.input, {opt.normalize});
  PropertyReport report = build_property_report(loop, loop_id_for(opt.input));
  if (props_only && !opt.properties.empty()) {
    std::vector<std::pair<std::string, Verdict>> picked;
    for (const auto& name : opt.properties) {
      const Verdict* v = report.find(name);
      if (!v) throw CLI::ValidationError("--property", "unknown property " + name);
      picked.emplace_back(name, *v);
    }
    report.verdicts = std::move(picked);
    report.sets.clear();
  }
  emit(opt, out, to_json(report));
  return kExitOk;
}

int cmd_subset(const Options& opt, std::ostream& out, bool want_center) {
  LoopTable loop = load_loop_file(opt.input, {opt.normalize});
  emit(opt, out, members_json(want_center ? center(loop) : commutant(loop)));
  return kExitOk;
}

std::vector<ClaimId> parse_claims(const std::string& list) {
  if (list.empty()) return all_claims();
  std::vector<ClaimId> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto id = claim_from_name(name);
    if (!id) throw CLI::ValidationError("--claims", "unknown claim " + name);
    out.push_back(*id);
  }
  return out;
}

int cmd_verify(const Options& opt, std::ostream& out, const CliHooks& hooks) {
  CorpusOptions copt;
  copt.claims = parse_claims(opt.claims);
  copt.jobs = opt.jobs;
  copt.runner = hooks.claim_runner;
  CorpusReport report = run_corpus(CorpusManifest::load(opt.input), copt);
  emit(opt, out, to_json(report));
  return report.any_refuted() ? kExitRefuted : kExitOk;
}

SearchSpec spec_from(const Options& opt, bool find_mode) {
  SearchSpec spec;
  spec.order = opt.order;
  auto c = constraint_from_name(opt.constraint);
  if (!c) throw CLI::ValidationError("--class", "unknown class " + opt.constraint);
  spec.constraint = *c;
  spec.mode = find_mode ? SearchMode::FindFirst : SearchMode::EnumerateAll;
  const std::string& tname = find_mode ? opt.target : opt.filter;
  auto t = target_from_name(tname);
  if (!t) throw CLI::ValidationError("--find", "unknown target " + tname);
  spec.target = *t;
  spec.workers = opt.jobs;
  spec.split_rows = opt.split_rows;
  spec.isomorphism_pruning = !opt.no_iso_pruning;
  if (opt.budget_nodes) {
    spec.limits.node_budget = opt.budget_nodes;
  } else if (const char* env = std::getenv("BOLFORGE_BUDGET_NODES")) {
    try {
      spec.limits.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("BOLFORGE_BUDGET_NODES", "not a number");
    }
  }
  spec.limits.wall_budget =
      std::chrono::milliseconds(static_cast<long long>(opt.budget_seconds * 1000));
  spec.validate();
  return spec;
}

json stats_json(const SearchSpec& spec, const SearchResult& r,
                const std::vector<std::string>& files) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return {
      {"order", spec.order},
      {"class", constraint_name(spec.constraint)},
      {"mode", spec.mode == SearchMode::FindFirst ? "find-first" : "enumerate-all"},
      {"target", target_name(spec.target)},
      {"status", status_name(r.status)},
      {"exhausted", r.exhausted},
      {"representatives", files},
      {"nodes", r.stats.nodes},
      {"latin_prunes", r.stats.latin_prunes},
      {"identity_prunes", r.stats.identity_prunes},
      {"isomorphism_prunes", r.stats.isomorphism_prunes},
      {"leaves", r.stats.leaves},
      {"subtrees", r.stats.subtrees},
      {"workers", spec.workers},
      {"timestamp", stamp},
  };
}

int cmd_search(const Options& opt, std::ostream& out, bool find_mode) {
  const SearchSpec spec = spec_from(opt, find_mode);
  const SearchResult result = run_search(spec);

  std::vector<std::string> files;
  for (const auto& loop : result.representatives) files.push_back(table_digest(loop) + ".loop");
  if (!opt.out.empty()) {
    fs::create_directories(opt.out);
    for (std::size_t i = 0; i < files.size(); ++i)
      write_text(fs::path(opt.out) / files[i], serialize_loop(result.representatives[i]));
    if (find_mode && !result.witnesses.empty()) {
      json tuples = json::array();
      for (const auto& w : result.witnesses.front().tuples) {
        json t = json::array();
        for (Element x : w.elements) t.push_back(x.index());
        tuples.push_back({{"relation", w.relation}, {"tuple", t}});
      }
      json witness = {{"loop", files.front()}, {"target", target_name(spec.target)},
                      {"tuples", tuples}};
      write_text(fs::path(opt.out) / "witness.json", witness.dump(2) + "\n");
    }
    write_text(fs::path(opt.out) / "stats.json", stats_json(spec, result, files).dump(2) + "\n");
  }

  out << "order " << spec.order << " class " << constraint_name(spec.constraint);
  if (find_mode) out << " find " << target_name(spec.target);
  out << ": " << result.representatives.size() << " representative(s), "
      << status_name(result.status) << ", " << result.stats.nodes << " nodes\n";
  for (const auto& f : files) out << "  " << f << "\n";

  switch (result.status) {
    case SearchStatus::Completed:
    case SearchStatus::Found: return kExitOk;
    case SearchStatus::NotFound: return kExitNotFound;
    case SearchStatus::BudgetExhausted: return kExitBudget;
  }
  return kExitOk;
}

int cmd_construct(const Options& opt, std::ostream& out) {
  const int chosen = !opt.bruck.empty() + (opt.cyclic > 0) + !opt.semidirect.empty();
  if (chosen != 1) {
    throw CLI::ValidationError("construct", "give exactly one of --bruck, --cyclic, --semidirect");
  }
  LoopTable loop = [&] {
    if (!opt.bruck.empty()) return construct_bruck_from_group(load_loop_file(opt.bruck));
    if (opt.cyclic > 0) return cyclic_group(opt.cyclic);
    if (opt.semidirect.size() != 3) {
      throw CLI::ValidationError("--semidirect", "expects p,q,r");
    }
    return semidirect_product(opt.semidirect[0], opt.semidirect[1], opt.semidirect[2]);
  }();
  emit(opt, out, serialize_loop(loop));
  return kExitOk;
}

int cmd_canon(const Options& opt, std::ostream& out, std::ostream& err) {
  LoopTable loop = load_loop_file(opt.input);
  LoopTable form = canonical_form(loop);
  if (opt.shuffle_check) {
    // Randomized smoke test; never influences the emitted form.
    std::mt19937_64 rng(opt.seed);
    std::vector<std::size_t> perm(loop.order());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    if (canonical_form(loop.relabeled(perm)) != form) {
      err << "error: canonical form changed under relabeling\n";
      return kExitRefuted;
    }
  }
  emit(opt, out, serialize_loop(form));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Finite loop workbench: Bol identities, commutants, claim checks, search"};
  app.name("bolforge");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized smoke checks (never affects search)");

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", opt.input, what)->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", opt.out, "Output path"); };

  auto* check = app.add_subcommand("check", "Validate a loop file and report every property");
  add_input(check, "Loop table file");
  check->add_flag("--normalize", opt.normalize, "Relabel so the identity is 0");
  add_out(check);

  auto* props = app.add_subcommand("props", "Report selected properties");
  add_input(props, "Loop table file");
  props->add_option("-p,--property", opt.properties, "Property name (repeatable)");
  props->add_flag("--normalize", opt.normalize, "Relabel so the identity is 0");
  add_out(props);

  auto* comm = app.add_subcommand("commutant", "Print the commutant");
  add_input(comm, "Loop table file");
  comm->add_flag("--normalize", opt.normalize, "Relabel so the identity is 0");
  add_out(comm);

  auto* cent = app.add_subcommand("center", "Print the center");
  add_input(cent, "Loop table file");
  cent->add_flag("--normalize", opt.normalize, "Relabel so the identity is 0");
  add_out(cent);

  auto* verify = app.add_subcommand("verify", "Check claims over a corpus manifest");
  add_input(verify, "Manifest file");
  verify->add_option("--claims", opt.claims, "Comma-separated claim ids (default: all)");
  verify->add_option("-j,--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_out(verify);

  auto add_search = [&](CLI::App* sub) {
    sub->add_option("-n,--order", opt.order, "Loop order")->required();
    sub->add_option("-c,--class", opt.constraint,
                    "none | left-bol | right-bol | moufang | associative");
    sub->add_option("-j,--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget-nodes", opt.budget_nodes, "Node budget (env BOLFORGE_BUDGET_NODES)");
    sub->add_option("--budget-seconds", opt.budget_seconds, "Wall-clock budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--split-rows", opt.split_rows, "Rows completed before splitting subtrees");
    sub->add_flag("--no-iso-pruning", opt.no_iso_pruning, "Deduplicate at leaves only");
    add_out(sub);
  };
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate loops up to isomorphism");
  add_search(enumerate_cmd);
  enumerate_cmd->add_option("--filter", opt.filter, "Keep only loops matching a target");
  auto* enum_find = enumerate_cmd->add_option("--find", opt.target, "Switch to find-first mode");

  auto* find = app.add_subcommand("find", "Find the first loop matching a target");
  add_search(find);
  find->add_option("-t,--target,--find", opt.target,
                   "commutant-not-subloop | conjecture-witness | nonassociative | any")
      ->required();

  auto* construct = app.add_subcommand("construct", "Build a loop table");
  construct->add_option("--bruck", opt.bruck, "Odd-order group file for the Bruck construction");
  construct->add_option("--cyclic", opt.cyclic, "Cyclic group order");
  construct->add_option("--semidirect", opt.semidirect, "p,q,r for Z_p x| Z_q")->delimiter(',');
  add_out(construct);

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  add_input(canon, "Loop table file");
  canon->add_flag("--shuffle-check", opt.shuffle_check,
                  "Also check invariance under a random relabeling (--seed)");
  add_out(canon);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*check) return cmd_check(opt, out, false);
    if (*props) return cmd_check(opt, out, true);
    if (*comm) return cmd_subset(opt, out, false);
    if (*cent) return cmd_subset(opt, out, true);
    if (*verify) return cmd_verify(opt, out, hooks);
    if (*enumerate_cmd) return cmd_search(opt, out, enum_find->count() > 0);
    if (*find) return cmd_search(opt, out, true);
    if (*construct) return cmd_construct(opt, out);
    if (*canon) return cmd_canon(opt, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const LoopError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bolforge
