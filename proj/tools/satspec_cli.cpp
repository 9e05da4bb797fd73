// satspec: construct, check, reduce and exhaustively enumerate graphs that
// are saturated for k vertex-disjoint cycles.  JSON goes to stdout,
// diagnostics to stderr.  Exit codes: 0 verdict delivered, 1 usage or input
// error, 2 verification failure.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "satspec/blocks.hpp"
#include "satspec/canonical.hpp"
#include "satspec/constructions.hpp"
#include "satspec/cycles.hpp"
#include "satspec/graph6.hpp"
#include "satspec/json_io.hpp"
#include "satspec/reduction.hpp"
#include "satspec/saturation.hpp"
#include "satspec/spectrum.hpp"
#include "satspec/verify.hpp"
#include "satspec/version.hpp"

namespace {

using namespace satspec;

// Runs fn once per input line when the argument is "-", otherwise once on the
// argument itself.  A malformed line is reported in place and does not abort
// the batch.  Returns the exit code.
int for_each_input(const std::string& arg, const std::function<void(const SimpleGraph&)>& fn) {
  bool any_error = false;
  auto handle = [&](const std::string& line, long lineno) {
    try {
      fn(parse_graph6(line));
    } catch (const Graph6Error& e) {
      any_error = true;
      std::cout << "{\"error\":\"" << e.what() << "\",\"byte\":" << e.byte_pos;
      if (lineno >= 0) std::cout << ",\"line\":" << lineno;
      std::cout << "}" << std::endl;
      std::cerr << "satspec: " << e.what() << (lineno >= 0 ? " on line " + std::to_string(lineno) : "")
                << std::endl;
    }
  };
  if (arg == "-") {
    std::string line;
    long lineno = 0;
    while (std::getline(std::cin, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      handle(line, lineno);
    }
  } else {
    handle(arg, -1);
  }
  return any_error ? 1 : 0;
}

FamilySpec::Kind family_kind(const std::string& name) {
  if (name == "complete") return FamilySpec::Kind::CompleteK;
  if (name == "star") return FamilySpec::Kind::Star;
  if (name == "wheel") return FamilySpec::Kind::Wheel;
  if (name == "wheelplus") return FamilySpec::Kind::WheelPlus;
  if (name == "genwheel") return FamilySpec::Kind::GenWheel;
  if (name == "spider") return FamilySpec::Kind::Spider;
  throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

// Block tokens: K:<r> with r = 3i-1, W:<a>:<p>, S:<b>:<j>; comma separated.
BlockStarSpec parse_blocks(const std::string& text) {
  BlockStarSpec spec;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::vector<int> nums;
    char kind = tok[0];
    std::stringstream ts(tok.substr(1));
    std::string part;
    while (std::getline(ts, part, ':')) {
      if (part.empty()) continue;
      nums.push_back(std::stoi(part));
    }
    if (kind == 'K' && nums.size() == 1) {
      int r = nums[0];
      if (r % 3 != 2) {
        throw CLI::ValidationError("--blocks", "complete block K:" + std::to_string(r) +
                                                   " must have 3i-1 vertices (2, 5, 8, ...)");
      }
      spec.complete_blocks.push_back({(r + 1) / 3, 1});
    } else if (kind == 'W' && nums.size() == 2) {
      spec.wheel_plus_blocks.push_back({nums[0], nums[1], 1});
    } else if (kind == 'S' && nums.size() == 2) {
      spec.star_blocks.push_back({nums[0], nums[1], 1});
    } else {
      throw CLI::ValidationError("--blocks", "bad block token '" + tok + "'");
    }
  }
  return spec;
}

int cmd_spectrum(int n, int k, int jobs, bool pruned, bool no_cache) {
  std::string record_path = record_cache_path(n, k);
  if (!no_cache && std::filesystem::exists(record_path)) {
    SpectrumRecord rec = load_record(record_path);  // re-verifies witnesses
    if (rec.n != n || rec.k != k) throw RecordError("cached record is for different (n,k)");
    std::cout << record_to_json(rec);
    return 0;
  }
  ScanOptions options;
  options.jobs = jobs;
  options.pruned = pruned;
  if (!no_cache) {
    std::filesystem::create_directories(cache_dir());
    options.checkpoint_path = checkpoint_cache_path(n, k);
  }
  SpectrumRecord rec = saturation_spectrum(n, k, options);
  if (!no_cache) save_record(rec, record_path);
  std::cout << record_to_json(rec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for graphs saturated for k vertex-disjoint cycles"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "decide saturation and emit certificates");
  int check_k = 2;
  std::string check_input;
  check->add_option("-k", check_k, "number of disjoint cycles")->required();
  check->add_option("graph6", check_input, "graph6 line, or - for stdin")->required();

  auto* packing = app.add_subcommand("packing", "maximum vertex-disjoint cycle packing");
  std::string packing_input;
  packing->add_option("graph6", packing_input, "graph6 line, or - for stdin")->required();

  auto* build = app.add_subcommand("build", "emit a named family as graph6");
  std::string family;
  std::vector<int> params;
  std::string blocks_text;
  build->add_option("--family", family,
                    "complete|star|wheel|wheelplus|genwheel|spider|blockstar")
      ->required();
  build->add_option("--params", params, "family parameters")->delimiter(',');
  build->add_option("--blocks", blocks_text, "blockstar blocks, e.g. K:5,K:2,W:6:1,S:8:2");

  auto* construct = app.add_subcommand("construct", "solve for a saturated graph with n vertices and m edges");
  int cn = 0, ck = 0, cm = 0;
  construct->add_option("--n", cn, "vertex count")->required();
  construct->add_option("--k", ck, "number of disjoint cycles")->required();
  construct->add_option("--m", cm, "edge count")->required();

  auto* spectrum = app.add_subcommand("spectrum", "exhaustive saturation spectrum for (n,k)");
  int sn = 0, sk = 2, jobs = static_cast<int>(std::thread::hardware_concurrency());
  bool pruned = false, no_cache = false;
  if (jobs < 1) jobs = 1;
  spectrum->add_option("--n", sn, "vertex count (envelope: n <= 10)")->required();
  spectrum->add_option("--k", sk, "number of disjoint cycles");
  spectrum->add_option("--jobs", jobs, "worker threads (results are identical for any count)");
  spectrum->add_flag("--pruned", pruned, "skip disconnected graphs during the scan");
  spectrum->add_flag("--no-cache", no_cache, "ignore and do not write the record cache");

  auto* reduce = app.add_subcommand("reduce", "leaf stripping M0 and minimal base M with traces");
  std::string reduce_input;
  reduce->add_option("graph6", reduce_input, "graph6 line, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "run the theorem suite; exit 2 on any failure");
  int n_max = 7;
  std::vector<int> k_set{2};
  int vjobs = static_cast<int>(std::thread::hardware_concurrency());
  if (vjobs < 1) vjobs = 1;
  verify->add_option("--n-max", n_max, "largest order to sweep");
  verify->add_option("--k", k_set, "k values (3 adds conjecture evidence)");
  verify->add_option("--jobs", vjobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      return for_each_input(check_input, [&](const SimpleGraph& g) {
        std::cout << saturation_report_to_json(g, saturation_status(g, check_k));
      });
    }
    if (*packing) {
      return for_each_input(packing_input, [&](const SimpleGraph& g) {
        auto [count, best] = max_disjoint_cycles(g);
        std::cout << packing_to_json(g, count, best);
      });
    }
    if (*build) {
      SimpleGraph g;
      if (family == "blockstar") {
        if (blocks_text.empty()) throw CLI::ValidationError("--blocks", "blockstar needs --blocks");
        g = build_block_star(parse_blocks(blocks_text));
      } else {
        FamilySpec spec;
        spec.kind = family_kind(family);
        bool two = spec.kind != FamilySpec::Kind::CompleteK && spec.kind != FamilySpec::Kind::Wheel;
        if (params.size() != (two ? 2u : 1u)) {
          throw CLI::ValidationError("--params", "family '" + family + "' takes " +
                                                     (two ? std::string("2") : std::string("1")) +
                                                     " parameter(s)");
        }
        spec.a = params[0];
        if (two) spec.b = params[1];
        g = build_family(spec);
      }
      std::cout << emit_graph6(g) << std::endl;
      return 0;
    }
    if (*construct) {
      ConstructOutcome outcome = construct_saturated(cn, ck, cm);
      if (outcome.graph) {
        std::cout << emit_graph6(*outcome.graph) << std::endl;
        std::cerr << "satspec: " << outcome.detail << std::endl;
      } else {
        std::cout << outcome.detail << std::endl;
      }
      return 0;
    }
    if (*spectrum) {
      return cmd_spectrum(sn, sk, jobs, pruned, no_cache);
    }
    if (*reduce) {
      return for_each_input(reduce_input, [&](const SimpleGraph& g) {
        std::cout << reduction_to_json(g, strip_leaves(g), minimal_base(g));
      });
    }
    if (*verify) {
      ScanOptions options;
      options.jobs = vjobs;
      VerifyReport report = verify_theorems(n_max, k_set, options);
      std::cout << verify_report_to_json(report, 2);
      return report.all_pass() ? 0 : 2;
    }
  } catch (const Graph6Error& e) {
    std::cerr << "satspec: " << e.what() << std::endl;
    return 1;
  } catch (const RecordError& e) {
    std::cerr << "satspec: " << e.what() << std::endl;
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "satspec: " << e.what() << std::endl;
    return 1;
  }
  return 1;
}
