#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

// Exhaustive enumeration is supported up to this order; n = 10 is an opt-in
// long run (about 1.2e7 isomorphism classes).
inline constexpr int kMaxEnumerationN = 10;

// Streams exactly one representative (the canonical form) per isomorphism
// class of n-vertex graphs, in a deterministic order, via canonical
// augmentation: a child counts only when deleting the last vertex of its
// canonical labeling recovers the parent it was extended from.
void for_each_nonisomorphic(int n, const std::function<void(const SimpleGraph&)>& fn);

// Convenience materialization (fine for n <= 8).
std::vector<SimpleGraph> enumerate_nonisomorphic(int n);
uint64_t count_nonisomorphic(int n);

// Accepted children of one parent class (parent must be a canonical form).
void for_each_child_class(const SimpleGraph& parent,
                          const std::function<void(const SimpleGraph&)>& fn);

// Canonical triangle codes of every class on n vertices, enumeration order.
std::vector<uint64_t> level_codes(int n);

struct ScanOptions {
  int jobs = 1;
  bool pruned = false;  // skip disconnected graphs (they are never saturated)
  std::optional<std::string> checkpoint_path;
  int checkpoint_every = 64;  // parents per checkpoint block
  // Stop (with a checkpoint written) after this many parents this run;
  // used to slice long scans into resumable batches.
  std::optional<uint64_t> max_parents_this_run;
};

// Result of sweeping every n-vertex class through saturation_status(., k).
struct SaturatedScan {
  int n = 0;
  int k = 0;
  bool complete = true;
  uint64_t total_scanned = 0;
  std::vector<std::string> saturated_g6;  // canonical graph6, scan order
};

SaturatedScan scan_saturated(int n, int k, const ScanOptions& options = {});

struct SpectrumRecord {
  int n = 0;
  int k = 0;
  std::vector<int> es;
  int sat = 0;
  int ex = 0;
  std::map<int, int> count_by_size;
  std::map<int, std::string> witnesses;  // size -> lexicographically least canonical graph6
  uint64_t total_graphs_scanned = 0;
  double elapsed = 0.0;  // wall-clock metadata, excluded from equality
  std::string version;

  // Everything except elapsed.
  bool semantically_equal(const SpectrumRecord& other) const;
};

SpectrumRecord record_from_scan(const SaturatedScan& scan, double elapsed_seconds);
SpectrumRecord saturation_spectrum(int n, int k, const ScanOptions& options = {});

// JSON persistence.  load_record re-verifies every witness (parses, checks
// the size and re-runs the saturation decision) and the sat/ex/es invariants;
// failures and version mismatches throw RecordError.
struct RecordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void save_record(const SpectrumRecord& record, const std::string& path);
SpectrumRecord load_record(const std::string& path);
std::string record_to_json(const SpectrumRecord& record);
SpectrumRecord record_from_json(const std::string& text);

// Cache directory: $SATSPEC_CACHE or ./.satspec-cache.
std::string cache_dir();
std::string record_cache_path(int n, int k);
std::string checkpoint_cache_path(int n, int k);

}  // namespace satspec
