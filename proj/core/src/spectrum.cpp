#include "satspec/spectrum.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "satspec/canonical.hpp"
#include "satspec/graph6.hpp"
#include "satspec/saturation.hpp"
#include "satspec/version.hpp"

namespace satspec {

namespace {

using nlohmann::json;

void check_envelope(int n) {
  if (n < 1 || n > kMaxEnumerationN) {
    throw std::invalid_argument("n=" + std::to_string(n) + " outside the enumeration envelope [1, " +
                                std::to_string(kMaxEnumerationN) + "]");
  }
}

// Memoized canonical code for the parent-rule graphs (n <= 9, so the
// triangle code fits well under the tag bits).  Thread-local: workers keep
// independent caches.
uint64_t cached_canon_code(const SimpleGraph& g) {
  thread_local std::unordered_map<uint64_t, uint64_t> cache;
  uint64_t key = g.triangle_code() | (static_cast<uint64_t>(g.n()) << 56);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  uint64_t code = canonical_graph(g).triangle_code();
  if (cache.size() > (1u << 22)) cache.clear();
  cache.emplace(key, code);
  return code;
}

}  // namespace

void for_each_child_class(const SimpleGraph& parent,
                          const std::function<void(const SimpleGraph&)>& fn) {
  int i = parent.n();
  if (i + 1 > kMaxEnumerationN) {
    throw std::invalid_argument("child order exceeds the enumeration envelope");
  }
  uint64_t parent_code = parent.triangle_code();
  std::unordered_set<uint64_t> seen;
  seen.reserve(size_t{1} << i);
  for (uint64_t mask = 0; mask < (uint64_t{1} << i); ++mask) {
    SimpleGraph child = parent.with_new_vertex(mask);
    CanonicalLabeling cl = canonicalize(child);
    uint64_t code = cl.graph.triangle_code();
    if (!seen.insert(code).second) continue;
    // Canonical-augmentation rule: accept iff deleting the last canonical
    // vertex recovers (the class of) the parent we extended.
    SimpleGraph reduced = cl.graph.without_vertex(i);
    if (cached_canon_code(reduced) == parent_code) fn(cl.graph);
  }
}

std::vector<uint64_t> level_codes(int n) {
  check_envelope(n);
  std::vector<uint64_t> cur = {0};  // K1
  for (int i = 1; i < n; ++i) {
    std::vector<uint64_t> next;
    for (uint64_t code : cur) {
      SimpleGraph parent = SimpleGraph::from_triangle_code(i, code);
      for_each_child_class(parent,
                           [&](const SimpleGraph& child) { next.push_back(child.triangle_code()); });
    }
    cur = std::move(next);
  }
  return cur;
}

void for_each_nonisomorphic(int n, const std::function<void(const SimpleGraph&)>& fn) {
  check_envelope(n);
  if (n == 1) {
    fn(SimpleGraph(1));
    return;
  }
  for (uint64_t code : level_codes(n - 1)) {
    SimpleGraph parent = SimpleGraph::from_triangle_code(n - 1, code);
    for_each_child_class(parent, fn);
  }
}

std::vector<SimpleGraph> enumerate_nonisomorphic(int n) {
  std::vector<SimpleGraph> out;
  for_each_nonisomorphic(n, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

uint64_t count_nonisomorphic(int n) {
  uint64_t c = 0;
  for_each_nonisomorphic(n, [&](const SimpleGraph&) { ++c; });
  return c;
}

namespace {

struct ParentOut {
  uint64_t scanned = 0;
  std::vector<std::string> sat_g6;
};

ParentOut process_parent(uint64_t code, int n, int k, bool pruned) {
  ParentOut out;
  SimpleGraph parent = SimpleGraph::from_triangle_code(n - 1, code);
  for_each_child_class(parent, [&](const SimpleGraph& child) {
    ++out.scanned;
    if (pruned && !is_connected(child)) return;
    if (saturation_status(child, k).verdict == SatVerdict::Saturated) {
      out.sat_g6.push_back(emit_graph6(child));
    }
  });
  return out;
}

void atomic_write(const std::string& path, const std::string& payload) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw RecordError("cannot open " + tmp + " for writing");
    os << payload;
    if (!os) throw RecordError("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

struct Checkpoint {
  uint64_t next_parent = 0;
  uint64_t parents_total = 0;
  uint64_t total_scanned = 0;
  double elapsed = 0.0;
  std::vector<std::string> saturated_g6;
};

std::string checkpoint_to_json(const Checkpoint& cp, int n, int k) {
  json j;
  j["version"] = kVersion;
  j["n"] = n;
  j["k"] = k;
  j["parents_total"] = cp.parents_total;
  j["next_parent"] = cp.next_parent;
  j["total_graphs_scanned"] = cp.total_scanned;
  j["elapsed"] = cp.elapsed;
  j["saturated"] = cp.saturated_g6;
  return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_file(const std::string& path, int n, int k, uint64_t parents_total) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw RecordError("cannot open checkpoint " + path);
  json j;
  try {
    is >> j;
    Checkpoint cp;
    if (j.at("version").get<std::string>() != kVersion) {
      throw RecordError("checkpoint version mismatch in " + path);
    }
    if (j.at("n").get<int>() != n || j.at("k").get<int>() != k ||
        j.at("parents_total").get<uint64_t>() != parents_total) {
      throw RecordError("checkpoint does not match this scan in " + path);
    }
    cp.parents_total = parents_total;
    cp.next_parent = j.at("next_parent").get<uint64_t>();
    cp.total_scanned = j.at("total_graphs_scanned").get<uint64_t>();
    cp.elapsed = j.at("elapsed").get<double>();
    cp.saturated_g6 = j.at("saturated").get<std::vector<std::string>>();
    if (cp.next_parent > parents_total) throw RecordError("corrupt checkpoint " + path);
    return cp;
  } catch (const json::exception& e) {
    throw RecordError("corrupt checkpoint " + path + ": " + e.what());
  }
}

}  // namespace

SaturatedScan scan_saturated(int n, int k, const ScanOptions& options) {
  check_envelope(n);
  if (k < 1) throw std::invalid_argument("scan_saturated: k must be >= 1");

  auto t0 = std::chrono::steady_clock::now();
  SaturatedScan scan;
  scan.n = n;
  scan.k = k;

  if (n == 1) {
    SimpleGraph k1(1);
    scan.total_scanned = 1;
    if (saturation_status(k1, k).verdict == SatVerdict::Saturated) {
      scan.saturated_g6.push_back(emit_graph6(k1));
    }
    return scan;
  }

  std::vector<uint64_t> parents = level_codes(n - 1);
  Checkpoint cp;
  cp.parents_total = parents.size();
  if (options.checkpoint_path && std::filesystem::exists(*options.checkpoint_path)) {
    cp = checkpoint_from_file(*options.checkpoint_path, n, k, parents.size());
  }

  uint64_t processed_this_run = 0;
  int jobs = std::max(1, options.jobs);
  int block = std::max(1, options.checkpoint_every);

  while (cp.next_parent < parents.size()) {
    uint64_t begin = cp.next_parent;
    uint64_t end = std::min<uint64_t>(parents.size(), begin + static_cast<uint64_t>(block));
    size_t count = end - begin;
    std::vector<ParentOut> outs(count);
    if (jobs == 1 || count == 1) {
      for (size_t j = 0; j < count; ++j) {
        outs[j] = process_parent(parents[begin + j], n, k, options.pruned);
      }
    } else {
      std::atomic<size_t> next{0};
      auto worker = [&] {
        while (true) {
          size_t j = next.fetch_add(1);
          if (j >= count) break;
          outs[j] = process_parent(parents[begin + j], n, k, options.pruned);
        }
      };
      std::vector<std::thread> pool;
      int nthreads = static_cast<int>(std::min<size_t>(jobs, count));
      pool.reserve(nthreads);
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    // merge in parent order so the outcome is independent of scheduling
    for (size_t j = 0; j < count; ++j) {
      cp.total_scanned += outs[j].scanned;
      for (auto& s : outs[j].sat_g6) cp.saturated_g6.push_back(std::move(s));
    }
    cp.next_parent = end;
    processed_this_run += count;
    cp.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (options.checkpoint_path) {
      atomic_write(*options.checkpoint_path, checkpoint_to_json(cp, n, k));
    }
    if (options.max_parents_this_run && processed_this_run >= *options.max_parents_this_run &&
        cp.next_parent < parents.size()) {
      scan.complete = false;
      scan.total_scanned = cp.total_scanned;
      scan.saturated_g6 = std::move(cp.saturated_g6);
      return scan;
    }
  }

  scan.complete = true;
  scan.total_scanned = cp.total_scanned;
  scan.saturated_g6 = std::move(cp.saturated_g6);
  if (options.checkpoint_path && std::filesystem::exists(*options.checkpoint_path)) {
    std::filesystem::remove(*options.checkpoint_path);
  }
  return scan;
}

bool SpectrumRecord::semantically_equal(const SpectrumRecord& other) const {
  return n == other.n && k == other.k && es == other.es && sat == other.sat && ex == other.ex &&
         count_by_size == other.count_by_size && witnesses == other.witnesses &&
         total_graphs_scanned == other.total_graphs_scanned && version == other.version;
}

SpectrumRecord record_from_scan(const SaturatedScan& scan, double elapsed_seconds) {
  if (!scan.complete) throw RecordError("cannot build a record from an incomplete scan");
  SpectrumRecord rec;
  rec.n = scan.n;
  rec.k = scan.k;
  rec.total_graphs_scanned = scan.total_scanned;
  rec.elapsed = elapsed_seconds;
  rec.version = kVersion;
  for (const auto& g6 : scan.saturated_g6) {
    int m = parse_graph6(g6).edge_count();
    rec.count_by_size[m] += 1;
    auto it = rec.witnesses.find(m);
    // equal-length graph6 strings compare like their bit strings
    if (it == rec.witnesses.end() || g6 < it->second) rec.witnesses[m] = g6;
  }
  for (const auto& [m, c] : rec.count_by_size) rec.es.push_back(m);
  if (!rec.es.empty()) {
    rec.sat = rec.es.front();
    rec.ex = rec.es.back();
  }
  return rec;
}

SpectrumRecord saturation_spectrum(int n, int k, const ScanOptions& options) {
  if (k < 2) throw std::invalid_argument("saturation_spectrum: k must be >= 2");
  auto t0 = std::chrono::steady_clock::now();
  SaturatedScan scan = scan_saturated(n, k, options);
  if (!scan.complete) throw RecordError("scan stopped before completion");
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return record_from_scan(scan, elapsed);
}

std::string record_to_json(const SpectrumRecord& rec) {
  json j;
  j["version"] = rec.version;
  j["n"] = rec.n;
  j["k"] = rec.k;
  j["es"] = rec.es;
  j["sat"] = rec.sat;
  j["ex"] = rec.ex;
  json counts = json::object();
  for (const auto& [m, c] : rec.count_by_size) counts[std::to_string(m)] = c;
  j["count_by_size"] = counts;
  json wit = json::object();
  for (const auto& [m, g6] : rec.witnesses) wit[std::to_string(m)] = g6;
  j["witnesses"] = wit;
  j["total_graphs_scanned"] = rec.total_graphs_scanned;
  j["elapsed"] = rec.elapsed;
  return j.dump(2) + "\n";
}

SpectrumRecord record_from_json(const std::string& text) {
  SpectrumRecord rec;
  try {
    json j = json::parse(text);
    rec.version = j.at("version").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.k = j.at("k").get<int>();
    rec.es = j.at("es").get<std::vector<int>>();
    rec.sat = j.at("sat").get<int>();
    rec.ex = j.at("ex").get<int>();
    for (const auto& [key, value] : j.at("count_by_size").items()) {
      rec.count_by_size[std::stoi(key)] = value.get<int>();
    }
    for (const auto& [key, value] : j.at("witnesses").items()) {
      rec.witnesses[std::stoi(key)] = value.get<std::string>();
    }
    rec.total_graphs_scanned = j.at("total_graphs_scanned").get<uint64_t>();
    rec.elapsed = j.at("elapsed").get<double>();
  } catch (const std::exception& e) {
    throw RecordError(std::string("malformed record: ") + e.what());
  }
  return rec;
}

void save_record(const SpectrumRecord& rec, const std::string& path) {
  atomic_write(path, record_to_json(rec));
}

SpectrumRecord load_record(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw RecordError("cannot open record " + path);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  SpectrumRecord rec = record_from_json(text);
  if (rec.version != kVersion) {
    throw RecordError("record version mismatch: file has '" + rec.version + "', toolkit is '" +
                      kVersion + "'");
  }
  // re-verify invariants and every witness certificate
  if (rec.es.empty() != rec.count_by_size.empty()) throw RecordError("record es/count mismatch");
  std::vector<int> sizes;
  for (const auto& [m, c] : rec.count_by_size) {
    if (c < 1) throw RecordError("record count_by_size has a non-positive count");
    sizes.push_back(m);
  }
  if (sizes != rec.es) throw RecordError("record es does not match count_by_size");
  if (!rec.es.empty() && (rec.sat != rec.es.front() || rec.ex != rec.es.back())) {
    throw RecordError("record sat/ex do not match es");
  }
  for (const auto& [m, g6] : rec.witnesses) {
    SimpleGraph g = parse_graph6(g6);
    if (g.n() != rec.n || g.edge_count() != m) {
      throw RecordError("witness for size " + std::to_string(m) + " re-verification failed");
    }
    if (saturation_status(g, rec.k).verdict != SatVerdict::Saturated) {
      throw RecordError("witness for size " + std::to_string(m) + " re-verification failed");
    }
  }
  for (const auto& [m, c] : rec.count_by_size) {
    if (!rec.witnesses.count(m)) throw RecordError("record is missing a witness for size " + std::to_string(m));
  }
  return rec;
}

std::string cache_dir() {
  const char* env = std::getenv("SATSPEC_CACHE");
  return env && *env ? std::string(env) : std::string("./.satspec-cache");
}

std::string record_cache_path(int n, int k) {
  return cache_dir() + "/spectrum-n" + std::to_string(n) + "-k" + std::to_string(k) + ".json";
}

std::string checkpoint_cache_path(int n, int k) {
  return cache_dir() + "/spectrum-n" + std::to_string(n) + "-k" + std::to_string(k) +
         ".checkpoint.json";
}

}  // namespace satspec
