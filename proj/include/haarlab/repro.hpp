#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "haarlab/symmetry.hpp"

namespace haarlab {

inline constexpr const char* kReportSchema = "haarlab.report/1";
/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "HAARLAB_CACHE_DIR";
/// Exhaustive scans enumerate 2^(|H|-1) sets; beyond this order a size bound is required.
inline constexpr std::size_t kScanMaxOrder = 32;
/// Connected Haar graphs H(Q8xZ2, S) with 1 ∈ S, fixed by the first certified run.
inline constexpr std::size_t kQ8Z2ConnectedGolden = 31968;

std::string version();

enum class RowStatus { Pass, Fail, Unknown };
std::string to_string(RowStatus s);
RowStatus row_status_from_string(const std::string& s);

struct ReportRow {
  std::string group;
  std::size_t order = 0;
  std::string s;
  /// The claim being checked, in words.
  std::string claim;
  nlohmann::json expected;
  nlohmann::json computed;
  RowStatus status = RowStatus::Unknown;
};

struct VerificationReport {
  std::string target;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<ReportRow> rows;
  nlohmann::json summary = nlohmann::json::object();
  double wall_seconds = 0;
  std::string version;

  /// Nonempty and every row PASS.
  bool passed() const;
  nlohmann::json to_json() const;
  /// Throws ParseError on a missing or mismatched schema.
  static VerificationReport from_json(const nlohmann::json& j);
};

/// Verdict records keyed by (group name, sorted S, tool version). Backed by an
/// append-only JSON-lines file when a path is given; records written by
/// another version are ignored on load. Thread-safe.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path file);

  std::optional<nlohmann::json> lookup(const std::string& group, const std::vector<Elem>& s) const;
  void store(const std::string& group, const std::vector<Elem>& s, const nlohmann::json& record);
  std::size_t size() const;
  const std::optional<std::filesystem::path>& file() const { return file_; }

  /// $HAARLAB_CACHE_DIR/verdicts.jsonl, when the variable is set.
  static std::optional<std::filesystem::path> default_path();

 private:
  static std::string key(const std::string& group, const std::vector<Elem>& s);

  std::optional<std::filesystem::path> file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, nlohmann::json> records_;
};

/// Classifies Haar graphs through an optional cache, counting the
/// automorphism computations it actually performs.
class Classifier {
 public:
  explicit Classifier(ResultCache* cache = nullptr, CayleyOptions options = {});

  /// verdict_to_json(...) plus "ghrr" and "order".
  nlohmann::json classify(const FiniteGroup& g, const std::vector<Elem>& s);

  std::uint64_t aut_computations() const { return aut_computations_; }
  std::uint64_t cache_hits() const { return cache_hits_; }

 private:
  const std::vector<GroupAutomorphism>* group_auts(const FiniteGroup& g);

  ResultCache* cache_;
  CayleyOptions options_;
  std::atomic<std::uint64_t> aut_computations_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
  std::mutex auts_mutex_;
  std::map<std::string, std::optional<std::vector<GroupAutomorphism>>> auts_;
};

// Verification targets. Each row holds the expected and computed values.

/// D_{2n} x Z_p with S = {1,a,b,c,abc}. Throws ScaleExceeded when 2np > 2000.
VerificationReport target_dihedral_cross_zp(Classifier& c, const std::vector<std::size_t>& n_list,
                                            const std::vector<std::size_t>& p_list);
/// Q8 x Z_p with S = {1,a,c,abc^-1,bc}. Throws ScaleExceeded when 8p > 2000.
VerificationReport target_q8_cross_zp(Classifier& c, const std::vector<std::size_t>& p_list);
/// The nine small-order witnesses (row 9 at p = 3 and 5), plus the four
/// sign readings of row 6.
VerificationReport target_small_table(Classifier& c);
/// Every S ∋ 1 over Q8 x Z2.
VerificationReport target_q8z2_scan(Classifier& c, std::size_t jobs = 0);
/// Exhaustive scans of D4 .. D12 and Q8.
VerificationReport target_dihedral_threshold(Classifier& c, std::size_t jobs = 0);

std::vector<std::string> target_names();
/// Runs a target by name with its default parameters, or with `n_list` /
/// `p_list` where they apply. Throws UnknownName.
VerificationReport run_target(Classifier& c, const std::string& name, const std::vector<std::size_t>& n_list = {},
                              const std::vector<std::size_t>& p_list = {}, std::size_t jobs = 0);

struct ScanOptions {
  bool connected_only = false;
  /// Largest |S| enumerated; 0 for no bound.
  std::size_t max_size = 0;
  /// Stop at the first NOT_CAYLEY set (in enumeration order).
  bool find_non_cayley = false;
  /// Keep one S per Aut(H)-orbit (the least mask); off by default.
  bool orbit_reduce = false;
  std::size_t jobs = 0;
  /// When set, writes <dir>/<group>.g6 plus <dir>/<group>.index.tsv.
  std::optional<std::filesystem::path> export_graph6;
  /// Called from the writer thread for each finished row.
  std::function<void(const ReportRow&)> on_row;
};

/// Enumerates S ∋ 1 over the named group (masks in increasing order) and
/// classifies each. Throws ScaleExceeded when |H| > kScanMaxOrder without a
/// size bound.
VerificationReport scan(Classifier& c, const std::string& group_name, const ScanOptions& options = {});

}  // namespace haarlab
