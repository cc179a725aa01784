#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "haarlab/aut_engine.hpp"
#include "haarlab/haar.hpp"

namespace haarlab {

/// Closure steps allowed in the regular-subgroup search.
inline constexpr std::uint64_t kCayleySearchBudget = 10'000'000;
/// Largest Aut(Γ) that verify_normalizer will enumerate.
inline constexpr std::uint64_t kNormalizerMaxOrder = 200'000;

enum class CayleyStatus { Cayley, NotCayley, UnknownBudget };
enum class NotCayleyReason { None, NotVertexTransitive, NoRegularSubgroup };
/// Which stage settled the verdict.
enum class Resolution { Intransitive, AutRegular, DeltaShortcut, SeededSearch, FullSearch, Budget };

std::string to_string(CayleyStatus s);
std::string to_string(NotCayleyReason r);
std::string to_string(Resolution r);

struct CayleyVerdict {
  CayleyStatus status = CayleyStatus::UnknownBudget;
  NotCayleyReason reason = NotCayleyReason::None;
  Resolution resolution = Resolution::Budget;
  /// Generators of a regular subgroup of Aut(Γ) when status is Cayley.
  std::vector<Permutation> certificate;
  bool vertex_transitive = false;
  BigInt aut_order = 0;
  /// Aut search nodes plus regular-subgroup closure steps.
  std::uint64_t nodes_used = 0;
};

struct CayleyOptions {
  std::uint64_t search_budget = kCayleySearchBudget;
  std::uint64_t aut_budget = kDefaultNodeBudget;
  /// Skip the R(H)-based stages and go straight to the unrestricted search.
  bool unrestricted_only = false;
  /// Precomputed Aut(H) for the δ-shortcut; computed on demand when null.
  const std::vector<GroupAutomorphism>* group_auts = nullptr;
};

bool is_vertex_transitive(const Graph& g);

/// Regular-subgroup search on an arbitrary graph (no δ-shortcut available).
CayleyVerdict is_cayley(const Graph& g, const CayleyOptions& options = {});
/// Same, for a Haar graph, trying the δ-shortcut and the R(H)-seeded search first.
CayleyVerdict is_cayley(const BiGraph& b, const CayleyOptions& options = {});

/// True iff Aut(H(g, s)) = R(H) as permutation groups.
bool is_ghrr(const FiniteGroup& g, const ConnectionSet& s);

/// R(H)⟨δ⟩ for the first δ ∈ I with δ² ∈ R(H), returned as generators of a
/// verified regular subgroup, or nullopt. `auts` defaults to all of Aut(H).
std::optional<std::vector<Permutation>> delta_shortcut(
    const FiniteGroup& g, const ConnectionSet& s,
    const std::vector<GroupAutomorphism>* auts = nullptr);

struct NormalizerReport {
  BigInt aut_order = 0;
  std::uint64_t enumerated_order = 0;
  BigInt formula_order = 0;
  std::size_t f_size = 0;
  std::size_t i_size = 0;
  bool transitive = false;
  bool equal = false;
};

/// N_A(R(H)) by enumerating A, against R(H)⋊F (I empty) or R(H)⟨F, δ⟩.
/// Throws ScaleExceeded when |A| > kNormalizerMaxOrder.
NormalizerReport verify_normalizer(const FiniteGroup& g, const ConnectionSet& s);

/// True iff `gens` generate a group acting regularly on `degree` points.
bool is_regular_certificate(std::size_t degree, const std::vector<Permutation>& gens);

/// {group, S, connected, vertex_transitive, status, certificate?, reason?,
///  nodes_used, resolution, aut_order}.
nlohmann::json verdict_to_json(const CayleyVerdict& v, const std::string& group,
                               const std::string& s, bool connected);

}  // namespace haarlab
