#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "haarlab/finite_group.hpp"

namespace haarlab {

/// Largest group the atlas will build from a product name such as "D12xZ7".
inline constexpr std::size_t kAtlasMaxOrder = 2000;

/// A defining relation lhs = rhs, both as words over the generator names.
struct Relation {
  std::string lhs;
  std::string rhs;
};

/// Looks up a group by name. Accepted names:
///   H1 .. H8, H9(p)              rows of the small-order non-vertex-transitive table
///   H16_1 .. H16_6               the non-abelian groups of order 16 with a D8 or Q8 subgroup
///   H1(p), H2(p), H3(p)          the non-abelian groups of order 2p^2, p an odd prime
///   products of Z<n>, D<2n>, Q<4m>, A4, F20 joined by 'x', e.g. "D6xZ3", "Q8xZ2xZ2",
///   and powers such as "Z2^3"
/// Throws UnknownName, or ScaleExceeded past kAtlasMaxOrder.
FiniteGroup atlas(std::string_view name);

/// The fixed names of the catalog (product families are open-ended and not listed).
std::vector<std::string> atlas_catalog();

/// The relations an atlas group was built to satisfy, for literal checking.
/// Empty for names without a recorded presentation.
std::vector<Relation> atlas_relations(std::string_view name);

/// Row 6 of the small-order table with an explicit sign choice:
/// a^c = b^{sa}, b^c = a^{sb} b with sa, sb in {+1, -1}. Throws
/// ActionNotWellDefined when the choice does not give an automorphism of Q8
/// of order dividing 3.
FiniteGroup small_table_row6(int sign_a, int sign_b);

/// Connection set of a small-order table row, as written against the row's
/// generator names. Rows 1..9.
std::string small_table_connection_set(int row);

/// {name, order, generators: {name: index}, element_names, table}.
nlohmann::json group_to_json(const FiniteGroup& g);

}  // namespace haarlab
