#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "kaccoh/cocycles.hpp"
#include "kaccoh/homology.hpp"

namespace kaccoh {

using Json = nlohmann::ordered_json;

/// Group input schema, two variants:
///   {"order": n, "table": [[...], ...]}
///   {"degree": d, "permutation_generators": [[...], ...]}
FiniteGroup group_from_json(const Json& j);

/// Matched-pair input schema:
///   {"group": <group>, "G1": [...], "G2": [...], "generators": bool}
/// With "generators": true the element lists are closed under the group
/// operations first.
MatchedPair matched_pair_from_json(const Json& j);
MatchedPair load_matched_pair(const std::string& path);

/// Cocycle file schema: {"coeff": "T", "U": {"shape": [...], "values":
/// ["p/q", ...]}, "V": {...}}; theta files carry {"theta": {...}} instead.
/// Rationals are exact strings.
CocyclePair cocycle_pair_from_json(const MatchedPair& mp, const Json& j);
Json cocycle_pair_to_json(const MatchedPair& mp, const CocyclePair& pair);
PentagonalCocycle theta_from_json(const MatchedPair& mp, const Json& j);
Json theta_to_json(const MatchedPair& mp, const PentagonalCocycle& theta);
PentagonalCocycle load_theta(const MatchedPair& mp, const std::string& path);

Json info_to_json(const CoefficientModule& coeff, int degree, const AbelianGroupInfo& info);

/// Sparse coordinate text: header "rows cols nnz", then one "row col value"
/// line per entry, 0-indexed.
void export_matrix(std::ostream& os, const SparseMatI& m);

/// FNV-1a 64 of the file bytes, hex.
std::string file_digest(const std::string& path);

Json load_json_file(const std::string& path);

}  // namespace kaccoh
