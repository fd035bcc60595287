#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltahall/extended.hpp"

namespace deltahall {

/// Images of the coideal generators inside the extended algebra:
///   b[i] = -1/(q-1) v^{-<S_i,S_i>} [S_i][K_0]
///   k[i] = -q^{-1} [0][K_{e_i}]
struct GeneratorImages {
    std::vector<ExtElement> b;
    std::vector<ExtElement> k;
};

GeneratorImages make_images(const HallTables& tables);

struct KRelationReport {
    std::vector<std::string> failures;
    long long checked = 0;
    bool ok() const { return failures.empty(); }
};

// k_i k_j symmetry, centrality of each k_i against every basis class, and
// k_i k_j = (-1/q)^2 [0][K_{e_i + e_j}].
KRelationReport check_k_relations(const HallTables& tables,
                                  const GeneratorImages& images);

// For a non-adjacent pair (n_ij = 0): do the b images commute exactly?
// Throws config_error when i == j or the vertices are adjacent.
bool check_commuting_pair(const HallTables& tables,
                          const GeneratorImages& images, int i, int j);

/// Outcome of probing the degree-3 combination
///   R = b_i b_i b_j - [2] b_i b_j b_i + b_j b_i b_i
/// against the candidate kernel element k_i b_j. When R is an exact scalar
/// multiple, `proportional` is true, `lambda` holds the scalar and
/// `residual` is zero; otherwise residual = R (or the mismatch left over).
struct Rank2Result {
    bool proportional = false;
    std::optional<QuadNumber> lambda;
    ExtElement residual;
};

// Requires n_ij = 1 and a catalog bound of at least three times the simple
// dimension. The scalar is solved for by exact division on the first
// matching label; it is reported, never asserted against a constant.
Rank2Result discover_rank2_relation(const HallTables& tables,
                                    const GeneratorImages& images, int i,
                                    int j);

}  // namespace deltahall
