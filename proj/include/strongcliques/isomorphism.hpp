#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strongcliques/graph.hpp"

namespace strongcliques {

// Backtracking isomorphism with iterated degree/neighborhood refinement.
// Adequate for the small graphs this project works with (n <= ~20).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

// Hashable invariant that refines degree sequences; equal canonical keys are
// necessary but not sufficient for isomorphism.
uint64_t invariant_key(const Graph& g);

}  // namespace strongcliques
