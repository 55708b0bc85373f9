#pragma once

#include <vector>

#include "tcl/perm_group.hpp"

namespace tcl {

// Hard cap for full subgroup enumeration; S_6 already has 1455 subgroups and
// the extension closure is quadratic-ish in that count.
inline constexpr int kMaxLatticeDegree = 6;

// Every subgroup of S_r, enumerated by cyclic-extension closure: seed with
// the cyclic subgroups, then repeatedly extend each known subgroup by one
// element (taken up to conjugation by the subgroup) and close. Deterministic
// order: by order, then by sorted element ranks. Results are memoized per r.
const std::vector<PermGroup>& all_subgroups(int r);

// Subgroup conjugacy in S_r by exhaustive sigma search.
bool conjugate_subgroups(const PermGroup& a, const PermGroup& b);

// Lexicographically least sorted element-rank vector over all conjugates;
// canonical key for a conjugacy class of subgroups.
std::vector<uint32_t> conjugacy_canonical_key(const PermGroup& g);

}  // namespace tcl
