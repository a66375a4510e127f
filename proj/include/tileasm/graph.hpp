#pragma once

#include <vector>

namespace tileasm {

// Immediate dominators over a graph given by successor lists, rooted at
// `root` (Cooper, Harvey and Kennedy's iterative scheme). Unreachable
// vertices get -1; the root is its own immediate dominator.
std::vector<int> immediate_dominators(const std::vector<std::vector<int>>& succ, int root);

// True iff d dominates v (every root->v path passes through d); a vertex
// dominates itself. Unreachable v is dominated by nothing.
bool dominates(const std::vector<int>& idom, int d, int v);

}  // namespace tileasm
