#include "tileasm/graph.hpp"

#include <algorithm>

namespace tileasm {

std::vector<int> immediate_dominators(const std::vector<std::vector<int>>& succ, int root) {
    const int n = static_cast<int>(succ.size());
    std::vector<std::vector<int>> pred(n);
    for (int u = 0; u < n; ++u)
        for (int v : succ[u]) pred[v].push_back(u);

    // Reverse postorder by iterative DFS.
    std::vector<int> order, po_num(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
        auto& [u, k] = stack.back();
        if (k < succ[u].size()) {
            int v = succ[u][k++];
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back({v, 0});
            }
        } else {
            po_num[u] = static_cast<int>(order.size());
            order.push_back(u);
            stack.pop_back();
        }
    }
    std::reverse(order.begin(), order.end());

    std::vector<int> idom(n, -1);
    idom[root] = root;
    auto intersect = [&](int a, int b) {
        while (a != b) {
            while (po_num[a] < po_num[b]) a = idom[a];
            while (po_num[b] < po_num[a]) b = idom[b];
        }
        return a;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u : order) {
            if (u == root) continue;
            int nd = -1;
            for (int p : pred[u]) {
                if (idom[p] == -1) continue;
                nd = nd == -1 ? p : intersect(p, nd);
            }
            if (nd != idom[u]) {
                idom[u] = nd;
                changed = true;
            }
        }
    }
    return idom;
}

bool dominates(const std::vector<int>& idom, int d, int v) {
    if (idom[v] == -1) return false;
    while (true) {
        if (v == d) return true;
        if (idom[v] == v) return false;
        v = idom[v];
    }
}

}  // namespace tileasm
