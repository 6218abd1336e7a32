#include "hgs/graph.hpp"

#include <algorithm>

namespace hgs {

namespace {

std::vector<std::vector<int>> adjacency(const ComplexMatrix& A, bool transposed) {
    const int n = A.order();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || A.is_zero(i, j)) continue;
            if (transposed) {
                adj[static_cast<size_t>(j)].push_back(i);
            } else {
                adj[static_cast<size_t>(i)].push_back(j);
            }
        }
    }
    return adj;
}

int reachable_count(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

// Iterative DFS recording vertex finish order.
void dfs_finish_order(const std::vector<std::vector<int>>& adj, std::vector<int>& order) {
    const int n = static_cast<int>(adj.size());
    std::vector<char> seen(adj.size(), 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        seen[static_cast<size_t>(s)] = 1;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            const int u = stack.back().first;
            const size_t next = stack.back().second;
            const auto& nbrs = adj[static_cast<size_t>(u)];
            if (next < nbrs.size()) {
                stack.back().second = next + 1;
                const int v = nbrs[next];
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
}

}  // namespace

bool is_irreducible(const ComplexMatrix& A) {
    const int n = A.order();
    if (n == 1) return !A.is_zero(0, 0);
    const auto fwd = adjacency(A, false);
    const auto rev = adjacency(A, true);
    return reachable_count(fwd, 0) == n && reachable_count(rev, 0) == n;
}

FrobeniusForm frobenius_normal_form(const ComplexMatrix& A) {
    const int n = A.order();
    const auto fwd = adjacency(A, false);
    const auto rev = adjacency(A, true);

    // Kosaraju: components collected in decreasing finish order are already
    // a topological order of the condensation, which is exactly the block
    // upper triangular arrangement.
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    dfs_finish_order(fwd, order);

    std::vector<int> component(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (component[static_cast<size_t>(*it)] >= 0) continue;
        const int cid = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{*it};
        component[static_cast<size_t>(*it)] = cid;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comps[static_cast<size_t>(cid)].push_back(u);
            for (int v : rev[static_cast<size_t>(u)]) {
                if (component[static_cast<size_t>(v)] < 0) {
                    component[static_cast<size_t>(v)] = cid;
                    stack.push_back(v);
                }
            }
        }
    }

    FrobeniusForm out;
    out.permutation.reserve(static_cast<size_t>(n));
    for (auto& comp : comps) {
        std::sort(comp.begin(), comp.end());
        out.permutation.insert(out.permutation.end(), comp.begin(), comp.end());
        IndexSet block(comp);
        out.block_matrices.push_back(A.principal_submatrix(block));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

}  // namespace hgs
