#pragma once

// Small permutation groups: composition, closure of a generating set and the
// Burnside fixed-point average.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace mtc {

using Perm = std::vector<int>;  // images of 0..d-1

inline void validate_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

inline Perm perm_identity(int d) {
    Perm p(d);
    for (int i = 0; i < d; ++i) p[i] = i;
    return p;
}

// (a*b)(i) = a(b(i))
inline Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline int fixed_points(const Perm& p) {
    int f = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) ++f;
    return f;
}

inline bool commute(const Perm& a, const Perm& b) { return compose(a, b) == compose(b, a); }

inline bool transitive(const std::vector<Perm>& gens, int d) {
    if (d <= 0) return false;
    std::vector<bool> seen(d, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto& g : gens) {
            if (!seen[g[x]]) {
                seen[g[x]] = true;
                ++count;
                stack.push_back(g[x]);
            }
        }
    }
    return count == d;
}

inline std::vector<Perm> group_closure(const std::vector<Perm>& gens, std::size_t limit = 200000) {
    if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
    std::size_t d = gens[0].size();
    for (auto& g : gens) {
        if (g.size() != d) throw std::invalid_argument("group_closure: size mismatch");
        validate_perm(g);
    }
    std::set<Perm> group;
    std::vector<Perm> frontier = {perm_identity(static_cast<int>(d))};
    group.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto& g : frontier)
            for (auto& gen : gens) {
                Perm h = compose(gen, g);
                if (group.insert(h).second) {
                    next.push_back(std::move(h));
                    if (group.size() > limit) throw std::runtime_error("group_closure: group too large");
                }
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

// Burnside: (1/|G|) sum over G of #Fix(g); asserts exact divisibility
inline int group_invariant_dim(const std::vector<Perm>& group_elements) {
    if (group_elements.empty()) throw std::invalid_argument("group_invariant_dim: empty group");
    long long total = 0;
    for (auto& g : group_elements) total += fixed_points(g);
    if (total % static_cast<long long>(group_elements.size()) != 0)
        throw std::runtime_error("group_invariant_dim: Burnside sum not divisible by group order");
    return static_cast<int>(total / static_cast<long long>(group_elements.size()));
}

}  // namespace mtc
