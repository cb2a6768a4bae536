#include "omfib/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace omfib {

namespace {

// Directed cycle search; returns the cycle vertices when one exists.
std::optional<std::vector<uint32_t>> find_cycle(const std::vector<std::vector<uint32_t>>& adj) {
    uint32_t n = static_cast<uint32_t>(adj.size());
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<uint32_t> parent(n, UINT32_MAX);

    for (uint32_t s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        std::vector<std::pair<uint32_t, size_t>> stack{{s, 0}};
        state[s] = 1;
        while (!stack.empty()) {
            auto& [x, it] = stack.back();
            if (it < adj[x].size()) {
                uint32_t y = adj[x][it++];
                if (state[y] == 0) {
                    state[y] = 1;
                    parent[y] = x;
                    stack.emplace_back(y, 0);
                } else if (state[y] == 1) {
                    std::vector<uint32_t> cycle{y};
                    for (uint32_t z = x; z != y; z = parent[z]) cycle.push_back(z);
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
            } else {
                state[x] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

MatchingResult apply_matching(const Poset& p, const Matching& m) {
    uint32_t n = p.size();
    std::vector<uint32_t> partner(n, UINT32_MAX);
    for (auto [a, b] : m.pairs) {
        if (a >= n || b >= n) throw std::invalid_argument("matching index out of range");
        bool is_cover = std::find(p.upper_covers(a).begin(), p.upper_covers(a).end(), b) !=
                        p.upper_covers(a).end();
        if (!is_cover) throw std::invalid_argument("matched pair is not a cover relation");
        if (partner[a] != UINT32_MAX || partner[b] != UINT32_MAX)
            throw std::invalid_argument("element matched twice");
        partner[a] = b;
        partner[b] = a;
    }

    // modified Hasse digraph: unmatched covers up, matched covers reversed
    std::vector<std::vector<uint32_t>> adj(n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b : p.upper_covers(a)) {
            if (partner[a] == b)
                adj[b].push_back(a);
            else
                adj[a].push_back(b);
        }

    MatchingResult res;
    if (auto cyc = find_cycle(adj)) {
        res.acyclic = false;
        res.cycle = *cyc;
        return res;
    }
    res.acyclic = true;
    for (uint32_t x = 0; x < n; ++x)
        if (partner[x] == UINT32_MAX) res.critical.push_back(x);

    Bitset crit(n);
    for (uint32_t x : res.critical) crit.set(x);
    res.critical_is_ideal = true;
    for (uint32_t x : res.critical)
        p.down_set(x).for_each([&](uint32_t y) {
            if (!crit.test(y)) res.critical_is_ideal = false;
        });
    if (res.critical_is_ideal) {
        Subposet sp;
        sp.elements = res.critical;
        sp.poset = p.induced(sp.elements);
        res.critical_poset = std::move(sp);
    }
    return res;
}

Matching patchwork(const PosetMap& f, const std::function<Matching(uint32_t)>& per_fiber) {
    Matching total;
    for (uint32_t q = 0; q < f.codomain->size(); ++q) {
        Matching part = per_fiber(q);
        for (auto [a, b] : part.pairs) {
            if (f.map[a] != q || f.map[b] != q)
                throw std::invalid_argument("per-fiber matching leaves its fiber");
            total.pairs.emplace_back(a, b);
        }
    }
    MatchingResult check = apply_matching(*f.domain, total);
    if (!check.acyclic)
        throw std::logic_error("patchwork union of acyclic matchings has a cycle");
    return total;
}

}  // namespace omfib
