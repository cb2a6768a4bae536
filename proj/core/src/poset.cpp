#include "omfib/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omfib {

Poset Poset::from_covers(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> covers) {
    std::vector<std::vector<uint32_t>> up_adj(n);
    for (auto [x, y] : covers) {
        if (x >= n || y >= n) throw std::invalid_argument("cover index out of range");
        if (x == y) throw std::invalid_argument("cover relation is irreflexive");
        up_adj[x].push_back(y);
    }

    // reachability in reverse topological order (Kahn over the cover digraph)
    std::vector<uint32_t> indeg(n, 0);
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y : up_adj[x]) ++indeg[y];
    std::vector<uint32_t> order;
    order.reserve(n);
    for (uint32_t x = 0; x < n; ++x)
        if (indeg[x] == 0) order.push_back(x);
    for (size_t i = 0; i < order.size(); ++i)
        for (uint32_t y : up_adj[order[i]])
            if (--indeg[y] == 0) order.push_back(y);
    if (order.size() != n) throw std::invalid_argument("cover digraph has a cycle");

    std::vector<Bitset> up(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        uint32_t x = *it;
        up[x].set(x);
        for (uint32_t y : up_adj[x]) up[x] |= up[y];
    }
    return from_reachability(std::move(up));
}

Poset Poset::from_reachability(std::vector<Bitset> up_sets) {
    Poset p;
    p.n_ = static_cast<uint32_t>(up_sets.size());
    p.up_ = std::move(up_sets);
    for (uint32_t x = 0; x < p.n_; ++x) p.up_[x].set(x);
    p.down_.assign(p.n_, Bitset(p.n_));
    for (uint32_t x = 0; x < p.n_; ++x)
        p.up_[x].for_each([&](uint32_t y) { p.down_[y].set(x); });
    // antisymmetry
    for (uint32_t x = 0; x < p.n_; ++x)
        p.up_[x].for_each([&](uint32_t y) {
            if (y != x && p.up_[y].test(x)) throw std::invalid_argument("relation is not antisymmetric");
        });
    p.finalize();
    return p;
}

void Poset::finalize() {
    // covers = transitive reduction: y covers x iff up(x) & down(y) = {x, y}
    covers_up_.assign(n_, {});
    covers_down_.assign(n_, {});
    for (uint32_t x = 0; x < n_; ++x) {
        up_[x].for_each([&](uint32_t y) {
            if (y == x) return;
            Bitset between = up_[x] & down_[y];
            if (between.count() == 2) {
                covers_up_[x].push_back(y);
                covers_down_[y].push_back(x);
            }
        });
    }
    for (auto& v : covers_up_) std::sort(v.begin(), v.end());
    for (auto& v : covers_down_) std::sort(v.begin(), v.end());

    heights_.assign(n_, 0);
    topo_.resize(n_);
    std::iota(topo_.begin(), topo_.end(), 0);
    std::sort(topo_.begin(), topo_.end(),
              [&](uint32_t a, uint32_t b) { return down_[a].count() < down_[b].count() || (down_[a].count() == down_[b].count() && a < b); });
    for (uint32_t x : topo_)
        for (uint32_t y : covers_up_[x]) heights_[y] = std::max(heights_[y], heights_[x] + 1);
    // re-sort the linear extension by height for downstream consumers
    std::sort(topo_.begin(), topo_.end(),
              [&](uint32_t a, uint32_t b) { return heights_[a] < heights_[b] || (heights_[a] == heights_[b] && a < b); });
}

std::vector<std::pair<uint32_t, uint32_t>> Poset::cover_pairs() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t x = 0; x < n_; ++x)
        for (uint32_t y : covers_up_[x]) out.emplace_back(x, y);
    return out;
}

uint64_t Poset::cover_count() const {
    uint64_t c = 0;
    for (uint32_t x = 0; x < n_; ++x) c += covers_up_[x].size();
    return c;
}

std::vector<uint32_t> Poset::principal_ideal(uint32_t x) const {
    if (x >= n_) throw std::invalid_argument("element index out of range");
    return down_[x].to_vector();
}

std::vector<uint32_t> Poset::principal_filter(uint32_t x) const {
    if (x >= n_) throw std::invalid_argument("element index out of range");
    return up_[x].to_vector();
}

std::vector<uint32_t> Poset::minimal_elements() const {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < n_; ++x)
        if (covers_down_[x].empty()) out.push_back(x);
    return out;
}

std::vector<uint32_t> Poset::maximal_elements() const {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < n_; ++x)
        if (covers_up_[x].empty()) out.push_back(x);
    return out;
}

Poset Poset::dual() const {
    Poset p;
    p.n_ = n_;
    p.up_ = down_;
    p.down_ = up_;
    p.labels_ = labels_;
    p.finalize();
    return p;
}

Poset Poset::induced(std::span<const uint32_t> keep) const {
    uint32_t m = static_cast<uint32_t>(keep.size());
    std::vector<Bitset> up(m, Bitset(m));
    for (uint32_t i = 0; i < m; ++i) {
        if (keep[i] >= n_) throw std::invalid_argument("element index out of range");
        if (i + 1 < m && keep[i] >= keep[i + 1])
            throw std::invalid_argument("induced: elements must be strictly ascending");
        for (uint32_t j = 0; j < m; ++j)
            if (leq(keep[i], keep[j])) up[i].set(j);
    }
    Poset p = from_reachability(std::move(up));
    if (!labels_.empty()) {
        for (uint32_t i = 0; i < m; ++i) p.set_label(i, labels_[keep[i]]);
    }
    return p;
}

int Poset::height() const {
    int h = 0;
    for (int x : heights_) h = std::max(h, x);
    return h;
}

uint64_t Poset::count_maximal_chains() const {
    // chains from a minimal element to x, computed over the Hasse diagram
    std::vector<uint64_t> ways(n_, 0);
    for (uint32_t x : topo_) {
        if (covers_down_[x].empty()) ways[x] = 1;
        for (uint32_t y : covers_down_[x]) ways[x] += ways[y];
    }
    uint64_t total = 0;
    for (uint32_t x = 0; x < n_; ++x)
        if (covers_up_[x].empty()) total += ways[x];
    return total;
}

void Poset::set_label(uint32_t i, std::string s) {
    if (labels_.empty()) labels_.assign(n_, {});
    labels_[i] = std::move(s);
}

bool PosetMap::order_preserving() const {
    for (uint32_t x = 0; x < domain->size(); ++x)
        for (uint32_t y : domain->upper_covers(x))
            if (!codomain->leq(map[x], map[y])) return false;
    return true;
}

Subposet poset_fiber(const PosetMap& f, uint32_t q) {
    if (q >= f.codomain->size()) throw std::invalid_argument("fiber target out of range");
    const Bitset& ideal = f.codomain->down_set(q);
    Subposet out;
    for (uint32_t x = 0; x < f.domain->size(); ++x)
        if (ideal.test(f.map[x])) out.elements.push_back(x);
    out.poset = f.domain->induced(out.elements);
    return out;
}

}  // namespace omfib
