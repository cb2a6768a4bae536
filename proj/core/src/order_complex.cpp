#include "omfib/order_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace omfib {

namespace {

void extend_maximal(const Poset& p, std::vector<uint32_t>& chain,
                    std::vector<std::vector<uint32_t>>& out) {
    uint32_t x = chain.back();
    const auto& ups = p.upper_covers(x);
    if (ups.empty()) {
        out.push_back(chain);
        return;
    }
    for (uint32_t y : ups) {
        chain.push_back(y);
        extend_maximal(p, chain, out);
        chain.pop_back();
    }
}

void extend_all(const Poset& p, std::vector<uint32_t>& chain,
                std::vector<std::vector<std::vector<uint32_t>>>& by_dim) {
    size_t d = chain.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(chain);
    uint32_t x = chain.back();
    p.up_set(x).for_each([&](uint32_t y) {
        if (y == x) return;
        chain.push_back(y);
        extend_all(p, chain, by_dim);
        chain.pop_back();
    });
}

}  // namespace

OrderComplex order_complex(const Poset& p) {
    OrderComplex oc;
    oc.n_vertices = p.size();
    std::vector<uint32_t> chain;
    for (uint32_t x : p.minimal_elements()) {
        chain.assign(1, x);
        extend_maximal(p, chain, oc.facets);
    }
    return oc;
}

SimplicialComplex all_chains(const Poset& p) {
    SimplicialComplex sc;
    sc.n_vertices = p.size();
    std::vector<uint32_t> chain;
    for (uint32_t x = 0; x < p.size(); ++x) {
        chain.assign(1, x);
        extend_all(p, chain, sc.simplices);
    }
    // chains are generated poset-ascending; homology wants each simplex as a
    // sorted id tuple with a global deterministic order
    for (auto& dim : sc.simplices) {
        for (auto& s : dim) std::sort(s.begin(), s.end());
        std::sort(dim.begin(), dim.end());
    }
    return sc;
}

SimplicialComplex complex_from_facets(uint32_t n, const std::vector<std::vector<uint32_t>>& facets) {
    SimplicialComplex sc;
    sc.n_vertices = n;
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        std::vector<uint32_t> s(f);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("facet has repeated vertices");
        if (s.back() >= n) throw std::invalid_argument("facet vertex out of range");
        // enumerate all nonempty subsets
        uint32_t k = static_cast<uint32_t>(s.size());
        for (uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<uint32_t> sub;
            for (uint32_t i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            size_t d = sub.size() - 1;
            if (sc.simplices.size() <= d) sc.simplices.resize(d + 1);
            sc.simplices[d].push_back(std::move(sub));
        }
    }
    for (auto& dim : sc.simplices) {
        std::sort(dim.begin(), dim.end());
        dim.erase(std::unique(dim.begin(), dim.end()), dim.end());
    }
    return sc;
}

}  // namespace omfib
