#include "omfib/geometric_lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace omfib {

GeometricLattice geometric_lattice(const OrientedMatroid& om) {
    GeometricLattice gl;

    std::vector<Bitset> zeros;
    zeros.reserve(om.covector_count());
    for (uint32_t i = 0; i < om.covector_count(); ++i) zeros.push_back(om.covector(i).zero_bits());

    std::vector<Bitset> distinct = zeros;
    std::sort(distinct.begin(), distinct.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return Bitset::lex_less(a, b);
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::map<std::vector<uint32_t>, uint32_t> by_support;
    for (uint32_t i = 0; i < distinct.size(); ++i) by_support.emplace(distinct[i].to_vector(), i);

    gl.covector_to_flat.resize(om.covector_count());
    for (uint32_t i = 0; i < om.covector_count(); ++i)
        gl.covector_to_flat[i] = by_support.at(zeros[i].to_vector());

    gl.poset = Poset::from_relation(static_cast<uint32_t>(distinct.size()),
                                    [&](uint32_t a, uint32_t b) {
                                        return distinct[a].is_subset_of(distinct[b]);
                                    });
    gl.flats.reserve(distinct.size());
    for (uint32_t i = 0; i < distinct.size(); ++i)
        gl.flats.push_back(Flat{distinct[i], gl.poset.heights()[i]});
    return gl;
}

std::vector<uint32_t> zero_map(const OrientedMatroid& om) {
    return geometric_lattice(om).covector_to_flat;
}

std::vector<long long> moebius_from_bottom(const Poset& p) {
    auto mins = p.minimal_elements();
    if (mins.size() != 1) throw std::invalid_argument("poset has no unique minimum");
    uint32_t bottom = mins.front();
    std::vector<long long> mu(p.size(), 0);
    for (uint32_t x : p.topo_order()) {
        if (x == bottom) {
            mu[x] = 1;
            continue;
        }
        long long acc = 0;
        p.down_set(x).for_each([&](uint32_t y) {
            if (y != x) acc += mu[y];
        });
        mu[x] = -acc;
    }
    return mu;
}

namespace {

bool is_lattice(const Poset& p) {
    uint32_t n = p.size();
    if (n == 0) return false;
    if (p.minimal_elements().size() != 1 || p.maximal_elements().size() != 1) return false;
    // every pair needs a unique least upper bound
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = x + 1; y < n; ++y) {
            Bitset common = p.up_set(x) & p.up_set(y);
            uint32_t join = UINT32_MAX;
            bool unique = true;
            common.for_each([&](uint32_t z) {
                // minimal in common?
                bool minimal = true;
                common.for_each([&](uint32_t w) {
                    if (w != z && p.leq(w, z)) minimal = false;
                });
                if (minimal) {
                    if (join != UINT32_MAX) unique = false;
                    join = z;
                }
            });
            if (!unique || join == UINT32_MAX) return false;
        }
    }
    return true;
}

}  // namespace

OSBetti os_betti(const Poset& lattice) {
    if (!is_lattice(lattice)) throw std::invalid_argument("poset is not a lattice");
    std::vector<long long> mu = moebius_from_bottom(lattice);

    int top = lattice.height();
    OSBetti out;
    out.betti.assign(top + 1, 0);
    for (uint32_t x = 0; x < lattice.size(); ++x)
        out.betti[lattice.heights()[x]] += std::llabs(mu[x]);

    // Poin(X) has the factor (1+t); chi(U) = Poin'(-1)
    long long chi = 0;
    long long sign = 1;  // (-1)^(k-1) for k = 1
    for (int k = 1; k <= top; ++k) {
        chi += sign * static_cast<long long>(k) * out.betti[k];
        sign = -sign;
    }
    out.chi_projective = chi;
    return out;
}

}  // namespace omfib
