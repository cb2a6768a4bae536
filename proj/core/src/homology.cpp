#include "omfib/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "omfib/parallel.hpp"

namespace omfib {

bool HomologyReport::acyclic() const {
    if (!torsion.empty()) return false;
    if (betti.empty() || betti[0] != 1) return false;
    for (size_t k = 1; k < betti.size(); ++k)
        if (betti[k] != 0) return false;
    return true;
}

bool HomologyReport::vanishes() const { return trimmed_betti().empty() && torsion.empty(); }

std::vector<long long> HomologyReport::trimmed_betti() const {
    std::vector<long long> b = betti;
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

std::string HomologyReport::str() const {
    std::ostringstream os;
    os << "betti (";
    for (size_t i = 0; i < betti.size(); ++i) os << (i ? "," : "") << betti[i];
    os << ")";
    if (!torsion.empty()) {
        os << " torsion";
        for (auto& [d, c] : torsion) os << " H" << d << ":Z/" << c.get_str();
    }
    return os.str();
}

ChainComplex ChainComplex::from_simplices(const SimplicialComplex& sc) {
    ChainComplex cc;
    int top = sc.dim();
    cc.dims.assign(top + 1, 0);
    cc.boundary.resize(top + 1);
    if (top < 0) return cc;

    std::vector<std::map<std::vector<uint32_t>, uint32_t>> index(top + 1);
    for (int k = 0; k <= top; ++k) {
        cc.dims[k] = sc.simplices[k].size();
        for (uint32_t i = 0; i < sc.simplices[k].size(); ++i)
            index[k].emplace(sc.simplices[k][i], i);
    }
    for (int k = 1; k <= top; ++k) {
        SparseIntMatrix& m = cc.boundary[k];
        m.rows = static_cast<uint32_t>(cc.dims[k - 1]);
        m.cols = static_cast<uint32_t>(cc.dims[k]);
        m.columns.resize(m.cols);
        for (uint32_t i = 0; i < sc.simplices[k].size(); ++i) {
            const auto& s = sc.simplices[k][i];
            std::vector<uint32_t> face(s.size() - 1);
            long long sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                size_t w = 0;
                for (size_t j = 0; j < s.size(); ++j)
                    if (j != drop) face[w++] = s[j];
                auto it = index[k - 1].find(face);
                if (it == index[k - 1].end())
                    throw std::logic_error("complex is not closed under faces");
                m.columns[i].emplace_back(it->second, sign);
                sign = -sign;
            }
            std::sort(m.columns[i].begin(), m.columns[i].end());
        }
    }
    return cc;
}

bool ChainComplex::dd_zero() const {
    for (size_t k = 1; k + 1 < boundary.size(); ++k) {
        const SparseIntMatrix& d1 = boundary[k];
        const SparseIntMatrix& d2 = boundary[k + 1];
        for (const auto& col : d2.columns) {
            std::map<uint32_t, long long> acc;
            for (auto [r, v] : col)
                for (auto [rr, vv] : d1.columns[r]) acc[rr] += v * vv;
            for (auto& [rr, vv] : acc)
                if (vv != 0) return false;
        }
    }
    return true;
}

namespace {

HomologyReport homology_from_chain(const ChainComplex& cc) {
    HomologyReport rep;
    int top = static_cast<int>(cc.dims.size()) - 1;
    if (top < 0) {
        rep.betti = {};
        rep.euler = 0;
        return rep;
    }
    if (!cc.dd_zero()) throw std::logic_error("boundary of boundary is nonzero");
    std::vector<SmithResult> snf(top + 1);
    parallel_for(static_cast<uint32_t>(top), [&](uint32_t i) {
        snf[i + 1] = smith_sparse(cc.boundary[i + 1]);
    });

    rep.betti.assign(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        long long rk_k = (k >= 1) ? snf[k].rank : 0;
        long long rk_k1 = (k + 1 <= top) ? snf[k + 1].rank : 0;
        rep.betti[k] = static_cast<long long>(cc.dims[k]) - rk_k - rk_k1;
        if (k + 1 <= top)
            for (const auto& d : snf[k + 1].nontrivial()) rep.torsion.emplace_back(k, d);
    }
    rep.euler = 0;
    int sign = 1;
    for (int k = 0; k <= top; ++k) {
        rep.euler += sign * rep.betti[k];
        sign = -sign;
    }
    // redundancy check against alternating simplex counts
    long long chi_cells = 0;
    sign = 1;
    for (int k = 0; k <= top; ++k) {
        chi_cells += sign * static_cast<long long>(cc.dims[k]);
        sign = -sign;
    }
    if (chi_cells != rep.euler) throw std::logic_error("euler characteristic mismatch");
    return rep;
}

}  // namespace

SimplicialComplex collapse_free_pairs(const SimplicialComplex& sc) {
    int top = sc.dim();
    if (top < 1) return sc;

    std::vector<std::map<std::vector<uint32_t>, uint32_t>> index(top + 1);
    for (int k = 0; k <= top; ++k)
        for (uint32_t i = 0; i < sc.simplices[k].size(); ++i)
            index[k].emplace(sc.simplices[k][i], i);

    // codim-1 coface lists
    std::vector<std::vector<std::vector<uint32_t>>> cofaces(top + 1);
    for (int k = 0; k < top; ++k) cofaces[k].assign(sc.simplices[k].size(), {});
    for (int k = 1; k <= top; ++k) {
        for (uint32_t i = 0; i < sc.simplices[k].size(); ++i) {
            const auto& s = sc.simplices[k][i];
            std::vector<uint32_t> face(s.size() - 1);
            for (size_t drop = 0; drop < s.size(); ++drop) {
                size_t w = 0;
                for (size_t j = 0; j < s.size(); ++j)
                    if (j != drop) face[w++] = s[j];
                cofaces[k - 1][index[k - 1].at(face)].push_back(i);
            }
        }
    }

    std::vector<std::vector<bool>> alive(top + 1);
    std::vector<std::vector<uint32_t>> live_cofaces(top + 1);
    for (int k = 0; k <= top; ++k) {
        alive[k].assign(sc.simplices[k].size(), true);
        if (k < top) {
            live_cofaces[k].assign(sc.simplices[k].size(), 0);
            for (uint32_t i = 0; i < sc.simplices[k].size(); ++i)
                live_cofaces[k][i] = static_cast<uint32_t>(cofaces[k][i].size());
        }
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (int k = 0; k < top; ++k) {
            for (uint32_t i = 0; i < sc.simplices[k].size(); ++i) {
                if (!alive[k][i] || live_cofaces[k][i] != 1) continue;
                uint32_t tau = UINT32_MAX;
                for (uint32_t c : cofaces[k][i])
                    if (alive[k + 1][c]) tau = c;
                // tau must be maximal for (sigma, tau) to be a free pair
                if (k + 1 < top && live_cofaces[k + 1][tau] != 0) continue;
                alive[k][i] = false;
                alive[k + 1][tau] = false;
                const auto& ts = sc.simplices[k + 1][tau];
                std::vector<uint32_t> face(ts.size() - 1);
                for (size_t drop = 0; drop < ts.size(); ++drop) {
                    size_t w = 0;
                    for (size_t j = 0; j < ts.size(); ++j)
                        if (j != drop) face[w++] = ts[j];
                    --live_cofaces[k][index[k].at(face)];
                }
                progress = true;
            }
        }
    }

    SimplicialComplex out;
    out.n_vertices = sc.n_vertices;
    out.simplices.resize(top + 1);
    for (int k = 0; k <= top; ++k)
        for (uint32_t i = 0; i < sc.simplices[k].size(); ++i)
            if (alive[k][i]) out.simplices[k].push_back(sc.simplices[k][i]);
    while (!out.simplices.empty() && out.simplices.back().empty()) out.simplices.pop_back();
    return out;
}

HomologyReport homology(const SimplicialComplex& sc, const HomologyOptions& opt) {
    const SimplicialComplex* use = &sc;
    SimplicialComplex collapsed;
    if (opt.collapse) {
        collapsed = collapse_free_pairs(sc);
        use = &collapsed;
    }
    ChainComplex cc = ChainComplex::from_simplices(*use);
    HomologyReport rep = homology_from_chain(cc);
    if (opt.collapse) {
        // a collapse shrinks the top dimension but not the homology; restore
        // degree slots so reports compare independently of the option
        rep.betti.resize(std::max(rep.betti.size(), sc.simplices.size()), 0);
    }
    // fix euler against the ORIGINAL cell counts when collapsed
    if (opt.collapse) rep.euler = sc.euler_characteristic();
    return rep;
}

HomologyReport homology(const Poset& p, const HomologyOptions& opt) {
    return homology(all_chains(p), opt);
}

HomologyReport relative_homology(const Poset& p, const Bitset& sub) {
    SimplicialComplex sc = all_chains(p);
    // keep only chains with at least one vertex outside sub; boundary is
    // composed with the projection that kills subcomplex simplices
    int top = sc.dim();
    HomologyReport rep;
    if (top < 0) return rep;

    std::vector<std::vector<std::vector<uint32_t>>> rel(top + 1);
    for (int k = 0; k <= top; ++k)
        for (auto& s : sc.simplices[k]) {
            bool inside = true;
            for (uint32_t v : s)
                if (!sub.test(v)) {
                    inside = false;
                    break;
                }
            if (!inside) rel[k].push_back(s);
        }
    while (!rel.empty() && rel.back().empty()) rel.pop_back();
    top = static_cast<int>(rel.size()) - 1;
    if (top < 0) {
        rep.betti = {};
        return rep;
    }

    std::vector<std::map<std::vector<uint32_t>, uint32_t>> index(top + 1);
    for (int k = 0; k <= top; ++k)
        for (uint32_t i = 0; i < rel[k].size(); ++i) index[k].emplace(rel[k][i], i);

    ChainComplex cc;
    cc.dims.assign(top + 1, 0);
    cc.boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k) cc.dims[k] = rel[k].size();
    for (int k = 1; k <= top; ++k) {
        SparseIntMatrix& m = cc.boundary[k];
        m.rows = static_cast<uint32_t>(cc.dims[k - 1]);
        m.cols = static_cast<uint32_t>(cc.dims[k]);
        m.columns.resize(m.cols);
        for (uint32_t i = 0; i < rel[k].size(); ++i) {
            const auto& s = rel[k][i];
            std::vector<uint32_t> face(s.size() - 1);
            long long sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                size_t w = 0;
                for (size_t j = 0; j < s.size(); ++j)
                    if (j != drop) face[w++] = s[j];
                auto it = index[k - 1].find(face);
                if (it != index[k - 1].end()) m.columns[i].emplace_back(it->second, sign);
                sign = -sign;
            }
            std::sort(m.columns[i].begin(), m.columns[i].end());
        }
    }
    return homology_from_chain(cc);
}

HomologyReport check_cw_interval(const Poset& p, uint32_t x) {
    std::vector<uint32_t> below;
    p.down_set(x).for_each([&](uint32_t y) {
        if (y != x) below.push_back(y);
    });
    Poset interval = p.induced(below);
    return homology(interval);
}

bool sphere_homology(const HomologyReport& r, int dim) {
    if (dim < 0) return r.trimmed_betti().empty() && r.torsion.empty();
    if (!r.torsion.empty()) return false;
    std::vector<long long> want(dim + 1, 0);
    want[0] = 1;
    want[dim] += 1;  // dim = 0 gives two points
    return r.trimmed_betti() == want;
}

}  // namespace omfib
