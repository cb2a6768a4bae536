#include "omfib/oriented_matroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "omfib/parallel.hpp"

namespace omfib {

namespace {

std::vector<SignVector> sorted_dedup(std::vector<SignVector> cands) {
    std::sort(cands.begin(), cands.end(), SignVector::lex_less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

std::unordered_map<SignVector, uint32_t, SignVectorHash> build_index(
    const std::vector<SignVector>& vs) {
    std::unordered_map<SignVector, uint32_t, SignVectorHash> idx;
    idx.reserve(vs.size() * 2);
    for (uint32_t i = 0; i < vs.size(); ++i) idx.emplace(vs[i], i);
    return idx;
}

// longest chain length (edge count) of the product order on the candidate set
uint32_t chain_rank(const std::vector<SignVector>& vs) {
    uint32_t m = static_cast<uint32_t>(vs.size());
    std::vector<uint32_t> order(m);
    for (uint32_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return vs[a].support_count() < vs[b].support_count();
    });
    std::vector<uint32_t> height(m, 0);
    uint32_t best = 0;
    for (uint32_t ii = 0; ii < m; ++ii) {
        uint32_t i = order[ii];
        for (uint32_t jj = 0; jj < ii; ++jj) {
            uint32_t j = order[jj];
            if (vs[j].support_count() < vs[i].support_count() && vs[j].below(vs[i]))
                height[i] = std::max(height[i], height[j] + 1);
        }
        best = std::max(best, height[i]);
    }
    return best;
}

struct WitnessTriple {
    uint32_t a = UINT32_MAX, b = UINT32_MAX, e = UINT32_MAX;
    bool found() const { return a != UINT32_MAX; }
    bool before(const WitnessTriple& o) const {
        if (!found()) return false;
        if (!o.found()) return true;
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return e < o.e;
    }
};

}  // namespace

ValidationReport validate_axioms(const std::vector<SignVector>& cands) {
    if (cands.empty()) throw std::invalid_argument("empty covector set");
    uint32_t n = cands.front().size();
    for (const auto& v : cands)
        if (v.size() != n) throw std::invalid_argument("covectors of unequal length");

    std::vector<SignVector> vs = sorted_dedup(cands);
    auto index = build_index(vs);
    uint32_t m = static_cast<uint32_t>(vs.size());

    ValidationReport rep;
    rep.n_covectors = m;
    rep.rank = chain_rank(vs);

    // maximal elements of the candidate poset
    for (uint32_t i = 0; i < m; ++i) {
        bool maximal = true;
        for (uint32_t j = 0; j < m && maximal; ++j)
            if (j != i && vs[i].below(vs[j])) maximal = false;
        if (maximal) ++rep.n_topes;
    }

    auto set_violation = [&](const std::string& kind, std::vector<std::string> witness) {
        if (!rep.violation) rep.violation = Violation{kind, std::move(witness)};
    };

    // (1) the zero vector
    SignVector zero(n);
    rep.axioms_ok[0] = index.count(zero) > 0;
    if (!rep.axioms_ok[0]) set_violation("1", {});

    // (2) closure under negation
    {
        WitnessTriple w = parallel_reduce<WitnessTriple>(
            m, WitnessTriple{},
            [&](uint32_t i) {
                WitnessTriple t;
                if (!index.count(vs[i].negated())) t = WitnessTriple{i, 0, 0};
                return t;
            },
            [](WitnessTriple acc, WitnessTriple x) { return x.before(acc) ? x : acc; });
        rep.axioms_ok[1] = !w.found();
        if (w.found()) set_violation("2", {vs[w.a].str()});
    }

    // (3) closure under composition
    {
        WitnessTriple w = parallel_reduce<WitnessTriple>(
            m, WitnessTriple{},
            [&](uint32_t i) {
                WitnessTriple best;
                for (uint32_t j = 0; j < m; ++j) {
                    if (!index.count(vs[i].composed(vs[j]))) {
                        best = WitnessTriple{i, j, 0};
                        break;
                    }
                }
                return best;
            },
            [](WitnessTriple acc, WitnessTriple x) { return x.before(acc) ? x : acc; });
        rep.axioms_ok[2] = !w.found();
        if (w.found()) set_violation("3", {vs[w.a].str(), vs[w.b].str()});
    }

    // (4) elimination: brute force over pairs and separating elements
    {
        WitnessTriple w = parallel_reduce<WitnessTriple>(
            m, WitnessTriple{},
            [&](uint32_t i) {
                for (uint32_t j = 0; j < m; ++j) {
                    SignVector st = vs[i].composed(vs[j]);
                    SignVector ts = vs[j].composed(vs[i]);
                    for (uint32_t e : vs[i].separating_set(vs[j])) {
                        bool ok = false;
                        for (uint32_t k = 0; k < m && !ok; ++k) {
                            const SignVector& eta = vs[k];
                            if (eta.at(e) != Sign::Zero) continue;
                            bool agrees = true;
                            for (uint32_t f = 0; f < n && agrees; ++f) {
                                if (f == e) continue;
                                Sign a = st.at(f), b = ts.at(f);
                                if (a != b) continue;  // f is separating
                                if (eta.at(f) != a) agrees = false;
                            }
                            ok = agrees;
                        }
                        if (!ok) return WitnessTriple{i, j, e};
                    }
                }
                return WitnessTriple{};
            },
            [](WitnessTriple acc, WitnessTriple x) { return x.before(acc) ? x : acc; });
        rep.axioms_ok[3] = !w.found();
        if (w.found()) set_violation("4", {vs[w.a].str(), vs[w.b].str(), std::to_string(w.e)});
    }

    // simplicity: loops and parallel elements
    for (uint32_t e = 0; e < n; ++e) {
        bool loop = true;
        for (const auto& v : vs)
            if (v.at(e) != Sign::Zero) {
                loop = false;
                break;
            }
        if (loop) rep.loops.push_back(e);
    }
    for (uint32_t e = 0; e < n; ++e) {
        if (std::find(rep.loops.begin(), rep.loops.end(), e) != rep.loops.end()) continue;
        for (uint32_t f = e + 1; f < n; ++f) {
            if (std::find(rep.loops.begin(), rep.loops.end(), f) != rep.loops.end()) continue;
            bool parallel = true;
            for (const auto& v : vs)
                if ((v.at(e) == Sign::Zero) != (v.at(f) == Sign::Zero)) {
                    parallel = false;
                    break;
                }
            if (parallel) rep.parallel_pairs.emplace_back(e, f);
        }
    }
    rep.simple = rep.loops.empty() && rep.parallel_pairs.empty();
    if (!rep.loops.empty())
        set_violation("loop", {std::to_string(rep.loops.front())});
    else if (!rep.parallel_pairs.empty())
        set_violation("parallel", {std::to_string(rep.parallel_pairs.front().first),
                                   std::to_string(rep.parallel_pairs.front().second)});

    rep.ok = rep.axioms_ok[0] && rep.axioms_ok[1] && rep.axioms_ok[2] && rep.axioms_ok[3] &&
             rep.simple;
    return rep;
}

OrientedMatroid OrientedMatroid::from_covectors(std::vector<SignVector> cands) {
    ValidationReport rep = validate_axioms(cands);
    if (!rep.ok) {
        std::string msg = "covector set is not a simple oriented matroid";
        if (rep.violation) {
            msg += " (violated: " + rep.violation->kind;
            for (const auto& w : rep.violation->witness) msg += " " + w;
            msg += ")";
        }
        throw std::invalid_argument(msg);
    }

    OrientedMatroid om;
    om.covectors_ = sorted_dedup(std::move(cands));
    om.n_ = om.covectors_.front().size();
    om.rank_ = rep.rank;

    uint32_t m = static_cast<uint32_t>(om.covectors_.size());
    for (uint32_t i = 0; i < m; ++i) {
        if (om.covectors_[i].is_zero()) om.zero_index_ = i;
        if (om.covectors_[i].zero_count() == 0) om.topes_.push_back(i);
    }

    om.poset_ = Poset::from_relation(
        m, [&](uint32_t a, uint32_t b) { return om.covectors_[a].below(om.covectors_[b]); });

    om.topes_above_.assign(m, Bitset(om.tope_count()));
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t t = 0; t < om.tope_count(); ++t)
            if (om.covectors_[i].below(om.tope(t))) om.topes_above_[i].set(t);
    return om;
}

std::optional<uint32_t> OrientedMatroid::index_of(const SignVector& v) const {
    auto it = std::lower_bound(covectors_.begin(), covectors_.end(), v, SignVector::lex_less);
    if (it != covectors_.end() && *it == v)
        return static_cast<uint32_t>(it - covectors_.begin());
    return std::nullopt;
}

std::optional<uint32_t> OrientedMatroid::tope_number(const SignVector& v) const {
    auto idx = index_of(v);
    if (!idx) return std::nullopt;
    auto it = std::lower_bound(topes_.begin(), topes_.end(), *idx);
    if (it != topes_.end() && *it == *idx) return static_cast<uint32_t>(it - topes_.begin());
    return std::nullopt;
}

std::vector<uint32_t> OrientedMatroid::tope_ranks(const SignVector& base) const {
    if (!is_tope(base)) throw std::invalid_argument("base is not a tope");
    std::vector<uint32_t> ranks(tope_count());
    for (uint32_t t = 0; t < tope_count(); ++t) ranks[t] = base.separation(tope(t));
    return ranks;
}

Poset OrientedMatroid::tope_poset(const SignVector& base) const {
    if (!is_tope(base)) throw std::invalid_argument("base is not a tope");
    std::vector<Bitset> seps(tope_count());
    for (uint32_t t = 0; t < tope_count(); ++t) seps[t] = base.separating_bits(tope(t));
    Poset p = Poset::from_relation(tope_count(), [&](uint32_t a, uint32_t b) {
        return seps[a].is_subset_of(seps[b]);
    });
    for (uint32_t t = 0; t < tope_count(); ++t) p.set_label(t, tope(t).str());
    return p;
}

SimplifyResult simplify(const std::vector<SignVector>& cands) {
    if (cands.empty()) throw std::invalid_argument("empty covector set");
    std::vector<SignVector> vs = sorted_dedup(cands);
    uint32_t n = vs.front().size();

    std::vector<bool> is_loop(n, false);
    for (uint32_t e = 0; e < n; ++e) {
        is_loop[e] = true;
        for (const auto& v : vs)
            if (v.at(e) != Sign::Zero) {
                is_loop[e] = false;
                break;
            }
    }

    SimplifyResult out;
    std::vector<int> class_of(n, -1);
    for (uint32_t e = 0; e < n; ++e) {
        if (is_loop[e]) {
            out.dropped_loops.push_back(e);
            continue;
        }
        if (class_of[e] >= 0) continue;
        class_of[e] = static_cast<int>(out.classes.size());
        out.classes.push_back({e});
        out.kept.push_back(e);
        for (uint32_t f = e + 1; f < n; ++f) {
            if (is_loop[f] || class_of[f] >= 0) continue;
            bool parallel = true;
            for (const auto& v : vs)
                if ((v.at(e) == Sign::Zero) != (v.at(f) == Sign::Zero)) {
                    parallel = false;
                    break;
                }
            if (parallel) {
                class_of[f] = class_of[e];
                out.classes[class_of[e]].push_back(f);
            }
        }
    }

    // restriction to the representatives; the lowest-index member carries the
    // orientation of its class
    std::vector<SignVector> restricted;
    restricted.reserve(vs.size());
    for (const auto& v : vs) {
        SignVector r(static_cast<uint32_t>(out.kept.size()));
        for (uint32_t i = 0; i < out.kept.size(); ++i) r.set(i, v.at(out.kept[i]));
        restricted.push_back(std::move(r));
    }
    uint32_t before = static_cast<uint32_t>(restricted.size());
    restricted = sorted_dedup(std::move(restricted));
    if (restricted.size() != before)
        throw std::invalid_argument("covector set collapses under simplification");

    out.om = OrientedMatroid::from_covectors(std::move(restricted));
    return out;
}

}  // namespace omfib
