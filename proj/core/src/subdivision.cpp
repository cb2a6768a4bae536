#include "omfib/subdivision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace omfib {

namespace {

// deterministic total order on bitsets: cardinality, then word image
struct BitsetLess {
    bool operator()(const Bitset& a, const Bitset& b) const {
        if (a.count() != b.count()) return a.count() < b.count();
        return Bitset::lex_less(a, b);
    }
};

// p(a): the minimal cell of L dual whose tope set contains a. Candidates are
// closed under composition, so their composite is the unique maximum in L.
uint32_t minimal_covering_covector(const OrientedMatroid& om, const Bitset& topes) {
    std::optional<SignVector> acc;
    for (uint32_t c = 0; c < om.covector_count(); ++c) {
        if (!topes.is_subset_of(om.topes_above(c))) continue;
        acc = acc ? acc->composed(om.covector(c)) : om.covector(c);
    }
    if (!acc) throw std::logic_error("tope set lies in no covector cell");
    auto idx = om.index_of(*acc);
    if (!idx || !topes.is_subset_of(om.topes_above(*idx)))
        throw std::logic_error("minimal covering covector does not exist");
    for (uint32_t c = 0; c < om.covector_count(); ++c)
        if (topes.is_subset_of(om.topes_above(c)) && !om.covector(c).below(om.covector(*idx)))
            throw std::logic_error("minimal covering covector is not unique");
    return *idx;
}

// rank slices and bands of one covector cell with respect to base ranks
struct SubdividedPieces {
    std::vector<Bitset> slices;  // indexed by rank - min_rank
    uint32_t min_rank = 0;
    uint32_t max_rank = 0;
};

SubdividedPieces subdivide_cell(const OrientedMatroid& om, uint32_t covector,
                                const std::vector<uint32_t>& tope_rank, uint32_t expected_top) {
    const Bitset& above = om.topes_above(covector);
    SubdividedPieces out;
    bool first = true;
    above.for_each([&](uint32_t t) {
        uint32_t r = tope_rank[t];
        if (first) {
            out.min_rank = out.max_rank = r;
            first = false;
        } else {
            out.min_rank = std::min(out.min_rank, r);
            out.max_rank = std::max(out.max_rank, r);
        }
    });
    if (out.max_rank != expected_top)
        throw std::logic_error("top rank of a cell disagrees with sigma o (-B)");
    out.slices.assign(out.max_rank - out.min_rank + 1, Bitset(om.tope_count()));
    above.for_each([&](uint32_t t) { out.slices[tope_rank[t] - out.min_rank].set(t); });
    for (const Bitset& s : out.slices)
        if (s.none()) throw std::logic_error("rank gap inside a covector cell");
    return out;
}

RankCell make_cell(const Bitset& topes, const std::vector<uint32_t>& tope_rank) {
    RankCell cell;
    cell.topes = topes;
    uint32_t lo = UINT32_MAX, hi = 0;
    topes.for_each([&](uint32_t t) {
        lo = std::min(lo, tope_rank[t]);
        hi = std::max(hi, tope_rank[t]);
    });
    cell.k = lo;
    cell.kind = (lo == hi) ? RankCell::Kind::Slice : RankCell::Kind::Band;
    return cell;
}

std::string tope_set_label(const Bitset& topes) {
    std::string s = "{";
    bool first = true;
    topes.for_each([&](uint32_t t) {
        if (!first) s += ",";
        s += "T_" + std::to_string(t);
        first = false;
    });
    return s + "}";
}

std::string kind_label(const RankCell::Kind& kind, uint32_t k) {
    return (kind == RankCell::Kind::Slice ? " slice:" : " band:") + std::to_string(k);
}

}  // namespace

std::optional<uint32_t> DualSubdivision::find(const Bitset& topes) const {
    for (uint32_t i = 0; i < cells.size(); ++i)
        if (cells[i].topes == topes) return i;
    return std::nullopt;
}

DualSubdivision rank_subdivide_dual(const OrientedMatroid& om, const SignVector& base) {
    auto bn = om.tope_number(base);
    if (!bn) throw std::invalid_argument("base is not a tope");

    DualSubdivision sd;
    sd.om = &om;
    sd.base = *bn;

    std::vector<uint32_t> rank = om.tope_ranks(base);
    SignVector neg_base = base.negated();

    std::map<Bitset, RankCell, BitsetLess> cells;
    auto insert = [&](const Bitset& topes) {
        auto it = cells.find(topes);
        if (it == cells.end()) cells.emplace(topes, make_cell(topes, rank));
    };

    for (uint32_t c = 0; c < om.covector_count(); ++c) {
        uint32_t top = rank[*om.tope_number(om.covector(c).composed(neg_base))];
        SubdividedPieces pieces = subdivide_cell(om, c, rank, top);
        for (const Bitset& s : pieces.slices) insert(s);
        for (uint32_t i = 0; i + 1 < pieces.slices.size(); ++i)
            insert(pieces.slices[i] | pieces.slices[i + 1]);
    }

    for (auto& [topes, cell] : cells) sd.cells.push_back(cell);

    sd.poset = Poset::from_relation(static_cast<uint32_t>(sd.cells.size()),
                                    [&](uint32_t a, uint32_t b) {
                                        return sd.cells[a].topes.is_subset_of(sd.cells[b].topes);
                                    });
    sd.carrier.resize(sd.cells.size());
    for (uint32_t i = 0; i < sd.cells.size(); ++i)
        sd.carrier[i] = minimal_covering_covector(om, sd.cells[i].topes);
    sd.dual_covectors = om.covector_poset().dual();

    for (uint32_t i = 0; i < sd.cells.size(); ++i)
        sd.poset.set_label(i, tope_set_label(sd.cells[i].topes) + "@" + base.str() +
                                  kind_label(sd.cells[i].kind, sd.cells[i].k));
    return sd;
}

std::optional<uint32_t> SalvettiSubdivision::find(const Bitset& topes, uint32_t tope) const {
    for (uint32_t i = 0; i < cells.size(); ++i)
        if (cells[i].tope == tope && cells[i].topes == topes) return i;
    return std::nullopt;
}

SalvettiSubdivision rank_subdivide_salvetti(const OrientedMatroid& om, const SalvettiComplex& s) {
    SalvettiSubdivision sd;
    sd.om = &om;
    sd.salvetti = &s;

    // rk_T for every base tope
    std::vector<std::vector<uint32_t>> rank(om.tope_count());
    for (uint32_t t = 0; t < om.tope_count(); ++t) rank[t] = om.tope_ranks(om.tope(t));

    struct Key {
        uint32_t tope;
        Bitset topes;
        bool operator<(const Key& o) const {
            if (topes.count() != o.topes.count()) return topes.count() < o.topes.count();
            if (tope != o.tope) return tope < o.tope;
            return Bitset::lex_less(topes, o.topes);
        }
    };
    std::map<Key, SubdividedSalvettiCell> cells;

    auto insert = [&](const Bitset& topes, uint32_t parent_tope) {
        uint32_t carrier = minimal_covering_covector(om, topes);
        SignVector t = om.covector(carrier).composed(om.tope(parent_tope));
        uint32_t tn = *om.tope_number(t);
        Key key{tn, topes};
        if (cells.count(key)) return;
        SubdividedSalvettiCell cell;
        cell.topes = topes;
        cell.tope = tn;
        cell.carrier = carrier;
        RankCell rc = make_cell(topes, rank[tn]);
        cell.kind = rc.kind;
        cell.k = rc.k;
        cells.emplace(std::move(key), std::move(cell));
    };

    for (const SalvettiCell& cell : s.cells) {
        uint32_t top = s.om->covector(cell.covector).zero_count();
        SubdividedPieces pieces = subdivide_cell(om, cell.covector, rank[cell.tope], top);
        if (pieces.min_rank != 0)
            throw std::logic_error("the base tope of a Salvetti cell must have rank 0");
        for (const Bitset& sl : pieces.slices) insert(sl, cell.tope);
        for (uint32_t i = 0; i + 1 < pieces.slices.size(); ++i)
            insert(pieces.slices[i] | pieces.slices[i + 1], cell.tope);
    }

    for (auto& [key, cell] : cells) sd.cells.push_back(cell);

    sd.poset = Poset::from_relation(
        static_cast<uint32_t>(sd.cells.size()), [&](uint32_t a, uint32_t b) {
            const auto& ca = sd.cells[a];
            const auto& cb = sd.cells[b];
            if (!ca.topes.is_subset_of(cb.topes)) return false;
            return om.covector(ca.carrier).composed(om.tope(cb.tope)) == om.tope(ca.tope);
        });

    sd.p_tilde.resize(sd.cells.size());
    for (uint32_t i = 0; i < sd.cells.size(); ++i) {
        auto idx = s.cell_index(sd.cells[i].carrier, sd.cells[i].tope);
        if (!idx) throw std::logic_error("carrier pair is not a Salvetti cell");
        sd.p_tilde[i] = *idx;
    }
    if (!sd.p_map().order_preserving())
        throw std::logic_error("the projection to the Salvetti complex is not order preserving");

    for (uint32_t i = 0; i < sd.cells.size(); ++i)
        sd.poset.set_label(i, tope_set_label(sd.cells[i].topes) + "@" +
                                  om.tope(sd.cells[i].tope).str() +
                                  kind_label(sd.cells[i].kind, sd.cells[i].k));
    return sd;
}

SubdivisionReport verify_subdivision(const OrientedMatroid& om, const SignVector& base) {
    DualSubdivision sd = rank_subdivide_dual(om, base);
    SubdivisionReport rep;

    rep.total = homology(sd.poset);
    rep.ball_homology = rep.total.acyclic();

    rep.intervals_sphere = true;
    for (uint32_t i = 0; i < sd.cells.size(); ++i) {
        HomologyReport h = check_cw_interval(sd.poset, i);
        if (!sphere_homology(h, sd.poset.heights()[i] - 1)) {
            rep.intervals_sphere = false;
            rep.bad_intervals.push_back(i);
        }
    }

    rep.p_order_preserving = sd.p_map().order_preserving();
    std::vector<bool> hit(om.covector_count(), false);
    for (uint32_t c : sd.carrier) hit[c] = true;
    rep.p_surjective = std::find(hit.begin(), hit.end(), false) == hit.end();

    // slices of each covector partition its topes, and the cells carried by
    // sigma cover exactly T(sigma)
    rep.tope_partition = true;
    std::vector<uint32_t> rank = om.tope_ranks(base);
    for (uint32_t c = 0; c < om.covector_count() && rep.tope_partition; ++c) {
        const Bitset& above = om.topes_above(c);
        Bitset seen(om.tope_count());
        uint32_t total = 0;
        uint32_t top = rank[*om.tope_number(om.covector(c).composed(base.negated()))];
        SubdividedPieces pieces = subdivide_cell(om, c, rank, top);
        for (const Bitset& s : pieces.slices) {
            if (!sd.find(s)) rep.tope_partition = false;
            if (seen.intersects(s)) rep.tope_partition = false;
            seen |= s;
            total += s.count();
        }
        if (!(seen == above) || total != above.count()) rep.tope_partition = false;

        Bitset carried(om.tope_count());
        for (uint32_t i = 0; i < sd.cells.size(); ++i)
            if (sd.carrier[i] == c) carried |= sd.cells[i].topes;
        if (!(carried == above)) rep.tope_partition = false;
    }
    return rep;
}

}  // namespace omfib
