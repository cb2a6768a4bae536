#include "omfib/fibration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "omfib/parallel.hpp"

namespace omfib {

Poset circle_poset() {
    // PP = 0, MM = 1, ZP = 2, ZM = 3
    Poset p = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    p.set_label(0, "(+,+)");
    p.set_label(1, "(-,-)");
    p.set_label(2, "(0,+)");
    p.set_label(3, "(0,-)");
    return p;
}

std::string circle_cell_name(CircleCell c) {
    switch (c) {
        case CircleCell::PP: return "(+,+)";
        case CircleCell::MM: return "(-,-)";
        case CircleCell::ZP: return "(0,+)";
        default: return "(0,-)";
    }
}

Sign tope_sign(const SignVector& tope) {
    uint32_t minus = 0;
    for (uint32_t e = 0; e < tope.size(); ++e) {
        Sign s = tope.at(e);
        if (s == Sign::Zero) throw std::invalid_argument("tope sign of a vector with zero entries");
        if (s == Sign::Minus) ++minus;
    }
    return (minus % 2 == 0) ? Sign::Plus : Sign::Minus;
}

namespace {

bool is_plus(Sign s) { return s == Sign::Plus; }

Sign sign_of_circle(CircleCell c) {
    return (c == CircleCell::PP || c == CircleCell::ZP) ? Sign::Plus : Sign::Minus;
}

bool is_vertex(CircleCell c) { return c == CircleCell::PP || c == CircleCell::MM; }

}  // namespace

FibrationMap fibration(const SalvettiSubdivision& sd) {
    const OrientedMatroid& om = *sd.om;
    FibrationMap f;
    f.sd = &sd;
    f.circle = circle_poset();
    f.q_of_tope.resize(om.tope_count());
    for (uint32_t t = 0; t < om.tope_count(); ++t) f.q_of_tope[t] = tope_sign(om.tope(t));

    f.value.resize(sd.cells.size());
    std::vector<std::vector<uint32_t>> ranks(om.tope_count());
    for (uint32_t t = 0; t < om.tope_count(); ++t) ranks[t] = om.tope_ranks(om.tope(t));

    std::vector<uint8_t> bad(sd.cells.size(), 0);
    parallel_for(static_cast<uint32_t>(sd.cells.size()), [&](uint32_t i) {
        const SubdividedSalvettiCell& cell = sd.cells[i];
        // Q on the rank-k slice of the cell (for a slice, the cell itself)
        Sign q = Sign::Zero;
        bool constant = true;
        cell.topes.for_each([&](uint32_t t) {
            if (ranks[cell.tope][t] != cell.k) return;
            if (q == Sign::Zero)
                q = f.q_of_tope[t];
            else if (q != f.q_of_tope[t])
                constant = false;
        });
        if (!constant || q == Sign::Zero) {
            bad[i] = 1;
            return;
        }
        if (cell.kind == RankCell::Kind::Slice)
            f.value[i] = static_cast<uint32_t>(is_plus(q) ? CircleCell::PP : CircleCell::MM);
        else
            f.value[i] = static_cast<uint32_t>(is_plus(q) ? CircleCell::ZP : CircleCell::ZM);
    });
    if (std::find(bad.begin(), bad.end(), 1) != bad.end())
        throw std::logic_error("Q is not constant on a rank slice");

    if (!f.map().order_preserving())
        throw std::logic_error("the fibration map is not order preserving");
    return f;
}

Subposet milnor_fiber(const FibrationMap& f) {
    Subposet fiber = poset_fiber(f.map(), static_cast<uint32_t>(CircleCell::PP));
    // (Q down (+,+)) must be a closed subcomplex of rk sd S
    const Poset& big = f.sd->poset;
    Bitset in_fiber(big.size());
    for (uint32_t x : fiber.elements) in_fiber.set(x);
    for (uint32_t x : fiber.elements)
        for (uint32_t y : big.lower_covers(x))
            if (!in_fiber.test(y)) throw std::logic_error("the Milnor fiber is not an order ideal");
    return fiber;
}

QuasiFibrationReport check_quasi_fibration(const FibrationMap& f) {
    QuasiFibrationReport rep;
    Subposet fibers[4];
    for (uint32_t c = 0; c < 4; ++c) {
        fibers[c] = poset_fiber(f.map(), c);
        rep.fiber[c] = homology(fibers[c].poset);
    }
    rep.betti_equal = rep.fiber[0] == rep.fiber[1] && rep.fiber[0] == rep.fiber[2] &&
                      rep.fiber[0] == rep.fiber[3];

    // vanishing relative homology certifies an isomorphism in every degree
    uint32_t pair_index = 0;
    for (uint32_t v = 0; v < 2; ++v) {
        for (uint32_t e = 2; e < 4; ++e, ++pair_index) {
            const Subposet& small = fibers[v];
            const Subposet& big = fibers[e];
            Bitset small_global(f.sd->poset.size());
            for (uint32_t x : small.elements) small_global.set(x);
            Bitset sub(big.poset.size());
            for (uint32_t i = 0; i < big.elements.size(); ++i)
                if (small_global.test(big.elements[i])) sub.set(i);
            rep.inclusion_iso[pair_index] = relative_homology(big.poset, sub).vanishes();
        }
    }
    return rep;
}

std::vector<uint32_t> closed_form_critical_cells(const FibrationMap& f, CircleCell a,
                                                 CircleCell b) {
    if (!is_vertex(a) || is_vertex(b))
        throw std::invalid_argument("need a vertex a covered by an edge b");
    const SalvettiSubdivision& sd = *f.sd;
    const OrientedMatroid& om = *sd.om;
    Sign sa = sign_of_circle(a);
    Sign sb = sign_of_circle(b);

    std::vector<uint32_t> crit;
    // the fiber over a
    for (uint32_t i = 0; i < sd.cells.size(); ++i)
        if (f.value[i] == static_cast<uint32_t>(a)) crit.push_back(i);
    // vertices on the other side
    for (uint32_t i = 0; i < sd.cells.size(); ++i) {
        const auto& cell = sd.cells[i];
        if (cell.kind == RankCell::Kind::Slice && cell.topes.count() == 1 &&
            f.q_of_tope[cell.tope] == opposite(sa))
            crit.push_back(i);
    }
    // extreme bands of Salvetti cells of dimension >= 1
    const SalvettiComplex& s = *sd.salvetti;
    std::vector<std::vector<uint32_t>> ranks(om.tope_count());
    for (uint32_t t = 0; t < om.tope_count(); ++t) ranks[t] = om.tope_ranks(om.tope(t));
    for (const SalvettiCell& cell : s.cells) {
        const SignVector& tau = om.covector(cell.covector);
        uint32_t r = tau.zero_count();
        if (r == 0) continue;  // vertices of the Salvetti complex
        const SignVector& R = om.tope(cell.tope);
        bool take;
        if (sa == sb) {
            Sign q_far = f.q_of_tope[*om.tope_number(tau.composed(R.negated()))];
            take = q_far == opposite(sa);
        } else {
            take = f.q_of_tope[cell.tope] == sb;
        }
        if (!take) continue;
        uint32_t lo = (sa == sb) ? r - 1 : 0;
        Bitset band(om.tope_count());
        om.topes_above(cell.covector).for_each([&](uint32_t t) {
            uint32_t rk = ranks[cell.tope][t];
            if (rk == lo || rk == lo + 1) band.set(t);
        });
        auto idx = sd.find(band, cell.tope);
        if (!idx) throw std::logic_error("extreme band is missing from the subdivision");
        crit.push_back(*idx);
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    return crit;
}

ProofMatchingResult proof_matching(const FibrationMap& f, CircleCell a, CircleCell b) {
    if (!is_vertex(a) || is_vertex(b))
        throw std::invalid_argument("need a vertex a covered by an edge b");
    const SalvettiSubdivision& sd = *f.sd;
    Sign sa = sign_of_circle(a);

    ProofMatchingResult res;
    res.fiber_b = poset_fiber(f.map(), static_cast<uint32_t>(b));
    const std::vector<uint32_t>& elems = res.fiber_b.elements;

    // the projection restricted to the fiber
    std::vector<uint32_t> proj(elems.size());
    for (uint32_t i = 0; i < elems.size(); ++i) proj[i] = sd.p_tilde[elems[i]];
    PosetMap restricted{&res.fiber_b.poset, &sd.salvetti->poset, proj};

    // group the fiber by Salvetti cell
    std::map<uint32_t, std::vector<uint32_t>> groups;
    for (uint32_t i = 0; i < elems.size(); ++i) groups[proj[i]].push_back(i);

    res.matching = patchwork(restricted, [&](uint32_t q) {
        Matching m;
        auto it = groups.find(q);
        if (it == groups.end()) return m;
        const std::vector<uint32_t>& members = it->second;
        // slices by rank, for partner lookup
        std::map<uint32_t, uint32_t> slice_at;
        for (uint32_t local : members) {
            const auto& cell = sd.cells[elems[local]];
            if (cell.kind == RankCell::Kind::Slice) slice_at[cell.k] = local;
        }
        for (uint32_t local : members) {
            const auto& cell = sd.cells[elems[local]];
            if (cell.kind != RankCell::Kind::Band) continue;
            // the matchable neighbor is the slice outside (Q down a)
            for (uint32_t j : {cell.k, cell.k + 1}) {
                auto sit = slice_at.find(j);
                if (sit == slice_at.end()) continue;
                uint32_t sv = f.value[elems[sit->second]];
                if (sign_of_circle(static_cast<CircleCell>(sv)) == opposite(sa)) {
                    m.pairs.emplace_back(sit->second, local);
                    break;
                }
            }
        }
        return m;
    });

    res.applied = apply_matching(res.fiber_b.poset, res.matching);
    if (!res.applied.acyclic) throw std::logic_error("the fiberwise matching is not acyclic");

    for (uint32_t local : res.applied.critical) res.critical_global.push_back(elems[local]);
    std::sort(res.critical_global.begin(), res.critical_global.end());

    res.matches_closed_form = res.critical_global == closed_form_critical_cells(f, a, b);

    if (res.applied.critical_poset) {
        HomologyReport crit_h = homology(res.applied.critical_poset->poset);
        HomologyReport fiber_h = homology(res.fiber_b.poset);
        res.morse_homology_agrees = crit_h == fiber_h;
    }
    return res;
}

}  // namespace omfib
