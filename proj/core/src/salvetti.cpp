#include "omfib/salvetti.hpp"

#include <algorithm>
#include <stdexcept>

namespace omfib {

std::optional<uint32_t> SalvettiComplex::cell_index(uint32_t covector, uint32_t tope) const {
    SalvettiCell key{covector, tope};
    auto it = std::lower_bound(cells.begin(), cells.end(), key);
    if (it != cells.end() && *it == key) return static_cast<uint32_t>(it - cells.begin());
    return std::nullopt;
}

uint32_t SalvettiComplex::vertex_of_tope(uint32_t tope) const {
    return *cell_index(om->tope_indices()[tope], tope);
}

SalvettiComplex salvetti_poset(const OrientedMatroid& om) {
    SalvettiComplex s;
    s.om = &om;

    for (uint32_t c = 0; c < om.covector_count(); ++c)
        om.topes_above(c).for_each([&](uint32_t t) { s.cells.push_back(SalvettiCell{c, t}); });
    std::sort(s.cells.begin(), s.cells.end());

    uint32_t rank = om.rank();
    const auto& heights = om.covector_poset().heights();
    s.dim.resize(s.cells.size());
    for (uint32_t i = 0; i < s.cells.size(); ++i)
        s.dim[i] = rank - static_cast<uint32_t>(heights[s.cells[i].covector]);

    // covers join corank-adjacent cells: (sigma, sigma o R) is covered by
    // (tau, R) exactly when tau is covered by sigma in L
    std::vector<std::pair<uint32_t, uint32_t>> covers;
    const Poset& L = om.covector_poset();
    for (uint32_t i = 0; i < s.cells.size(); ++i) {
        auto [tau, r] = s.cells[i];
        const SignVector& tope_r = om.tope(r);
        for (uint32_t sigma : L.upper_covers(tau)) {
            SignVector t = om.covector(sigma).composed(tope_r);
            uint32_t tn = *om.tope_number(t);
            covers.emplace_back(*s.cell_index(sigma, tn), i);
        }
    }
    s.poset = Poset::from_covers(static_cast<uint32_t>(s.cells.size()), std::move(covers));

    for (uint32_t i = 0; i < s.cells.size(); ++i) {
        auto [c, t] = s.cells[i];
        s.poset.set_label(i, "(" + om.covector(c).str() + "," + om.tope(t).str() + ")");
    }
    return s;
}

MaximalCellIdealIso maximal_cell_ideal_iso(const OrientedMatroid& om, const SalvettiComplex& s,
                                           const SignVector& tope) {
    auto tn = om.tope_number(tope);
    if (!tn) throw std::invalid_argument("base is not a tope");

    MaximalCellIdealIso iso;
    iso.dual_covectors = om.covector_poset().dual();

    uint32_t top_cell = *s.cell_index(om.zero_index(), *tn);
    iso.ideal.elements = s.poset.principal_ideal(top_cell);
    iso.ideal.poset = s.poset.induced(iso.ideal.elements);

    if (iso.ideal.elements.size() != om.covector_count())
        throw std::logic_error("ideal of a maximal Salvetti cell has the wrong size");

    // forward: sigma -> (sigma, sigma o T)
    iso.forward.resize(om.covector_count());
    std::vector<uint32_t> position(s.cells.size(), UINT32_MAX);
    for (uint32_t i = 0; i < iso.ideal.elements.size(); ++i) position[iso.ideal.elements[i]] = i;
    for (uint32_t c = 0; c < om.covector_count(); ++c) {
        SignVector t = om.covector(c).composed(tope);
        uint32_t cell = *s.cell_index(c, *om.tope_number(t));
        if (position[cell] == UINT32_MAX)
            throw std::logic_error("image of the ideal map is not inside the ideal");
        iso.forward[c] = position[cell];
    }

    // bijection: the inverse is (sigma, R) -> sigma
    std::vector<bool> hit(iso.ideal.elements.size(), false);
    for (uint32_t c = 0; c < om.covector_count(); ++c) {
        if (hit[iso.forward[c]]) throw std::logic_error("ideal map is not injective");
        hit[iso.forward[c]] = true;
        if (s.cells[iso.ideal.elements[iso.forward[c]]].covector != c)
            throw std::logic_error("ideal map does not invert the projection");
    }

    // order preservation, both ways, on covers
    PosetMap fwd{&iso.dual_covectors, &iso.ideal.poset, iso.forward};
    if (!fwd.order_preserving())
        throw std::logic_error("sigma -> (sigma, sigma o T) is not order preserving");
    std::vector<uint32_t> back(iso.ideal.elements.size());
    for (uint32_t i = 0; i < iso.ideal.elements.size(); ++i)
        back[i] = s.cells[iso.ideal.elements[i]].covector;
    PosetMap rev{&iso.ideal.poset, &iso.dual_covectors, back};
    if (!rev.order_preserving())
        throw std::logic_error("(sigma, R) -> sigma is not order preserving");

    return iso;
}

}  // namespace omfib
