#include "omfib/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace omfib {

Sign sign_of(const Rational& q) {
    int s = sgn(q);
    if (s > 0) return Sign::Plus;
    if (s < 0) return Sign::Minus;
    return Sign::Zero;
}

uint32_t matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    uint32_t rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// kernel basis of a rows x dim rational matrix
std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m, uint32_t dim) {
    size_t rows = m.size();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < dim && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[row], m[p]);
        Rational inv = m[row][col];
        for (size_t j = 0; j < dim; ++j) m[row][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = 0; j < dim; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(dim, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(dim, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

SignVector sign_pattern(const Arrangement& arr, const std::vector<Rational>& point) {
    SignVector v(static_cast<uint32_t>(arr.normals.size()));
    for (uint32_t e = 0; e < arr.normals.size(); ++e) v.set(e, sign_of(dot(arr.normals[e], point)));
    return v;
}

// subsets of {0..n-1} of size k in lexicographic order
void for_each_subset(uint32_t n, uint32_t k, const std::function<void(const std::vector<uint32_t>&)>& f) {
    if (k > n) return;
    std::vector<uint32_t> idx(k);
    for (uint32_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

RealizedOM from_arrangement(const Arrangement& arr) {
    uint32_t n = static_cast<uint32_t>(arr.normals.size());
    uint32_t dim = arr.dim;
    if (n == 0) throw std::invalid_argument("arrangement has no hyperplanes");
    for (uint32_t e = 0; e < n; ++e) {
        if (arr.normals[e].size() != dim) throw std::invalid_argument("normal of wrong dimension");
        bool zero = true;
        for (const auto& q : arr.normals[e])
            if (q != 0) zero = false;
        if (zero) throw std::invalid_argument("zero normal at hyperplane " + std::to_string(e));
    }
    for (uint32_t e = 0; e < n; ++e)
        for (uint32_t f = e + 1; f < n; ++f)
            if (matrix_rank({arr.normals[e], arr.normals[f]}) <= 1)
                throw std::invalid_argument("parallel hyperplanes " + std::to_string(e) + " and " +
                                            std::to_string(f));

    std::vector<std::vector<Rational>> all(arr.normals.begin(), arr.normals.end());
    uint32_t d = matrix_rank(all);  // rank of the oriented matroid

    struct Entry {
        SignVector v;
        std::vector<Rational> witness;
    };
    std::unordered_map<SignVector, uint32_t, SignVectorHash> seen;
    std::vector<Entry> found;
    auto add = [&](SignVector v, std::vector<Rational> w) {
        if (seen.emplace(v, static_cast<uint32_t>(found.size())).second)
            found.push_back(Entry{std::move(v), std::move(w)});
    };

    add(SignVector(n), std::vector<Rational>(dim, 0));

    // cocircuits: each corank-one flat spans a line; read off the sign pair
    std::vector<uint32_t> cocircuits;
    if (d >= 1) {
        for_each_subset(n, d - 1, [&](const std::vector<uint32_t>& subset) {
            std::vector<std::vector<Rational>> rows;
            for (uint32_t e : subset) rows.push_back(arr.normals[e]);
            if (matrix_rank(rows) != d - 1) return;
            auto basis = kernel_basis(rows, dim);
            // pick a kernel vector outside the common kernel of all normals
            for (auto& v : basis) {
                SignVector s = sign_pattern(arr, v);
                if (s.is_zero()) continue;
                if (!seen.count(s)) {
                    add(s, v);
                    std::vector<Rational> neg(v.size());
                    for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
                    add(s.negated(), std::move(neg));
                }
                break;
            }
        });
        for (uint32_t i = 1; i < found.size(); ++i) cocircuits.push_back(i);
    }

    // composition closure with exact perturbation witnesses:
    // w(sigma o c) = w(sigma) + t w(c) with t below every sign flip of w(sigma)
    for (uint32_t i = 0; i < found.size(); ++i) {
        for (uint32_t ci : cocircuits) {
            SignVector comp = found[i].v.composed(found[ci].v);
            if (seen.count(comp)) continue;
            const auto& wa = found[i].witness;
            const auto& wb = found[ci].witness;
            Rational t = 1;
            for (uint32_t e = 0; e < n; ++e) {
                Rational a = dot(arr.normals[e], wa);
                Rational b = dot(arr.normals[e], wb);
                if (a != 0 && b != 0) {
                    Rational bound = abs(a) / (2 * abs(b));
                    if (bound < t) t = bound;
                }
            }
            std::vector<Rational> w(wa.size());
            for (size_t j = 0; j < w.size(); ++j) w[j] = wa[j] + t * wb[j];
            SignVector audit = sign_pattern(arr, w);
            if (audit != comp) throw std::logic_error("witness audit failed during closure");
            add(std::move(comp), std::move(w));
        }
    }

    std::vector<SignVector> covectors;
    covectors.reserve(found.size());
    for (const auto& e : found) covectors.push_back(e.v);

    RealizedOM out;
    out.om = OrientedMatroid::from_covectors(covectors);
    if (out.om.rank() != d) throw std::logic_error("chain rank disagrees with matrix rank");

    out.witnesses.resize(out.om.covector_count());
    for (auto& e : found) {
        auto idx = out.om.index_of(e.v);
        out.witnesses[*idx] = std::move(e.witness);
    }
    return out;
}

}  // namespace omfib
