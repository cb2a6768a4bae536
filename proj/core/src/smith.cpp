#include "omfib/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace omfib {

namespace {

// index of the entry with smallest nonzero magnitude in m[t:][t:], row-major tie break
bool find_pivot(const std::vector<std::vector<mpz_class>>& m, size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    mpz_class best;
    for (size_t i = t; i < m.size(); ++i) {
        for (size_t j = t; j < m[i].size(); ++j) {
            if (m[i][j] == 0) continue;
            mpz_class a = abs(m[i][j]);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> m) {
    SmithResult res;
    if (m.empty() || m[0].empty()) return res;
    size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    size_t t = 0;
    while (t < rows && t < cols) {
        size_t pi, pj;
        if (!find_pivot(m, t, pi, pj)) break;
        std::swap(m[t], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool stable = false;
        while (!stable) {
            stable = true;
            // shrink column entries against the pivot; a nonzero remainder
            // becomes the new (strictly smaller) pivot
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q = m[i][t] / m[t][t];
                if (q != 0)
                    for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                if (q != 0)
                    for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            // divisibility condition on the remaining block
            for (size_t i = t + 1; i < rows && stable; ++i) {
                for (size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        stable = false;
                        break;
                    }
                }
            }
        }
        res.factors.push_back(abs(m[t][t]));
        ++t;
    }
    res.rank = static_cast<uint32_t>(res.factors.size());
    return res;
}

namespace {

// Sparse eliminator. Unit pivots (|v| = 1) are removed with a Schur update;
// a coreduction pass (zero-fill pivots) runs to exhaustion before any
// fill-producing pivot is chosen. The surviving block, which has no unit
// entries, is handed to the dense routine.
class SparseElim {
public:
    explicit SparseElim(const SparseIntMatrix& m) : rows_(m.rows), cols_(m.cols) {
        col_.resize(cols_);
        row_cols_.resize(rows_);
        for (uint32_t c = 0; c < cols_; ++c) {
            for (auto [r, v] : m.columns[c]) {
                if (v == 0) continue;
                col_[c][r] = mpz_class(static_cast<long>(v));
                row_cols_[r].insert(c);
            }
        }
        row_alive_.assign(rows_, true);
        col_alive_.assign(cols_, true);
    }

    SmithResult run() {
        uint64_t unit_rank = 0;
        for (;;) {
            unit_rank += coreduction_pass();
            uint32_t pr, pc;
            if (!find_min_fill_unit(pr, pc)) break;
            eliminate(pr, pc);
            ++unit_rank;
        }
        SmithResult dense = smith_normal_form(densify());
        SmithResult res;
        res.rank = static_cast<uint32_t>(unit_rank) + dense.rank;
        res.factors.assign(unit_rank, mpz_class(1));
        res.factors.insert(res.factors.end(), dense.factors.begin(), dense.factors.end());
        return res;
    }

private:
    uint64_t coreduction_pass() {
        uint64_t eliminated = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (uint32_t c = 0; c < cols_; ++c) {
                if (!col_alive_[c]) continue;
                // column singleton with unit value
                if (col_[c].size() == 1) {
                    auto [r, v] = *col_[c].begin();
                    if (v == 1 || v == -1) {
                        eliminate(r, c);
                        ++eliminated;
                        progress = true;
                        continue;
                    }
                }
                // unit entry in a singleton row
                for (auto& [r, v] : col_[c]) {
                    if (row_cols_[r].size() == 1 && (v == 1 || v == -1)) {
                        eliminate(r, c);
                        ++eliminated;
                        progress = true;
                        break;
                    }
                }
            }
        }
        return eliminated;
    }

    bool find_min_fill_unit(uint32_t& pr, uint32_t& pc) {
        bool found = false;
        uint64_t best_cost = 0;
        for (uint32_t c = 0; c < cols_; ++c) {
            if (!col_alive_[c]) continue;
            for (auto& [r, v] : col_[c]) {
                if (v != 1 && v != -1) continue;
                uint64_t cost = uint64_t(col_[c].size() - 1) * uint64_t(row_cols_[r].size() - 1);
                if (!found || cost < best_cost) {
                    found = true;
                    best_cost = cost;
                    pr = r;
                    pc = c;
                }
            }
        }
        return found;
    }

    // Schur update for unit pivot (pr, pc): every other column with an entry
    // in row pr gets the pivot column folded in, then row pr and column pc
    // are retired.
    void eliminate(uint32_t pr, uint32_t pc) {
        mpz_class p = col_[pc].at(pr);
        std::vector<uint32_t> touched(row_cols_[pr].begin(), row_cols_[pr].end());
        for (uint32_t c : touched) {
            if (c == pc) continue;
            mpz_class a = col_[c].at(pr);
            mpz_class factor = a / p;  // exact: p is a unit
            for (auto& [r, v] : col_[pc]) {
                if (r == pr) continue;
                auto it = col_[c].find(r);
                if (it == col_[c].end()) {
                    mpz_class nv = -factor * v;
                    if (nv != 0) {
                        col_[c][r] = nv;
                        row_cols_[r].insert(c);
                    }
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        col_[c].erase(it);
                        row_cols_[r].erase(c);
                    }
                }
            }
            col_[c].erase(pr);
            row_cols_[pr].erase(c);
        }
        for (auto& [r, v] : col_[pc]) row_cols_[r].erase(pc);
        col_[pc].clear();
        row_cols_[pr].clear();
        row_alive_[pr] = false;
        col_alive_[pc] = false;
    }

    std::vector<std::vector<mpz_class>> densify() const {
        std::vector<uint32_t> rmap(rows_, UINT32_MAX), live_r, live_c;
        for (uint32_t r = 0; r < rows_; ++r)
            if (row_alive_[r] && !row_cols_[r].empty()) {
                rmap[r] = static_cast<uint32_t>(live_r.size());
                live_r.push_back(r);
            }
        for (uint32_t c = 0; c < cols_; ++c)
            if (col_alive_[c] && !col_[c].empty()) live_c.push_back(c);
        std::vector<std::vector<mpz_class>> m(live_r.size(), std::vector<mpz_class>(live_c.size(), 0));
        for (uint32_t j = 0; j < live_c.size(); ++j)
            for (auto& [r, v] : col_[live_c[j]]) m[rmap[r]][j] = v;
        return m;
    }

    uint32_t rows_, cols_;
    std::vector<std::map<uint32_t, mpz_class>> col_;
    std::vector<std::set<uint32_t>> row_cols_;
    std::vector<bool> row_alive_, col_alive_;
};

}  // namespace

SmithResult smith_sparse(const SparseIntMatrix& m) {
    SparseElim elim(m);
    return elim.run();
}

}  // namespace omfib
