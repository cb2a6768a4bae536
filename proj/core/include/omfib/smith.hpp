#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace omfib {

struct SmithResult {
    std::vector<mpz_class> factors;  // d_1 | d_2 | ... | d_r, all positive
    uint32_t rank = 0;

    std::vector<mpz_class> nontrivial() const {
        std::vector<mpz_class> out;
        for (const auto& d : factors)
            if (d > 1) out.push_back(d);
        return out;
    }
};

// Smith normal form of a dense integer matrix. Pivoting picks the smallest
// nonzero magnitude; all arithmetic is exact.
SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> m);

// Sparse integer matrix, column major. Entries of boundary matrices are
// small; the eliminator promotes to big integers internally.
struct SparseIntMatrix {
    uint32_t rows = 0;
    uint32_t cols = 0;
    std::vector<std::vector<std::pair<uint32_t, long long>>> columns;

    uint64_t nnz() const {
        uint64_t c = 0;
        for (const auto& col : columns) c += col.size();
        return c;
    }
};

// Rank and invariant factors of a sparse matrix: unit pivots are eliminated
// with fill-minimizing selection, the residual goes through the dense SNF.
SmithResult smith_sparse(const SparseIntMatrix& m);

}  // namespace omfib
