// Copyright 2026 The qra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations for tests. Nothing here calls the
// library's kernels.

#ifndef QRA_TESTS_ORACLES_H
#define QRA_TESTS_ORACLES_H

#include <vector>

#include "qra/tensor.h"

namespace qra::oracle {

/// Mixed-radix digits of `index`, slot 0 most significant.
inline std::vector<size_t> digits(size_t index, const std::vector<size_t> &dims) {
    std::vector<size_t> d(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
        d[k] = index % dims[k];
        index /= dims[k];
    }
    return d;
}

inline size_t undigits(const std::vector<size_t> &d, const std::vector<size_t> &dims) {
    size_t index = 0;
    for (size_t k = 0; k < dims.size(); k++) {
        index = index * dims[k] + d[k];
    }
    return index;
}

/// The global matrix of (u on `slots`) (x) identity, entry by entry.
inline ComplexOperator global_operator(
    const ComplexOperator &u, const std::vector<size_t> &dims, const std::vector<size_t> &slots) {
    size_t total = 1;
    for (size_t d : dims) {
        total *= d;
    }
    ComplexOperator g(total, total);
    for (size_t r = 0; r < total; r++) {
        auto dr = digits(r, dims);
        for (size_t c = 0; c < total; c++) {
            auto dc = digits(c, dims);
            bool rest_equal = true;
            for (size_t k = 0; k < dims.size(); k++) {
                bool selected = false;
                for (size_t s : slots) {
                    selected |= s == k;
                }
                if (!selected && dr[k] != dc[k]) {
                    rest_equal = false;
                }
            }
            if (!rest_equal) {
                continue;
            }
            size_t lr = 0;
            size_t lc = 0;
            for (size_t s : slots) {
                lr = lr * dims[s] + dr[s];
                lc = lc * dims[s] + dc[s];
            }
            g.at(r, c) = u(lr, lc);
        }
    }
    return g;
}

/// Tr over the complement of `keep` (ascending), by direct summation.
inline ComplexOperator partial_trace(
    const ComplexOperator &rho, const std::vector<size_t> &dims, const std::vector<size_t> &keep) {
    size_t kdim = 1;
    for (size_t s : keep) {
        kdim *= dims[s];
    }
    ComplexOperator out(kdim, kdim);
    size_t total = rho.rows();
    for (size_t r = 0; r < total; r++) {
        auto dr = digits(r, dims);
        for (size_t c = 0; c < total; c++) {
            auto dc = digits(c, dims);
            bool traced_equal = true;
            for (size_t k = 0; k < dims.size(); k++) {
                bool kept = false;
                for (size_t s : keep) {
                    kept |= s == k;
                }
                if (!kept && dr[k] != dc[k]) {
                    traced_equal = false;
                }
            }
            if (!traced_equal) {
                continue;
            }
            size_t lr = 0;
            size_t lc = 0;
            for (size_t s : keep) {
                lr = lr * dims[s] + dr[s];
                lc = lc * dims[s] + dc[s];
            }
            out.at(lr, lc) += rho(r, c);
        }
    }
    return out;
}

inline ComplexOperator outer(const ComplexVector &a, const ComplexVector &b) {
    ComplexOperator m(a.dim(), b.dim());
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < b.dim(); c++) {
            m.at(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

}  // namespace qra::oracle

#endif
