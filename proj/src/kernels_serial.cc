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

#include <algorithm>

#include "qra/errors.h"
#include "qra/kernels.h"

using namespace qra;
using namespace qra::kernels;

LocalIndexing kernels::index_slots(const SlotLayout &layout, std::span<const size_t> slots) {
    std::vector<bool> selected(layout.num_slots(), false);
    for (size_t s : slots) {
        if (s >= layout.num_slots()) {
            throw DimensionError(
                "slot index " + std::to_string(s) + " out of range for " + std::to_string(layout.num_slots()) +
                " slots");
        }
        if (selected[s]) {
            throw DimensionError("slot index " + std::to_string(s) + " listed twice");
        }
        selected[s] = true;
    }

    LocalIndexing ix;
    ix.local.assign(1, 0);
    for (size_t s : slots) {
        std::vector<size_t> next;
        next.reserve(ix.local.size() * layout.dim(s));
        for (size_t base : ix.local) {
            for (size_t d = 0; d < layout.dim(s); d++) {
                next.push_back(base + d * layout.stride(s));
            }
        }
        ix.local = std::move(next);
    }

    ix.outer.assign(1, 0);
    for (size_t s = 0; s < layout.num_slots(); s++) {
        if (selected[s]) {
            continue;
        }
        std::vector<size_t> next;
        next.reserve(ix.outer.size() * layout.dim(s));
        for (size_t base : ix.outer) {
            for (size_t d = 0; d < layout.dim(s); d++) {
                next.push_back(base + d * layout.stride(s));
            }
        }
        ix.outer = std::move(next);
    }
    return ix;
}

void serial::apply_dense(std::span<const cplx> u, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out) {
    size_t d = ix.local.size();
    std::vector<cplx> buf(d);
    for (size_t base : ix.outer) {
        for (size_t c = 0; c < d; c++) {
            buf[c] = in[base + ix.local[c]];
        }
        for (size_t r = 0; r < d; r++) {
            cplx acc = 0;
            const cplx *row = u.data() + r * d;
            for (size_t c = 0; c < d; c++) {
                acc += row[c] * buf[c];
            }
            out[base + ix.local[r]] = acc;
        }
    }
}

void serial::apply_permutation(
    std::span<const size_t> images, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out) {
    size_t d = ix.local.size();
    for (size_t base : ix.outer) {
        for (size_t c = 0; c < d; c++) {
            out[base + ix.local[images[c]]] = in[base + ix.local[c]];
        }
    }
}

void serial::reduce_pure(std::span<const cplx> psi, const LocalIndexing &ix, std::span<cplx> out) {
    size_t k = ix.local.size();
    std::fill(out.begin(), out.end(), cplx{0});
    for (size_t base : ix.outer) {
        for (size_t a = 0; a < k; a++) {
            cplx va = psi[base + ix.local[a]];
            if (va == cplx{0}) {
                continue;
            }
            for (size_t b = 0; b < k; b++) {
                out[a * k + b] += va * std::conj(psi[base + ix.local[b]]);
            }
        }
    }
}

void serial::reduce_mixed(std::span<const cplx> rho, size_t dim, const LocalIndexing &ix, std::span<cplx> out) {
    size_t k = ix.local.size();
    std::fill(out.begin(), out.end(), cplx{0});
    for (size_t base : ix.outer) {
        for (size_t a = 0; a < k; a++) {
            size_t row = (base + ix.local[a]) * dim;
            for (size_t b = 0; b < k; b++) {
                out[a * k + b] += rho[row + base + ix.local[b]];
            }
        }
    }
}

void serial::insert_slot(std::span<const cplx> in, size_t inner, size_t new_dim, size_t fill, std::span<cplx> out) {
    std::fill(out.begin(), out.end(), cplx{0});
    size_t blocks = in.size() / inner;
    for (size_t hi = 0; hi < blocks; hi++) {
        const cplx *src = in.data() + hi * inner;
        cplx *dst = out.data() + (hi * new_dim + fill) * inner;
        std::copy(src, src + inner, dst);
    }
}
